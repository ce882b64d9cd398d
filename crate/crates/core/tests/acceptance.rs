//! Acceptance criteria 1 to 10. Prints one PASS or FAIL line per criterion
//! and exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};
use yangian::central::{b_series, bc_series, c_product, certify_central, p_series, qdet, s_series};
use yangian::gauss::{series_identity_checks, verify_drinfeld_relations, Drinfeld};
use yangian::report::Check;
use yangian::serieslab;
use yangian::shift::ShiftMatrix;
use yangian::verify::{pbw_checks, run_suite, Config, Suite};
use yangian::{in_filtration, leading_term, loop_degree, CurrentAlgebra, Error, Gen, Ring, Series, Yangian};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn failures(checks: &[Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.passed()).map(|c| format!("{} {:?} {}", c.name, c.params, c.witness.clone().unwrap_or_default())).collect()
}

fn require_pass(what: &str, checks: &[Check]) -> Result<usize, String> {
    let bad = failures(checks);
    if checks.is_empty() {
        return Err(format!("{what}: no checks produced"));
    }
    match bad.first() {
        None => Ok(checks.len()),
        Some(b) => Err(format!("{what}: {} failed, first {b}", bad.len())),
    }
}

fn require_names(what: &str, checks: &[Check], names: &[&str]) -> Result<(), String> {
    let have: BTreeSet<&str> = checks.iter().map(|c| c.name.as_str()).collect();
    match names.iter().find(|n| !have.contains(*n)) {
        None => Ok(()),
        Some(n) => Err(format!("{what}: no `{n}` checks")),
    }
}

fn e<T: std::fmt::Debug>(x: T) -> String {
    format!("{x:?}")
}

fn confluence() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    for n in 1..=3 {
        for p in [2, 3] {
            let y = Yangian::new(n, p).map_err(e)?;
            let checks = pbw_checks(&y, 200, 7 * n as u64 + p).map_err(e)?;
            let assoc: Vec<Check> = checks.iter().filter(|c| c.name == "associativity").cloned().collect();
            if assoc.len() != 200 {
                return Err(format!("expected 200 triples at n={n} p={p}, got {}", assoc.len()));
            }
            total += require_pass(&format!("n={n} p={p}"), &checks)?;
            let x = y.t(n, 1, 4).map_err(e)?;
            let once = y.multiply(&y.one(), &x).map_err(e)?;
            if y.multiply(&y.one(), &once).map_err(e)? != once || once != x {
                return Err("normal form is not idempotent".into());
            }
        }
    }
    let took = start.elapsed();
    if took >= Duration::from_secs(30) {
        return Err(format!("took {took:?}"));
    }
    Ok(format!("{total} checks over 1200 triples in {:.1}s", took.as_secs_f64()))
}

fn qdet_equivalence() -> Outcome {
    for (n, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let y = Yangian::new(n, p).map_err(e)?;
        let dr = Drinfeld::new(&y, 8).map_err(e)?;
        let (a, b) = (qdet(&y, 8).map_err(e)?, c_product(&dr).map_err(e)?);
        for r in 0..=6 {
            if a.coefficient(r).map_err(e)? != b.coefficient(r).map_err(e)? {
                return Err(format!("n={n} p={p} differ at r={r}"));
            }
        }
    }
    Ok("r <= 6 at four (n,p)".into())
}

fn centrality() -> Outcome {
    let mut total = 0;
    for (n, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let mut cfg = Config::new(n, p).map_err(e)?;
        cfg.trunc = 2 * p as usize + 2;
        let rep = run_suite(Suite::Center, &cfg).map_err(e)?;
        require_names("center", &rep.checks, &["central_C", "central_B", "central_BC", "central_S", "central_E_power", "central_F_power"])?;
        let coverage = |name: &str, r: i64| rep.checks.iter().any(|c| c.name == name && c.params.get("r").and_then(|v| v.as_i64()) == Some(r));
        for (name, r) in [("central_C", 5), ("central_B", 2 * p as i64 + 2), ("central_BC", 2 * p as i64), ("central_S", 2 * p as i64), ("central_E_power", 3)] {
            if !coverage(name, r) {
                return Err(format!("{name} misses r={r} at n={n} p={p}"));
            }
        }
        total += require_pass(&format!("n={n} p={p}"), &rep.checks)?;
    }
    for p in [2, 3] {
        let mut cfg = Config::new(2, p).map_err(e)?;
        cfg.sigma = ShiftMatrix::from_diagonals(&[1], &[0]).map_err(e)?;
        let rep = run_suite(Suite::Shifted, &cfg).map_err(e)?;
        require_names("shifted", &rep.checks, &["shifted_central_E_power", "shifted_central_F_power"])?;
        total += require_pass(&format!("shifted p={p}"), &rep.checks)?;
    }
    Ok(format!("{total} checks with S_max = 4"))
}

fn gauss_identities() -> Outcome {
    let mut total = 0;
    for p in [2, 3] {
        let y = Yangian::new(3, p).map_err(e)?;
        let ids = series_identity_checks(&Drinfeld::new(&y, 6).map_err(e)?).map_err(e)?;
        require_names("series", &ids, &["reconstruction", "quasideterminant_D", "quasideterminant_E", "quasideterminant_F"])?;
        total += require_pass(&format!("series p={p}"), &ids)?;
        let rel = verify_drinfeld_relations(&Drinfeld::new(&y, 7).map_err(e)?, 4).map_err(e)?;
        let serre: &[&str] = if p == 2 { &["E_serre", "F_serre", "E_serre_equal", "F_serre_equal"] } else { &["E_serre", "F_serre"] };
        require_names("relations", &rel, &["DD", "DE", "DF", "EE", "FF", "EF", "EE_adjacent", "FF_adjacent"])?;
        require_names("relations", &rel, serre)?;
        total += require_pass(&format!("relations p={p}"), &rel)?;
    }
    Ok(format!("{total} checks at n = 3, superscripts <= 4"))
}

fn graded_leading_terms() -> Outcome {
    let mut total = 0;
    for (n, p, trunc) in [(2, 2, 8), (2, 3, 8), (3, 2, 6), (3, 3, 6)] {
        let mut cfg = Config::new(n, p).map_err(e)?;
        cfg.trunc = trunc;
        let rep = run_suite(Suite::Graded, &cfg).map_err(e)?;
        require_names("graded", &rep.checks, &["leading_C", "leading_B", "leading_S", "leading_A", "leading_BC", "leading_H"])?;
        total += require_pass(&format!("graded n={n} p={p}"), &rep.checks)?;
        let rep = run_suite(Suite::Shifted, &cfg).map_err(e)?;
        require_names("shifted", &rep.checks, &["shifted_leading_E_power", "shifted_leading_F_power"])?;
        total += require_pass(&format!("shifted n={n} p={p}"), &rep.checks)?;
        let y = Yangian::new(n, p).map_err(e)?;
        let c = c_product(&Drinfeld::new(&y, 5).map_err(e)?).map_err(e)?;
        let g = CurrentAlgebra::new(n, p).map_err(e)?;
        for r in 0..=4u32 {
            let x = c.coefficient(r as usize + 1).map_err(e)?;
            let ok = in_filtration(x, r as i64) && !in_filtration(x, r as i64 - 1) && loop_degree(x).map_err(e)? == r;
            if !ok || leading_term(x, r).map_err(e)? != g.zr(r).map_err(e)? {
                return Err(format!("C^({}) at n={n} p={p}", r + 1));
            }
            if r > 0 && !matches!(leading_term(x, r - 1), Err(Error::LoopDegreeOvershoot { .. })) {
                return Err(format!("no overshoot for C^({}) below degree {r}", r + 1));
            }
        }
        total += 5;
    }
    Ok(format!("{total} checks"))
}

fn golden_values() -> Outcome {
    let mut checks = serieslab::type_i_golden_checks().map_err(e)?;
    for p in [2, 3] {
        checks.extend(serieslab::type_iii_golden_checks(p).map_err(e)?);
        let mut cfg = Config::new(2, p).map_err(e)?;
        cfg.trunc = 3 * p as usize;
        let rep = run_suite(Suite::Serieslab, &cfg).map_err(e)?;
        require_names("serieslab", &rep.checks, &["type_I_filtration_E", "type_III_filtration_D", "type_IV_filtration_D", "type_I_vanishes_after_p"])?;
        checks.extend(rep.checks);
    }
    require_names("golden", &checks, &["type_I_golden", "type_III_golden", "type_III_golden_commuting"])?;
    for p in [3, 5] {
        let y = Yangian::new(2, p).map_err(e)?;
        let dr = Drinfeld::new(&y, p as usize + 1).map_err(e)?;
        let x = serieslab::series_type_i(dr.e_series(1, 2).map_err(e)?).map_err(e)?;
        let pp = p_series(&dr, 1, 2).map_err(e)?;
        if x != pp || !pp.coefficient(p as usize + 1).map_err(e)?.is_zero() {
            return Err(format!("P_12^(p+1) at p={p}"));
        }
    }
    let total = require_pass("golden", &checks)?;
    Ok(format!("{total} checks"))
}

fn structural_identities() -> Outcome {
    for p in [2u64, 3] {
        let y = Yangian::new(2, p).map_err(e)?;
        let dr = Drinfeld::new(&y, 8).map_err(e)?;
        let fail = |what: &str| Err(format!("{what} at p={p}"));
        let b1 = b_series(&dr, 1).map_err(e)?;
        let b2 = b_series(&dr, 2).map_err(e)?;
        if s_series(&y, 1, 1, 8).map_err(e)? != b1 {
            return fail("S11 = B1");
        }
        if s_series(&y, 1, 2, 8).map_err(e)? != b1.mul(&p_series(&dr, 1, 2).map_err(e)?).map_err(e)? {
            return fail("S12 = B1 P12");
        }
        let h = dr.h_series(1).map_err(e)?;
        let a = h.shifted_power(p as usize).map_err(e)?;
        if a != b2.mul(&b1.invert().map_err(e)?).map_err(e)?.neg() {
            return fail("A = -B2 B1^-1");
        }
        let c = c_product(&dr).map_err(e)?;
        let left = Series::shifted_product(&[b1.clone(), b2.clone()]).map_err(e)?;
        if left != c.shifted_power(p as usize).map_err(e)? || bc_series(&dr).is_err() {
            return fail("BC");
        }
        let ev = dr.e_series(1, 2).map_err(e)?;
        if h.mul(&ev.shift_by(1)).map_err(e)? != ev.shift_by(-1).mul(&h).map_err(e)? {
            return fail("H(u) E(u-1) = E(u+1) H(u)");
        }
    }
    Ok("n = 2, p in {2,3}, N = 8".into())
}

fn symmetric_functions() -> Outcome {
    let mut checks = Vec::new();
    for p in [3, 5, 7] {
        checks.extend(serieslab::power_sum_checks(p).map_err(e)?);
    }
    for p in [2, 3] {
        checks.extend(serieslab::gamma_checks(p, 8).map_err(e)?);
    }
    checks.extend(serieslab::optimal_checks(&[1, 2, 3], 10, &[1, 2, 3, 4]));
    require_names("symmetric", &checks, &["gamma_value", "power_sum_at_residues", "optimal_floor_sequence"])?;
    let total = require_pass("symmetric", &checks)?;
    Ok(format!("{total} checks"))
}

fn negative_controls() -> Outcome {
    for p in [2, 3] {
        let y = Yangian::new(2, p).map_err(e)?;
        let cert = certify_central(&y.t(1, 2, 1).map_err(e)?, 4).map_err(e)?;
        let want = y.sub(&y.t(1, 1, 1).map_err(e)?, &y.t(2, 2, 1).map_err(e)?);
        let found = cert.failures.iter().find(|(g, _)| *g == Gen::new(2, 1, 1));
        if cert.certified() || found.map(|(_, w)| w) != Some(&want) {
            return Err(format!("T12^(1) at p={p}"));
        }
    }
    match ShiftMatrix::new(vec![vec![0, 1, 3], vec![0, 0, 1], vec![0, 0, 0]]) {
        Err(Error::InvalidShiftMatrix(_)) => Ok("witness T11^(1) - T22^(1); s13 != s12 + s23 rejected".into()),
        other => Err(format!("invalid shift matrix gave {other:?}")),
    }
}

fn full_runs() -> Outcome {
    let mut out = Vec::new();
    for (n, p, trunc, limit) in [(2, 2, 8, 300), (3, 3, 6, 1200)] {
        let start = Instant::now();
        let args = ["verify", "all", "--n", &n.to_string(), "--p", &p.to_string(), "--trunc", &trunc.to_string(), "--out", "json"].map(String::from);
        let res = yangian::cli::run(args);
        let took = start.elapsed();
        if res.code != 0 {
            return Err(format!("({n},{p},{trunc}) exit {}: {}", res.code, res.stderr));
        }
        if took >= Duration::from_secs(limit) {
            return Err(format!("({n},{p},{trunc}) took {took:?}"));
        }
        out.push(format!("({n},{p},{trunc}) {:.1}s", took.as_secs_f64()));
    }
    Ok(out.join(", "))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("PBW confluence", confluence),
        ("quantum determinant equivalence", qdet_equivalence),
        ("centrality", centrality),
        ("Gauss identities", gauss_identities),
        ("graded leading terms", graded_leading_terms),
        ("golden values", golden_values),
        ("structural identities", structural_identities),
        ("symmetric-function facts", symmetric_functions),
        ("negative controls", negative_controls),
        ("full verification runs", full_runs),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {:2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:2} {name}: {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
