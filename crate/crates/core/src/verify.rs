//! Named verification suites and their JSON reports.

use crate::central::{a_series, b_series, bc_series, c_product, certify_central, p_series, q_series, qdet, s_series};
use crate::error::{Error, Result};
use crate::field::Prime;
use crate::gauss::{series_identity_checks, verify_drinfeld_relations, Drinfeld};
use crate::graded::{in_filtration, leading_term, CurrentAlgebra, UgElement};
use crate::io::{element_from_json, element_to_json, parse_element};
use crate::pbw::{Element, Gen, Yangian};
use crate::report::{all_pass, sort_checks, Check};
use crate::ring::Ring;
use crate::series::Series;
use crate::serieslab::{self, SeriesType};
use crate::shift::{graded_closure_checks, shifted_e, shifted_f, ShiftMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Drinfeld,
    GaussIdentities,
    Center,
    Graded,
    Serieslab,
    Shifted,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [Suite::Drinfeld, Suite::GaussIdentities, Suite::Center, Suite::Graded, Suite::Serieslab, Suite::Shifted];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Drinfeld => "drinfeld",
            Suite::GaussIdentities => "gauss-identities",
            Suite::Center => "center",
            Suite::Graded => "graded",
            Suite::Serieslab => "serieslab",
            Suite::Shifted => "shifted",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::PARTS
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

/// Parameters shared by every suite.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    pub n: usize,
    pub p: u64,
    pub trunc: usize,
    pub smax: u32,
    pub sigma: ShiftMatrix,
    pub seed: u64,
    pub samples: usize,
}

pub const DEFAULT_TRUNC: usize = 8;
pub const DEFAULT_SMAX: u32 = 4;

impl Config {
    /// Defaults: precision 8, centrality bound 4, shift matrix with ones
    /// above the diagonal and zeros below.
    pub fn new(n: usize, p: u64) -> Result<Config> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        Prime::new(p)?;
        let sigma = ShiftMatrix::from_diagonals(&vec![1; n - 1], &vec![0; n - 1])?;
        Ok(Config { n, p, trunc: DEFAULT_TRUNC, smax: DEFAULT_SMAX, sigma, seed: 0, samples: 50 })
    }

    /// Largest superscript checked in the Drinfeld relations.
    pub fn drinfeld_bound(&self) -> usize {
        4.min(self.trunc.div_ceil(2)).max(1)
    }

    /// Largest coefficient index certified for each central family.
    pub fn coefficient_bound(&self) -> usize {
        self.trunc.min(2 * self.p as usize + 2)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportConfig {
    pub suite: Suite,
    #[serde(flatten)]
    pub config: Config,
    pub drinfeld_bound: usize,
    pub coefficient_bound: usize,
}

/// The outcome of a suite: configuration plus checks sorted by name and
/// parameters.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: ReportConfig,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        all_pass(&self.checks)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }
}

pub fn run_suite(suite: Suite, cfg: &Config) -> Result<Report> {
    let y = Yangian::new(cfg.n, cfg.p)?;
    if cfg.sigma.n() != cfg.n {
        return Err(Error::InvalidArgument(format!("shift matrix has size {}, expected {}", cfg.sigma.n(), cfg.n)));
    }
    let parts: Vec<Suite> = if suite == Suite::All { Suite::PARTS.to_vec() } else { vec![suite] };
    let needs_drinfeld = parts.iter().any(|s| !matches!(s, Suite::Serieslab));
    let dr = if needs_drinfeld { Some(Drinfeld::new(&y, cfg.trunc)?) } else { None };
    let mut checks = Vec::new();
    for part in parts {
        let found = match part {
            Suite::Drinfeld => drinfeld_suite(cfg, dr.as_ref().unwrap())?,
            Suite::GaussIdentities => series_identity_checks(dr.as_ref().unwrap())?,
            Suite::Center => center_suite(cfg, dr.as_ref().unwrap())?,
            Suite::Graded => graded_suite(cfg, dr.as_ref().unwrap())?,
            Suite::Serieslab => serieslab_suite(cfg)?,
            Suite::Shifted => shifted_suite(cfg, dr.as_ref().unwrap())?,
            Suite::All => unreachable!(),
        };
        checks.extend(found.into_iter().map(|c| c.with_param("suite", part.name())));
    }
    sort_checks(&mut checks);
    let config = ReportConfig { suite, config: cfg.clone(), drinfeld_bound: cfg.drinfeld_bound(), coefficient_bound: cfg.coefficient_bound() };
    Ok(Report { config, checks })
}

/// Runs `f`, turning an error into a failed check.
fn guard(name: &str, params: &[(&str, i64)], f: impl FnOnce() -> Result<Check>) -> Check {
    f().unwrap_or_else(|e| Check::error(name, params, &e))
}

fn random_gen(rng: &mut ChaCha8Rng, n: usize, rmax: u32) -> Gen {
    Gen::new(rng.gen_range(1..=n), rng.gen_range(1..=n), rng.gen_range(1..=rmax))
}

/// Associativity of random generator triples, a round trip through the
/// text and JSON forms, and the automorphisms.
pub fn pbw_checks(y: &Yangian, samples: usize, seed: u64) -> Result<Vec<Check>> {
    let n = y.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for k in 0..samples {
        let (a, b, c) = (random_gen(&mut rng, n, 4), random_gen(&mut rng, n, 4), random_gen(&mut rng, n, 4));
        let (x, z, w) = (y.gen(a)?, y.gen(b)?, y.gen(c)?);
        let left = y.mul(&y.mul(&x, &z), &w);
        let right = y.mul(&x, &y.mul(&z, &w));
        let params = [("sample", k as i64)];
        out.push(Check::new("associativity", &params, left == right, || format!("{a:?} {b:?} {c:?}: {left} vs {right}")));
        let text = parse_element(y, &left.to_string())?;
        let json = element_from_json(y, &element_to_json(&left))?;
        out.push(Check::new("normal_form_round_trip", &params, text == left && json == left, || format!("{left}")));
        let tau = |e: &Element| y.apply_transpose(e);
        let anti = tau(&y.mul(&x, &z))? == y.mul(&tau(&z)?, &tau(&x)?);
        out.push(Check::new("transpose_anti_multiplicative", &params, anti, || format!("{a:?} {b:?}")));
        let shift = y.p().elem(rng.gen_range(0..y.p().get() as i64));
        let other = y.p().elem(rng.gen_range(0..y.p().get() as i64));
        let twice = y.apply_translation(&y.apply_translation(&left, shift)?, other)?;
        let once = y.apply_translation(&left, shift + other)?;
        out.push(Check::new("translation_composition", &params, twice == once, || format!("shifts {shift} and {other}")));
    }
    if n >= 2 {
        let t = |i, j, r| y.t(i, j, r);
        let swaps = [
            (Gen::new(1, 1, 1), Gen::new(1, 2, 1), t(1, 2, 1)?),
            (Gen::new(1, 2, 3), Gen::new(1, 2, 3), y.zero()),
            (Gen::new(1, 2, 1), Gen::new(2, 1, 1), y.sub(&t(1, 1, 1)?, &t(2, 2, 1)?)),
        ];
        for (k, (g1, g2, want)) in swaps.iter().enumerate() {
            let got = y.swap_rule(*g1, *g2)?;
            out.push(Check::new("swap_rule", &[("case", k as i64)], got == *want, || format!("{got}, expected {want}")));
        }
    }
    Ok(out)
}

fn drinfeld_suite(cfg: &Config, dr: &Drinfeld) -> Result<Vec<Check>> {
    let mut out = verify_drinfeld_relations(dr, cfg.drinfeld_bound())?;
    out.extend(pbw_checks(dr.yangian(), cfg.samples, cfg.seed)?);
    Ok(out)
}

fn certify(name: &str, params: &[(&str, i64)], x: &Element, smax: u32) -> Check {
    guard(name, params, || {
        let cert = certify_central(x, smax)?;
        Ok(Check::new(name, params, cert.certified(), || {
            let (g, c) = &cert.failures[0];
            format!("[x, T[{},{},{}]] = {c}", g.i, g.j, g.r)
        }))
    })
}

fn series_equal(name: &str, params: &[(&str, i64)], a: &Series<Yangian>, b: &Series<Yangian>) -> Check {
    Check::new(name, params, a == b, || match a.first_difference(b) {
        Some(r) => format!("differ at u^-{r}"),
        None => "precisions differ".into(),
    })
}

type Family<'a> = (String, Vec<(&'a str, i64)>, Series<Yangian>);

fn center_suite(cfg: &Config, dr: &Drinfeld) -> Result<Vec<Check>> {
    let y = dr.yangian();
    let n = cfg.n;
    let p = cfg.p as usize;
    let rmax = cfg.coefficient_bound();
    let smax = cfg.smax;
    let mut out = Vec::new();
    let c = c_product(dr)?;
    out.push(series_equal("qdet_equals_product", &[], &qdet(y, cfg.trunc)?, &c));
    let mut families: Vec<Family> = vec![("C".into(), vec![], c.clone())];
    let bs: Vec<Series<Yangian>> = (1..=n).map(|i| b_series(dr, i)).collect::<Result<_>>()?;
    for i in 1..=n {
        families.push(("B".into(), vec![("i", i as i64)], bs[i - 1].clone()));
    }
    match bc_series(dr) {
        Ok(bc) => {
            out.push(Check::new("BC_two_products", &[], true, String::new));
            families.push(("BC".into(), vec![], bc));
        }
        Err(e) => out.push(Check::error("BC_two_products", &[], &e)),
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let ps = vec![("i", i as i64), ("j", j as i64)];
            families.push(("P".into(), ps.clone(), p_series(dr, i, j)?));
            families.push(("Q".into(), ps, q_series(dr, i, j)?));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            families.push(("S".into(), vec![("i", i as i64), ("j", j as i64)], s_series(y, i, j, cfg.trunc)?));
        }
    }
    for i in 1..n {
        match a_series(dr, i) {
            Ok(a) => {
                out.push(Check::new("A_two_expressions", &[("i", i as i64)], true, String::new));
                families.push(("A".into(), vec![("i", i as i64)], a));
            }
            Err(e) => out.push(Check::error("A_two_expressions", &[("i", i as i64)], &e)),
        }
    }
    for (fam, ps, s) in &families {
        let name = format!("central_{fam}");
        for r in 1..=rmax {
            let mut params = ps.clone();
            params.push(("r", r as i64));
            out.push(certify(&name, &params, s.coefficient(r)?, smax));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for r in 1..=3.min(cfg.trunc) {
                let ps = [("i", i as i64), ("j", j as i64), ("r", r as i64)];
                out.push(certify("central_E_power", &ps, &y.pth_power(&dr.higher_root_e(i, j, r)?)?, smax));
                out.push(certify("central_F_power", &ps, &y.pth_power(&dr.higher_root_f(i, j, r)?)?, smax));
            }
        }
    }
    let b_params = |i: usize, r: usize| [("i", i as i64), ("r", r as i64)];
    for i in 1..=n {
        for r in 1..=cfg.trunc {
            let x = bs[i - 1].coefficient(r)?;
            if r < p {
                out.push(Check::vanishing("B_vanishes_below_p", &b_params(i, r), x, x.is_zero()));
            } else if r == p {
                let d1 = dr.d(i, 1)?;
                let diff = y.sub(x, &y.sub(&y.pow(&d1, p as u64), &d1));
                out.push(Check::vanishing("B_at_p", &b_params(i, r), &diff, diff.is_zero()));
            } else if r % p != 0 {
                let bound = r as i64 - p as i64 - 1;
                out.push(Check::new("B_tail_filtration", &b_params(i, r), in_filtration(x, bound), || format!("{x} not in F_{bound}")));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            let pser = p_series(dr, i, j)?;
            for r in 1..=cfg.trunc {
                let x = pser.coefficient(r)?;
                let ps = [("i", i as i64), ("j", j as i64), ("r", r as i64)];
                if r < p {
                    out.push(Check::vanishing("P_vanishes_below_p", &ps, x, x.is_zero()));
                } else if r == p {
                    let diff = y.sub(x, &y.pth_power(&dr.higher_root_e(i, j, 1)?)?);
                    out.push(Check::vanishing("P_at_p", &ps, &diff, diff.is_zero()));
                } else {
                    let bound = r as i64 - p as i64 - 1;
                    let rest = if r % p == 0 { y.sub(x, &y.pth_power(&dr.higher_root_e(i, j, r / p)?)?) } else { x.clone() };
                    out.push(Check::new("P_tail_filtration", &ps, in_filtration(&rest, bound), || format!("{rest} not in F_{bound}")));
                }
            }
        }
    }
    for (fam, ps, s) in &families {
        if !matches!(fam.as_str(), "BC" | "S") {
            continue;
        }
        for r in 1..p.min(cfg.trunc + 1) {
            let mut params = ps.clone();
            params.push(("r", r as i64));
            let x = s.coefficient(r)?;
            out.push(Check::vanishing(format!("{fam}_vanishes_below_p"), &params, x, x.is_zero()));
        }
    }
    if n >= 2 {
        out.push(series_equal("S11_equals_B1", &[], &s_series(y, 1, 1, cfg.trunc)?, &bs[0]));
        let s12 = s_series(y, 1, 2, cfg.trunc)?;
        out.push(series_equal("S12_equals_B1_P12", &[], &s12, &bs[0].mul(&p_series(dr, 1, 2)?)?));
    }
    Ok(out)
}

fn leading_check(name: &str, params: &[(&str, i64)], x: &Element, d: u32, want: &UgElement) -> Check {
    guard(name, params, || {
        let got = leading_term(x, d)?;
        Ok(Check::new(name, params, got == *want, || format!("leading term {got}, expected {want}")))
    })
}

fn graded_suite(cfg: &Config, dr: &Drinfeld) -> Result<Vec<Check>> {
    let y = dr.yangian();
    let g = CurrentAlgebra::new(cfg.n, cfg.p)?;
    let n = cfg.n;
    let p = cfg.p as u32;
    let trunc = cfg.trunc as u32;
    let mut out = Vec::new();
    let c = c_product(dr)?;
    for r in 0..=4.min(trunc - 1) {
        out.push(leading_check("leading_C", &[("r", r as i64)], c.coefficient(r as usize + 1)?, r, &g.zr(r)?));
    }
    let diag = |i: usize, r: u32| g.e(i, i, r);
    let rs: Vec<u32> = (1..=2).filter(|r| r * p <= trunc).collect();
    for i in 1..=n {
        let b = b_series(dr, i)?;
        for &r in &rs {
            let want = g.sub(&g.pow(&diag(i, r - 1)?, p as u64), &diag(i, r * p - p)?);
            out.push(leading_check("leading_B", &[("i", i as i64), ("r", r as i64)], b.coefficient((r * p) as usize)?, r * p - p, &want));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let s = s_series(y, i, j, cfg.trunc)?;
            for &r in &rs {
                let mut want = g.pow(&g.e(i, j, r - 1)?, p as u64);
                if i == j {
                    want = g.sub(&want, &g.e(i, j, r * p - p)?);
                }
                let ps = [("i", i as i64), ("j", j as i64), ("r", r as i64)];
                out.push(leading_check("leading_S", &ps, s.coefficient((r * p) as usize)?, r * p - p, &want));
            }
        }
    }
    for i in 1..n {
        let a = a_series(dr, i)?;
        let h = dr.h_series(i)?;
        let cartan = |r: u32| -> Result<UgElement> { Ok(g.sub(&diag(i, r)?, &diag(i + 1, r)?)) };
        for &r in &rs {
            let want = g.sub(&g.pow(&cartan(r - 1)?, p as u64), &cartan(r * p - p)?);
            out.push(leading_check("leading_A", &[("i", i as i64), ("r", r as i64)], a.coefficient((r * p) as usize)?, r * p - p, &want));
        }
        for r in 0..=2.min(trunc - 1) {
            out.push(leading_check("leading_H", &[("i", i as i64), ("r", r as i64)], h.coefficient(r as usize + 1)?, r, &cartan(r)?));
        }
    }
    if let Ok(bc) = bc_series(dr) {
        for &r in &rs {
            let want = g.sub(&g.pow(&g.zr(r - 1)?, p as u64), &g.zr(r * p - p)?);
            out.push(leading_check("leading_BC", &[("r", r as i64)], bc.coefficient((r * p) as usize)?, r * p - p, &want));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for r in 1..=3.min(trunc) {
                let ps = [("i", i as i64), ("j", j as i64), ("r", r as i64)];
                out.push(leading_check("leading_E_root", &ps, &dr.higher_root_e(i, j, r as usize)?, r - 1, &g.e(i, j, r - 1)?));
                out.push(leading_check("leading_F_root", &ps, &dr.higher_root_f(i, j, r as usize)?, r - 1, &g.e(j, i, r - 1)?));
            }
        }
    }
    for r in 0..3u32 {
        let z = g.zr(r)?;
        let ok = (1..=n).all(|i| (1..=n).all(|j| (0..3).all(|s| g.commutator(&z, &g.e(i, j, s).unwrap()).unwrap().is_zero())));
        out.push(Check::new("z_central", &[("r", r as i64)], ok, || format!("z_{r} fails to commute")));
        for i in 1..=n {
            for j in 1..=n {
                let pc = g.p_centre_gen(i, j, r)?;
                let ok = (1..=n).all(|k| (1..=n).all(|l| (0..3).all(|s| g.commutator(&pc, &g.e(k, l, s).unwrap()).unwrap().is_zero())));
                out.push(Check::new("p_centre_central", &[("i", i as i64), ("j", j as i64), ("r", r as i64)], ok, || "not central".into()));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x9e37);
    for k in 0..cfg.samples {
        let (a, b) = (random_gen(&mut rng, n, 4), random_gen(&mut rng, n, 4));
        let (x, z) = (y.gen(a)?, y.gen(b)?);
        let (da, db) = (a.r - 1, b.r - 1);
        let prod = y.mul(&x, &z);
        let want = g.mul(&leading_term(&x, da)?, &leading_term(&z, db)?);
        out.push(leading_check("leading_term_multiplicative", &[("sample", k as i64)], &prod, da + db, &want));
    }
    Ok(out)
}

fn serieslab_suite(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = serieslab::type_i_golden_checks()?;
    for p in [2, 3] {
        out.extend(serieslab::type_iii_golden_checks(p)?);
        out.extend(serieslab::closed_form_checks(p, 8)?);
        out.extend(serieslab::gamma_checks(p, 8)?);
    }
    for p in [3, 5, 7] {
        out.extend(serieslab::power_sum_checks(p)?);
    }
    for k in 1..=4 {
        let ok = serieslab::newton_check(k, 5)?;
        out.push(Check::new("newton_identity", &[("k", k as i64), ("p", 5)], ok, || "polynomial identity fails".into()));
    }
    let prime = Prime::new(5)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    for s in 0..cfg.samples.min(20) {
        let pts: Vec<_> = (0..5).map(|_| prime.elem(rng.gen_range(0..5))).collect();
        for k in 1..=4 {
            let ok = serieslab::newton_check_at(k, &pts)?;
            out.push(Check::new("newton_identity_at_points", &[("k", k as i64), ("sample", s as i64)], ok, || format!("{pts:?}")));
        }
    }
    out.extend(serieslab::optimal_checks(&[1, 2, 3], 10, &[1, 2, 3, 4]));
    for p in [3u64, 5] {
        let y = Yangian::new(2, p)?;
        let dr = Drinfeld::new(&y, p as usize + 1)?;
        let x = serieslab::series_type_i(dr.e_series(1, 2)?)?;
        let c = x.coefficient(p as usize + 1)?;
        out.push(Check::vanishing("type_I_vanishes_after_p", &[("p", p as i64)], c, c.is_zero()));
    }
    let y = Yangian::new(2, cfg.p)?;
    let dr = Drinfeld::new(&y, cfg.trunc.max(3 * cfg.p as usize))?;
    out.extend(serieslab::filtration_checks(dr.e_series(1, 2)?, "E", &[SeriesType::I])?);
    out.extend(serieslab::filtration_checks(dr.d_series(1)?, "D", &[SeriesType::III, SeriesType::IV])?);
    let b = b_series(&dr, 1)?;
    out.push(series_equal("type_III_is_B", &[], &serieslab::series_type_iii(dr.d_series(1)?)?, &b));
    Ok(out)
}

fn shifted_suite(cfg: &Config, dr: &Drinfeld) -> Result<Vec<Check>> {
    let y = dr.yangian();
    let sigma = &cfg.sigma;
    let n = cfg.n;
    let p = cfg.p as u32;
    let g = CurrentAlgebra::new(n, cfg.p)?;
    let mut out = graded_closure_checks(sigma, cfg.p, 2)?;
    let zero = ShiftMatrix::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            for r in 1..=3.min(cfg.trunc) {
                let ps = [("i", i as i64), ("j", j as i64), ("r", r as i64)];
                out.push(guard("unshifted_roots", &ps, || {
                    let same = shifted_e(dr, &zero, i, j, r)? == dr.higher_root_e(i, j, r)? && shifted_f(dr, &zero, i, j, r)? == dr.higher_root_f(i, j, r)?;
                    Ok(Check::new("unshifted_roots", &ps, same, || "zero shift changes a root element".into()))
                }));
            }
            let below = shifted_e(dr, sigma, i, j, sigma.get(i, j) as usize);
            let rejected = matches!(below, Err(Error::Inadmissible(_)));
            out.push(Check::new("inadmissible_rejected", &[("i", i as i64), ("j", j as i64)], rejected, || "accepted a superscript at the shift".into()));
            for extra in 1..=2u32 {
                let (re, rf) = (sigma.get(i, j) + extra, sigma.get(j, i) + extra);
                if re as usize > cfg.trunc || rf as usize > cfg.trunc {
                    continue;
                }
                let ps = [("i", i as i64), ("j", j as i64), ("extra", extra as i64)];
                let e = shifted_e(dr, sigma, i, j, re as usize)?;
                let f = shifted_f(dr, sigma, i, j, rf as usize)?;
                out.push(leading_check("shifted_leading_E", &ps, &e, re - 1, &g.e(i, j, re - 1)?));
                out.push(leading_check("shifted_leading_F", &ps, &f, rf - 1, &g.e(j, i, rf - 1)?));
                let (ep, fp) = (y.pth_power(&e)?, y.pth_power(&f)?);
                out.push(certify("shifted_central_E_power", &ps, &ep, cfg.smax));
                out.push(certify("shifted_central_F_power", &ps, &fp, cfg.smax));
                out.push(leading_check("shifted_leading_E_power", &ps, &ep, (re - 1) * p, &g.pow(&g.e(i, j, re - 1)?, p as u64)));
                out.push(leading_check("shifted_leading_F_power", &ps, &fp, (rf - 1) * p, &g.pow(&g.e(j, i, rf - 1)?, p as u64)));
            }
        }
    }
    let upper = sigma.upper();
    let lower = sigma.lower();
    out.push(Check::new("shift_transpose", &[], sigma.transpose() == ShiftMatrix::from_diagonals(&lower, &upper)?, || "transpose mismatch".into()));
    if n >= 3 {
        let mut bad = sigma.rows().to_vec();
        bad[0][2] += 1;
        let rejected = matches!(ShiftMatrix::new(bad), Err(Error::InvalidShiftMatrix(_)));
        out.push(Check::new("invalid_shift_rejected", &[], rejected, || "accepted a non-additive matrix".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names() {
        for s in Suite::PARTS {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let mut cfg = Config::new(2, 2).unwrap();
        cfg.trunc = 4;
        cfg.samples = 5;
        for s in [Suite::Drinfeld, Suite::Center, Suite::Graded, Suite::Shifted] {
            let rep = run_suite(s, &cfg).unwrap();
            assert!(rep.passed(), "{s}: {:?}", rep.failures());
        }
    }
}
