//! The command-line front end. `run` returns the exit code and the text
//! for stdout and stderr so it can be driven from tests.

use crate::central::{a_series, b_series, bc_series, c_product, certify_central, p_series, q_series, s_series};
use crate::error::Error;
use crate::gauss::Drinfeld;
use crate::io::{element_to_json, matrix_to_json, parse_element, series_to_json};
use crate::pbw::{Element, Yangian};
use crate::report::{all_pass, sort_checks, Check};
use crate::series::{MatrixSeries, Series};
use crate::serieslab::{TYPE_III_P2, TYPE_III_P3, TYPE_I_P2};
use crate::shift::ShiftMatrix;
use crate::verify::{run_suite, Config, Report, Suite, DEFAULT_SMAX, DEFAULT_TRUNC};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

/// Environment variable holding the default truncation.
pub const TRUNC_ENV: &str = "YANGIAN_TRUNC";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn usage(msg: String) -> Outcome {
        Outcome { code: 2, stdout: String::new(), stderr: msg }
    }
}

#[derive(Parser, Debug)]
#[command(name = "yangian", about = "Exact computations in modular Yangians")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of a central series.
    Compute {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        common: Common,
        /// Coefficient index; the whole series when omitted.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 2)]
        j: usize,
    },
    /// Bounded centrality test of an element given in text form.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: String,
    },
    /// The Gauss factors D, E, F of T(u).
    Gauss {
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[command(flatten)]
        common: Common,
        /// Shift matrix as `upper=1,2 lower=0,0`.
        #[arg(long)]
        sigma: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random samples per sampled property.
        #[arg(long, default_value_t = 50)]
        samples: usize,
    },
    /// Golden tables for the series types and the lemma checks.
    Lab {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    p: u64,
    #[arg(long)]
    trunc: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SMAX)]
    smax: u32,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Out {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    #[value(name = "C")]
    C,
    #[value(name = "B")]
    B,
    #[value(name = "BC")]
    Bc,
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "S")]
    S,
    #[value(name = "A")]
    A,
}

impl Family {
    fn label(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::B => "B",
            Family::Bc => "BC",
            Family::P => "P",
            Family::Q => "Q",
            Family::S => "S",
            Family::A => "A",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SuiteArg {
    Drinfeld,
    GaussIdentities,
    Center,
    Graded,
    Serieslab,
    Shifted,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Drinfeld => Suite::Drinfeld,
            SuiteArg::GaussIdentities => Suite::GaussIdentities,
            SuiteArg::Center => Suite::Center,
            SuiteArg::Graded => Suite::Graded,
            SuiteArg::Serieslab => Suite::Serieslab,
            SuiteArg::Shifted => Suite::Shifted,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Errors caused by the request rather than by a failed identity.
fn is_usage(e: &Error) -> bool {
    matches!(
        e,
        Error::NotPrime(_)
            | Error::Precision(_)
            | Error::Inadmissible(_)
            | Error::InvalidShiftMatrix(_)
            | Error::Parse(_)
            | Error::InvalidArgument(_)
            | Error::ContextMismatch(_)
    )
}

fn from_error(e: Error) -> Outcome {
    let code = if is_usage(&e) { 2 } else { 1 };
    Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
}

fn default_trunc() -> Result<usize, String> {
    match std::env::var(TRUNC_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| format!("{TRUNC_ENV} must be a non-negative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_TRUNC),
    }
}

impl Common {
    fn resolve(&self) -> Result<(Yangian, usize), Outcome> {
        if self.n == 0 {
            return Err(Outcome::usage("error: --n must be at least 1\n".into()));
        }
        let trunc = match self.trunc {
            Some(t) => t,
            None => default_trunc().map_err(|m| Outcome::usage(format!("error: {m}\n")))?,
        };
        let y = Yangian::new(self.n, self.p).map_err(from_error)?;
        Ok((y, trunc))
    }

    fn config(&self, trunc: usize) -> Value {
        json!({ "n": self.n, "p": self.p, "trunc": trunc, "smax": self.smax })
    }
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Parses `argv` (without the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("yangian")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    let result = match cli.cmd {
        Command::Compute { family, common, r, i, j } => compute(family, &common, r, i, j),
        Command::Certify { common, element } => certify(&common, &element),
        Command::Gauss { common } => gauss(&common),
        Command::Verify { suite, common, sigma, seed, samples } => verify(suite.into(), &common, sigma.as_deref(), seed, samples),
        Command::Lab { common, seed } => lab(&common, seed),
    };
    result.unwrap_or_else(|o| o)
}

fn series_text(name: &str, s: &Series<Yangian>) -> String {
    let mut out = String::new();
    for (r, c) in s.coeffs().iter().enumerate() {
        out.push_str(&format!("{name}^({r}) = {c}\n"));
    }
    out
}

fn compute(family: Family, common: &Common, r: Option<usize>, i: usize, j: usize) -> Result<Outcome, Outcome> {
    let (y, trunc) = common.resolve()?;
    if let Some(r) = r {
        if r > trunc {
            return Err(Outcome::usage(format!("error: --r {r} exceeds --trunc {trunc}\n")));
        }
    }
    let series = family_series(family, &y, trunc, i, j).map_err(from_error)?;
    let mut config = common.config(trunc);
    config["family"] = json!(family.label());
    let indexed = !matches!(family, Family::C | Family::Bc);
    let name = match family {
        Family::C | Family::Bc => family.label().to_string(),
        Family::B | Family::A => format!("{}_{i}", family.label()),
        _ => format!("{}_{i}{j}", family.label()),
    };
    if indexed {
        config["i"] = json!(i);
        if matches!(family, Family::P | Family::Q | Family::S) {
            config["j"] = json!(j);
        }
    }
    let text = match (r, common.out) {
        (Some(r), Out::Json) => {
            config["r"] = json!(r);
            to_json_text(&json!({ "config": config, "element": element_to_json(&series.coeffs()[r]) }))
        }
        (Some(r), Out::Text) => format!("{name}^({r}) = {}\n", series.coeffs()[r]),
        (None, Out::Json) => to_json_text(&json!({ "config": config, "series": series_to_json(&series, element_to_json) })),
        (None, Out::Text) => series_text(&name, &series),
    };
    Ok(Outcome::ok(text))
}

fn family_series(family: Family, y: &Yangian, trunc: usize, i: usize, j: usize) -> crate::Result<Series<Yangian>> {
    let n = y.n();
    let check_i = |i: usize, top: usize| {
        if i == 0 || i > top {
            Err(Error::InvalidArgument(format!("index {i} out of range 1..={top}")))
        } else {
            Ok(())
        }
    };
    if family == Family::S {
        check_i(i, n)?;
        check_i(j, n)?;
        return s_series(y, i, j, trunc);
    }
    let dr = Drinfeld::new(y, trunc)?;
    match family {
        Family::C => c_product(&dr),
        Family::Bc => bc_series(&dr),
        Family::B => {
            check_i(i, n)?;
            b_series(&dr, i)
        }
        Family::A => {
            check_i(i, n.saturating_sub(1))?;
            a_series(&dr, i)
        }
        Family::P | Family::Q => {
            if !(1 <= i && i < j && j <= n) {
                return Err(Error::InvalidArgument(format!("need 1 <= i < j <= {n}, got i={i} j={j}")));
            }
            if family == Family::P {
                p_series(&dr, i, j)
            } else {
                q_series(&dr, i, j)
            }
        }
        Family::S => unreachable!(),
    }
}

fn checks_text(header: &str, checks: &[Check]) -> String {
    let mut out = format!("{header}\n");
    for c in checks {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if c.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {} {}", c.name, params.join(" ")));
        if let Some(w) = &c.witness {
            out.push_str(&format!(" :: {w}"));
        }
        out.push('\n');
    }
    let failed = checks.iter().filter(|c| !c.passed()).count();
    out.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    out
}

fn report_outcome(config: Value, checks: Vec<Check>, out: Out) -> Outcome {
    let code = if all_pass(&checks) { 0 } else { 1 };
    let stdout = match out {
        Out::Json => to_json_text(&json!({ "config": config, "checks": checks })),
        Out::Text => checks_text(&format!("config {}", serde_json::to_string(&config).expect("serializable")), &checks),
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn certify(common: &Common, element: &str) -> Result<Outcome, Outcome> {
    let (y, trunc) = common.resolve()?;
    let x: Element = parse_element(&y, element).map_err(from_error)?;
    let cert = certify_central(&x, common.smax).map_err(from_error)?;
    let mut config = common.config(trunc);
    config["element"] = json!(x.to_string());
    let mut checks = cert.checks;
    sort_checks(&mut checks);
    Ok(report_outcome(config, checks, common.out))
}

fn matrix_text(name: &str, m: &MatrixSeries<Yangian>) -> String {
    let mut out = String::new();
    for i in 1..=m.n() {
        for j in 1..=m.n() {
            for (r, c) in m.entry(i, j).coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push_str(&format!("{name}[{i},{j}]^({r}) = {c}\n"));
                }
            }
        }
    }
    out
}

fn gauss(common: &Common) -> Result<Outcome, Outcome> {
    let (y, trunc) = common.resolve()?;
    let dr = Drinfeld::new(&y, trunc).map_err(from_error)?;
    let g = dr.factors();
    let text = match common.out {
        Out::Json => to_json_text(&json!({
            "config": common.config(trunc),
            "D": matrix_to_json(&g.d, element_to_json),
            "E": matrix_to_json(&g.e, element_to_json),
            "F": matrix_to_json(&g.f, element_to_json),
        })),
        Out::Text => [("D", &g.d), ("E", &g.e), ("F", &g.f)].iter().map(|(k, m)| matrix_text(k, m)).collect(),
    };
    Ok(Outcome::ok(text))
}

fn verify(suite: Suite, common: &Common, sigma: Option<&str>, seed: u64, samples: usize) -> Result<Outcome, Outcome> {
    let (_, trunc) = common.resolve()?;
    let mut cfg = Config::new(common.n, common.p).map_err(from_error)?;
    cfg.trunc = trunc;
    cfg.smax = common.smax;
    cfg.seed = seed;
    cfg.samples = samples;
    if let Some(s) = sigma {
        cfg.sigma = s.parse::<ShiftMatrix>().map_err(from_error)?;
    }
    let report: Report = run_suite(suite, &cfg).map_err(from_error)?;
    let config = serde_json::to_value(&report.config).expect("serializable");
    Ok(report_outcome(config, report.checks, common.out))
}

fn lab(common: &Common, seed: u64) -> Result<Outcome, Outcome> {
    let (_, trunc) = common.resolve()?;
    let mut cfg = Config::new(common.n, common.p).map_err(from_error)?;
    cfg.trunc = trunc;
    cfg.seed = seed;
    let report = run_suite(Suite::Serieslab, &cfg).map_err(from_error)?;
    let tables = [
        ("type I, p = 2, X = E_1(u)", TYPE_I_P2),
        ("type III, p = 2, X = D_1(u)", TYPE_III_P2),
        ("type III, p = 3, X = D_1(u)", TYPE_III_P3),
    ];
    let config = serde_json::to_value(&report.config).expect("serializable");
    let mut outcome = report_outcome(config.clone(), report.checks.clone(), common.out);
    match common.out {
        Out::Json => {
            let tables: Vec<Value> = tables
                .iter()
                .map(|(title, t)| json!({ "title": title, "rows": t.iter().map(|(r, e)| json!({ "r": r, "value": e })).collect::<Vec<_>>() }))
                .collect();
            outcome.stdout = to_json_text(&json!({ "config": config, "tables": tables, "checks": report.checks }));
        }
        Out::Text => {
            let mut head = String::new();
            for (title, t) in tables {
                head.push_str(&format!("{title}\n"));
                for (r, e) in t {
                    head.push_str(&format!("  r={r}: {e}\n"));
                }
            }
            outcome.stdout = head + &outcome.stdout;
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors() {
        assert_eq!(run(["compute", "C", "--n", "0"]).code, 2);
        assert_eq!(run(["compute", "X"]).code, 2);
        assert_eq!(run(["compute", "C", "--p", "4"]).code, 2);
        assert_eq!(run(["compute", "C", "--r", "9", "--trunc", "3"]).code, 2);
        assert_eq!(run(["verify", "all", "--n", "3", "--sigma", "upper=1 lower=0"]).code, 2);
        assert_eq!(run(["--help"]).code, 0);
    }

    #[test]
    fn certify_exit_codes() {
        let bad = run(["certify", "--n", "2", "--p", "2", "--smax", "1", "--element", "T[1,2,1]", "--out", "json"]);
        assert_eq!(bad.code, 1);
        assert!(bad.stdout.contains("\"fail\""));
        let good = run(["certify", "--n", "2", "--p", "2", "--element", "T[1,1,1] + T[2,2,1]"]);
        assert_eq!(good.code, 0, "{}", good.stdout);
    }

    #[test]
    fn compute_is_deterministic() {
        let args = ["compute", "B", "--n", "2", "--p", "3", "--trunc", "4", "--r", "3", "--out", "json"];
        let a = run(args);
        assert_eq!(a.code, 0);
        assert_eq!(a, run(args));
        let text = run(["compute", "S", "--i", "1", "--j", "1", "--n", "2", "--p", "2", "--trunc", "2"]);
        assert!(text.stdout.starts_with("S_11^(0) = 1\n"), "{}", text.stdout);
    }
}
