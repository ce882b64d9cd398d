//! Runs one verification suite and prints a summary per check name.
//! Usage: `verify_suite [suite] [n] [p] [trunc]`.

use std::collections::BTreeMap;
use yangian::verify::{run_suite, Config, Suite};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite: Suite = args.first().map(String::as_str).unwrap_or("center").parse()?;
    let num = |k: usize, d: u64| args.get(k).map(|s| s.parse::<u64>()).transpose().map(|v| v.unwrap_or(d));
    let mut cfg = Config::new(num(1, 2)? as usize, num(2, 3)?)?;
    cfg.trunc = num(3, 6)? as usize;
    let report = run_suite(suite, &cfg)?;
    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &report.checks {
        let e = tally.entry(&c.name).or_default();
        e.0 += 1;
        e.1 += usize::from(!c.passed());
    }
    for (name, (total, failed)) in tally {
        println!("{name:32} {total:4} checked {failed:3} failed");
    }
    println!("all passed: {}", report.passed());
    Ok(())
}
