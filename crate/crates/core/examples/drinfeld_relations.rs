//! Checks the Drinfeld relations and the series identities of the Gauss
//! factors. Usage: `drinfeld_relations [n] [p] [bound]`.

use yangian::gauss::{series_identity_checks, verify_drinfeld_relations, Drinfeld};
use yangian::Yangian;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, p, bound) = (*args.first().unwrap_or(&3), *args.get(1).unwrap_or(&2), *args.get(2).unwrap_or(&3));
    let y = Yangian::new(n, p as u64)?;
    let dr = Drinfeld::new(&y, 2 * bound - 1)?;
    let checks = verify_drinfeld_relations(&dr, bound)?;
    let failed = checks.iter().filter(|c| !c.passed()).count();
    println!("Drinfeld relations in Y_{n} over GF({p}), superscripts <= {bound}: {} checked, {failed} failed", checks.len());
    println!("E_1^(2) = {}", dr.e(1, 2)?);
    let ids = series_identity_checks(&dr)?;
    let failed = ids.iter().filter(|c| !c.passed()).count();
    println!("series identities: {} checked, {failed} failed", ids.len());
    Ok(())
}
