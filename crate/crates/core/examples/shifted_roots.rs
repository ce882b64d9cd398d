//! Root elements of a shifted Yangian inside Y_3 over GF(2) and their
//! p-th powers.

use yangian::central::certify_central;
use yangian::gauss::Drinfeld;
use yangian::shift::{shifted_e, shifted_f, ShiftMatrix};
use yangian::{leading_term, Yangian};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sigma: ShiftMatrix = "upper=1,0 lower=0,1".parse()?;
    println!("sigma = {sigma}, rows {:?}", sigma.rows());
    let y = Yangian::new(3, 2)?;
    let dr = Drinfeld::new(&y, 4)?;
    let e = shifted_e(&dr, &sigma, 1, 3, 2)?;
    let f = shifted_f(&dr, &sigma, 1, 3, 2)?;
    println!("sE_13^(2) = {e}");
    println!("gr sE_13^(2) = {}", leading_term(&e, 1)?);
    println!("gr sF_13^(2) = {}", leading_term(&f, 1)?);
    let sq = y.pth_power(&e)?;
    println!("(sE_13^(2))^2 central up to s <= 2: {}", certify_central(&sq, 2)?.certified());
    println!("sE_13^(1) rejected: {}", shifted_e(&dr, &sigma, 1, 3, 1).is_err());
    println!("non-additive matrix rejected: {}", ShiftMatrix::new(vec![vec![0, 1, 3], vec![0, 0, 1], vec![0, 0, 0]]).is_err());
    Ok(())
}
