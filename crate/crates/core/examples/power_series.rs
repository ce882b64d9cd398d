//! Arithmetic on truncated series with coefficients in Y_2: inverse,
//! argument shift and shifted products.

use yangian::{generator_series, Yangian};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = Yangian::new(2, 2)?;
    let t11 = generator_series(&y, 1, 1, 4)?;
    let inv = t11.invert()?;
    for (r, c) in inv.coeffs().iter().enumerate() {
        println!("T_11(u)^-1 at u^-{r}: {c}");
    }
    println!("T_11(u) T_11(u)^-1 == 1: {}", t11.mul(&inv)? == yangian::Series::one(&y, 4));
    let shifted = t11.shift_by(1);
    println!("T_11(u-1) at u^-2: {}", shifted.coefficient(2)?);
    let prod = t11.shifted_power(2)?;
    println!("T_11(u) T_11(u-1) at u^-2: {}", prod.coefficient(2)?);
    Ok(())
}
