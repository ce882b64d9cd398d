//! Multiplies a few generators of Y_2 over GF(3) and prints the PBW
//! normal forms.

use yangian::io::{element_to_json, parse_element};
use yangian::{Ring, Yangian};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = Yangian::new(2, 3)?;
    let a = y.t(1, 2, 2)?;
    let b = y.t(2, 1, 1)?;
    println!("T[1,2,2] T[2,1,1] = {}", y.multiply(&a, &b)?);
    println!("T[2,1,1] T[1,2,2] = {}", y.multiply(&b, &a)?);
    println!("[T[1,2,2], T[2,1,1]] = {}", y.commutator(&a, &b)?);
    let x = parse_element(&y, "T[2,2,1] * T[1,1,1] + 2 * T[1,2,1]^2")?;
    println!("parsed: {x}");
    println!("cube: {} terms", y.pth_power(&x)?.num_terms());
    println!("json: {}", element_to_json(&y.sub(&x, &y.one())));
    Ok(())
}
