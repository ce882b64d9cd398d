//! Gauss factorization of T(u) in Y_3 over GF(2) and the Drinfeld
//! generators read off from it.

use yangian::gauss::{quasideterminant_d, Drinfeld};
use yangian::Yangian;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = Yangian::new(3, 2)?;
    let dr = Drinfeld::new(&y, 3)?;
    for i in 1..=3 {
        println!("D_{i}^(2) = {}", dr.d(i, 2)?);
    }
    println!("E_1^(2) = {}", dr.e(1, 2)?);
    println!("F_2^(1) = {}", dr.f(2, 1)?);
    println!("E_13^(1) = {}", dr.higher_root_e(1, 3, 1)?);
    let quasi = quasideterminant_d(dr.t_matrix(), 3)?;
    println!("quasideterminant D_3 agrees: {}", &quasi == dr.d_series(3)?);
    let h = dr.h_series(1)?;
    println!("H_1^(1) = {}", h.coefficient(1)?);
    Ok(())
}
