//! Loop degrees and leading terms in U(gl_2[t]) over GF(2).

use yangian::central::{b_series, c_product};
use yangian::gauss::Drinfeld;
use yangian::{leading_term, loop_degree, CurrentAlgebra, Yangian};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = Yangian::new(2, 2)?;
    let dr = Drinfeld::new(&y, 4)?;
    let g = CurrentAlgebra::new(2, 2)?;
    let c = c_product(&dr)?;
    for r in 0..3 {
        let x = c.coefficient(r as usize + 1)?;
        println!("C^({}) has loop degree {}, leading term {}", r + 1, loop_degree(x)?, leading_term(x, r)?);
        println!("  z_{r} = {}", g.zr(r)?);
    }
    let b = b_series(&dr, 1)?;
    println!("gr B_1^(4) = {}", leading_term(b.coefficient(4)?, 2)?);
    let e = g.e(1, 2, 1)?;
    let f = g.e(2, 1, 0)?;
    println!("[e_12 t, e_21] = {}", g.commutator(&e, &f)?);
    Ok(())
}
