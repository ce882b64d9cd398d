//! Central series of Y_2 over GF(3): the quantum determinant, B_1, P_12
//! and S_12, each certified against the generators.

use yangian::central::{b_series, c_product, certify_central, p_series, qdet, s_series};
use yangian::gauss::Drinfeld;
use yangian::Yangian;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let y = Yangian::new(2, 3)?;
    let trunc = 6;
    let dr = Drinfeld::new(&y, trunc)?;
    let c = qdet(&y, trunc)?;
    println!("qdet equals D_1(u) D_2(u-1): {}", c == c_product(&dr)?);
    println!("C^(2) = {}", c.coefficient(2)?);
    let families = [("B_1", b_series(&dr, 1)?), ("P_12", p_series(&dr, 1, 2)?), ("S_12", s_series(&y, 1, 2, trunc)?)];
    for (name, s) in &families {
        for r in [3, 6] {
            let cert = certify_central(s.coefficient(r)?, 3)?;
            println!("{name}^({r}): {} terms, central up to s <= 3: {}", s.coefficient(r)?.num_terms(), cert.certified());
        }
    }
    let e = dr.e(1, 1)?;
    let cert = certify_central(&e, 2)?;
    let (g, w) = &cert.failures[0];
    println!("E_1^(1) is not central: [E_1^(1), T[{},{},{}]] = {w}", g.i, g.j, g.r);
    Ok(())
}
