//! Series of types I to IV on commuting indeterminates, the gamma
//! coefficients and the optimality test.

use yangian::serieslab::{floor_sequence, gamma_coeff, indeterminate_series, is_optimal, residues, series_type_i, series_type_iii, PolyRing};
use yangian::{Prime, Ring};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = PolyRing::new(4, 3)?;
    let x = indeterminate_series(&ring, 4, ring.one());
    let iii = series_type_iii(&x)?;
    for r in 1..=4 {
        println!("type III, p = 3, r = {r}: {}", iii.coefficient(r)?);
    }
    let x0 = indeterminate_series(&ring, 4, ring.zero());
    let i = series_type_i(&x0)?;
    for r in [3, 4] {
        println!("type I, p = 3, r = {r}: {}", i.coefficient(r)?);
    }
    let pts = residues(Prime::new(3)?);
    for r in 1..=5 {
        println!("gamma_(1,0,0)^({r}) at 0,1,2 = {}", gamma_coeff(r, &[1, 0, 0], &pts)?);
    }
    let d = floor_sequence(2);
    println!("floor sequence for m = 2 optimal at r = 6, n = 3: {}", is_optimal(6, &d, 3));
    Ok(())
}
