//! Central elements of `Y_n`: the quantum determinant, the series `B_i`,
//! `BC`, `P_ij`, `Q_ij`, `S_ij` and `A_i`, and a bounded centrality test.

use crate::error::{Error, Result};
use crate::gauss::Drinfeld;
use crate::pbw::{Element, Gen, Yangian};
use crate::report::Check;
use crate::ring::Ring;
use crate::series::{generator_series, Series};
use itertools::Itertools;
use rayon::prelude::*;

type YSeries = Series<Yangian>;

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len()).flat_map(|a| (a + 1..perm.len()).map(move |b| (a, b))).filter(|&(a, b)| perm[a] > perm[b]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `C(u) = sum_g sgn(g) T_{g(1),1}(u) T_{g(2),2}(u-1) ... T_{g(n),n}(u-n+1)`.
pub fn qdet(y: &Yangian, trunc: usize) -> Result<YSeries> {
    let n = y.n();
    let cols: Vec<Vec<YSeries>> = (1..=n)
        .map(|k| (1..=n).map(|i| Ok(generator_series(y, i, k, trunc)?.shift_by(k as i64 - 1))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let terms: Vec<YSeries> = (0..n)
        .permutations(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|g| {
            let prod = (0..n).try_fold(YSeries::one(y, trunc), |acc, k| acc.mul(&cols[k][g[k]]))?;
            Ok(prod.scale(y.p().elem(sign(&g))))
        })
        .collect::<Result<_>>()?;
    terms.iter().try_fold(YSeries::constant(y, y.zero(), trunc), |acc, t| acc.add(t))
}

/// `C(u) = D_1(u) D_2(u-1) ... D_n(u-n+1)`.
pub fn c_product(dr: &Drinfeld) -> Result<YSeries> {
    let ds: Vec<YSeries> = (1..=dr.n()).map(|i| dr.d_series(i).cloned()).collect::<Result<_>>()?;
    YSeries::shifted_product(&ds)
}

/// `B_i(u) = D_i(u) D_i(u-1) ... D_i(u-p+1)`.
pub fn b_series(dr: &Drinfeld, i: usize) -> Result<YSeries> {
    dr.d_series(i)?.shifted_power(dr.yangian().p().get() as usize)
}

fn agree(what: &str, a: &YSeries, b: &YSeries) -> Result<()> {
    match a.first_difference(b) {
        None => Ok(()),
        Some(r) => Err(Error::IdentityMismatch(format!("{what} differ at u^-{r}"))),
    }
}

/// `B_1(u) B_2(u-1) ... B_n(u-n+1)`, checked against
/// `C(u) C(u-1) ... C(u-p+1)`.
pub fn bc_series(dr: &Drinfeld) -> Result<YSeries> {
    let bs: Vec<YSeries> = (1..=dr.n()).map(|i| b_series(dr, i)).collect::<Result<_>>()?;
    let left = YSeries::shifted_product(&bs)?;
    let right = c_product(dr)?.shifted_power(dr.yangian().p().get() as usize)?;
    agree("the two products for BC(u)", &left, &right)?;
    Ok(left)
}

/// `P_ij(u) = E_ij(u)^p`.
pub fn p_series(dr: &Drinfeld, i: usize, j: usize) -> Result<YSeries> {
    dr.e_series(i, j)?.pow(dr.yangian().p().get())
}

/// `Q_ij(u) = F_ij(u)^p`.
pub fn q_series(dr: &Drinfeld, i: usize, j: usize) -> Result<YSeries> {
    dr.f_series(i, j)?.pow(dr.yangian().p().get())
}

/// `S_ij(u) = T_ij(u) T_ij(u-1) ... T_ij(u-p+1)`.
pub fn s_series(y: &Yangian, i: usize, j: usize, trunc: usize) -> Result<YSeries> {
    generator_series(y, i, j, trunc)?.shifted_power(y.p().get() as usize)
}

/// `A_i(u) = H_i(u) H_i(u-1) ... H_i(u-p+1)`, checked against
/// `-B_{i+1}(u) B_i(u)^{-1}`.
pub fn a_series(dr: &Drinfeld, i: usize) -> Result<YSeries> {
    let a = dr.h_series(i)?.shifted_power(dr.yangian().p().get() as usize)?;
    let other = b_series(dr, i + 1)?.mul(&b_series(dr, i)?.invert()?)?.neg();
    agree("the two expressions for A_i(u)", &a, &other)?;
    Ok(a)
}

/// A bounded centrality certificate: `x` commutes with every `T[k,l,s]`
/// with `s <= smax`. This is evidence, not a proof, for larger `s`.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub smax: u32,
    pub checks: Vec<Check>,
    pub failures: Vec<(Gen, Element)>,
}

impl Certificate {
    pub fn certified(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn certify_central(x: &Element, smax: u32) -> Result<Certificate> {
    let y = x.yangian();
    let n = y.n();
    let grid: Vec<Gen> = (1..=n).flat_map(|k| (1..=n).flat_map(move |l| (1..=smax).map(move |s| Gen::new(k, l, s)))).collect();
    let results: Vec<(Gen, Element)> = grid
        .into_par_iter()
        .map(|g| Ok((g, y.commutator(x, &y.gen(g)?)?)))
        .collect::<Result<_>>()?;
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for (g, c) in results {
        let params = [("k", g.i as i64), ("l", g.j as i64), ("s", g.r as i64)];
        checks.push(Check::new("commutes_with_T", &params, c.is_zero(), || format!("[x, T[{},{},{}]] = {c}", g.i, g.j, g.r)));
        if !c.is_zero() {
            failures.push((g, c));
        }
    }
    Ok(Certificate { smax, checks, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qdet_low_orders() {
        let y = Yangian::new(3, 3).unwrap();
        let c = qdet(&y, 3).unwrap();
        assert_eq!(*c.coefficient(0).unwrap(), y.one());
        let trace = (1..=3).fold(y.zero(), |acc, i| y.add(&acc, &y.t(i, i, 1).unwrap()));
        assert_eq!(*c.coefficient(1).unwrap(), trace);
        let y1 = Yangian::new(1, 5).unwrap();
        assert_eq!(qdet(&y1, 4).unwrap(), generator_series(&y1, 1, 1, 4).unwrap());
    }

    #[test]
    fn qdet_matches_product() {
        for (n, p) in [(2, 2), (2, 3), (3, 2)] {
            let y = Yangian::new(n, p).unwrap();
            let dr = Drinfeld::new(&y, 5).unwrap();
            assert_eq!(qdet(&y, 5).unwrap(), c_product(&dr).unwrap(), "n={n} p={p}");
        }
    }

    #[test]
    fn b_series_small_coefficients() {
        let y = Yangian::new(2, 3).unwrap();
        let dr = Drinfeld::new(&y, 4).unwrap();
        let b = b_series(&dr, 2).unwrap();
        assert!(b.coefficient(1).unwrap().is_zero());
        assert!(b.coefficient(2).unwrap().is_zero());
        let d1 = dr.d(2, 1).unwrap();
        assert_eq!(*b.coefficient(3).unwrap(), y.sub(&y.pow(&d1, 3), &d1));
    }

    #[test]
    fn certificate_witness() {
        let y = Yangian::new(2, 2).unwrap();
        let cert = certify_central(&y.t(1, 2, 1).unwrap(), 2).unwrap();
        assert!(!cert.certified());
        let want = y.sub(&y.t(1, 1, 1).unwrap(), &y.t(2, 2, 1).unwrap());
        assert!(cert.failures.iter().any(|(g, c)| *g == Gen::new(2, 1, 1) && *c == want));
        assert!(certify_central(&y.one(), 3).unwrap().certified());
    }

    #[test]
    fn structural_identities() {
        let y = Yangian::new(2, 2).unwrap();
        let dr = Drinfeld::new(&y, 5).unwrap();
        assert_eq!(s_series(&y, 1, 1, 5).unwrap(), b_series(&dr, 1).unwrap());
        let s12 = s_series(&y, 1, 2, 5).unwrap();
        assert_eq!(s12, b_series(&dr, 1).unwrap().mul(&p_series(&dr, 1, 2).unwrap()).unwrap());
        bc_series(&dr).unwrap();
        let a = a_series(&dr, 1).unwrap();
        assert_eq!(*a.coefficient(0).unwrap(), y.one());
    }
}
