//! Truncated power series in `u^{-1}` over a [`Ring`].
//!
//! A series of precision `N` knows its coefficients of `u^0, ..., u^{-N}`
//! exactly; asking for anything beyond `N` is an error, never a zero.

use crate::error::{Error, Result};
use crate::field::{binom_mod_p, FieldElem};
use crate::pbw::Yangian;
use crate::ring::Ring;
use rayon::prelude::*;
use std::fmt;

#[derive(Clone)]
pub struct Series<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for Series<R> {
    fn eq(&self, o: &Self) -> bool {
        self.ring.same(&o.ring) && self.coeffs == o.coeffs
    }
}

impl<R: Ring> fmt::Debug for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Series").field("trunc", &self.trunc()).field("coeffs", &self.coeffs).finish()
    }
}

impl<R: Ring> Series<R> {
    /// The series with the given coefficients of `u^0, ..., u^{-N}`.
    pub fn new(ring: &R, coeffs: Vec<R::Elem>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidArgument("a series needs at least its constant term".into()));
        }
        Ok(Series { ring: ring.clone(), coeffs })
    }

    pub fn from_fn(ring: &R, trunc: usize, f: impl Fn(usize) -> R::Elem) -> Self {
        Series { ring: ring.clone(), coeffs: (0..=trunc).map(f).collect() }
    }

    pub fn constant(ring: &R, c: R::Elem, trunc: usize) -> Self {
        Self::from_fn(ring, trunc, |r| if r == 0 { c.clone() } else { ring.zero() })
    }

    pub fn one(ring: &R, trunc: usize) -> Self {
        Self::constant(ring, ring.one(), trunc)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coefficient(&self, r: usize) -> Result<&R::Elem> {
        self.coeffs
            .get(r)
            .ok_or_else(|| Error::Precision(format!("coefficient {r} requested from a series known to order {}", self.trunc())))
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n > self.trunc() {
            return Err(Error::Precision(format!("cannot extend a series of precision {} to {n}", self.trunc())));
        }
        Ok(Series { ring: self.ring.clone(), coeffs: self.coeffs[..=n].to_vec() })
    }

    /// The same series with its constant term replaced by `c`.
    pub fn with_constant(&self, c: R::Elem) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = c;
        s
    }

    pub fn map(&self, f: impl Fn(&R::Elem) -> R::Elem + Sync + Send) -> Self
    where
        R::Elem: Sync,
    {
        Series { ring: self.ring.clone(), coeffs: self.coeffs.par_iter().map(f).collect() }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if !self.ring.same(&o.ring) {
            return Err(Error::ContextMismatch(format!("{} versus {}", self.ring.describe(), o.ring.describe())));
        }
        Ok(())
    }

    fn zip(&self, o: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        self.check(o)?;
        let n = self.trunc().min(o.trunc());
        Ok(Self::from_fn(&self.ring, n, |r| f(&self.coeffs[r], &o.coeffs[r])))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| self.ring.sub(a, b))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(&self.ring, self.trunc(), |r| self.ring.neg(&self.coeffs[r]))
    }

    pub fn scale(&self, c: FieldElem) -> Self {
        Self::from_fn(&self.ring, self.trunc(), |r| self.ring.scale(&self.coeffs[r], c))
    }

    fn mul_elems(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        if let Some(c) = self.ring.as_scalar(a) {
            self.ring.scale(b, c)
        } else if let Some(c) = self.ring.as_scalar(b) {
            self.ring.scale(a, c)
        } else {
            self.ring.mul(a, b)
        }
    }

    /// Cauchy product, truncated at the smaller precision.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.trunc().min(o.trunc());
        let coeffs = (0..=n)
            .into_par_iter()
            .map(|r| {
                let parts: Vec<R::Elem> = (0..=r)
                    .into_par_iter()
                    .filter(|&a| !self.ring.is_zero(&self.coeffs[a]) && !self.ring.is_zero(&o.coeffs[r - a]))
                    .map(|a| self.mul_elems(&self.coeffs[a], &o.coeffs[r - a]))
                    .collect();
                self.ring.sum(parts.iter())
            })
            .collect();
        Ok(Series { ring: self.ring.clone(), coeffs })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.ring, self.trunc());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Two-sided inverse; the constant term must be a nonzero scalar.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self
            .ring
            .as_scalar(&self.coeffs[0])
            .and_then(|c| c.inv())
            .ok_or_else(|| Error::NotInvertible("constant term is not a nonzero scalar".into()))?;
        let mut g: Vec<R::Elem> = vec![self.ring.scalar(c0)];
        for r in 1..=self.trunc() {
            let parts: Vec<R::Elem> = (1..=r)
                .into_par_iter()
                .filter(|&t| !self.ring.is_zero(&self.coeffs[t]) && !self.ring.is_zero(&g[r - t]))
                .map(|t| self.mul_elems(&self.coeffs[t], &g[r - t]))
                .collect();
            let s = self.ring.sum(parts.iter());
            g.push(self.ring.scale(&s, -c0));
        }
        Ok(Series { ring: self.ring.clone(), coeffs: g })
    }

    /// `f(u - c)`.
    pub fn shift_arg(&self, c: FieldElem) -> Self {
        let p = self.ring.prime();
        Self::from_fn(&self.ring, self.trunc(), |t| {
            if t == 0 {
                return self.coeffs[0].clone();
            }
            let mut acc = self.ring.zero();
            for s in 1..=t {
                let k = binom_mod_p(t as i64 - 1, (t - s) as i64, p) * c.pow((t - s) as u64);
                if !k.is_zero() {
                    acc = self.ring.add(&acc, &self.ring.scale(&self.coeffs[s], k));
                }
            }
            acc
        })
    }

    /// `f(u - c)` for an integer shift.
    pub fn shift_by(&self, c: i64) -> Self {
        self.shift_arg(self.ring.prime().elem(c))
    }

    /// `f(u) f(u - 1) ... f(u - k + 1)`.
    pub fn shifted_power(&self, k: usize) -> Result<Self> {
        let factors: Vec<Self> = (0..k).map(|s| self.shift_by(s as i64)).collect();
        Self::shifted_product_of(&self.ring, self.trunc(), &factors)
    }

    /// `f_1(u) f_2(u - 1) ... f_k(u - k + 1)`.
    pub fn shifted_product(factors: &[Self]) -> Result<Self> {
        let first = factors.first().ok_or_else(|| Error::InvalidArgument("empty product".into()))?;
        let shifted: Vec<Self> = factors.iter().enumerate().map(|(s, f)| f.shift_by(s as i64)).collect();
        Self::shifted_product_of(&first.ring, first.trunc(), &shifted)
    }

    fn shifted_product_of(ring: &R, trunc: usize, factors: &[Self]) -> Result<Self> {
        factors.iter().try_fold(Self::one(ring, trunc), |acc, f| acc.mul(f))
    }

    /// The first index where the two series differ, up to the common precision.
    pub fn first_difference(&self, o: &Self) -> Option<usize> {
        let n = self.trunc().min(o.trunc());
        (0..=n).find(|&r| self.coeffs[r] != o.coeffs[r])
    }
}

/// An `n x n` matrix of series sharing one precision.
#[derive(Clone, Debug)]
pub struct MatrixSeries<R: Ring> {
    n: usize,
    entries: Vec<Series<R>>,
}

impl<R: Ring> PartialEq for MatrixSeries<R> {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.entries == o.entries
    }
}

impl<R: Ring> MatrixSeries<R> {
    /// Builds a matrix from its rows.
    pub fn new(rows: Vec<Vec<Series<R>>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("matrix must be square and nonempty".into()));
        }
        let entries: Vec<Series<R>> = rows.into_iter().flatten().collect();
        let trunc = entries[0].trunc();
        if entries.iter().any(|s| s.trunc() != trunc || !s.ring.same(&entries[0].ring)) {
            return Err(Error::Malformed("entries must share ring and precision".into()));
        }
        Ok(MatrixSeries { n, entries })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Series<R>) -> Result<Self> {
        Self::new((1..=n).map(|i| (1..=n).map(|j| f(i, j)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn trunc(&self) -> usize {
        self.entries[0].trunc()
    }

    pub fn ring(&self) -> &R {
        self.entries[0].ring()
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> &Series<R> {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::ContextMismatch(format!("{}x{} times {}x{}", self.n, self.n, o.n, o.n)));
        }
        let cells: Vec<(usize, usize)> = (1..=self.n).flat_map(|i| (1..=self.n).map(move |j| (i, j))).collect();
        let entries = cells
            .par_iter()
            .map(|&(i, j)| {
                let mut acc = Series::constant(self.ring(), self.ring().zero(), self.trunc().min(o.trunc()));
                for k in 1..=self.n {
                    acc = acc.add(&self.entry(i, k).mul(o.entry(k, j))?)?;
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MatrixSeries { n: self.n, entries })
    }
}

impl<R: Ring> MatrixSeries<R> {
    pub fn identity(ring: &R, n: usize, trunc: usize) -> Self {
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { Series::one(ring, trunc) } else { Series::constant(ring, ring.zero(), trunc) })
            .collect();
        MatrixSeries { n, entries }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.add(b))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip(o, |a, b| a.sub(b))
    }

    fn zip(&self, o: &Self, f: impl Fn(&Series<R>, &Series<R>) -> Result<Series<R>>) -> Result<Self> {
        if self.n != o.n {
            return Err(Error::ContextMismatch("matrix sizes differ".into()));
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(MatrixSeries { n: self.n, entries })
    }

    /// The leading `k x k` block.
    pub fn leading_block(&self, k: usize) -> Result<Self> {
        Self::from_fn(k, |i, j| self.entry(i, j).clone())
    }

    /// Inverse of a matrix whose constant term is the identity, as the
    /// Neumann series of `I + X`.
    pub fn neumann_inverse(&self) -> Result<Self> {
        let ring = self.ring().clone();
        let (n, trunc) = (self.n, self.trunc());
        for i in 1..=n {
            for j in 1..=n {
                let want = if i == j { ring.one() } else { ring.zero() };
                if self.entry(i, j).coeffs()[0] != want {
                    return Err(Error::Malformed("constant term is not the identity".into()));
                }
            }
        }
        let id = Self::identity(&ring, n, trunc);
        let minus_x = id.sub(self)?;
        let mut acc = id.clone();
        let mut power = id;
        for _ in 0..trunc {
            power = power.mul(&minus_x)?;
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }
}

/// `T_ij(u)` to precision `trunc`.
pub fn generator_series(y: &Yangian, i: usize, j: usize, trunc: usize) -> Result<Series<Yangian>> {
    y.t(i, j, 0)?;
    y.t(1, 1, trunc as u32)?;
    Ok(Series::from_fn(y, trunc, |r| y.t_unchecked(i, j, r as u32)))
}

/// The matrix `T(u)`.
pub fn t_matrix(y: &Yangian, trunc: usize) -> Result<MatrixSeries<Yangian>> {
    let rows = (1..=y.n()).map(|i| (1..=y.n()).map(|j| generator_series(y, i, j, trunc)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    MatrixSeries::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y2() -> Yangian {
        Yangian::new(2, 3).unwrap()
    }

    fn random_series(y: &Yangian, picks: &[(usize, usize, u32, i64)], trunc: usize) -> Series<Yangian> {
        let mut s = Series::one(y, trunc);
        for &(i, j, r, c) in picks {
            let k = (r as usize) % (trunc + 1);
            if k == 0 {
                continue;
            }
            let g = y.scale(&y.t(i, j, r).unwrap(), y.p().elem(c));
            s.coeffs[k] = y.add(&s.coeffs[k], &g);
        }
        s
    }

    #[test]
    fn generator_series_shape() {
        let y = y2();
        let s = generator_series(&y, 1, 1, 2).unwrap();
        assert_eq!(s.coefficient(0).unwrap(), &y.one());
        assert_eq!(s.coefficient(2).unwrap(), &y.t(1, 1, 2).unwrap());
        assert!(generator_series(&y, 1, 2, 2).unwrap().coefficient(0).unwrap().is_zero());
        assert!(matches!(s.coefficient(3), Err(Error::Precision(_))));
        assert!(generator_series(&y, 3, 1, 2).is_err());
    }

    #[test]
    fn shift_matches_translation() {
        let y = y2();
        let s = generator_series(&y, 1, 2, 4).unwrap();
        let c = y.p().elem(2);
        let sh = s.shift_arg(c);
        for r in 1..=4 {
            assert_eq!(sh.coefficient(r).unwrap(), &y.apply_translation(&y.t(1, 2, r as u32).unwrap(), c).unwrap());
        }
    }

    #[test]
    fn convolution_first_coefficient() {
        let y = y2();
        let f = generator_series(&y, 1, 2, 3).unwrap();
        let g = generator_series(&y, 2, 1, 3).unwrap();
        assert!(f.mul(&g).unwrap().coefficient(1).unwrap().is_zero());
        let h = generator_series(&y, 2, 2, 3).unwrap();
        let fh = f.mul(&h).unwrap();
        assert_eq!(fh.coefficient(1).unwrap(), &y.t(1, 2, 1).unwrap());
        assert!(Series::one(&y, 5).coefficient(5).unwrap().is_zero());
    }

    #[test]
    fn not_invertible() {
        let y = y2();
        let f = generator_series(&y, 1, 2, 3).unwrap();
        assert!(matches!(f.invert(), Err(Error::NotInvertible(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(12))]

        #[test]
        fn inverse_round_trip(picks in proptest::collection::vec((1usize..=2, 1usize..=2, 1u32..=3, 1i64..3), 1..4)) {
            let y = y2();
            let f = random_series(&y, &picks, 3);
            let g = f.invert().unwrap();
            prop_assert_eq!(f.mul(&g).unwrap(), Series::one(&y, 3));
            prop_assert_eq!(g.mul(&f).unwrap(), Series::one(&y, 3));
            prop_assert_eq!(g.invert().unwrap(), f);
        }

        #[test]
        fn shift_is_homomorphism(a in proptest::collection::vec((1usize..=2, 1usize..=2, 1u32..=3, 1i64..3), 1..3),
                                 b in proptest::collection::vec((1usize..=2, 1usize..=2, 1u32..=3, 1i64..3), 1..3),
                                 c in 0i64..3, d in 0i64..3) {
            let y = y2();
            let (f, g) = (random_series(&y, &a, 3), random_series(&y, &b, 3));
            let (c, d) = (y.p().elem(c), y.p().elem(d));
            prop_assert_eq!(f.mul(&g).unwrap().shift_arg(c), f.shift_arg(c).mul(&g.shift_arg(c)).unwrap());
            prop_assert_eq!(f.shift_arg(c).shift_arg(d), f.shift_arg(c + d));
        }

        #[test]
        fn mul_associative(a in proptest::collection::vec((1usize..=2, 1usize..=2, 1u32..=2, 1i64..3), 1..3),
                           b in proptest::collection::vec((1usize..=2, 1usize..=2, 1u32..=2, 1i64..3), 1..3),
                           c in proptest::collection::vec((1usize..=2, 1usize..=2, 1u32..=2, 1i64..3), 1..3)) {
            let y = y2();
            let (f, g, h) = (random_series(&y, &a, 2), random_series(&y, &b, 2), random_series(&y, &c, 2));
            prop_assert_eq!(f.mul(&g).unwrap().mul(&h).unwrap(), f.mul(&g.mul(&h).unwrap()).unwrap());
        }
    }
}
