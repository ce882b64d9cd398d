//! Gauss factorization `T(u) = F(u) D(u) E(u)` and the Drinfeld generators.
//!
//! `E_ij(u)` sits at position `(i, j)` of `E`, `F_ij(u)` at position `(j, i)`
//! of `F`.

use crate::error::{Error, Result};
use crate::pbw::{Element, Yangian};
use crate::report::Check;
use crate::ring::Ring;
use crate::series::{t_matrix, MatrixSeries, Series};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

#[derive(Clone, Debug)]
pub struct GaussFactors<R: Ring> {
    pub f: MatrixSeries<R>,
    pub d: MatrixSeries<R>,
    pub e: MatrixSeries<R>,
}

fn check_shape<R: Ring>(t: &MatrixSeries<R>) -> Result<()> {
    let ring = t.ring();
    for i in 1..=t.n() {
        for j in 1..=t.n() {
            let c0 = &t.entry(i, j).coeffs()[0];
            let want = if i == j { ring.one() } else { ring.zero() };
            if *c0 != want {
                return Err(Error::Malformed(format!("entry ({i},{j}) has constant term {c0:?}")));
            }
        }
    }
    Ok(())
}

/// Factorizes by repeated Schur complements.
pub fn gauss_factorize<R: Ring>(t: &MatrixSeries<R>) -> Result<GaussFactors<R>> {
    check_shape(t)?;
    let (n, trunc, ring) = (t.n(), t.trunc(), t.ring().clone());
    let zero = Series::constant(&ring, ring.zero(), trunc);
    let mut a: Vec<Vec<Series<R>>> = (1..=n).map(|i| (1..=n).map(|j| t.entry(i, j).clone()).collect()).collect();
    let mut d = vec![vec![zero.clone(); n]; n];
    let mut e = vec![vec![zero.clone(); n]; n];
    let mut f = vec![vec![zero.clone(); n]; n];
    for k in 0..n {
        d[k][k] = a[k][k].clone();
        e[k][k] = Series::one(&ring, trunc);
        f[k][k] = Series::one(&ring, trunc);
        let inv = a[k][k].invert()?;
        let rows: Vec<(Series<R>, Series<R>)> = ((k + 1)..n)
            .into_par_iter()
            .map(|j| Ok((inv.mul(&a[k][j])?, a[j][k].mul(&inv)?)))
            .collect::<Result<_>>()?;
        for (off, (ekj, fjk)) in rows.into_iter().enumerate() {
            e[k][k + off + 1] = ekj;
            f[k + off + 1][k] = fjk;
        }
        let cells: Vec<(usize, usize)> = ((k + 1)..n).flat_map(|i| ((k + 1)..n).map(move |j| (i, j))).collect();
        let updated: Vec<Series<R>> =
            cells.par_iter().map(|&(i, j)| a[i][j].sub(&a[i][k].mul(&e[k][j])?)).collect::<Result<_>>()?;
        for (&(i, j), s) in cells.iter().zip(updated) {
            a[i][j] = s;
        }
    }
    Ok(GaussFactors { f: MatrixSeries::new(f)?, d: MatrixSeries::new(d)?, e: MatrixSeries::new(e)? })
}

/// `a_{row,col} - a_{row,<k} M^{-1} a_{<k,col}` with `M` the leading `k x k`
/// block, `k = i - 1`.
fn boxed<R: Ring>(t: &MatrixSeries<R>, minv: Option<&MatrixSeries<R>>, k: usize, row: usize, col: usize) -> Result<Series<R>> {
    let mut acc = t.entry(row, col).clone();
    if let Some(m) = minv {
        for a in 1..=k {
            for b in 1..=k {
                let term = t.entry(row, a).mul(m.entry(a, b))?.mul(t.entry(b, col))?;
                acc = acc.sub(&term)?;
            }
        }
    }
    Ok(acc)
}

fn block_inverse<R: Ring>(t: &MatrixSeries<R>, i: usize) -> Result<Option<MatrixSeries<R>>> {
    if i == 0 || i > t.n() {
        return Err(Error::Inadmissible(format!("index {i} outside 1..={}", t.n())));
    }
    check_shape(t)?;
    if i == 1 {
        return Ok(None);
    }
    Ok(Some(t.leading_block(i - 1)?.neumann_inverse()?))
}

/// `D_i(u)` as a quasideterminant of the leading `i x i` block.
pub fn quasideterminant_d<R: Ring>(t: &MatrixSeries<R>, i: usize) -> Result<Series<R>> {
    let m = block_inverse(t, i)?;
    boxed(t, m.as_ref(), i - 1, i, i)
}

/// `E_ij(u) = D_i(u)^{-1} |...|` with boxed entry `(i, j)`.
pub fn quasideterminant_e<R: Ring>(t: &MatrixSeries<R>, i: usize, j: usize) -> Result<Series<R>> {
    if j <= i || j > t.n() {
        return Err(Error::Inadmissible(format!("need {i} < {j} <= {}", t.n())));
    }
    let m = block_inverse(t, i)?;
    let d = boxed(t, m.as_ref(), i - 1, i, i)?;
    d.invert()?.mul(&boxed(t, m.as_ref(), i - 1, i, j)?)
}

/// `F_ij(u) = |...| D_i(u)^{-1}` with boxed entry `(j, i)`.
pub fn quasideterminant_f<R: Ring>(t: &MatrixSeries<R>, i: usize, j: usize) -> Result<Series<R>> {
    if j <= i || j > t.n() {
        return Err(Error::Inadmissible(format!("need {i} < {j} <= {}", t.n())));
    }
    let m = block_inverse(t, i)?;
    let d = boxed(t, m.as_ref(), i - 1, i, i)?;
    boxed(t, m.as_ref(), i - 1, j, i)?.mul(&d.invert()?)
}

/// The Gauss factors of `T(u)` in `Y_n` together with `D_i(u)^{-1}`.
pub struct Drinfeld {
    y: Yangian,
    t: MatrixSeries<Yangian>,
    factors: GaussFactors<Yangian>,
    d_tilde: Vec<Series<Yangian>>,
}

impl Drinfeld {
    pub fn new(y: &Yangian, trunc: usize) -> Result<Drinfeld> {
        let t = t_matrix(y, trunc)?;
        let factors = gauss_factorize(&t)?;
        let d_tilde = (1..=y.n()).into_par_iter().map(|i| factors.d.entry(i, i).invert()).collect::<Result<_>>()?;
        Ok(Drinfeld { y: y.clone(), t, factors, d_tilde })
    }

    pub fn yangian(&self) -> &Yangian {
        &self.y
    }

    pub fn n(&self) -> usize {
        self.y.n()
    }

    pub fn trunc(&self) -> usize {
        self.t.trunc()
    }

    pub fn t_matrix(&self) -> &MatrixSeries<Yangian> {
        &self.t
    }

    pub fn factors(&self) -> &GaussFactors<Yangian> {
        &self.factors
    }

    fn index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::Inadmissible(format!("index {i} outside 1..={}", self.n())));
        }
        Ok(())
    }

    fn pair(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || j <= i || j > self.n() {
            return Err(Error::Inadmissible(format!("need 1 <= {i} < {j} <= {}", self.n())));
        }
        Ok(())
    }

    pub fn d_series(&self, i: usize) -> Result<&Series<Yangian>> {
        self.index(i)?;
        Ok(self.factors.d.entry(i, i))
    }

    pub fn d_tilde_series(&self, i: usize) -> Result<&Series<Yangian>> {
        self.index(i)?;
        Ok(&self.d_tilde[i - 1])
    }

    pub fn e_series(&self, i: usize, j: usize) -> Result<&Series<Yangian>> {
        self.pair(i, j)?;
        Ok(self.factors.e.entry(i, j))
    }

    pub fn f_series(&self, i: usize, j: usize) -> Result<&Series<Yangian>> {
        self.pair(i, j)?;
        Ok(self.factors.f.entry(j, i))
    }

    pub fn d(&self, i: usize, r: usize) -> Result<Element> {
        Ok(self.d_series(i)?.coefficient(r)?.clone())
    }

    pub fn d_tilde(&self, i: usize, r: usize) -> Result<Element> {
        Ok(self.d_tilde_series(i)?.coefficient(r)?.clone())
    }

    /// `E_i^{(r)} = E_{i,i+1}^{(r)}`.
    pub fn e(&self, i: usize, r: usize) -> Result<Element> {
        Ok(self.e_series(i, i + 1)?.coefficient(r)?.clone())
    }

    pub fn f(&self, i: usize, r: usize) -> Result<Element> {
        Ok(self.f_series(i, i + 1)?.coefficient(r)?.clone())
    }

    /// `E_ij^{(r)}` by nested commutators with `E_{j-1}^{(1)}`.
    pub fn higher_root_e(&self, i: usize, j: usize, r: usize) -> Result<Element> {
        self.pair(i, j)?;
        if j == i + 1 {
            return self.e(i, r);
        }
        let inner = self.higher_root_e(i, j - 1, r)?;
        self.y.commutator(&inner, &self.e(j - 1, 1)?)
    }

    /// `F_ij^{(r)}` by nested commutators with `F_{j-1}^{(1)}`.
    pub fn higher_root_f(&self, i: usize, j: usize, r: usize) -> Result<Element> {
        self.pair(i, j)?;
        if j == i + 1 {
            return self.f(i, r);
        }
        let inner = self.higher_root_f(i, j - 1, r)?;
        self.y.commutator(&self.f(j - 1, 1)?, &inner)
    }

    /// `H_i(u) = -D_{i+1}(u) D_i(u)^{-1}`.
    pub fn h_series(&self, i: usize) -> Result<Series<Yangian>> {
        self.pair(i, i + 1)?;
        Ok(self.d_series(i + 1)?.mul(self.d_tilde_series(i)?)?.neg())
    }
}

#[derive(Clone, Copy)]
enum Gen {
    D,
    E,
    F,
}

/// Every Drinfeld relation among generators with superscripts `<= bound`.
pub fn verify_drinfeld_relations(dr: &Drinfeld, bound: usize) -> Result<Vec<Check>> {
    let need = 2 * bound.max(1) - 1;
    if dr.trunc() < need {
        return Err(Error::Precision(format!("superscripts up to {bound} need precision {need}, have {}", dr.trunc())));
    }
    let y = dr.yangian();
    let n = dr.n();
    let top = need;
    let table = |g: Gen, i: usize| -> Result<Vec<Element>> {
        (0..=top)
            .map(|r| match g {
                Gen::D => dr.d(i, r),
                Gen::E => dr.e(i, r),
                Gen::F => dr.f(i, r),
            })
            .collect()
    };
    let dd: Vec<Vec<Element>> = (1..=n).map(|i| table(Gen::D, i)).collect::<Result<_>>()?;
    let dt: Vec<Vec<Element>> = (1..=n).map(|i| Ok(dr.d_tilde_series(i)?.coeffs()[..=top].to_vec())).collect::<Result<_>>()?;
    let ee: Vec<Vec<Element>> = (1..n).map(|i| table(Gen::E, i)).collect::<Result<_>>()?;
    let ff: Vec<Vec<Element>> = (1..n).map(|i| table(Gen::F, i)).collect::<Result<_>>()?;
    let (d, e, f) = (|i: usize, r: usize| &dd[i - 1][r], |i: usize, r: usize| &ee[i - 1][r], |i: usize, r: usize| &ff[i - 1][r]);
    let dtil = |i: usize, r: usize| &dt[i - 1][r];
    let br = |a: &Element, b: &Element| y.commutator(a, b);
    let delta = |a: usize, b: usize| i64::from(a == b);
    let rng = 1..=bound;

    // Serre-type relations reuse the inner commutators.
    let adjacent: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).filter(move |&j| i.abs_diff(j) == 1).map(move |j| (i, j))).collect();
    let keys: Vec<(bool, usize, usize, usize, usize)> = adjacent
        .iter()
        .flat_map(|&(i, j)| (1..=bound).flat_map(move |s| (1..=bound).flat_map(move |t| [(true, i, j, s, t), (false, i, j, s, t)])))
        .collect();
    let inner: FxHashMap<(bool, usize, usize, usize, usize), Element> = keys
        .par_iter()
        .map(|&(is_e, i, j, s, t)| {
            let v = if is_e { br(e(i, s), e(j, t)) } else { br(f(i, s), f(j, t)) }?;
            Ok(((is_e, i, j, s, t), v))
        })
        .collect::<Result<_>>()?;
    let inner = &inner;

    type Job<'a> = Box<dyn Fn() -> Result<Check> + Send + Sync + 'a>;
    let mut jobs: Vec<Job> = Vec::new();
    let check = |name: &'static str, params: Vec<(&'static str, i64)>, lhs: Element, rhs: Element| {
        let diff = y.sub(&lhs, &rhs);
        Check::vanishing(name, &params, &diff, diff.is_zero())
    };

    for i in 1..=n {
        for j in i..=n {
            for r in rng.clone() {
                for s in rng.clone() {
                    if i == j && r >= s {
                        continue;
                    }
                    jobs.push(Box::new(move || {
                        Ok(check("DD", vec![("i", i as i64), ("j", j as i64), ("r", r as i64), ("s", s as i64)], br(d(i, r), d(j, s))?, y.zero()))
                    }));
                }
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            for r in rng.clone() {
                for s in rng.clone() {
                    let ps = vec![("i", i as i64), ("j", j as i64), ("r", r as i64), ("s", s as i64)];
                    jobs.push(Box::new(move || {
                        let mut rhs = y.zero();
                        if i == j {
                            for t in 0..=(r + s - 1) {
                                rhs = y.sub(&rhs, &y.mul(d(i + 1, r + s - 1 - t), dtil(i, t)));
                            }
                        }
                        Ok(check("EF", ps.clone(), br(e(i, r), f(j, s))?, rhs))
                    }));
                }
            }
        }
    }
    for i in 1..=n {
        for j in 1..n {
            for r in rng.clone() {
                for s in rng.clone() {
                    let c = delta(i, j) - delta(i, j + 1);
                    let ps = vec![("i", i as i64), ("j", j as i64), ("r", r as i64), ("s", s as i64)];
                    let ps2 = ps.clone();
                    jobs.push(Box::new(move || {
                        let mut rhs = y.zero();
                        if c != 0 {
                            for t in 0..r {
                                rhs = y.add(&rhs, &y.mul(d(i, t), e(j, r + s - 1 - t)));
                            }
                        }
                        Ok(check("DE", ps.clone(), br(d(i, r), e(j, s))?, y.scale(&rhs, y.p().elem(c))))
                    }));
                    jobs.push(Box::new(move || {
                        let mut rhs = y.zero();
                        if c != 0 {
                            for t in 0..r {
                                rhs = y.add(&rhs, &y.mul(f(j, r + s - 1 - t), d(i, t)));
                            }
                        }
                        Ok(check("DF", ps2.clone(), br(d(i, r), f(j, s))?, y.scale(&rhs, y.p().elem(-c))))
                    }));
                }
            }
        }
    }
    for i in 1..n {
        for r in rng.clone() {
            for s in rng.clone() {
                if r < s {
                    jobs.push(Box::new(move || {
                        let mut rhs = y.zero();
                        for t in r..s {
                            rhs = y.add(&rhs, &y.mul(e(i, t), e(i, r + s - 1 - t)));
                        }
                        Ok(check("EE", vec![("i", i as i64), ("r", r as i64), ("s", s as i64)], br(e(i, r), e(i, s))?, rhs))
                    }));
                }
                if r > s {
                    jobs.push(Box::new(move || {
                        let mut rhs = y.zero();
                        for t in s..r {
                            rhs = y.add(&rhs, &y.mul(f(i, r + s - 1 - t), f(i, t)));
                        }
                        Ok(check("FF", vec![("i", i as i64), ("r", r as i64), ("s", s as i64)], br(f(i, r), f(i, s))?, rhs))
                    }));
                }
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        for r in 1..bound {
            for s in 1..bound {
                let ps = vec![("i", i as i64), ("r", r as i64), ("s", s as i64)];
                let ps2 = ps.clone();
                jobs.push(Box::new(move || {
                    let lhs = y.sub(&br(e(i, r + 1), e(i + 1, s))?, &br(e(i, r), e(i + 1, s + 1))?);
                    Ok(check("EE_adjacent", ps.clone(), lhs, y.mul(e(i, r), e(i + 1, s))))
                }));
                jobs.push(Box::new(move || {
                    let lhs = y.sub(&br(f(i, r), f(i + 1, s + 1))?, &br(f(i, r + 1), f(i + 1, s))?);
                    Ok(check("FF_adjacent", ps2.clone(), lhs, y.mul(f(i + 1, s), f(i, r))))
                }));
            }
        }
    }
    for i in 1..n {
        for j in (i + 2)..n {
            for r in rng.clone() {
                for s in rng.clone() {
                    let ps = vec![("i", i as i64), ("j", j as i64), ("r", r as i64), ("s", s as i64)];
                    let ps2 = ps.clone();
                    jobs.push(Box::new(move || Ok(check("EE_distant", ps.clone(), br(e(i, r), e(j, s))?, y.zero()))));
                    jobs.push(Box::new(move || Ok(check("FF_distant", ps2.clone(), br(f(i, r), f(j, s))?, y.zero()))));
                }
            }
        }
    }

    for &(i, j) in &adjacent {
        for r in rng.clone() {
            for s in rng.clone() {
                for t in rng.clone() {
                    if r > s {
                        continue;
                    }
                    for is_e in [true, false] {
                        let x = move |k: usize| if is_e { e(i, k) } else { f(i, k) };
                        let ps = vec![("i", i as i64), ("j", j as i64), ("r", r as i64), ("s", s as i64), ("t", t as i64)];
                        let name = match (is_e, r == s) {
                            (true, false) => "E_serre",
                            (false, false) => "F_serre",
                            (true, true) => "E_serre_equal",
                            (false, true) => "F_serre_equal",
                        };
                        jobs.push(Box::new(move || {
                            let mut lhs = br(x(r), &inner[&(is_e, i, j, s, t)])?;
                            if r != s {
                                lhs = y.add(&lhs, &br(x(s), &inner[&(is_e, i, j, r, t)])?);
                            } else {
                                let ps: Vec<_> = ps.iter().filter(|(k, _)| *k != "s").cloned().collect();
                                return Ok(check(name, ps, lhs, y.zero()));
                            }
                            Ok(check(name, ps.clone(), lhs, y.zero()))
                        }));
                    }
                }
            }
        }
    }
    let mut checks: Vec<Check> = jobs.par_iter().map(|job| job()).collect::<Result<_>>()?;
    crate::report::sort_checks(&mut checks);
    Ok(checks)
}

/// A product of two power series in separate variables, or a single one.
enum Piece<'a> {
    /// `x(u) y(v)`
    Uv(&'a Series<Yangian>, &'a Series<Yangian>),
    /// `y(v) x(u)`
    Vu(&'a Series<Yangian>, &'a Series<Yangian>),
    U(&'a Series<Yangian>),
    V(&'a Series<Yangian>),
}

struct Bivariate<'a>(Vec<(i64, Piece<'a>)>);

impl Bivariate<'_> {
    fn coeff(&self, y: &Yangian, a: usize, b: usize) -> Element {
        let mut acc = y.zero();
        for (c, piece) in &self.0 {
            let term = match piece {
                Piece::Uv(x, z) => y.mul(&x.coeffs()[a], &z.coeffs()[b]),
                Piece::Vu(z, x) => y.mul(&z.coeffs()[b], &x.coeffs()[a]),
                Piece::U(x) if b == 0 => x.coeffs()[a].clone(),
                Piece::V(z) if a == 0 => z.coeffs()[b].clone(),
                _ => continue,
            };
            acc = y.add(&acc, &y.scale(&term, y.p().elem(*c)));
        }
        acc
    }
}

/// Checks `(u - v + c) lhs = rhs` on the coefficients of `u^{-a} v^{-b}`
/// with `a, b < N`.
fn bivariate_check(y: &Yangian, name: &str, params: &[(&str, i64)], c: i64, lhs: &Bivariate, rhs: &Bivariate, trunc: usize) -> Check {
    let pairs: Vec<(usize, usize)> = (0..trunc).flat_map(|a| (0..trunc).map(move |b| (a, b))).collect();
    let bad = pairs.par_iter().find_first(|&&(a, b)| {
        let mut l = y.sub(&lhs.coeff(y, a + 1, b), &lhs.coeff(y, a, b + 1));
        if c != 0 {
            l = y.add(&l, &y.scale(&lhs.coeff(y, a, b), y.p().elem(c)));
        }
        l != rhs.coeff(y, a, b)
    });
    Check::new(name, params, bad.is_none(), || format!("first failing coefficient u^-{} v^-{}", bad.unwrap().0, bad.unwrap().1))
}

fn commutator_uv<'a>(x: &'a Series<Yangian>, z: &'a Series<Yangian>) -> Bivariate<'a> {
    Bivariate(vec![(1, Piece::Uv(x, z)), (-1, Piece::Vu(z, x))])
}

fn series_check(name: &str, params: &[(&str, i64)], lhs: &Series<Yangian>, rhs: &Series<Yangian>) -> Check {
    let at = lhs.first_difference(rhs);
    Check::new(name, params, at.is_none() && lhs.trunc() == rhs.trunc(), || match at {
        Some(r) => format!("coefficient {r} differs"),
        None => "precision differs".into(),
    })
}

/// The power-series identities satisfied by the Gauss factors: the
/// factorization itself, the quasideterminant formulas, the two-variable
/// relations between `E_i` and `D_i`, `D_{i+1}`, `H_i`, their one-variable
/// specializations, and the symmetries relating root series.
pub fn series_identity_checks(dr: &Drinfeld) -> Result<Vec<Check>> {
    let y = dr.yangian();
    let n = dr.n();
    let trunc = dr.trunc();
    let mut checks = Vec::new();
    let fac = dr.factors();
    let rebuilt = fac.f.mul(&fac.d.mul(&fac.e)?)?;
    checks.push(Check::new("reconstruction", &[], rebuilt == *dr.t_matrix(), || "F D E differs from T".into()));

    let t = dr.t_matrix();
    let qd: Vec<Check> = (1..=n)
        .into_par_iter()
        .map(|i| -> Result<Vec<Check>> {
            let mut out = vec![series_check("quasideterminant_D", &[("i", i as i64)], &quasideterminant_d(t, i)?, dr.d_series(i)?)];
            for j in (i + 1)..=n {
                let ps = [("i", i as i64), ("j", j as i64)];
                out.push(series_check("quasideterminant_E", &ps, &quasideterminant_e(t, i, j)?, dr.e_series(i, j)?));
                out.push(series_check("quasideterminant_F", &ps, &quasideterminant_f(t, i, j)?, dr.f_series(i, j)?));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    checks.extend(qd);

    let h: Vec<Series<Yangian>> = (1..n).map(|i| dr.h_series(i)).collect::<Result<_>>()?;
    for i in 1..n {
        let ps = [("i", i as i64)];
        let e = dr.e_series(i, i + 1)?;
        let fser = dr.f_series(i, i + 1)?;
        let (d0, d1) = (dr.d_series(i)?, dr.d_series(i + 1)?);
        let (t0, t1) = (dr.d_tilde_series(i)?, dr.d_tilde_series(i + 1)?);
        let g = d1.mul(t0)?;
        let e2 = e.mul(e)?;
        let d0e = d0.mul(e)?;
        let et1 = e.mul(t1)?;
        let et0 = e.mul(t0)?;
        let d1e = d1.mul(e)?;
        use Piece::*;
        let cases: Vec<(&str, Bivariate, Bivariate)> = vec![
            ("EF_series", commutator_uv(e, fser), Bivariate(vec![(1, U(&g)), (-1, V(&g))])),
            ("EE_series", commutator_uv(e, e), Bivariate(vec![(1, V(&e2)), (-1, Vu(e, e)), (-1, Uv(e, e)), (1, U(&e2))])),
            ("ED_series", commutator_uv(e, d0), Bivariate(vec![(1, Vu(d0, e)), (-1, V(&d0e))])),
            ("ED_tilde_next_series", commutator_uv(e, t1), Bivariate(vec![(1, Uv(e, t1)), (-1, V(&et1))])),
            ("ED_tilde_series", commutator_uv(e, t0), Bivariate(vec![(1, V(&et0)), (-1, Uv(e, t0))])),
            ("ED_next_series", commutator_uv(e, d1), Bivariate(vec![(1, V(&d1e)), (-1, Vu(d1, e))])),
        ];
        let results: Vec<Check> = cases.par_iter().map(|(name, l, r)| bivariate_check(y, name, &ps, 0, l, r, trunc)).collect();
        checks.extend(results);

        let (e_up, e_down) = (e.shift_by(1), e.shift_by(-1));
        checks.push(series_check("E_shift_D", &ps, &e_up.mul(d0)?, &d0.mul(e)?));
        checks.push(series_check("D_tilde_shift_E", &ps, &t0.mul(&e_up)?, &e.mul(t0)?));
        checks.push(series_check("D_next_shift_E", &ps, &d1.mul(e)?, &e_down.mul(d1)?));
        checks.push(series_check("E_shift_D_tilde_next", &ps, &e.mul(t1)?, &t1.mul(&e_down)?));

        let hi = &h[i - 1];
        checks.push(Check::new("H_constant", &ps, hi.coeffs()[0] == y.int(-1), || format!("{}", hi.coeffs()[0])));
        checks.push(series_check("H_shift_E", &ps, &hi.mul(&e_up)?, &e_down.mul(hi)?));
        let he_up = hi.mul(&e_up)?;
        let e_down_h = e_down.mul(hi)?;
        let mut hcases: Vec<(&str, i64, Bivariate, Bivariate)> = vec![
            ("HE_same_minus", -1, commutator_uv(hi, e), Bivariate(vec![(2, U(&he_up)), (-2, Uv(hi, e))])),
            ("HE_same_plus", 1, commutator_uv(hi, e), Bivariate(vec![(2, U(&e_down_h)), (-2, Vu(e, hi))])),
        ];
        let (hpe, e_up_hp, hn_e_down, e_hn);
        if i >= 2 {
            let hp = &h[i - 2];
            hpe = hp.mul(e)?;
            e_up_hp = e_up.mul(hp)?;
            hcases.push(("HE_previous", 0, commutator_uv(hp, e), Bivariate(vec![(-1, U(&hpe)), (1, Uv(hp, e))])));
            hcases.push(("HE_previous_minus", -1, commutator_uv(hp, e), Bivariate(vec![(-1, U(&e_up_hp)), (1, Vu(e, hp))])));
        }
        if i + 1 < n {
            let hn = &h[i];
            e_hn = e.mul(hn)?;
            hn_e_down = hn.mul(&e_down)?;
            hcases.push(("HE_next", 0, commutator_uv(hn, e), Bivariate(vec![(-1, U(&e_hn)), (1, Vu(e, hn))])));
            hcases.push(("HE_next_plus", 1, commutator_uv(hn, e), Bivariate(vec![(-1, U(&hn_e_down)), (1, Uv(hn, e))])));
        }
        let results: Vec<Check> = hcases.par_iter().map(|(name, c, l, r)| bivariate_check(y, name, &ps, *c, l, r, trunc)).collect();
        checks.extend(results);
    }

    for i in 1..n {
        for j in (i + 1)..=n {
            let ps = [("i", i as i64), ("j", j as i64)];
            let mut w: Vec<usize> = (1..=n).collect();
            w.swap(i, j - 1);
            let jobs: Vec<usize> = (1..=trunc).collect();
            let rows: Vec<(bool, bool, bool, bool)> = jobs
                .par_iter()
                .map(|&r| -> Result<_> {
                    let eij = dr.e_series(i, j)?.coefficient(r)?;
                    let fij = dr.f_series(i, j)?.coefficient(r)?;
                    Ok((
                        dr.higher_root_e(i, j, r)? == *eij,
                        dr.higher_root_f(i, j, r)? == *fij,
                        y.apply_permutation(&dr.e(i, r)?, &w)? == *eij,
                        y.apply_transpose(eij)? == *fij,
                    ))
                })
                .collect::<Result<_>>()?;
            let fail = |k: usize| rows.iter().position(|row| ![row.0, row.1, row.2, row.3][k]).map(|r| r + 1);
            for (k, name) in ["higher_root_E", "higher_root_F", "permutation_root", "transpose_root"].into_iter().enumerate() {
                let at = fail(k);
                checks.push(Check::new(name, &ps, at.is_none(), || format!("superscript {} differs", at.unwrap())));
            }
        }
    }
    crate::report::sort_checks(&mut checks);
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::generator_series;

    #[test]
    fn rank_one() {
        let y = Yangian::new(1, 3).unwrap();
        let dr = Drinfeld::new(&y, 4).unwrap();
        assert_eq!(dr.d_series(1).unwrap(), &generator_series(&y, 1, 1, 4).unwrap());
    }

    #[test]
    fn first_coefficients() {
        let y = Yangian::new(3, 2).unwrap();
        let dr = Drinfeld::new(&y, 3).unwrap();
        assert_eq!(dr.e(2, 1).unwrap(), y.t(2, 3, 1).unwrap());
        assert_eq!(dr.f(1, 1).unwrap(), y.t(2, 1, 1).unwrap());
        for i in 1..=3 {
            assert_eq!(dr.d(i, 1).unwrap(), y.t(i, i, 1).unwrap());
        }
        let h = dr.h_series(1).unwrap();
        assert_eq!(h.coeffs()[0], y.int(-1));
        assert!(dr.h_series(3).is_err());
        assert!(dr.e(1, 4).is_err());
    }

    #[test]
    fn d_tilde_recursion() {
        let y = Yangian::new(2, 3).unwrap();
        let dr = Drinfeld::new(&y, 4).unwrap();
        for r in 1..=4 {
            let mut want = y.zero();
            for t in 1..=r {
                want = y.sub(&want, &y.mul(&dr.d(2, t).unwrap(), &dr.d_tilde(2, r - t).unwrap()));
            }
            assert_eq!(dr.d_tilde(2, r).unwrap(), want);
        }
    }

    #[test]
    fn malformed_input() {
        let y = Yangian::new(2, 2).unwrap();
        let t = t_matrix(&y, 2).unwrap();
        let bad = MatrixSeries::from_fn(2, |i, j| t.entry(j, i).clone().with_constant(y.zero())).unwrap();
        assert!(matches!(gauss_factorize(&bad), Err(Error::Malformed(_))));
    }

    #[test]
    fn drinfeld_needs_precision() {
        let y = Yangian::new(2, 2).unwrap();
        let dr = Drinfeld::new(&y, 4).unwrap();
        assert!(matches!(verify_drinfeld_relations(&dr, 3), Err(Error::Precision(_))));
        assert!(verify_drinfeld_relations(&dr, 2).unwrap().iter().all(Check::passed));
    }

    #[test]
    fn identities_small() {
        let y = Yangian::new(3, 2).unwrap();
        let dr = Drinfeld::new(&y, 3).unwrap();
        let checks = series_identity_checks(&dr).unwrap();
        let bad: Vec<_> = checks.iter().filter(|c| !c.passed()).collect();
        assert!(bad.is_empty(), "{bad:?}");
    }
}
