//! Shift matrices and the root elements of shifted Yangians.

use crate::error::{Error, Result};
use crate::gauss::Drinfeld;
use crate::graded::{CurrentAlgebra, LoopGen};
use crate::pbw::Element;
use crate::report::Check;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// An `n x n` array `s` with `s_ij + s_jk = s_ik` whenever `j` lies
/// between `i` and `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ShiftJson", into = "ShiftJson")]
pub struct ShiftMatrix {
    s: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct ShiftJson {
    n: usize,
    s: Vec<Vec<u32>>,
}

impl TryFrom<ShiftJson> for ShiftMatrix {
    type Error = Error;

    fn try_from(j: ShiftJson) -> Result<ShiftMatrix> {
        if j.s.len() != j.n {
            return Err(Error::InvalidShiftMatrix(format!("declared size {} but {} rows", j.n, j.s.len())));
        }
        ShiftMatrix::new(j.s)
    }
}

impl From<ShiftMatrix> for ShiftJson {
    fn from(m: ShiftMatrix) -> ShiftJson {
        ShiftJson { n: m.n(), s: m.s }
    }
}

impl ShiftMatrix {
    /// Validates every collinear triple.
    pub fn new(s: Vec<Vec<u32>>) -> Result<ShiftMatrix> {
        let n = s.len();
        if n == 0 {
            return Err(Error::InvalidShiftMatrix("empty matrix".into()));
        }
        if let Some(row) = s.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidShiftMatrix(format!("row {} has length {}, expected {n}", row + 1, s[row].len())));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if i.abs_diff(j) + j.abs_diff(k) == i.abs_diff(k) && s[i][j] + s[j][k] != s[i][k] {
                        return Err(Error::InvalidShiftMatrix(format!(
                            "s[{},{}] + s[{},{}] = {} + {} but s[{},{}] = {}",
                            i + 1,
                            j + 1,
                            j + 1,
                            k + 1,
                            s[i][j],
                            s[j][k],
                            i + 1,
                            k + 1,
                            s[i][k]
                        )));
                    }
                }
            }
        }
        Ok(ShiftMatrix { s })
    }

    pub fn zero(n: usize) -> ShiftMatrix {
        ShiftMatrix { s: vec![vec![0; n]; n] }
    }

    /// The matrix with super-diagonal `upper` and sub-diagonal `lower`,
    /// where `lower[i]` is `s_{i+2,i+1}`.
    pub fn from_diagonals(upper: &[u32], lower: &[u32]) -> Result<ShiftMatrix> {
        if upper.len() != lower.len() {
            return Err(Error::InvalidShiftMatrix(format!("diagonals of lengths {} and {}", upper.len(), lower.len())));
        }
        let n = upper.len() + 1;
        let mut s = vec![vec![0; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                s[i][j] = upper[i..j].iter().sum();
                s[j][i] = lower[i..j].iter().sum();
            }
        }
        ShiftMatrix::new(s)
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// `s_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.s[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.s
    }

    pub fn transpose(&self) -> ShiftMatrix {
        let n = self.n();
        ShiftMatrix { s: (0..n).map(|i| (0..n).map(|j| self.s[j][i]).collect()).collect() }
    }

    pub fn upper(&self) -> Vec<u32> {
        (1..self.n()).map(|i| self.get(i, i + 1)).collect()
    }

    pub fn lower(&self) -> Vec<u32> {
        (1..self.n()).map(|i| self.get(i + 1, i)).collect()
    }

    /// Whether `e_ij t^r` lies in the shifted current algebra.
    pub fn admits(&self, g: LoopGen) -> bool {
        g.r >= self.get(g.i, g.j)
    }
}

impl fmt::Display for ShiftMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "upper={} lower={}", list(self.upper()), list(self.lower()))
    }
}

/// Parses `upper=1,2 lower=0,0`; the two parts may also be separated by `;`.
impl FromStr for ShiftMatrix {
    type Err = Error;

    fn from_str(text: &str) -> Result<ShiftMatrix> {
        let mut upper = None;
        let mut lower = None;
        for part in text.split([' ', ';']).filter(|x| !x.is_empty()) {
            let (key, val) = part.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=list, got `{part}`")))?;
            let nums: Vec<u32> = if val.is_empty() {
                Vec::new()
            } else {
                val.split(',').map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad entry `{x}`")))).collect::<Result<_>>()?
            };
            match key {
                "upper" => upper = Some(nums),
                "lower" => lower = Some(nums),
                _ => return Err(Error::Parse(format!("unknown key `{key}`"))),
            }
        }
        match (upper, lower) {
            (Some(u), Some(l)) => ShiftMatrix::from_diagonals(&u, &l),
            _ => Err(Error::Parse("need both upper= and lower=".into())),
        }
    }
}

fn fits(dr: &Drinfeld, sigma: &ShiftMatrix, i: usize, j: usize) -> Result<()> {
    if sigma.n() != dr.n() {
        return Err(Error::ContextMismatch(format!("shift matrix of size {} for Y_{}", sigma.n(), dr.n())));
    }
    if i == 0 || j <= i || j > dr.n() {
        return Err(Error::Inadmissible(format!("need 1 <= {i} < {j} <= {}", dr.n())));
    }
    Ok(())
}

/// The shifted root element `E_ij^{(r)}`, defined for `r > s_ij` by
/// bracketing with `E_{j-1}^{(s_{j-1,j} + 1)}`.
pub fn shifted_e(dr: &Drinfeld, sigma: &ShiftMatrix, i: usize, j: usize, r: usize) -> Result<Element> {
    fits(dr, sigma, i, j)?;
    if r <= sigma.get(i, j) as usize {
        return Err(Error::Inadmissible(format!("E[{i},{j}] needs superscript above {}, got {r}", sigma.get(i, j))));
    }
    if j == i + 1 {
        return dr.e(i, r);
    }
    let step = sigma.get(j - 1, j) as usize;
    let inner = shifted_e(dr, sigma, i, j - 1, r - step)?;
    dr.yangian().commutator(&inner, &dr.e(j - 1, step + 1)?)
}

/// The shifted root element `F_ij^{(s)}`, defined for `s > s_ji`.
pub fn shifted_f(dr: &Drinfeld, sigma: &ShiftMatrix, i: usize, j: usize, s: usize) -> Result<Element> {
    fits(dr, sigma, i, j)?;
    if s <= sigma.get(j, i) as usize {
        return Err(Error::Inadmissible(format!("F[{i},{j}] needs superscript above {}, got {s}", sigma.get(j, i))));
    }
    if j == i + 1 {
        return dr.f(i, s);
    }
    let step = sigma.get(j, j - 1) as usize;
    let inner = shifted_f(dr, sigma, i, j - 1, s - step)?;
    dr.yangian().commutator(&dr.f(j - 1, step + 1)?, &inner)
}

/// Brackets of admissible basis vectors `e_ij t^r` with `r <= s_ij + extra`
/// stay admissible.
pub fn graded_closure_checks(sigma: &ShiftMatrix, p: u64, extra: u32) -> Result<Vec<Check>> {
    let n = sigma.n();
    let g = CurrentAlgebra::new(n, p)?;
    let basis: Vec<LoopGen> = (1..=n)
        .flat_map(|i| (1..=n).flat_map(move |j| (0..=extra).map(move |d| (i, j, d))))
        .map(|(i, j, d)| LoopGen::new(i, j, sigma.get(i, j) + d))
        .collect();
    let mut checks = Vec::new();
    for &a in &basis {
        for &b in &basis {
            let c = g.commutator(&g.e(a.i, a.j, a.r)?, &g.e(b.i, b.j, b.r)?)?;
            let bad: Vec<LoopGen> = c.terms().into_iter().flat_map(|(m, _)| m.into_iter().map(|(x, _)| x)).filter(|x| !sigma.admits(*x)).collect();
            let params = [("i", a.i as i64), ("j", a.j as i64), ("r", a.r as i64), ("k", b.i as i64), ("l", b.j as i64), ("s", b.r as i64)];
            checks.push(Check::new("shifted_closure", &params, bad.is_empty(), || format!("bracket {c} leaves the shifted current algebra")));
        }
    }
    Ok(checks)
}
