//! Text and JSON forms of elements and series.
//!
//! Text: `c * T[i,j,r]^e * ...` terms joined by ` + `, factors in generator
//! order, `0` for zero. JSON: `{p, n, terms: [{coeff, monomial: [{i,j,r,e}]}]}`
//! with terms sorted by monomial; series are `{trunc, coeffs: {r: element}}`
//! with zero coefficients omitted.

use crate::engine::{Letter, Word};
use crate::error::{Error, Result};
use crate::pbw::{runs, Element, Gen, Yangian};
use crate::ring::Ring;
use crate::series::{MatrixSeries, Series};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;

pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, sorted: &[(Word, u32)], symbol: &str) -> fmt::Result {
    if sorted.is_empty() {
        return write!(f, "0");
    }
    for (k, (m, c)) in sorted.iter().enumerate() {
        if k > 0 {
            write!(f, " + ")?;
        }
        write!(f, "{c}")?;
        for (a, e) in runs(m) {
            let g = Gen::from_letter(a);
            write!(f, " * {symbol}[{},{},{}]^{e}", g.i, g.j, g.r)?;
        }
    }
    Ok(())
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.words(), "T")
    }
}

/// A parsed term: integer coefficient and factors `(i, j, r, e)` in the
/// order written.
pub(crate) type RawTerm = (i64, Vec<(usize, usize, u32, u32)>);

fn parse_factor(s: &str, symbol: &str) -> Result<(usize, usize, u32, u32)> {
    let bad = || Error::Parse(format!("bad factor `{s}`"));
    let rest = s.strip_prefix(symbol).and_then(|r| r.strip_prefix('[')).ok_or_else(bad)?;
    let (inside, tail) = rest.split_once(']').ok_or_else(bad)?;
    let nums: Vec<u32> = inside.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<_>>()?;
    if nums.len() != 3 {
        return Err(bad());
    }
    let e = match tail.trim() {
        "" => 1,
        t => t.strip_prefix('^').and_then(|x| x.trim().parse::<u32>().ok()).ok_or_else(bad)?,
    };
    Ok((nums[0] as usize, nums[1] as usize, nums[2], e))
}

pub(crate) fn parse_terms(s: &str, symbol: &str) -> Result<Vec<RawTerm>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut out = Vec::new();
    for term in s.split(" + ") {
        let mut coeff = 1i64;
        let mut factors = Vec::new();
        for (k, factor) in term.split('*').map(str::trim).enumerate() {
            if k == 0 {
                if let Ok(c) = factor.parse::<i64>() {
                    coeff = c;
                    continue;
                }
            }
            factors.push(parse_factor(factor, symbol)?);
        }
        out.push((coeff, factors));
    }
    Ok(out)
}

/// Parses the text form; products need not be in normal order.
pub fn parse_element(y: &Yangian, s: &str) -> Result<Element> {
    let mut acc = y.zero();
    for (c, factors) in parse_terms(s, "T")? {
        let mut m = y.int(c);
        for (i, j, r, e) in factors {
            if r == 0 {
                return Err(Error::Parse("superscripts start at 1".into()));
            }
            let g = y.t(i, j, r)?;
            for _ in 0..e {
                m = y.mul(&m, &g);
            }
        }
        acc = y.add(&acc, &m);
    }
    Ok(acc)
}

#[derive(Serialize, Deserialize)]
pub(crate) struct FactorJson {
    pub i: usize,
    pub j: usize,
    pub r: u32,
    pub e: u32,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct TermJson {
    pub coeff: u32,
    pub monomial: Vec<FactorJson>,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct ElementJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symbol: Option<String>,
    pub p: u64,
    pub n: usize,
    pub terms: Vec<TermJson>,
}

pub(crate) fn terms_to_json(sorted: &[(Word, u32)], symbol: Option<&str>, p: u64, n: usize) -> ElementJson {
    ElementJson {
        symbol: symbol.map(str::to_string),
        p,
        n,
        terms: sorted
            .iter()
            .map(|(m, c)| TermJson {
                coeff: *c,
                monomial: runs(m)
                    .into_iter()
                    .map(|(a, e)| {
                        let g = Gen::from_letter(a);
                        FactorJson { i: g.i, j: g.j, r: g.r, e }
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// Rebuilds normal-ordered words, rejecting anything out of order.
pub(crate) fn words_from_json(j: &ElementJson, min_r: u32) -> Result<Vec<(Word, u32)>> {
    let p = j.p as u32;
    let mut t: Vec<(Word, u32)> = Vec::new();
    for term in &j.terms {
        let mut w = Word::new();
        let mut last: Option<Letter> = None;
        for f in &term.monomial {
            if f.i == 0 || f.j == 0 || f.i > j.n || f.j > j.n || f.r < min_r || f.e == 0 || f.r > 0xffff {
                return Err(Error::Parse(format!("bad factor ({}, {}, {})^{}", f.i, f.j, f.r, f.e)));
            }
            let a = Gen::new(f.i, f.j, f.r).letter();
            if last.is_some_and(|b| b >= a) {
                return Err(Error::Parse("monomial is not in normal order".into()));
            }
            last = Some(a);
            w.extend(std::iter::repeat_n(a, f.e as usize));
        }
        if term.coeff >= p {
            return Err(Error::Parse(format!("coefficient {} is not reduced mod {p}", term.coeff)));
        }
        if term.coeff == 0 {
            return Err(Error::Parse("zero coefficients are not stored".into()));
        }
        t.push((w, term.coeff));
    }
    let mut sorted: Vec<&Word> = t.iter().map(|x| &x.0).collect();
    sorted.sort();
    if sorted.windows(2).any(|x| x[0] == x[1]) {
        return Err(Error::Parse("repeated monomial".into()));
    }
    Ok(t)
}

pub fn element_to_json(x: &Element) -> Value {
    serde_json::to_value(terms_to_json(&x.words(), None, x.prime().get() as u64, x.n())).expect("serializable")
}

pub fn element_from_json(y: &Yangian, v: &Value) -> Result<Element> {
    let j: ElementJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if j.symbol.as_deref().is_some_and(|s| s != "T") {
        return Err(Error::Parse("expected a Yangian element".into()));
    }
    if j.n != y.n() || j.p != y.p().get() as u64 {
        return Err(Error::ContextMismatch(format!("JSON for Y_{} over GF({})", j.n, j.p)));
    }
    Ok(y.from_words(words_from_json(&j, 1)?))
}

/// Series JSON with a caller-supplied coefficient encoder.
pub fn series_to_json<R: Ring>(s: &Series<R>, enc: impl Fn(&R::Elem) -> Value) -> Value {
    let coeffs: BTreeMap<usize, Value> =
        s.coeffs().iter().enumerate().filter(|(_, c)| !s.ring().is_zero(c)).map(|(r, c)| (r, enc(c))).collect();
    serde_json::json!({ "trunc": s.trunc(), "coeffs": coeffs })
}

pub fn series_from_json<R: Ring>(ring: &R, v: &Value, dec: impl Fn(&Value) -> Result<R::Elem>) -> Result<Series<R>> {
    let bad = |m: &str| Error::Parse(format!("series JSON: {m}"));
    let trunc = v.get("trunc").and_then(Value::as_u64).ok_or_else(|| bad("missing trunc"))? as usize;
    let obj = v.get("coeffs").and_then(Value::as_object).ok_or_else(|| bad("missing coeffs"))?;
    let mut coeffs = vec![ring.zero(); trunc + 1];
    for (k, c) in obj {
        let r: usize = k.parse().map_err(|_| bad("non-numeric exponent"))?;
        if r > trunc {
            return Err(bad("exponent beyond trunc"));
        }
        coeffs[r] = dec(c)?;
    }
    Series::new(ring, coeffs)
}

pub fn matrix_to_json<R: Ring>(m: &MatrixSeries<R>, enc: impl Fn(&R::Elem) -> Value + Copy) -> Value {
    let rows: Vec<Vec<Value>> = (1..=m.n()).map(|i| (1..=m.n()).map(|j| series_to_json(m.entry(i, j), enc)).collect()).collect();
    serde_json::json!({ "n": m.n(), "trunc": m.trunc(), "entries": rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let y = Yangian::new(2, 3).unwrap();
        let x = parse_element(&y, "T[1,2,1] * T[1,1,1] + 2 * T[2,2,3]^2 + 1").unwrap();
        let s = x.to_string();
        assert_eq!(s, "1 + 1 * T[1,1,1]^1 * T[1,2,1]^1 + 2 * T[1,2,1]^1 + 2 * T[2,2,3]^2");
        assert_eq!(parse_element(&y, &s).unwrap(), x);
        assert_eq!(parse_element(&y, "0").unwrap().to_string(), "0");
        assert!(parse_element(&y, "T[3,1,1]").is_err());
        assert!(parse_element(&y, "T[1,1").is_err());
    }

    #[test]
    fn json_round_trip() {
        let y = Yangian::new(3, 2).unwrap();
        let x = parse_element(&y, "T[3,1,2] * T[1,3,1] * T[2,2,1]").unwrap();
        let v = element_to_json(&x);
        let back = element_from_json(&y, &v).unwrap();
        assert_eq!(back, x);
        assert_eq!(serde_json::to_string(&element_to_json(&back)).unwrap(), serde_json::to_string(&v).unwrap());
        let bad = serde_json::json!({"p": 2, "n": 3, "terms": [{"coeff": 1, "monomial": [{"i":2,"j":1,"r":1,"e":1},{"i":1,"j":1,"r":1,"e":1}]}]});
        assert!(element_from_json(&y, &bad).is_err());
    }

    #[test]
    fn series_json_round_trip() {
        let y = Yangian::new(2, 2).unwrap();
        let s = crate::series::generator_series(&y, 1, 1, 3).unwrap();
        let v = series_to_json(&s, element_to_json);
        let back = series_from_json(&y, &v, |c| element_from_json(&y, c)).unwrap();
        assert_eq!(back, s);
    }
}
