//! The associated graded algebra of the loop filtration, which is the
//! enveloping algebra `U(gl_n[t])` of the current algebra.
//!
//! Basis vectors `e[i,j,r]` stand for `e_ij t^r` and are ordered by
//! `(i, j, r)`, so the leading-term map `T[i,j,r] -> e[i,j,r-1]` sends
//! normal-ordered words to normal-ordered words.

use crate::engine::{Engine, Letter, Rules, Terms, Word, ROOT};
use crate::error::{Error, Result};
use crate::field::{FieldElem, Prime};
use crate::io::{terms_to_json, words_from_json, write_terms, ElementJson};
use crate::pbw::{runs, Element, Gen};
use crate::ring::Ring;
use rustc_hash::FxHashMap;
use serde_json::Value;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The basis vector `e_ij t^r` of `gl_n[t]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopGen {
    pub i: usize,
    pub j: usize,
    pub r: u32,
}

impl LoopGen {
    pub fn new(i: usize, j: usize, r: u32) -> LoopGen {
        LoopGen { i, j, r }
    }

    fn letter(self) -> Letter {
        Gen::new(self.i, self.j, self.r).letter()
    }

    fn from_letter(a: Letter) -> LoopGen {
        let g = Gen::from_letter(a);
        LoopGen { i: g.i, j: g.j, r: g.r }
    }
}

struct LoopRules;

impl Rules for LoopRules {
    fn bracket(&self, a: Letter, b: Letter, eng: &Engine<Self>) -> Terms {
        let LoopGen { i, j, r } = LoopGen::from_letter(a);
        let LoopGen { i: k, j: l, r: s } = LoopGen::from_letter(b);
        let p = eng.p();
        let mut out = Terms::zero();
        if k == j {
            out.add(eng.child(ROOT, LoopGen::new(i, l, r + s).letter()), 1, p);
        }
        if l == i {
            out.add(eng.child(ROOT, LoopGen::new(k, j, r + s).letter()), p - 1, p);
        }
        out
    }

    fn weight(&self, a: Letter) -> u64 {
        (a & 0xffff) as u64
    }
}

struct Inner {
    n: usize,
    prime: Prime,
    engine: Engine<LoopRules>,
}

/// A handle to `U(gl_n[t])` over GF(p).
#[derive(Clone)]
pub struct CurrentAlgebra(Arc<Inner>);

/// An element of `U(gl_n[t])` in PBW normal form.
#[derive(Clone)]
pub struct UgElement {
    g: CurrentAlgebra,
    terms: Terms,
}

impl PartialEq for UgElement {
    fn eq(&self, o: &UgElement) -> bool {
        Arc::ptr_eq(&self.g.0, &o.g.0) && self.terms == o.terms
    }
}

impl Eq for UgElement {}

impl fmt::Debug for UgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for UgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.words(), "e")
    }
}

impl UgElement {
    pub fn algebra(&self) -> &CurrentAlgebra {
        &self.g
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub(crate) fn words(&self) -> Vec<(Word, u32)> {
        self.g.0.engine.sorted(&self.terms)
    }

    pub fn terms(&self) -> Vec<(Vec<(LoopGen, u32)>, FieldElem)> {
        let p = self.g.p();
        self.words()
            .into_iter()
            .map(|(m, c)| (runs(&m).into_iter().map(|(a, e)| (LoopGen::from_letter(a), e)).collect(), p.elem(c as i64)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        let j = terms_to_json(&self.words(), Some("e"), self.g.p().get() as u64, self.g.n());
        serde_json::to_value(j).expect("serializable")
    }
}

type Registry = Mutex<FxHashMap<(usize, u32), CurrentAlgebra>>;

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(FxHashMap::default()))
}

impl CurrentAlgebra {
    pub fn new(n: usize, p: u64) -> Result<CurrentAlgebra> {
        if n == 0 || n > 255 {
            return Err(Error::InvalidArgument(format!("n must lie in 1..=255, got {n}")));
        }
        let prime = Prime::new(p)?;
        let mut reg = registry().lock().expect("registry lock");
        Ok(reg
            .entry((n, prime.get()))
            .or_insert_with(|| CurrentAlgebra(Arc::new(Inner { n, prime, engine: Engine::new(prime.get(), LoopRules) })))
            .clone())
    }

    /// The algebra receiving leading terms of elements of `y`'s Yangian.
    pub fn for_element(x: &Element) -> CurrentAlgebra {
        CurrentAlgebra::new(x.n(), x.prime().get() as u64).expect("valid context")
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn p(&self) -> Prime {
        self.0.prime
    }

    fn wrap(&self, terms: Terms) -> UgElement {
        UgElement { g: self.clone(), terms }
    }

    fn check(&self, a: &UgElement) -> Result<()> {
        if !Arc::ptr_eq(&a.g.0, &self.0) {
            return Err(Error::ContextMismatch(format!("element of {} used in {}", a.g.describe(), self.describe())));
        }
        Ok(())
    }

    /// `e_ij t^r`.
    pub fn e(&self, i: usize, j: usize, r: u32) -> Result<UgElement> {
        let n = self.0.n;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::Inadmissible(format!("index ({i}, {j}) outside 1..={n}")));
        }
        if r > 0xffff {
            return Err(Error::Inadmissible(format!("power {r} too large")));
        }
        Ok(self.wrap(self.0.engine.monomial(&[LoopGen::new(i, j, r).letter()], 1)))
    }

    pub fn multiply(&self, a: &UgElement, b: &UgElement) -> Result<UgElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(Ring::mul(self, a, b))
    }

    pub fn commutator(&self, a: &UgElement, b: &UgElement) -> Result<UgElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(Ring::commutator(self, a, b))
    }

    /// `z_r = e_11 t^r + ... + e_nn t^r`, central in `U(gl_n[t])`.
    pub fn zr(&self, r: u32) -> Result<UgElement> {
        let mut acc = self.zero();
        for i in 1..=self.0.n {
            acc = self.add(&acc, &self.e(i, i, r)?);
        }
        Ok(acc)
    }

    /// `(e_ij t^r)^p - delta_ij e_ij t^{rp}`.
    pub fn p_centre_gen(&self, i: usize, j: usize, r: u32) -> Result<UgElement> {
        let p = self.0.prime.get();
        let x = self.e(i, j, r)?;
        let pw = self.pow(&x, p as u64);
        if i == j {
            Ok(self.sub(&pw, &self.e(i, j, r * p)?))
        } else {
            Ok(pw)
        }
    }

    pub fn from_json(&self, v: &Value) -> Result<UgElement> {
        let j: ElementJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.symbol.as_deref() != Some("e") {
            return Err(Error::Parse("expected an element with symbol `e`".into()));
        }
        if j.n != self.0.n || j.p != self.0.prime.get() as u64 {
            return Err(Error::ContextMismatch(format!("JSON for U(gl_{}[t]) over GF({})", j.n, j.p)));
        }
        let mut t = Terms::zero();
        for (w, c) in words_from_json(&j, 0)? {
            t.add(self.0.engine.id_of(&w), c, self.0.prime.get());
        }
        Ok(self.wrap(t))
    }
}

impl Ring for CurrentAlgebra {
    type Elem = UgElement;

    fn prime(&self) -> Prime {
        self.0.prime
    }

    fn scalar(&self, c: FieldElem) -> UgElement {
        self.wrap(Terms::single(ROOT, c.value()))
    }

    fn add(&self, a: &UgElement, b: &UgElement) -> UgElement {
        let mut t = a.terms.clone();
        t.add_scaled(&b.terms, 1, self.0.prime.get());
        self.wrap(t)
    }

    fn mul(&self, a: &UgElement, b: &UgElement) -> UgElement {
        self.wrap(self.0.engine.mul(&a.terms, &b.terms))
    }

    fn scale(&self, a: &UgElement, c: FieldElem) -> UgElement {
        self.wrap(a.terms.scaled(c.value(), self.0.prime.get()))
    }

    fn is_zero(&self, a: &UgElement) -> bool {
        a.terms.is_empty()
    }

    fn as_scalar(&self, a: &UgElement) -> Option<FieldElem> {
        match a.terms.len() {
            0 => Some(self.0.prime.zero()),
            1 => {
                let (m, c) = a.terms.iter().next().unwrap();
                (m == ROOT).then(|| self.0.prime.elem(c as i64))
            }
            _ => None,
        }
    }

    fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    fn describe(&self) -> String {
        format!("U(gl_{}[t]) over GF({})", self.0.n, self.0.prime)
    }
}

fn word_loop_degree(w: &[Letter]) -> u32 {
    w.iter().map(|&a| (a & 0xffff) - 1).sum()
}

/// Filtered degree: the largest `sum (r - 1)` over the monomials of `x`.
pub fn loop_degree(x: &Element) -> Result<u32> {
    x.words().iter().map(|(w, _)| word_loop_degree(w)).max().ok_or(Error::ZeroElement)
}

/// Whether `x` lies in the filtered piece `F_d`; only zero lies in `F_d`
/// for negative `d`.
pub fn in_filtration(x: &Element, d: i64) -> bool {
    loop_degree(x).map_or(true, |k| k as i64 <= d)
}

/// The image of `x` in the degree-`d` piece of the associated graded
/// algebra; zero when `x` lies in a lower filtered piece.
pub fn leading_term(x: &Element, d: u32) -> Result<UgElement> {
    let g = CurrentAlgebra::for_element(x);
    let mut t = Terms::zero();
    let p = g.p().get();
    for (w, c) in x.words() {
        let deg = word_loop_degree(&w);
        if deg > d {
            return Err(Error::LoopDegreeOvershoot { found: loop_degree(x)?, bound: d });
        }
        if deg == d {
            let image: Word = w.iter().map(|&a| a - 1).collect();
            t.add(g.0.engine.id_of(&image), c, p);
        }
    }
    Ok(g.wrap(t))
}
