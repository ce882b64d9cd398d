//! The Yangian `Y_n` over GF(p) in PBW normal form.
//!
//! Generators `T[i,j,r]` are ordered lexicographically by `(i, j, r)`. An
//! [`Element`] is a linear combination of nondecreasing words in the
//! generators; all arithmetic goes through the straightening engine, whose
//! only input is the commutator of two generators.

use crate::engine::{Engine, Letter, Rules, Terms, Word, ROOT};
use crate::error::{Error, Result};
use crate::field::{binom_mod_p, FieldElem, Prime};
use crate::ring::Ring;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// The generator `T[i,j,r]`, with `r >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub i: usize,
    pub j: usize,
    pub r: u32,
}

impl Gen {
    pub fn new(i: usize, j: usize, r: u32) -> Gen {
        Gen { i, j, r }
    }

    pub(crate) fn letter(self) -> Letter {
        ((self.i as u32) << 24) | ((self.j as u32) << 16) | self.r
    }

    pub(crate) fn from_letter(a: Letter) -> Gen {
        Gen { i: (a >> 24) as usize, j: ((a >> 16) & 0xff) as usize, r: a & 0xffff }
    }
}

/// Splits a nondecreasing word into `(letter, exponent)` runs.
pub(crate) fn runs(m: &[Letter]) -> Vec<(Letter, u32)> {
    let mut out: Vec<(Letter, u32)> = Vec::new();
    for &a in m {
        match out.last_mut() {
            Some((b, e)) if *b == a => *e += 1,
            _ => out.push((a, 1)),
        }
    }
    out
}

struct RttRules;

impl RttRules {
    fn add_product(eng: &Engine<Self>, x: (usize, usize, u32), y: (usize, usize, u32), c: u32, out: &mut Terms) {
        let p = eng.p();
        match (x.2, y.2) {
            (0, 0) => {
                if x.0 == x.1 && y.0 == y.1 {
                    out.add(ROOT, c, p)
                }
            }
            (0, _) => {
                if x.0 == x.1 {
                    out.add(eng.child(ROOT, Gen::new(y.0, y.1, y.2).letter()), c, p)
                }
            }
            (_, 0) => {
                if y.0 == y.1 {
                    out.add(eng.child(ROOT, Gen::new(x.0, x.1, x.2).letter()), c, p)
                }
            }
            _ => eng.mul_mono_letter_into(eng.child(ROOT, Gen::new(x.0, x.1, x.2).letter()), Gen::new(y.0, y.1, y.2).letter(), c, out),
        }
    }
}

impl Rules for RttRules {
    fn bracket(&self, a: Letter, b: Letter, eng: &Engine<Self>) -> Terms {
        let Gen { i, j, r } = Gen::from_letter(a);
        let Gen { i: k, j: l, r: s } = Gen::from_letter(b);
        let mut out = Terms::zero();
        let minus = eng.p() - 1;
        for t in 0..r.min(s) {
            let top = r + s - 1 - t;
            Self::add_product(eng, (k, j, t), (i, l, top), 1, &mut out);
            Self::add_product(eng, (k, j, top), (i, l, t), minus, &mut out);
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
    engine: Engine<RttRules>,
}

/// A handle to `Y_n` over GF(p). Handles for the same `(n, p)` share one
/// monomial table and one set of caches.
#[derive(Clone)]
pub struct Yangian(Arc<Inner>);

/// An element of `Y_n` in PBW normal form.
#[derive(Clone)]
pub struct Element {
    y: Yangian,
    terms: Terms,
}

impl PartialEq for Element {
    fn eq(&self, o: &Element) -> bool {
        Arc::ptr_eq(&self.y.0, &o.y.0) && self.terms == o.terms
    }
}

impl Eq for Element {}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Element {
    pub fn n(&self) -> usize {
        self.y.n()
    }

    pub fn prime(&self) -> Prime {
        self.y.p()
    }

    pub fn yangian(&self) -> &Yangian {
        &self.y
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as sorted `(word, coefficient)` pairs.
    pub(crate) fn words(&self) -> Vec<(Word, u32)> {
        self.y.0.engine.sorted(&self.terms)
    }

    /// Terms in increasing monomial order; each monomial is a list of
    /// `(generator, exponent)` with strictly increasing generators.
    pub fn terms(&self) -> Vec<(Vec<(Gen, u32)>, FieldElem)> {
        let p = self.prime();
        self.words()
            .into_iter()
            .map(|(m, c)| (runs(&m).into_iter().map(|(a, e)| (Gen::from_letter(a), e)).collect(), p.elem(c as i64)))
            .collect()
    }

    /// Coefficient of the monomial given as `(generator, exponent)` runs.
    pub fn coefficient_of(&self, monomial: &[(Gen, u32)]) -> FieldElem {
        let mut w = Word::new();
        for &(g, e) in monomial {
            for _ in 0..e {
                w.push(g.letter());
            }
        }
        let p = self.prime();
        if w.windows(2).any(|x| x[0] > x[1]) {
            return p.zero();
        }
        p.elem(self.terms.get(self.y.0.engine.id_of(&w)) as i64)
    }

    fn word_stats(&self) -> impl Iterator<Item = Word> + '_ {
        self.terms.iter().map(|(m, _)| self.y.0.engine.word(m))
    }

    /// Largest total superscript `sum r` over the monomials, `None` for zero.
    pub fn degree(&self) -> Option<u64> {
        self.word_stats().map(|w| w.iter().map(|&a| (a & 0xffff) as u64).sum()).max()
    }

    /// Largest superscript of any generator that occurs.
    pub fn max_superscript(&self) -> u32 {
        self.word_stats().flat_map(|w| w.into_iter().map(|a| a & 0xffff)).max().unwrap_or(0)
    }
}

type Registry = Mutex<FxHashMap<(usize, u32), Yangian>>;

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(FxHashMap::default()))
}

impl Yangian {
    pub fn new(n: usize, p: u64) -> Result<Yangian> {
        if n == 0 || n > 255 {
            return Err(Error::InvalidArgument(format!("n must lie in 1..=255, got {n}")));
        }
        let prime = Prime::new(p)?;
        let mut reg = registry().lock().expect("registry lock");
        Ok(reg
            .entry((n, prime.get()))
            .or_insert_with(|| Yangian(Arc::new(Inner { n, prime, engine: Engine::new(prime.get(), RttRules) })))
            .clone())
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn p(&self) -> Prime {
        self.0.prime
    }

    /// Drops memoized products and brackets.
    pub fn clear_caches(&self) {
        self.0.engine.clear_caches()
    }

    pub(crate) fn wrap(&self, terms: Terms) -> Element {
        Element { y: self.clone(), terms }
    }

    fn check(&self, a: &Element) -> Result<()> {
        if !Arc::ptr_eq(&a.y.0, &self.0) {
            return Err(Error::ContextMismatch(format!("element of {} used in {}", a.y.describe(), self.describe())));
        }
        Ok(())
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.0.n {
            return Err(Error::Inadmissible(format!("index {i} outside 1..={}", self.0.n)));
        }
        Ok(())
    }

    /// `T[i,j,r]`; for `r = 0` this is the scalar `delta_ij`.
    pub fn t(&self, i: usize, j: usize, r: u32) -> Result<Element> {
        self.check_index(i)?;
        self.check_index(j)?;
        if r > 0xffff {
            return Err(Error::Inadmissible(format!("superscript {r} too large")));
        }
        Ok(self.t_unchecked(i, j, r))
    }

    pub(crate) fn t_unchecked(&self, i: usize, j: usize, r: u32) -> Element {
        if r == 0 {
            return if i == j { Ring::one(self) } else { Ring::zero(self) };
        }
        self.wrap(self.0.engine.monomial(&[Gen::new(i, j, r).letter()], 1))
    }

    /// The element with the given normal-ordered words.
    pub(crate) fn from_words(&self, words: impl IntoIterator<Item = (Word, u32)>) -> Element {
        let mut t = Terms::zero();
        for (w, c) in words {
            t.add(self.0.engine.id_of(&w), c % self.0.prime.get(), self.0.prime.get());
        }
        self.wrap(t)
    }

    pub fn gen(&self, g: Gen) -> Result<Element> {
        self.t(g.i, g.j, g.r)
    }

    /// The commutator of two generators, straight from the RTT relation.
    pub fn swap_rule(&self, g1: Gen, g2: Gen) -> Result<Element> {
        self.gen(g1)?;
        self.gen(g2)?;
        if g1.r == 0 || g2.r == 0 {
            return Ok(Ring::zero(self));
        }
        Ok(self.wrap((*self.0.engine.bracket(g1.letter(), g2.letter())).clone()))
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(Ring::mul(self, a, b))
    }

    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(Ring::commutator(self, a, b))
    }

    pub fn pth_power(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(Ring::pow(self, a, self.0.prime.get() as u64))
    }

    /// Applies the generator substitution `image`, as a homomorphism or,
    /// with `anti`, as an anti-homomorphism.
    fn substitute(&self, a: &Element, anti: bool, image: impl Fn(Gen) -> Result<Element>) -> Result<Element> {
        self.check(a)?;
        let eng = &self.0.engine;
        let words = a.words();
        let mut images: FxHashMap<Letter, Element> = FxHashMap::default();
        for (w, _) in &words {
            for &l in w.iter() {
                if let std::collections::hash_map::Entry::Vacant(e) = images.entry(l) {
                    e.insert(image(Gen::from_letter(l))?);
                }
            }
        }
        let p = self.0.prime.get();
        let out = words
            .par_iter()
            .map(|(w, c)| {
                let mut acc = Terms::single(ROOT, *c);
                let mut apply = |l: &Letter| acc = eng.mul(&acc, &images[l].terms);
                if anti {
                    w.iter().rev().for_each(&mut apply)
                } else {
                    w.iter().for_each(&mut apply)
                }
                acc
            })
            .reduce(Terms::zero, |mut x, y| {
                x.add_scaled(&y, 1, p);
                x
            });
        Ok(self.wrap(out))
    }

    fn single_gen_sum(&self, parts: impl IntoIterator<Item = (usize, usize, u32, u32)>) -> Element {
        let pr = self.0.prime.get();
        let mut t = Terms::zero();
        for (i, j, r, c) in parts {
            if r == 0 {
                if i == j {
                    t.add(ROOT, c, pr);
                }
            } else {
                t.add(self.0.engine.child(ROOT, Gen::new(i, j, r).letter()), c, pr);
            }
        }
        self.wrap(t)
    }

    /// The automorphism `T(u) -> T(u - c)`.
    pub fn apply_translation(&self, a: &Element, c: FieldElem) -> Result<Element> {
        let pr = self.0.prime;
        self.substitute(a, false, |g| {
            Ok(self.single_gen_sum((1..=g.r).map(|s| {
                let k = binom_mod_p((g.r - 1) as i64, (g.r - s) as i64, pr) * c.pow((g.r - s) as u64);
                (g.i, g.j, s, k.value())
            })))
        })
    }

    /// The automorphism `T(u) -> f(u) T(u)` for a scalar series `f` given by
    /// its coefficients `f[0] = 1, f[1], ..., f[N]`.
    pub fn apply_mul_series(&self, a: &Element, f: &[FieldElem]) -> Result<Element> {
        if f.first().map(|c| c.value()) != Some(1) {
            return Err(Error::InvalidArgument("scalar series must have constant term 1".into()));
        }
        let top = f.len() as u32 - 1;
        if a.max_superscript() > top {
            return Err(Error::Precision(format!("superscript {} exceeds the {} known coefficients", a.max_superscript(), top)));
        }
        self.substitute(a, false, |g| Ok(self.single_gen_sum((0..=g.r).map(|s| (g.i, g.j, g.r - s, f[s as usize].value())))))
    }

    /// The anti-automorphism `T[i,j,r] -> T[j,i,r]`.
    pub fn apply_transpose(&self, a: &Element) -> Result<Element> {
        self.substitute(a, true, |g| Ok(self.t_unchecked(g.j, g.i, g.r)))
    }

    /// The automorphism `T[i,j,r] -> T[w(i),w(j),r]`; `w` lists `w(1), ..., w(n)`.
    pub fn apply_permutation(&self, a: &Element, w: &[usize]) -> Result<Element> {
        let n = self.0.n;
        let mut seen = vec![false; n + 1];
        if w.len() != n || w.iter().any(|&x| x == 0 || x > n || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::InvalidArgument(format!("{w:?} is not a permutation of 1..={n}")));
        }
        self.substitute(a, false, |g| Ok(self.t_unchecked(w[g.i - 1], w[g.j - 1], g.r)))
    }
}

impl Ring for Yangian {
    type Elem = Element;

    fn prime(&self) -> Prime {
        self.0.prime
    }

    fn scalar(&self, c: FieldElem) -> Element {
        self.wrap(Terms::single(ROOT, c.value()))
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        let (big, small) = if a.terms.len() >= b.terms.len() { (a, b) } else { (b, a) };
        let mut t = big.terms.clone();
        t.add_scaled(&small.terms, 1, self.0.prime.get());
        self.wrap(t)
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        self.wrap(self.0.engine.mul(&a.terms, &b.terms))
    }

    fn scale(&self, a: &Element, c: FieldElem) -> Element {
        self.wrap(a.terms.scaled(c.value(), self.0.prime.get()))
    }

    fn is_zero(&self, a: &Element) -> bool {
        a.terms.is_empty()
    }

    fn as_scalar(&self, a: &Element) -> Option<FieldElem> {
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
        format!("Y_{} over GF({})", self.0.n, self.0.prime)
    }

    fn commutator(&self, a: &Element, b: &Element) -> Element {
        let p = self.0.prime.get();
        let mut t = self.0.engine.mul(&a.terms, &b.terms);
        t.add_scaled(&self.0.engine.mul(&b.terms, &a.terms), p - 1, p);
        self.wrap(t)
    }
}
