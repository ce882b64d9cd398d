//! Generic PBW straightening over GF(p).
//!
//! An algebra is described by an ordered alphabet of letters and, for each
//! pair `a > b`, the normal form of `[a, b]`. A monomial is a nondecreasing
//! word, hash-consed into a trie so that it is named by a single integer.
//! A word times a letter is brought to normal form by
//! `m' x g = (m' g) x + m' [x, g]`, memoized per `(word, letter)`.

use crate::field::{addmod, mulmod};
use dashmap::DashMap;
use rayon::prelude::*;
use rustc_hash::{FxBuildHasher, FxHashMap};
use smallvec::SmallVec;
use std::sync::{Arc, RwLock};

pub type Letter = u32;
pub type MonoId = u32;
pub type Word = SmallVec<[Letter; 8]>;

/// The empty word.
pub const ROOT: MonoId = 0;

/// A finite linear combination of normal words with nonzero coefficients
/// in `0..p`, keyed by trie id.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Terms(FxHashMap<MonoId, u32>);

impl Terms {
    pub fn zero() -> Terms {
        Terms(FxHashMap::default())
    }

    pub fn single(m: MonoId, c: u32) -> Terms {
        let mut t = Terms::zero();
        if c != 0 {
            t.0.insert(m, c);
        }
        t
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (MonoId, u32)> + '_ {
        self.0.iter().map(|(m, c)| (*m, *c))
    }

    pub fn get(&self, m: MonoId) -> u32 {
        self.0.get(&m).copied().unwrap_or(0)
    }

    #[inline]
    pub fn add(&mut self, m: MonoId, c: u32, p: u32) {
        if c == 0 {
            return;
        }
        match self.0.entry(m) {
            std::collections::hash_map::Entry::Occupied(mut o) => {
                let v = addmod(*o.get(), c, p);
                if v == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &Terms, c: u32, p: u32) {
        if c == 0 {
            return;
        }
        self.0.reserve(o.len());
        for (m, v) in o.iter() {
            self.add(m, mulmod(v, c, p), p);
        }
    }

    fn add_list(&mut self, o: &[(MonoId, u32)], c: u32, p: u32) {
        for &(m, v) in o {
            self.add(m, mulmod(v, c, p), p);
        }
    }

    pub fn scaled(&self, c: u32, p: u32) -> Terms {
        if c == 0 {
            return Terms::zero();
        }
        Terms(self.0.iter().map(|(m, v)| (*m, mulmod(*v, c, p))).collect())
    }

    pub fn retain(&mut self, mut f: impl FnMut(MonoId, u32) -> bool) {
        self.0.retain(|m, c| f(*m, *c))
    }
}

/// The structure constants of an algebra with a PBW basis.
pub trait Rules: Send + Sync + Sized {
    /// Normal form of `[a, b]` for letters `a > b`.
    fn bracket(&self, a: Letter, b: Letter, eng: &Engine<Self>) -> Terms;

    /// A weight such that `[a, b]` only involves monomials of smaller total
    /// weight, or of equal weight and length below two.
    fn weight(&self, a: Letter) -> u64;
}

#[derive(Clone, Copy)]
struct Node {
    parent: MonoId,
    last: Letter,
    len: u32,
}

type Cached = Arc<Vec<(MonoId, u32)>>;

/// Memoizing normal-form multiplier over a monomial trie.
pub struct Engine<R: Rules> {
    p: u32,
    rules: R,
    nodes: RwLock<Vec<Node>>,
    children: DashMap<(MonoId, Letter), MonoId, FxBuildHasher>,
    brackets: DashMap<(Letter, Letter), Arc<Terms>, FxBuildHasher>,
    products: DashMap<(MonoId, Letter), Cached, FxBuildHasher>,
}

impl<R: Rules> Engine<R> {
    pub fn new(p: u32, rules: R) -> Self {
        Engine {
            p,
            rules,
            nodes: RwLock::new(vec![Node { parent: ROOT, last: 0, len: 0 }]),
            children: DashMap::with_hasher(FxBuildHasher),
            brackets: DashMap::with_hasher(FxBuildHasher),
            products: DashMap::with_hasher(FxBuildHasher),
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rules(&self) -> &R {
        &self.rules
    }

    /// Drops memoized products and brackets; monomial ids stay valid.
    pub fn clear_caches(&self) {
        self.brackets.clear();
        self.products.clear();
    }

    #[inline]
    fn node(&self, m: MonoId) -> Node {
        self.nodes.read().expect("trie lock")[m as usize]
    }

    /// The word `m g`, which must already be nondecreasing.
    pub fn child(&self, m: MonoId, g: Letter) -> MonoId {
        if let Some(id) = self.children.get(&(m, g)) {
            return *id;
        }
        let len = self.node(m).len + 1;
        *self.children.entry((m, g)).or_insert_with(|| {
            let mut nodes = self.nodes.write().expect("trie lock");
            nodes.push(Node { parent: m, last: g, len });
            (nodes.len() - 1) as MonoId
        })
    }

    /// Id of a nondecreasing word.
    pub fn id_of(&self, w: &[Letter]) -> MonoId {
        debug_assert!(w.windows(2).all(|x| x[0] <= x[1]));
        w.iter().fold(ROOT, |m, &g| self.child(m, g))
    }

    pub fn word(&self, m: MonoId) -> Word {
        let nodes = self.nodes.read().expect("trie lock");
        let mut w = Word::new();
        let mut cur = m;
        while cur != ROOT {
            let nd = nodes[cur as usize];
            w.push(nd.last);
            cur = nd.parent;
        }
        w.reverse();
        w
    }

    pub fn last(&self, m: MonoId) -> Option<Letter> {
        (m != ROOT).then(|| self.node(m).last)
    }

    pub fn monomial(&self, w: &[Letter], c: u32) -> Terms {
        Terms::single(self.id_of(w), c % self.p)
    }

    /// Terms in increasing word order.
    pub fn sorted(&self, t: &Terms) -> Vec<(Word, u32)> {
        let mut v: Vec<(Word, u32)> = t.iter().map(|(m, c)| (self.word(m), c)).collect();
        v.sort_unstable();
        v
    }

    fn measure(&self, w: &[Letter]) -> (u64, usize) {
        (w.iter().map(|&a| self.rules.weight(a)).sum(), w.len())
    }

    /// Normal form of `[a, b]` for any two letters.
    pub fn bracket(&self, a: Letter, b: Letter) -> Arc<Terms> {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => Arc::new(Terms::zero()),
            Less => Arc::new(self.bracket(b, a).scaled(self.p - 1, self.p)),
            Greater => {
                if let Some(t) = self.brackets.get(&(a, b)) {
                    return t.clone();
                }
                let t = self.rules.bracket(a, b, self);
                if cfg!(debug_assertions) {
                    let top = self.measure(&[a, b]);
                    for (m, _) in t.iter() {
                        let w = self.measure(&self.word(m));
                        assert!(w.0 < top.0 || (w.0 == top.0 && w.1 < 2), "rewrite measure must decrease");
                    }
                }
                let t = Arc::new(t);
                self.brackets.insert((a, b), t.clone());
                t
            }
        }
    }

    /// Adds `c (m g)` in normal form to `out`.
    #[inline]
    pub fn mul_mono_letter_into(&self, m: MonoId, g: Letter, c: u32, out: &mut Terms) {
        if c == 0 {
            return;
        }
        if m == ROOT || self.node(m).last <= g {
            return out.add(self.child(m, g), c, self.p);
        }
        let t = self.mono_times_letter(m, g);
        out.add_list(&t, c, self.p);
    }

    fn mono_times_letter(&self, m: MonoId, g: Letter) -> Cached {
        if let Some(t) = self.products.get(&(m, g)) {
            return t.clone();
        }
        let Node { parent, last: x, .. } = self.node(m);
        let mut left = Terms::zero();
        self.mul_mono_letter_into(parent, g, 1, &mut left);
        let mut out = Terms::zero();
        for (t, c) in left.iter() {
            self.mul_mono_letter_into(t, x, c, &mut out);
        }
        let br = self.bracket(x, g);
        for (q, c) in br.iter() {
            self.mul_mono_word_into(parent, &self.word(q), c, &mut out);
        }
        let out: Cached = Arc::new(out.iter().collect());
        self.products.insert((m, g), out.clone());
        out
    }

    /// Adds `c (m w)` in normal form to `out`, for a nondecreasing word `w`.
    pub fn mul_mono_word_into(&self, m: MonoId, w: &[Letter], c: u32, out: &mut Terms) {
        match w {
            [] => out.add(m, c, self.p),
            [g] => self.mul_mono_letter_into(m, *g, c, out),
            _ => {
                let mut cur = Terms::single(m, 1);
                for &g in w {
                    cur = self.times_letter(&cur, g);
                }
                out.add_scaled(&cur, c, self.p);
            }
        }
    }

    /// `t g` in normal form.
    pub fn times_letter(&self, t: &Terms, g: Letter) -> Terms {
        let mut next = Terms::zero();
        for (m, v) in t.iter() {
            self.mul_mono_letter_into(m, g, v, &mut next);
        }
        next
    }

    /// Normal form of the product `a b`.
    ///
    /// The right factor's words are visited in sorted order so that `a`
    /// times each shared prefix is computed once.
    pub fn mul(&self, a: &Terms, b: &Terms) -> Terms {
        if a.is_empty() || b.is_empty() {
            return Terms::zero();
        }
        let p = self.p;
        let words = self.sorted(b);
        let mut groups: Vec<&[(Word, u32)]> = Vec::new();
        let mut start = 0;
        for k in 1..=words.len() {
            if k == words.len() || words[k].0.first() != words[start].0.first() {
                groups.push(&words[start..k]);
                start = k;
            }
        }
        let run = |group: &[(Word, u32)]| {
            let mut out = Terms::zero();
            let mut stack: Vec<Terms> = vec![a.clone()];
            let mut prev: &[Letter] = &[];
            for (w, c) in group {
                let common = prev.iter().zip(w.iter()).take_while(|(x, y)| x == y).count();
                stack.truncate(common + 1);
                for &g in &w[common..] {
                    let next = self.times_letter(stack.last().unwrap(), g);
                    stack.push(next);
                }
                out.add_scaled(stack.last().unwrap(), *c, p);
                prev = w;
            }
            out
        };
        if groups.len() < 2 {
            return run(words.as_slice());
        }
        groups.par_iter().map(|g| run(g)).reduce(Terms::zero, |mut x, y| {
            if x.len() < y.len() {
                let mut y = y;
                y.add_scaled(&x, 1, p);
                return y;
            }
            x.add_scaled(&y, 1, p);
            x
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// U(sl_2) in the basis f < h < e.
    struct Sl2;
    impl Rules for Sl2 {
        fn bracket(&self, a: Letter, b: Letter, eng: &Engine<Self>) -> Terms {
            let p = eng.p();
            match (a, b) {
                (2, 1) => eng.monomial(&[2], p - 2),
                (2, 0) => eng.monomial(&[1], 1),
                (1, 0) => eng.monomial(&[0], p - 2),
                _ => unreachable!(),
            }
        }
        fn weight(&self, _: Letter) -> u64 {
            1
        }
    }

    #[test]
    fn sl2_casimir_commutes() {
        let eng = Engine::new(7, Sl2);
        let p = 7;
        // h^2 + 2h + 4fe
        let mut cas = eng.monomial(&[1, 1], 1);
        cas.add(eng.id_of(&[1]), 2, p);
        cas.add(eng.id_of(&[0, 2]), 4, p);
        for g in 0..3 {
            let x = eng.monomial(&[g], 1);
            let mut d = eng.mul(&cas, &x);
            d.add_scaled(&eng.mul(&x, &cas), p - 1, p);
            assert!(d.is_empty());
        }
    }

    #[test]
    fn ef_reorders() {
        let eng = Engine::new(5, Sl2);
        let ef = eng.mul(&eng.monomial(&[2], 1), &eng.monomial(&[0], 1));
        let mut want = eng.monomial(&[0, 2], 1);
        want.add(eng.id_of(&[1]), 1, 5);
        assert_eq!(ef, want);
        assert_eq!(eng.word(eng.id_of(&[0, 2, 2])).as_slice(), &[0, 2, 2]);
    }
}
