//! The coefficient rings that power series and matrices range over.

use crate::field::{FieldElem, Prime};
use std::fmt::Debug;

/// A handle to an associative unital GF(p)-algebra.
pub trait Ring: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn prime(&self) -> Prime;
    fn scalar(&self, c: FieldElem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: FieldElem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// `Some(c)` when `a` is the scalar `c`.
    fn as_scalar(&self, a: &Self::Elem) -> Option<FieldElem>;
    /// Whether the two handles denote the same algebra.
    fn same(&self, other: &Self) -> bool;
    fn describe(&self) -> String;

    fn zero(&self) -> Self::Elem {
        self.scalar(self.prime().zero())
    }

    fn one(&self) -> Self::Elem {
        self.scalar(self.prime().one())
    }

    fn int(&self, c: i64) -> Self::Elem {
        self.scalar(self.prime().elem(c))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.scale(a, self.prime().elem(-1))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn commutator(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    fn pow(&self, a: &Self::Elem, e: u64) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn sum<'a, I: IntoIterator<Item = &'a Self::Elem>>(&self, it: I) -> Self::Elem
    where
        Self::Elem: 'a,
    {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}
