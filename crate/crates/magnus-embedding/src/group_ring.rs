//! The integral group ring ZH of a free class-c nilpotent group H, and the
//! free rank-2 right module V = eR + fR over it.

use free_nilpotent::{FreeNilGroup, NilWord};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Context: the base group H.
#[derive(Clone)]
pub struct GroupRing {
    pub h: Arc<FreeNilGroup>,
}

/// Finitely supported map H -> Z; multiplication is convolution through the
/// group law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElem {
    terms: BTreeMap<NilWord, BigInt>,
}

impl GroupRing {
    pub fn new(h: Arc<FreeNilGroup>) -> Self {
        GroupRing { h }
    }

    pub fn zero(&self) -> GroupRingElem {
        GroupRingElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> GroupRingElem {
        self.group_elem(&self.h.identity())
    }

    pub fn group_elem(&self, w: &NilWord) -> GroupRingElem {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), BigInt::from(1));
        GroupRingElem { terms }
    }

    pub fn mul(&self, a: &GroupRingElem, b: &GroupRingElem) -> GroupRingElem {
        let mut out = self.zero();
        for (wa, ca) in &a.terms {
            for (wb, cb) in &b.terms {
                out.add_term(self.h.mul(wa, wb), ca * cb);
            }
        }
        out
    }

    /// Right multiplication by a single group element.
    pub fn mul_group(&self, a: &GroupRingElem, w: &NilWord) -> GroupRingElem {
        let mut out = self.zero();
        for (wa, ca) in &a.terms {
            out.add_term(self.h.mul(wa, w), ca.clone());
        }
        out
    }

    /// Image of a Laurent polynomial under T -> given group element.
    pub fn from_laurent(
        &self,
        f: &laurent_cyclotomic::LaurentPoly,
        t: &NilWord,
    ) -> GroupRingElem {
        let mut out = self.zero();
        for (&e, c) in f.terms() {
            out.add_term(self.h.pow(t, e), c.clone());
        }
        out
    }
}

impl GroupRingElem {
    pub fn add_term(&mut self, w: NilWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NilWord, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of coefficients: the augmentation ZH -> Z.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// Element of V = eR + fR.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModVec {
    pub e: GroupRingElem,
    pub f: GroupRingElem,
}

impl FreeModVec {
    pub fn zero(ring: &GroupRing) -> Self {
        FreeModVec {
            e: ring.zero(),
            f: ring.zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero() && self.f.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        FreeModVec {
            e: self.e.add(&other.e),
            f: self.f.add(&other.f),
        }
    }

    pub fn neg(&self) -> Self {
        FreeModVec {
            e: self.e.neg(),
            f: self.f.neg(),
        }
    }

    /// Right module action of a ring element.
    pub fn act(&self, ring: &GroupRing, r: &GroupRingElem) -> Self {
        FreeModVec {
            e: ring.mul(&self.e, r),
            f: ring.mul(&self.f, r),
        }
    }

    /// Right action of a single group element.
    pub fn act_group(&self, ring: &GroupRing, w: &NilWord) -> Self {
        FreeModVec {
            e: ring.mul_group(&self.e, w),
            f: ring.mul_group(&self.f, w),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> GroupRing {
        GroupRing::new(Arc::new(FreeNilGroup::new(2, 2)))
    }

    #[test]
    fn augmentation_is_a_homomorphism() {
        let r = ring();
        let x = r.h.generator(0);
        let y = r.h.generator(1);
        let a = r.group_elem(&x).add(&r.group_elem(&y).neg());
        let b = r.group_elem(&r.h.mul(&x, &y)).add(&r.one());
        assert_eq!(
            r.mul(&a, &b).augmentation(),
            a.augmentation() * b.augmentation()
        );
    }

    #[test]
    fn ring_associativity_spot_check() {
        let r = ring();
        let x = r.group_elem(&r.h.generator(0));
        let y = r.group_elem(&r.h.generator(1));
        let s = x.add(&y);
        let t = x.sub(&r.one());
        let u = y.add(&r.one());
        assert_eq!(r.mul(&r.mul(&s, &t), &u), r.mul(&s, &r.mul(&t, &u)));
    }
}
