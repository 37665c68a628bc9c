//! The exterior square of the free O-module on e, f with O-basis
//! eY^m ∧ eY^n (m<n), fY^m ∧ fY^n (m<n), eY^m ∧ fY^n; antisymmetry is
//! normalised into the basis.

use crate::theta::OLaurent;
use laurent_cyclotomic::CycInt;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum WedgeBasis {
    /// eY^m ∧ eY^n with m < n
    Ee(i64, i64),
    /// fY^m ∧ fY^n with m < n
    Ff(i64, i64),
    /// eY^m ∧ fY^n
    Ef(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedgeVec {
    pub p: u64,
    terms: BTreeMap<WedgeBasis, CycInt>,
}

impl WedgeVec {
    pub fn zero(p: u64) -> Self {
        WedgeVec {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, b: WedgeBasis, c: CycInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(b) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let v = slot.get().add(&c);
                if v.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &CycInt) -> Self {
        let mut out = WedgeVec::zero(self.p);
        for (&b, c) in &self.terms {
            out.add_term(b, c.mul(k));
        }
        out
    }

    pub fn coeff(&self, b: WedgeBasis) -> CycInt {
        self.terms.get(&b).cloned().unwrap_or(CycInt::zero(self.p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Bilinear antisymmetric wedge of two module vectors written over the
/// O-basis {eY^m, fY^n}.
pub fn wedge(u: &(OLaurent, OLaurent), v: &(OLaurent, OLaurent)) -> WedgeVec {
    let p = u.0.p;
    let mut out = WedgeVec::zero(p);
    // e-e terms
    for (&m, a) in u.0.terms() {
        for (&n, b) in v.0.terms() {
            let c = a.mul(b);
            match m.cmp(&n) {
                std::cmp::Ordering::Less => out.add_term(WedgeBasis::Ee(m, n), c),
                std::cmp::Ordering::Greater => out.add_term(WedgeBasis::Ee(n, m), c.neg()),
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    // f-f terms
    for (&m, a) in u.1.terms() {
        for (&n, b) in v.1.terms() {
            let c = a.mul(b);
            match m.cmp(&n) {
                std::cmp::Ordering::Less => out.add_term(WedgeBasis::Ff(m, n), c),
                std::cmp::Ordering::Greater => out.add_term(WedgeBasis::Ff(n, m), c.neg()),
                std::cmp::Ordering::Equal => {}
            }
        }
    }
    // e-f and f-e terms
    for (&m, a) in u.0.terms() {
        for (&n, b) in v.1.terms() {
            out.add_term(WedgeBasis::Ef(m, n), a.mul(b));
        }
    }
    for (&m, a) in u.1.terms() {
        for (&n, b) in v.0.terms() {
            out.add_term(WedgeBasis::Ef(n, m), a.mul(b).neg());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e_only(p: u64, terms: &[(i64, i64)]) -> (OLaurent, OLaurent) {
        let mut e = OLaurent::zero(p);
        for &(exp, c) in terms {
            e.add_term(exp, CycInt::from_i64(p, c));
        }
        (e, OLaurent::zero(p))
    }

    #[test]
    fn wedge_with_self_vanishes() {
        let u = e_only(5, &[(0, 1), (1, -2), (3, 4)]);
        assert!(wedge(&u, &u).is_zero());
    }

    #[test]
    fn unit_e_wedge_f() {
        let p = 5;
        let u = (
            OLaurent::constant(CycInt::one(p)),
            OLaurent::zero(p),
        );
        let v = (
            OLaurent::zero(p),
            OLaurent::constant(CycInt::one(p)),
        );
        let w = wedge(&u, &v);
        assert_eq!(w.coeff(WedgeBasis::Ef(0, 0)), CycInt::one(p));
        // Antisymmetry: swapping the arguments flips the sign.
        let w2 = wedge(&v, &u);
        assert_eq!(w2.coeff(WedgeBasis::Ef(0, 0)), CycInt::one(p).neg());
    }

    #[test]
    fn bilinearity_on_random_triples() {
        use rand::Rng;
        use rand::SeedableRng;
        let p = 5;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut random_vec = |rng: &mut rand_chacha::ChaCha8Rng| {
            let mut e = OLaurent::zero(p);
            let mut f = OLaurent::zero(p);
            for _ in 0..rng.random_range(0..4) {
                e.add_term(
                    rng.random_range(-3..=3),
                    CycInt::from_i64(p, rng.random_range(-4..=4)),
                );
                f.add_term(
                    rng.random_range(-3..=3),
                    CycInt::from_i64(p, rng.random_range(-4..=4)),
                );
            }
            (e, f)
        };
        for _ in 0..100 {
            let u = random_vec(&mut rng);
            let u2 = random_vec(&mut rng);
            let v = random_vec(&mut rng);
            let lhs = wedge(&(u.0.add(&u2.0), u.1.add(&u2.1)), &v);
            let rhs = wedge(&u, &v).add(&wedge(&u2, &v));
            assert_eq!(lhs, rhs);
        }
    }
}
