//! The projections theta: V -> free O-modules, for O = Z[zeta_p], induced by
//! xbar -> zeta together with ybar -> 1 (constant) or ybar -> Y (Laurent).

use crate::group_ring::{FreeModVec, GroupRingElem};
use free_nilpotent::NilWord;
use laurent_cyclotomic::CycInt;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

/// Laurent polynomials over O = Z[zeta_p].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OLaurent {
    pub p: u64,
    terms: BTreeMap<i64, CycInt>,
}

impl OLaurent {
    pub fn zero(p: u64) -> Self {
        OLaurent {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: CycInt) -> Self {
        let mut out = OLaurent::zero(c.p);
        out.add_term(0, c);
        out
    }

    pub fn add_term(&mut self, e: i64, c: CycInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
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
        for (&e, c) in &other.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = OLaurent::zero(self.p);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, k: &CycInt) -> Self {
        let mut out = OLaurent::zero(self.p);
        for (&e, c) in &self.terms {
            out.add_term(e, c.mul(k));
        }
        out
    }

    pub fn coeff(&self, e: i64) -> CycInt {
        self.terms.get(&e).cloned().unwrap_or(CycInt::zero(self.p))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &CycInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluation Y -> 1, a ring homomorphism onto O.
    pub fn eval_at_one(&self) -> CycInt {
        let mut acc = CycInt::zero(self.p);
        for c in self.terms.values() {
            acc = acc.add(c);
        }
        acc
    }
}

fn zeta_exp(p: u64, e: &BigInt) -> i64 {
    e.mod_floor(&BigInt::from(p)).to_i64().expect("small residue")
}

/// Group-ring image under xbar -> zeta^1, ybar -> 1 (all higher basis
/// entries die): only the x-exponent of the normal form survives.
pub fn pi_const(p: u64, r: &GroupRingElem) -> CycInt {
    let mut acc = CycInt::zero(p);
    for (w, c) in r.terms() {
        acc = acc.add(&CycInt::zeta_pow(p, zeta_exp(p, &w.exps[0])).scale(c));
    }
    acc
}

/// Group-ring image under xbar -> zeta, ybar -> Y.
pub fn pi_y(p: u64, r: &GroupRingElem) -> OLaurent {
    let mut acc = OLaurent::zero(p);
    for (w, c) in r.terms() {
        let ye = w.exps[1].to_i64().expect("y-exponent fits i64");
        acc.add_term(ye, CycInt::zeta_pow(p, zeta_exp(p, &w.exps[0])).scale(c));
    }
    acc
}

pub fn pi_const_group(p: u64, w: &NilWord) -> CycInt {
    CycInt::zeta_pow(p, zeta_exp(p, &w.exps[0]))
}

/// theta with constant target: componentwise on (e, f).
pub fn theta_const(p: u64, v: &FreeModVec) -> (CycInt, CycInt) {
    (pi_const(p, &v.e), pi_const(p, &v.f))
}

/// theta with Laurent target.
pub fn theta_y(p: u64, v: &FreeModVec) -> (OLaurent, OLaurent) {
    (pi_y(p, &v.e), pi_y(p, &v.f))
}
