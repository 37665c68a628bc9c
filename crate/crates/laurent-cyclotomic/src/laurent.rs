//! Integer Laurent polynomials with exact arithmetic.

use crate::error::RingError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

/// Finitely supported map from integer exponents to integer coefficients;
/// zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, BigInt::one())
    }

    /// c * T^e
    pub fn monomial(e: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, BigInt::one())
    }

    pub fn constant(c: i64) -> Self {
        LaurentPoly::monomial(0, BigInt::from(c))
    }

    pub fn from_coeffs(lowest: i64, coeffs: &[i64]) -> Self {
        let mut out = LaurentPoly::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            out.add_term(lowest + k as i64, BigInt::from(c));
        }
        out
    }

    /// T^n - 1
    pub fn t_power_minus_one(n: i64) -> Self {
        let mut out = LaurentPoly::monomial(n, BigInt::one());
        out.add_term(0, -BigInt::one());
        out
    }

    /// The p-th cyclotomic polynomial 1 + T + ... + T^{p-1} (p prime).
    pub fn cyclotomic(p: u64) -> Self {
        let mut out = LaurentPoly::zero();
        for k in 0..p {
            out.add_term(k as i64, BigInt::one());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in other.terms() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&e, c) in other.terms() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn negate(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in self.terms() {
            for (&e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, c * k)).collect(),
        }
    }

    /// Multiplication by T^n.
    pub fn shift(&self, n: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + n, c.clone())).collect(),
        }
    }

    /// The substitution T -> T^{-1}.
    pub fn subst_inverse(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Sum of coefficients (the augmentation T -> 1).
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division by an arbitrary nonzero divisor; errors when the
    /// division leaves a remainder.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        if divisor.is_zero() {
            return Err(RingError::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        // Shift both to ordinary polynomials and long-divide from the top.
        let ds = divisor.min_exp().unwrap();
        let ns = self.min_exp().unwrap();
        let mut rem = self.shift(-ns);
        let div = divisor.shift(-ds);
        let dtop = div.max_exp().unwrap();
        let dlead = div.coeff(dtop);
        let mut quo = LaurentPoly::zero();
        while !rem.is_zero() {
            let rtop = rem.max_exp().unwrap();
            if rtop < dtop {
                return Err(RingError::InexactDivision(format!(
                    "remainder of degree {rtop}"
                )));
            }
            let (q, r) = num_integer::Integer::div_rem(&rem.coeff(rtop), &dlead);
            if !r.is_zero() {
                return Err(RingError::InexactDivision(
                    "leading coefficient does not divide".into(),
                ));
            }
            let qm = LaurentPoly::monomial(rtop - dtop, q);
            rem = rem.sub(&qm.mul(&div));
            quo = quo.add(&qm);
        }
        Ok(quo.shift(ns - ds))
    }

    /// Exact division by T - 1; requires augmentation zero.
    pub fn divide_exact_by_tminus1(&self) -> Result<Self, RingError> {
        if !self.eval_at_one().is_zero() {
            return Err(RingError::InexactDivision(
                "augmentation is nonzero, T-1 does not divide".into(),
            ));
        }
        self.divide_exact(&LaurentPoly::from_coeffs(0, &[-1, 1]))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, String> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), c.to_string()))
            .collect();
        map.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, String>::deserialize(d)?;
        let mut out = LaurentPoly::zero();
        for (e, c) in map {
            let e: i64 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}
