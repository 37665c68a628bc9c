//! The cyclotomic integers Z[zeta_p] in the power basis 1, zeta, ...,
//! zeta^{p-2}, with unit inversion by extended Euclid against Phi_p over Q.

use crate::error::RingError;
use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycInt {
    pub p: u64,
    #[serde(with = "zmat::ser::big_vec")]
    pub coords: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(p: u64) -> Self {
        CycInt {
            p,
            coords: vec![BigInt::zero(); (p - 1) as usize],
        }
    }

    pub fn one(p: u64) -> Self {
        let mut c = CycInt::zero(p);
        c.coords[0] = BigInt::one();
        c
    }

    pub fn zeta(p: u64) -> Self {
        CycInt::zeta_pow(p, 1)
    }

    /// zeta^k in the power basis: zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
    pub fn zeta_pow(p: u64, k: i64) -> Self {
        let k = k.mod_floor(&(p as i64)) as usize;
        let mut c = CycInt::zero(p);
        if k < (p - 1) as usize {
            c.coords[k] = BigInt::one();
        } else {
            for x in &mut c.coords {
                *x = -BigInt::one();
            }
        }
        c
    }

    pub fn from_i64(p: u64, n: i64) -> Self {
        let mut c = CycInt::zero(p);
        c.coords[0] = BigInt::from(n);
        c
    }

    /// Reduction of a Laurent polynomial at T = zeta: exponents mod p, then
    /// zeta^{p-1} rewritten into the power basis.
    pub fn from_laurent(p: u64, f: &LaurentPoly) -> Self {
        let mut out = CycInt::zero(p);
        for (&e, c) in f.terms() {
            let k = e.mod_floor(&(p as i64)) as usize;
            if k < (p - 1) as usize {
                out.coords[k] += c;
            } else {
                for x in &mut out.coords {
                    *x -= c;
                }
            }
        }
        out
    }

    /// Canonical lift of degree <= p-2.
    pub fn lift(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.coords.iter().enumerate() {
            out.add_term(k as i64, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        CycInt {
            p: self.p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        CycInt {
            p: self.p,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        CycInt {
            p: self.p,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        CycInt::from_laurent(self.p, &self.lift().mul(&other.lift()))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycInt::one(self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt {
            p: self.p,
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }
}

/// Inverse of a unit of Z[zeta_p], via the Bezout identity for the lift
/// against Phi_p over the rationals; a non-integral inverse is rejected.
pub fn cyc_inverse_unit(p: u64, u: &CycInt) -> Result<CycInt, RingError> {
    if u.is_zero() {
        return Err(RingError::NotAUnit("zero".into()));
    }
    let deg_phi = (p - 1) as usize;
    let phi: Vec<BigRational> = (0..=deg_phi)
        .map(|_| BigRational::from(BigInt::one()))
        .collect();
    let mut a: Vec<BigRational> = (0..deg_phi)
        .map(|i| BigRational::from(u.coords[i].clone()))
        .collect();
    trim(&mut a);
    // Extended Euclid: g = s*a + t*phi; track only s.
    let (g, s) = ext_gcd_poly(a, phi);
    if g.len() != 1 {
        return Err(RingError::InternalInvariant(
            "gcd with the irreducible Phi_p is not constant".into(),
        ));
    }
    let ginv = g[0].recip();
    let inv_coeffs: Vec<BigRational> = s.iter().map(|c| c * &ginv).collect();
    // Reduce mod Phi_p (degree is already < p-1 by the Euclid bookkeeping,
    // but normalise defensively through CycInt::from_laurent on a lift).
    let mut lift = LaurentPoly::zero();
    let mut denominator_ok = true;
    for (k, c) in inv_coeffs.iter().enumerate() {
        if !c.denom().abs().is_one() {
            denominator_ok = false;
            break;
        }
        lift.add_term(k as i64, c.numer().clone());
    }
    if !denominator_ok {
        return Err(RingError::NotAUnit(
            "inverse has non-integral coordinates".into(),
        ));
    }
    let inv = CycInt::from_laurent(p, &lift);
    if !u.mul(&inv).sub(&CycInt::one(p)).is_zero() {
        return Err(RingError::InternalInvariant("u * u^{-1} != 1".into()));
    }
    Ok(inv)
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// (gcd, s) with gcd = s*a + t*b for polynomials over Q.
fn ext_gcd_poly(a: Vec<BigRational>, b: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r0 = a;
    let mut r1 = b;
    let mut s0 = vec![BigRational::one()];
    let mut s1: Vec<BigRational> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = poly_div(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    (r0, s0)
}

fn poly_div(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let mut quo = vec![BigRational::zero(); a.len().saturating_sub(b.len()) + 1];
    let db = b.len() - 1;
    let lead = b[db].clone();
    while rem.len() > db {
        let dr = rem.len() - 1;
        let c = &rem[dr] / &lead;
        quo[dr - db] = c.clone();
        for i in 0..=db {
            let t = &c * &b[i];
            let v = &rem[dr - db + i] - t;
            rem[dr - db + i] = v;
        }
        trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    trim(&mut quo);
    (quo, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            let t = x * y;
            out[i + j] += t;
        }
    }
    let mut out = out;
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// True iff u is one of the 2p torsion units ±zeta^k of Z[zeta_p].
pub fn is_root_of_unity(p: u64, u: &CycInt) -> bool {
    debug_assert!(!u.is_zero());
    for k in 0..p as i64 {
        let z = CycInt::zeta_pow(p, k);
        if *u == z || *u == z.neg() {
            return true;
        }
    }
    false
}
