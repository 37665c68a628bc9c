//! The quotient ring Z[T^±1]/(T^p - 1): length-p coefficient vectors with
//! cyclic convolution.

use crate::laurent::LaurentPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModTp {
    pub p: u64,
    pub coeffs: Vec<BigInt>,
}

impl ModTp {
    pub fn zero(p: u64) -> Self {
        ModTp {
            p,
            coeffs: vec![BigInt::zero(); p as usize],
        }
    }

    pub fn reduce(p: u64, f: &LaurentPoly) -> Self {
        let mut out = ModTp::zero(p);
        for (&e, c) in f.terms() {
            let k = e.mod_floor(&(p as i64)) as usize;
            out.coeffs[k] += c;
        }
        out
    }

    /// Canonical lift with exponents in [0, p).
    pub fn lift(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out.add_term(k as i64, c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        ModTp {
            p: self.p,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let n = self.p as usize;
        let mut out = ModTp::zero(self.p);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[(i + j) % n] += a * b;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}
