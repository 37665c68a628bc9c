//! The free associative ring on non-commuting indeterminates, with the Lie
//! bracket, the Dynkin left-bracketing test for Lie elements, and leading
//! monomials. Degree-capped multiplication doubles as the truncated algebra
//! that represents free nilpotent groups faithfully.

use crate::error::NilError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A word in the generators (sequence of generator indices).
pub type Word = Vec<u8>;

/// Finitely supported integer combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly {
    pub rank: usize,
    terms: BTreeMap<Word, BigInt>,
}

impl NcPoly {
    pub fn zero(rank: usize) -> Self {
        NcPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        NcPoly::monomial(rank, Word::new(), BigInt::one())
    }

    pub fn gen(rank: usize, i: usize) -> Self {
        assert!(i < rank);
        NcPoly::monomial(rank, vec![i as u8], BigInt::one())
    }

    pub fn monomial(rank: usize, w: Word, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NcPoly { rank, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &[u8]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
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

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> NcPoly {
        if k.is_zero() {
            return NcPoly::zero(self.rank);
        }
        NcPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect(),
        }
    }

    /// Concatenation-bilinear product, dropping words longer than `cap`
    /// (pass `usize::MAX` for the untruncated ring).
    pub fn mul_capped(&self, other: &NcPoly, cap: usize) -> NcPoly {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = NcPoly::zero(self.rank);
        for (w1, c1) in self.terms() {
            if w1.len() > cap {
                continue;
            }
            for (w2, c2) in other.terms() {
                if w1.len() + w2.len() > cap {
                    continue;
                }
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        self.mul_capped(other, usize::MAX)
    }

    /// ab - ba.
    pub fn lie_bracket_capped(&self, other: &NcPoly, cap: usize) -> NcPoly {
        self.mul_capped(other, cap).sub(&other.mul_capped(self, cap))
    }

    pub fn lie_bracket(&self, other: &NcPoly) -> NcPoly {
        self.lie_bracket_capped(other, usize::MAX)
    }

    /// Total degree when all words share it.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for w in self.terms.keys() {
            match deg {
                None => deg = Some(w.len()),
                Some(d) if d == w.len() => {}
                _ => return None,
            }
        }
        deg
    }

    pub fn degree_component(&self, d: usize) -> NcPoly {
        NcPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    pub fn truncate(&self, cap: usize) -> NcPoly {
        NcPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() <= cap)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Smallest word (lexicographically, generator 0 least) carrying a
    /// nonzero coefficient.
    pub fn leading_monomial(&self) -> Option<&Word> {
        self.terms.keys().next()
    }

    pub fn leading_term(&self) -> Option<(&Word, &BigInt)> {
        self.terms.iter().next()
    }
}

/// Dynkin left-bracketing of a single word: w = a1 a2 ... an maps to the
/// left-normed Lie monomial [a1, a2, ..., an].
fn dynkin_of_word(rank: usize, w: &[u8]) -> NcPoly {
    let mut acc = NcPoly::gen(rank, w[0] as usize);
    for &a in &w[1..] {
        acc = acc.lie_bracket(&NcPoly::gen(rank, a as usize));
    }
    acc
}

/// Dynkin–Specht–Wever test: a homogeneous element of degree n is a Lie
/// element iff left-bracketing sends it to n times itself.
pub fn dynkin_is_lie(a: &NcPoly) -> Result<bool, NilError> {
    let Some(n) = a.homogeneous_degree() else {
        return Err(NilError::NotHomogeneous);
    };
    if n == 0 {
        return Err(NilError::NotHomogeneous);
    }
    let mut image = NcPoly::zero(a.rank);
    for (w, c) in a.terms() {
        image = image.add(&dynkin_of_word(a.rank, w).scale(c));
    }
    Ok(image == a.scale(&BigInt::from(n)))
}

/// Inverse of a polynomial with constant term 1, in the cap-truncated ring.
pub fn inverse_one_plus(p: &NcPoly, cap: usize) -> Result<NcPoly, NilError> {
    if p.coeff(&[]) != BigInt::one() {
        return Err(NilError::NotGroupLike("constant term is not 1".into()));
    }
    let n = p.sub(&NcPoly::one(p.rank));
    // (1+n)^{-1} = 1 - n + n^2 - ...
    let mut out = NcPoly::one(p.rank);
    let mut pw = NcPoly::one(p.rank);
    for k in 1..=cap {
        pw = pw.mul_capped(&n, cap);
        if pw.is_zero() {
            break;
        }
        if k % 2 == 1 {
            out = out.sub(&pw);
        } else {
            out = out.add(&pw);
        }
    }
    Ok(out)
}
