//! Free class-c nilpotent groups with exact normal forms over a Hall basis.
//!
//! Elements are exponent vectors ([`NilWord`]); multiplication is collection
//! from the left. The commutator tails [b_i, b_j^{??1}] feeding the collection
//! are computed once from the faithful representation x_i -> 1 + X_i in the
//! degree-truncated free associative ring, by coordinate extraction.

use crate::assoc::{inverse_one_plus, NcPoly, Word};
use crate::error::NilError;
use crate::hall::HallBasis;
use crate::linalg::solve_exact;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Normal-form element of a free class-c nilpotent group: exponent vector
/// over the Hall basis. Plain value type; arithmetic goes through
/// [`FreeNilGroup`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NilWord {
    pub rank: usize,
    pub class: usize,
    pub exps: Vec<BigInt>,
}

impl NilWord {
    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    /// Nonzero letters (basis position, exponent) in basis order.
    pub fn letters(&self) -> Vec<(u32, BigInt)> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| (i as u32, e.clone()))
            .collect()
    }

    pub fn exponent(&self, pos: usize) -> &BigInt {
        &self.exps[pos]
    }
}

#[derive(Serialize, Deserialize)]
pub struct NilWordJson {
    pub rank: usize,
    pub class: usize,
    pub basis: Vec<String>,
    #[serde(with = "zmat::ser::big_vec")]
    pub exponents: Vec<BigInt>,
}

type Letters = Vec<(u32, BigInt)>;

/// Context for one (rank, class): Hall basis, algebra images of the basis
/// commutators, and the collection tails.
pub struct FreeNilGroup {
    pub basis: HallBasis,
    rank: usize,
    class: usize,
    /// Lie polynomial of each basic commutator (bracket expansion).
    lie_poly: Vec<NcPoly>,
    /// Group image of each basic commutator in the truncated algebra.
    grp: Vec<NcPoly>,
    grp_inv: Vec<NcPoly>,
    /// tails[i][j] = normal form of [b_i, b_j]; tails_inv for [b_i, b_j^{-1}].
    /// Present only for i > j with weight sum <= class (empty = commute).
    tails: Vec<Vec<Letters>>,
    tails_inv: Vec<Vec<Letters>>,
    /// weight == class, hence central.
    central: Vec<bool>,
}

impl FreeNilGroup {
    pub fn new(rank: usize, class: usize) -> Self {
        let basis = HallBasis::new(rank, class);
        let n = basis.len();
        let mut lie_poly = Vec::with_capacity(n);
        let mut grp = Vec::with_capacity(n);
        let mut grp_inv = Vec::with_capacity(n);
        for idx in 0..n {
            match basis.items[idx].tree {
                crate::hall::CommutatorTree::Gen(i) => {
                    lie_poly.push(NcPoly::gen(rank, i));
                    let e = NcPoly::one(rank).add(&NcPoly::gen(rank, i));
                    grp_inv.push(inverse_one_plus(&e, class).expect("unit"));
                    grp.push(e);
                }
                crate::hall::CommutatorTree::Pair(u, v) => {
                    let lp: &NcPoly = &lie_poly[u];
                    lie_poly.push(lp.lie_bracket_capped(&lie_poly[v], class));
                    let e = group_commutator(&grp[u], &grp_inv[u], &grp[v], &grp_inv[v], class);
                    grp_inv.push(inverse_one_plus(&e, class).expect("unit"));
                    grp.push(e);
                }
            }
        }
        let central = (0..n).map(|i| basis.weight(i) == class).collect();
        let mut ctx = FreeNilGroup {
            rank,
            class,
            basis,
            lie_poly,
            grp,
            grp_inv,
            tails: vec![Vec::new(); n],
            tails_inv: vec![Vec::new(); n],
            central,
        };
        for i in 0..n {
            let mut row = Vec::with_capacity(i);
            let mut row_inv = Vec::with_capacity(i);
            for j in 0..i {
                if ctx.basis.weight(i) + ctx.basis.weight(j) > class {
                    row.push(Letters::new());
                    row_inv.push(Letters::new());
                    continue;
                }
                let c = group_commutator(
                    &ctx.grp[i],
                    &ctx.grp_inv[i],
                    &ctx.grp[j],
                    &ctx.grp_inv[j],
                    class,
                );
                let nf = ctx.extract(&c).expect("basis commutator is group-like");
                let letters = letters_of(&nf);
                debug_assert!(letters.iter().all(|&(p, _)| p as usize > i));
                row.push(letters);
                let ci = group_commutator(
                    &ctx.grp[i],
                    &ctx.grp_inv[i],
                    &ctx.grp_inv[j],
                    &ctx.grp[j],
                    class,
                );
                let nf = ctx.extract(&ci).expect("basis commutator is group-like");
                row_inv.push(letters_of(&nf));
            }
            ctx.tails[i] = row;
            ctx.tails_inv[i] = row_inv;
        }
        ctx
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self) -> usize {
        self.class
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn identity(&self) -> NilWord {
        self.from_exponents(vec![BigInt::zero(); self.dim()])
    }

    pub fn generator(&self, i: usize) -> NilWord {
        assert!(i < self.rank);
        let mut exps = vec![BigInt::zero(); self.dim()];
        exps[i] = BigInt::one();
        self.from_exponents(exps)
    }

    pub fn from_exponents(&self, exps: Vec<BigInt>) -> NilWord {
        assert_eq!(exps.len(), self.dim());
        NilWord {
            rank: self.rank,
            class: self.class,
            exps,
        }
    }

    pub fn from_exponents_i64(&self, exps: &[i64]) -> NilWord {
        self.from_exponents(exps.iter().map(|&e| BigInt::from(e)).collect())
    }

    /// Normal form of a word in signed generator letters.
    pub fn collect(&self, word: &[(usize, i64)]) -> NilWord {
        let letters: Letters = word
            .iter()
            .map(|&(g, e)| {
                assert!(g < self.rank, "letter references generator {g}");
                (g as u32, BigInt::from(e))
            })
            .collect();
        self.from_exponents(self.collect_letters(letters))
    }

    fn check(&self, w: &NilWord) {
        debug_assert!(w.rank == self.rank && w.class == self.class && w.exps.len() == self.dim());
    }

    pub fn mul(&self, a: &NilWord, b: &NilWord) -> NilWord {
        self.check(a);
        self.check(b);
        // The left factor is already collected; only the right letters move.
        let mut exps = a.exps.clone();
        self.collect_into(&mut exps, b.letters());
        self.from_exponents(exps)
    }

    pub fn inv(&self, a: &NilWord) -> NilWord {
        self.check(a);
        let mut letters = a.letters();
        letters.reverse();
        for (_, e) in &mut letters {
            *e = -std::mem::take(e);
        }
        self.from_exponents(self.collect_letters(letters))
    }

    /// [a, b] = a^{-1} b^{-1} a b.
    pub fn commutator(&self, a: &NilWord, b: &NilWord) -> NilWord {
        let mut exps = self.inv(a).exps;
        self.collect_into(&mut exps, inverse_letters(&b.letters()));
        self.collect_into(&mut exps, a.letters());
        self.collect_into(&mut exps, b.letters());
        self.from_exponents(exps)
    }

    pub fn pow(&self, a: &NilWord, e: i64) -> NilWord {
        let (mut base, mut k) = if e < 0 {
            (self.inv(a), e.unsigned_abs())
        } else {
            (a.clone(), e as u64)
        };
        let mut acc = self.identity();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// Left-normed commutator [a_0, a_1, ..., a_k] of generators.
    pub fn left_normed(&self, gens: &[usize]) -> NilWord {
        let mut acc = self.generator(gens[0]);
        for &g in &gens[1..] {
            acc = self.commutator(&acc, &self.generator(g));
        }
        acc
    }

    /// Collection from the left over the Hall basis.
    fn collect_letters(&self, input: Letters) -> Vec<BigInt> {
        let mut exps = vec![BigInt::zero(); self.dim()];
        self.collect_into(&mut exps, input);
        exps
    }

    /// Multiplies the collected word `exps` by the letter sequence `input`.
    fn collect_into(&self, exps: &mut [BigInt], input: Letters) {
        let n = self.dim();
        let mut stack: Letters = input.into_iter().rev().collect();
        let mut guard: u64 = 0;
        while let Some((j, e)) = stack.pop() {
            guard += 1;
            assert!(guard < 500_000_000, "collection did not terminate");
            if e.is_zero() {
                continue;
            }
            let j_us = j as usize;
            let tail_present = exps[j_us + 1..].iter().any(|x| !x.is_zero());
            if !tail_present {
                exps[j_us] += e;
                continue;
            }
            // Whole-exponent fast path: when every tail letter commutes with
            // b_j or has a purely central commutator with it, the conjugate
            // of the tail by b_j^e is formed in one pass via
            // [b_i, b_j^e] = [b_i, b_j]^e.
            let easy = (j_us + 1..n).all(|i| {
                exps[i].is_zero() || {
                    let t = &self.tails[i][j_us];
                    t.iter().all(|&(p, _)| self.central[p as usize])
                }
            });
            if easy {
                let mut seq: Letters = Vec::new();
                for i in (j_us + 1)..n {
                    if exps[i].is_zero() {
                        continue;
                    }
                    let ei = std::mem::take(&mut exps[i]);
                    let scale = &e * &ei;
                    seq.push((i as u32, ei));
                    for &(p, ref c) in &self.tails[i][j_us] {
                        seq.push((p, c * &scale));
                    }
                }
                exps[j_us] += e;
                stack.extend(seq.into_iter().rev());
                continue;
            }
            // Split one unit of b_j off and move it left past the tail.
            let s_pos = e.is_positive();
            let unit = if s_pos { BigInt::one() } else { -BigInt::one() };
            let rest = &e - &unit;
            if !rest.is_zero() {
                stack.push((j, rest));
            }
            let mut tail: Letters = Vec::new();
            for i in (j_us + 1)..n {
                if !exps[i].is_zero() {
                    tail.push((i as u32, std::mem::take(&mut exps[i])));
                }
            }
            exps[j_us] += unit;
            // Conjugated tail, assembled left-to-right.
            let mut seq: Letters = Vec::new();
            for (i, ei) in tail {
                let t = if s_pos {
                    &self.tails[i as usize][j_us]
                } else {
                    &self.tails_inv[i as usize][j_us]
                };
                if t.is_empty() {
                    seq.push((i, ei));
                    continue;
                }
                if t.iter().all(|&(p, _)| self.central[p as usize]) {
                    // (b_i t)^e = b_i^e t^e for central t.
                    seq.push((i, ei.clone()));
                    for &(p, ref c) in t {
                        seq.push((p, c * &ei));
                    }
                    continue;
                }
                let reps = ei
                    .abs()
                    .to_u64()
                    .expect("collection exponent exceeds the splitting limit");
                if ei.is_positive() {
                    for _ in 0..reps {
                        seq.push((i, BigInt::one()));
                        seq.extend(t.iter().cloned());
                    }
                } else {
                    for _ in 0..reps {
                        seq.extend(inverse_letters(t));
                        seq.push((i, -BigInt::one()));
                    }
                }
            }
            stack.extend(seq.into_iter().rev());
        }
    }

    /// Image of a signed generator word under x_i -> 1 + X_i, truncated above
    /// the class.
    pub fn algebra_image(&self, word: &[(usize, i64)]) -> NcPoly {
        let mut acc = NcPoly::one(self.rank);
        for &(g, e) in word {
            assert!(g < self.rank);
            acc = acc.mul_capped(&self.elem_power(g, &BigInt::from(e)), self.class);
        }
        acc
    }

    /// Algebra image of a normal form.
    pub fn word_to_algebra(&self, w: &NilWord) -> NcPoly {
        self.check(w);
        let mut acc = NcPoly::one(self.rank);
        for (pos, e) in w.letters() {
            acc = acc.mul_capped(&self.elem_power(pos as usize, &e), self.class);
        }
        acc
    }

    fn elem_power(&self, pos: usize, e: &BigInt) -> NcPoly {
        let (mut base, mut k) = if e.is_negative() {
            (self.grp_inv[pos].clone(), e.abs())
        } else {
            (self.grp[pos].clone(), e.clone())
        };
        let mut acc = NcPoly::one(self.rank);
        let two = BigInt::from(2);
        while k.is_positive() {
            if (&k % &two).is_one() {
                acc = acc.mul_capped(&base, self.class);
            }
            base = base.mul_capped(&base, self.class);
            k /= &two;
        }
        acc
    }

    /// Recovers the normal-form exponent vector of a group-like algebra
    /// element, stripping one weight at a time.
    pub fn extract(&self, p: &NcPoly) -> Result<Vec<BigInt>, NilError> {
        if p.coeff(&[]) != BigInt::one() {
            return Err(NilError::NotGroupLike("constant term differs from 1".into()));
        }
        let mut residual = p.truncate(self.class);
        let mut exps = vec![BigInt::zero(); self.dim()];
        for w in 1..=self.class {
            let comp = residual.degree_component(w);
            let range = self.basis.positions_of_weight(w);
            if !comp.is_zero() {
                let mut words: BTreeSet<Word> = BTreeSet::new();
                for pos in range.clone() {
                    words.extend(self.lie_poly[pos].terms().map(|(w, _)| w.clone()));
                }
                words.extend(comp.terms().map(|(w, _)| w.clone()));
                let words: Vec<Word> = words.into_iter().collect();
                let a: Vec<Vec<BigInt>> = words
                    .iter()
                    .map(|word| {
                        range
                            .clone()
                            .map(|pos| self.lie_poly[pos].coeff(word))
                            .collect()
                    })
                    .collect();
                let b: Vec<BigInt> = words.iter().map(|word| comp.coeff(word)).collect();
                let sol = solve_exact(&a, &b).ok_or_else(|| {
                    NilError::NotGroupLike(format!("degree-{w} component is not a Lie vector"))
                })?;
                for (k, pos) in range.clone().enumerate() {
                    if !sol[k].is_integer() {
                        return Err(NilError::NotGroupLike(format!(
                            "non-integral coordinate at {}",
                            self.basis.bracket_string(pos)
                        )));
                    }
                    exps[pos] = sol[k].to_integer();
                }
            }
            let mut prefix = NcPoly::one(self.rank);
            for pos in range {
                if !exps[pos].is_zero() {
                    prefix = prefix.mul_capped(&self.elem_power(pos, &exps[pos]), self.class);
                }
            }
            let prefix_inv = inverse_one_plus(&prefix, self.class)?;
            residual = prefix_inv.mul_capped(&residual, self.class);
        }
        if residual != NcPoly::one(self.rank) {
            return Err(NilError::NotGroupLike("nontrivial residual".into()));
        }
        Ok(exps)
    }

    pub fn to_json(&self, w: &NilWord) -> NilWordJson {
        NilWordJson {
            rank: self.rank,
            class: self.class,
            basis: (0..self.dim()).map(|i| self.basis.bracket_string(i)).collect(),
            exponents: w.exps.clone(),
        }
    }

    pub fn from_json(&self, doc: &NilWordJson) -> Result<NilWord, NilError> {
        if doc.rank != self.rank || doc.class != self.class {
            return Err(NilError::BadParameter(format!(
                "word is for rank {} class {}, context is rank {} class {}",
                doc.rank, doc.class, self.rank, self.class
            )));
        }
        if doc.exponents.len() != self.dim() {
            return Err(NilError::BadParameter("exponent vector length".into()));
        }
        Ok(self.from_exponents(doc.exponents.clone()))
    }
}

/// [a, b] = a^{-1} b^{-1} a b in the truncated algebra.
fn group_commutator(a: &NcPoly, a_inv: &NcPoly, b: &NcPoly, b_inv: &NcPoly, cap: usize) -> NcPoly {
    a_inv
        .mul_capped(b_inv, cap)
        .mul_capped(a, cap)
        .mul_capped(b, cap)
}

fn letters_of(exps: &[BigInt]) -> Letters {
    exps.iter()
        .enumerate()
        .filter(|(_, e)| !e.is_zero())
        .map(|(i, e)| (i as u32, e.clone()))
        .collect()
}

fn inverse_letters(letters: &[(u32, BigInt)]) -> Letters {
    letters
        .iter()
        .rev()
        .map(|(p, e)| (*p, -e.clone()))
        .collect()
}
