//! The Magnus embedding: 2x2 matrices (h 0; v 1) with h in H and v in the
//! free module V, realising the free abelian-by-(class-c) group of rank 2.

use crate::group_ring::{FreeModVec, GroupRing};
use free_nilpotent::NilWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnusMat {
    pub h: NilWord,
    pub v: FreeModVec,
}

impl MagnusMat {
    pub fn identity(ring: &GroupRing) -> Self {
        MagnusMat {
            h: ring.h.identity(),
            v: FreeModVec::zero(ring),
        }
    }

    /// (h1, v1)(h2, v2) = (h1 h2, v1 h2 + v2)
    pub fn mul(&self, ring: &GroupRing, other: &Self) -> Self {
        MagnusMat {
            h: ring.h.mul(&self.h, &other.h),
            v: self.v.act_group(ring, &other.h).add(&other.v),
        }
    }

    pub fn inv(&self, ring: &GroupRing) -> Self {
        let hinv = ring.h.inv(&self.h);
        MagnusMat {
            v: self.v.act_group(ring, &hinv).neg(),
            h: hinv,
        }
    }

    pub fn conj(&self, ring: &GroupRing, w: &Self) -> Self {
        w.inv(ring).mul(ring, self).mul(ring, w)
    }

    pub fn commutator(&self, ring: &GroupRing, other: &Self) -> Self {
        self.inv(ring)
            .mul(ring, &other.inv(ring))
            .mul(ring, self)
            .mul(ring, other)
    }

    pub fn pow(&self, ring: &GroupRing, e: i64) -> Self {
        let (mut base, mut k) = if e < 0 {
            (self.inv(ring), e.unsigned_abs())
        } else {
            (self.clone(), e as u64)
        };
        let mut acc = MagnusMat::identity(ring);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(ring, &base);
            }
            base = base.mul(ring, &base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.h.is_identity() && self.v.is_zero()
    }
}

/// Generator images: x = (xbar 0; e 1), y = (ybar 0; f 1).
pub fn generator_matrix(ring: &GroupRing, i: usize) -> MagnusMat {
    assert!(i < 2, "the embedding is for the rank-2 group");
    let mut v = FreeModVec::zero(ring);
    if i == 0 {
        v.e = ring.one();
    } else {
        v.f = ring.one();
    }
    MagnusMat {
        h: ring.h.generator(i),
        v,
    }
}

/// Product of generator matrices along a signed word over {x^{±1}, y^{±1}}.
pub fn embed_word(ring: &GroupRing, word: &[(usize, i64)]) -> MagnusMat {
    let mut acc = MagnusMat::identity(ring);
    for &(g, e) in word {
        acc = acc.mul(ring, &generator_matrix(ring, g).pow(ring, e));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use free_nilpotent::{words, FreeNilGroup};
    use num_bigint::BigInt;
    use std::sync::Arc;

    fn ring(c: usize) -> GroupRing {
        GroupRing::new(Arc::new(FreeNilGroup::new(2, c)))
    }

    #[test]
    fn trivial_word_embeds_to_identity() {
        let r = ring(2);
        assert!(embed_word(&r, &[(0, 1), (0, -1)]).is_identity());
    }

    #[test]
    fn x_power_p_collects_geometric_sum() {
        // Module part of x^p is e (1 + xbar + ... + xbar^{p-1}).
        let r = ring(2);
        let m = embed_word(&r, &[(0, 5)]);
        assert_eq!(m.h, r.h.pow(&r.h.generator(0), 5));
        let mut expect = r.zero();
        for k in 0..5 {
            expect.add_term(r.h.pow(&r.h.generator(0), k), BigInt::from(1));
        }
        assert_eq!(m.v.e, expect);
        assert!(m.v.f.is_zero());
    }

    #[test]
    fn commutator_word_h_component_matches_class() {
        // [y,x] has trivial H-component iff c = 1.
        let w = words::commutator_word(&[(1, 1)], &[(0, 1)]);
        let r1 = ring(1);
        assert!(embed_word(&r1, &w).h.is_identity());
        let r2 = ring(2);
        assert!(!embed_word(&r2, &w).h.is_identity());
    }

    #[test]
    fn embedding_is_a_homomorphism_on_random_words() {
        use rand::Rng;
        use rand::SeedableRng;
        for c in 1..=3usize {
            let r = ring(c);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42 + c as u64);
            for _ in 0..1000 {
                let len1 = rng.random_range(0..6);
                let len2 = rng.random_range(0..6);
                let u: Vec<(usize, i64)> = (0..len1)
                    .map(|_| (rng.random_range(0..2), if rng.random_bool(0.5) { 1 } else { -1 }))
                    .collect();
                let v: Vec<(usize, i64)> = (0..len2)
                    .map(|_| (rng.random_range(0..2), if rng.random_bool(0.5) { 1 } else { -1 }))
                    .collect();
                let mut uv = u.clone();
                uv.extend_from_slice(&v);
                assert_eq!(
                    embed_word(&r, &uv),
                    embed_word(&r, &u).mul(&r, &embed_word(&r, &v)),
                    "c = {c}"
                );
            }
        }
    }

    #[test]
    fn kernel_sanity() {
        // Commutators of two gamma_{c+1}-elements vanish in the
        // abelian-by-nilpotent group.
        let r = ring(2);
        let z = words::left_normed_word(&[1, 0, 0]);
        let z_conj: Vec<(usize, i64)> = {
            let mut w = words::inverse_word(&[(0, 1)]);
            w.extend_from_slice(&z);
            w.extend_from_slice(&[(0, 1)]);
            w
        };
        let c = words::commutator_word(&z, &z_conj);
        assert!(embed_word(&r, &c).is_identity());
        // 100 random words with nontrivial normal form give nontrivial
        // matrices.
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut tested = 0;
        while tested < 100 {
            let len = rng.random_range(1..8);
            let word: Vec<(usize, i64)> = (0..len)
                .map(|_| (rng.random_range(0..2), if rng.random_bool(0.5) { 1 } else { -1 }))
                .collect();
            if r.h.collect(&word).is_identity() {
                continue;
            }
            tested += 1;
            assert!(!embed_word(&r, &word).is_identity());
        }
    }
}
