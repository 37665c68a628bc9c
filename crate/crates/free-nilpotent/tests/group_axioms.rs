//! Group axioms under collection: associativity and inverses on 10^4 random
//! triples per (rank, class) configuration with rank <= 3, class <= 4.

use free_nilpotent::{FreeNilGroup, NilWord};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn random_nf(rng: &mut ChaCha8Rng, ctx: &FreeNilGroup) -> NilWord {
    let exps: Vec<BigInt> = (0..ctx.dim())
        .map(|_| BigInt::from(rng.random_range(-3i64..=3)))
        .collect();
    ctx.from_exponents(exps)
}

#[test]
fn axioms_hold_on_random_triples() {
    for rank in 1..=3usize {
        for class in 1..=4usize {
            let ctx = FreeNilGroup::new(rank, class);
            let seeds: Vec<u64> = (0..10_000u64).collect();
            let bad = seeds
                .par_iter()
                .filter(|&&s| {
                    let mut rng =
                        ChaCha8Rng::seed_from_u64(s.wrapping_mul(0x9E37_79B9).wrapping_add(class as u64));
                    let u = random_nf(&mut rng, &ctx);
                    let v = random_nf(&mut rng, &ctx);
                    let w = random_nf(&mut rng, &ctx);
                    let assoc = ctx.mul(&ctx.mul(&u, &v), &w) == ctx.mul(&u, &ctx.mul(&v, &w));
                    let inv = ctx.mul(&u, &ctx.inv(&u)).is_identity()
                        && ctx.mul(&ctx.inv(&v), &v).is_identity();
                    !(assoc && inv)
                })
                .count();
            assert_eq!(bad, 0, "axiom failures at rank {rank} class {class}");
        }
    }
}

#[test]
fn hirsch_length_is_witt_sum() {
    use free_nilpotent::witt_number;
    let sum23: u64 = (1..=3).map(|n| witt_number(2, n)).sum();
    assert_eq!(sum23, 5);
    let sum43: u64 = (1..=3).map(|n| witt_number(4, n)).sum();
    assert_eq!(sum43, 30);
    assert_eq!(FreeNilGroup::new(2, 3).dim(), 5);
    assert_eq!(FreeNilGroup::new(4, 3).dim(), 30);
}
