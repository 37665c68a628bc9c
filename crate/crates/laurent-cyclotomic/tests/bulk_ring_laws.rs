//! Ring laws on 10^4 seeded random triples for each of the three rings.

use laurent_cyclotomic::{CycInt, LaurentPoly, ModTp};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_laurent(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let mut f = LaurentPoly::zero();
    for _ in 0..rng.random_range(0..5) {
        f.add_term(rng.random_range(-5..=5), BigInt::from(rng.random_range(-9i64..=9)));
    }
    f
}

fn random_cyc(rng: &mut ChaCha8Rng, p: u64) -> CycInt {
    CycInt {
        p,
        coords: (0..p - 1)
            .map(|_| BigInt::from(rng.random_range(-9i64..=9)))
            .collect(),
    }
}

#[test]
fn laurent_laws_10k_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let (a, b, c) = (
            random_laurent(&mut rng),
            random_laurent(&mut rng),
            random_laurent(&mut rng),
        );
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}

#[test]
fn modtp_laws_10k_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let p = *[3u64, 5, 7].iter().nth(rng.random_range(0..3)).unwrap();
        let (a, b, c) = (
            ModTp::reduce(p, &random_laurent(&mut rng)),
            ModTp::reduce(p, &random_laurent(&mut rng)),
            ModTp::reduce(p, &random_laurent(&mut rng)),
        );
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}

#[test]
fn cyc_laws_10k_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10_000 {
        let p = *[3u64, 5, 7].iter().nth(rng.random_range(0..3)).unwrap();
        let (a, b, c) = (
            random_cyc(&mut rng, p),
            random_cyc(&mut rng, p),
            random_cyc(&mut rng, p),
        );
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}
