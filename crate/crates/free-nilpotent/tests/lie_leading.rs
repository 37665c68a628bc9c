//! Leading-monomial behaviour of the Lie bracket with the first generator:
//! for a nonzero homogeneous Lie element a of degree >= 2, the bracket
//! [x, a] is nonzero with leading monomial x * lm(a).

use free_nilpotent::{dynkin_is_lie, NcPoly};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random left-normed bracket monomial of the requested degree.
fn random_bracket_monomial(rng: &mut ChaCha8Rng, degree: usize) -> NcPoly {
    let mut acc = NcPoly::gen(2, rng.random_range(0..2));
    for _ in 1..degree {
        acc = acc.lie_bracket(&NcPoly::gen(2, rng.random_range(0..2)));
    }
    acc
}

fn random_lie_element(rng: &mut ChaCha8Rng, degree: usize) -> NcPoly {
    let mut acc = NcPoly::zero(2);
    for _ in 0..rng.random_range(1..=4) {
        let c = BigInt::from(rng.random_range(-5i64..=5));
        acc = acc.add(&random_bracket_monomial(rng, degree).scale(&c));
    }
    acc
}

#[test]
fn bracket_with_x_preserves_leading_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x11E);
    let x = NcPoly::gen(2, 0);
    let mut tested = 0;
    while tested < 200 {
        let degree = rng.random_range(2..=6);
        let a = random_lie_element(&mut rng, degree);
        if a.is_zero() {
            continue;
        }
        tested += 1;
        assert!(dynkin_is_lie(&a).unwrap(), "degree {degree}");
        // A Lie element of degree >= 2 has no pure-x monomial, so its
        // leading monomial starts a fresh word under left concatenation.
        let lm = a.leading_monomial().unwrap().clone();
        assert_ne!(lm, vec![0u8; degree], "x^{degree} cannot lead a Lie element");
        let b = x.lie_bracket(&a);
        assert!(!b.is_zero(), "degree {degree}");
        let mut expect = vec![0u8];
        expect.extend_from_slice(&lm);
        assert_eq!(b.leading_monomial().unwrap(), &expect);
        // Leading coefficients agree too.
        assert_eq!(b.coeff(&expect), a.coeff(&lm));
    }
}

#[test]
fn dynkin_rejects_and_accepts_known_cases() {
    let x = NcPoly::gen(2, 0);
    let y = NcPoly::gen(2, 1);
    // [[x,y],y] is Lie of degree 3; x*y*x alone is not Lie.
    assert!(dynkin_is_lie(&x.lie_bracket(&y).lie_bracket(&y)).unwrap());
    let m = NcPoly::monomial(2, vec![0, 1, 0], BigInt::from(1));
    assert!(!dynkin_is_lie(&m).unwrap());
}
