//! Ring laws on randomized elements for the three exact rings.

use laurent_cyclotomic::{CycInt, LaurentPoly, ModTp};
use proptest::prelude::*;

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6).prop_map(|terms| {
        let mut f = LaurentPoly::zero();
        for (e, c) in terms {
            f.add_term(e, c.into());
        }
        f
    })
}

fn cyc_strategy(p: u64) -> impl Strategy<Value = CycInt> {
    proptest::collection::vec(-9i64..=9, (p - 1) as usize).prop_map(move |coords| CycInt {
        p,
        coords: coords.into_iter().map(Into::into).collect(),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn laurent_ring_laws(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&a.negate()), LaurentPoly::zero());
    }

    #[test]
    fn laurent_augmentation_is_a_homomorphism(a in laurent_strategy(), b in laurent_strategy()) {
        prop_assert_eq!(a.mul(&b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!(a.add(&b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn modtp_reduction_is_a_ring_homomorphism(a in laurent_strategy(), b in laurent_strategy()) {
        let p = 7;
        prop_assert_eq!(
            ModTp::reduce(p, &a.mul(&b)),
            ModTp::reduce(p, &a).mul(&ModTp::reduce(p, &b))
        );
        prop_assert_eq!(
            ModTp::reduce(p, &a.add(&b)),
            ModTp::reduce(p, &a).add(&ModTp::reduce(p, &b))
        );
        prop_assert_eq!(ModTp::reduce(p, &ModTp::reduce(p, &a).lift()), ModTp::reduce(p, &a));
    }

    #[test]
    fn cyc_ring_laws(a in cyc_strategy(7), b in cyc_strategy(7), c in cyc_strategy(7)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), CycInt::zero(7));
    }

    #[test]
    fn cyc_reduce_lift_roundtrip(a in cyc_strategy(11)) {
        prop_assert_eq!(CycInt::from_laurent(11, &a.lift()), a);
    }

    #[test]
    fn laurent_to_cyc_is_a_homomorphism(a in laurent_strategy(), b in laurent_strategy()) {
        let p = 5;
        prop_assert_eq!(
            CycInt::from_laurent(p, &a.mul(&b)),
            CycInt::from_laurent(p, &a).mul(&CycInt::from_laurent(p, &b))
        );
    }

    #[test]
    fn exact_division_roundtrip(a in laurent_strategy()) {
        let t1 = LaurentPoly::t_power_minus_one(1);
        let prod = a.mul(&t1);
        let q = prod.divide_exact_by_tminus1().unwrap();
        prop_assert_eq!(q, a);
    }
}
