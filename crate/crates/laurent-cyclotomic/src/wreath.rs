//! The restricted wreath product C_inf wr C_inf as pairs t^m a with a in
//! Z[T^±1], where t acts by multiplication by T.

use crate::error::RingError;
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathElement {
    pub shift: i64,
    pub payload: LaurentPoly,
}

impl WreathElement {
    pub fn new(shift: i64, payload: LaurentPoly) -> Self {
        WreathElement { shift, payload }
    }

    pub fn t(m: i64) -> Self {
        WreathElement::new(m, LaurentPoly::zero())
    }

    pub fn identity() -> Self {
        WreathElement::new(0, LaurentPoly::zero())
    }

    /// (m, a)(n, b) = (m + n, a T^n + b)
    pub fn mul(&self, other: &Self) -> Self {
        WreathElement::new(
            self.shift + other.shift,
            self.payload.shift(other.shift).add(&other.payload),
        )
    }

    pub fn inv(&self) -> Self {
        WreathElement::new(-self.shift, self.payload.shift(-self.shift).negate())
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.payload.is_zero()
    }
}

/// [x, y] for x = t^m a, y = t^n b lands in the base and equals
/// a (T^n - 1) - b (T^m - 1).
pub fn wreath_commutator(x: &WreathElement, y: &WreathElement) -> LaurentPoly {
    x.payload
        .mul(&LaurentPoly::t_power_minus_one(y.shift))
        .sub(&y.payload.mul(&LaurentPoly::t_power_minus_one(x.shift)))
}

/// Generators of the ideal cc_G(x) = a (T-1) Z[T^±1] + (T^m - 1) Z[T^±1]
/// for x = t^m a with m != 0.
pub fn cocentraliser_ideal(x: &WreathElement) -> Result<Vec<LaurentPoly>, RingError> {
    if x.shift == 0 {
        return Err(RingError::BadParameter(
            "the ideal description needs a nonzero shift".into(),
        ));
    }
    Ok(vec![
        x.payload.mul(&LaurentPoly::t_power_minus_one(1)),
        LaurentPoly::t_power_minus_one(x.shift),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modtp::ModTp;

    #[test]
    fn group_laws() {
        let x = WreathElement::new(2, LaurentPoly::from_coeffs(-1, &[3, 0, 1]));
        let y = WreathElement::new(-1, LaurentPoly::from_coeffs(0, &[5, -2]));
        let z = WreathElement::new(1, LaurentPoly::from_coeffs(2, &[1]));
        assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        assert!(x.mul(&x.inv()).is_identity());
        assert!(x.inv().mul(&x).is_identity());
    }

    #[test]
    fn commutator_formula_matches_direct_computation() {
        let x = WreathElement::new(3, LaurentPoly::from_coeffs(-2, &[1, 4, 0, -1]));
        let y = WreathElement::new(-2, LaurentPoly::from_coeffs(0, &[2, 7]));
        let direct = x.inv().mul(&y.inv()).mul(&x).mul(&y);
        assert_eq!(direct.shift, 0);
        assert_eq!(direct.payload, wreath_commutator(&x, &y));
    }

    #[test]
    fn commutator_of_t_with_itself_vanishes() {
        let t = WreathElement::t(1);
        assert!(wreath_commutator(&t, &t).is_zero());
    }

    #[test]
    fn commutator_with_tp_reduces_to_tn_minus_1() {
        // [t^p * 1, t^n b] = (T^n - 1) - b (T^p - 1) = T^n - 1 mod T^p - 1.
        let p = 5u64;
        let g = WreathElement::new(p as i64, LaurentPoly::one());
        for n in [-3i64, 1, 2, 7] {
            let w = WreathElement::new(n, LaurentPoly::from_coeffs(-1, &[2, 0, 0, 1]));
            let c = wreath_commutator(&g, &w);
            let expect = ModTp::reduce(p, &LaurentPoly::t_power_minus_one(n));
            assert_eq!(ModTp::reduce(p, &c), expect);
        }
    }

    #[test]
    fn ideal_generators() {
        let g = WreathElement::new(5, LaurentPoly::one());
        let gens = cocentraliser_ideal(&g).unwrap();
        assert_eq!(gens[0], LaurentPoly::t_power_minus_one(1));
        assert_eq!(gens[1], LaurentPoly::t_power_minus_one(5));
        assert!(cocentraliser_ideal(&WreathElement::new(0, LaurentPoly::one())).is_err());
    }
}
