//! Witness-pair certificates for the wreath product C_inf wr C_inf: the
//! cyclotomic one-unit f, its modular inverse fbar, and the ideal identities
//! showing that g = t^p and g(f-1) share their normal closure while never
//! being conjugate. Certificates re-verify by pure arithmetic, no search.

use crate::cyc::{cyc_inverse_unit, is_root_of_unity, CycInt};
use crate::error::RingError;
use crate::laurent::LaurentPoly;
use crate::modtp::ModTp;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use zmat::{Lattice, Mat};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Internal: (1+T)^{p-1} - ((2^{p-1}-1)/p) Phi_p, the polynomial with
/// f(1) = 1 and f(zeta) = (1+zeta)^{p-1}, for any odd prime.
fn one_unit_poly(p: u64) -> LaurentPoly {
    let two_pow = BigInt::from(2).pow((p - 1) as u32) - BigInt::one();
    let (k, rem) = num_integer::Integer::div_rem(&two_pow, &BigInt::from(p));
    assert!(rem.is_zero(), "Fermat little theorem");
    let one_plus_t = LaurentPoly::from_coeffs(0, &[1, 1]).pow((p - 1) as u32);
    one_plus_t.sub(&LaurentPoly::cyclotomic(p).scale(&k))
}

/// The unit polynomial f with f in 1 + (T-1)Z[T] and f(zeta) = (1+zeta)^{p-1}.
pub fn build_f(p: u64) -> Result<LaurentPoly, RingError> {
    if !is_prime(p) || p < 5 {
        return Err(RingError::BadParameter(format!(
            "the construction needs a prime p >= 5, got {p}"
        )));
    }
    let f = one_unit_poly(p);
    if !f.eval_at_one().is_one() {
        return Err(RingError::InternalInvariant("f(1) != 1".into()));
    }
    let nu = CycInt::one(p).add(&CycInt::zeta(p)).pow((p - 1) as u32);
    if CycInt::from_laurent(p, &f) != nu {
        return Err(RingError::InternalInvariant("f(zeta) != (1+zeta)^{p-1}".into()));
    }
    Ok(f)
}

/// Lift of nu^{-1} normalised to fbar(1) = 1 by a Phi_p-multiple, together
/// with the exact identity f * fbar = 1 + q (T^p - 1).
pub fn build_fbar(p: u64, f: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly), RingError> {
    let nu = CycInt::from_laurent(p, f);
    let nu_inv = cyc_inverse_unit(p, &nu)?;
    let g0 = nu_inv.lift();
    // g0(1) = 1 mod p is forced by nu = 1 mod (zeta - 1).
    let (k, rem) =
        num_integer::Integer::div_rem(&(g0.eval_at_one() - BigInt::one()), &BigInt::from(p));
    if !rem.is_zero() {
        return Err(RingError::InternalInvariant(
            "g0(1) is not 1 modulo p".into(),
        ));
    }
    let fbar = g0.sub(&LaurentPoly::cyclotomic(p).scale(&k));
    if !fbar.eval_at_one().is_one() {
        return Err(RingError::InternalInvariant("fbar(1) != 1".into()));
    }
    let q = f
        .mul(&fbar)
        .sub(&LaurentPoly::one())
        .divide_exact(&LaurentPoly::t_power_minus_one(p as i64))?;
    Ok((fbar, q))
}

/// Membership of `target` in the Z[T]/(T^p-1)-ideal generated by `gens`,
/// decided on the lattice spanned by all cyclic shifts T^k g_i; on success
/// the integer combination over those shifts is returned as one Laurent
/// coefficient polynomial per generator.
pub fn ideal_membership_mod_tp(
    p: u64,
    gens: &[LaurentPoly],
    target: &LaurentPoly,
) -> Option<Vec<LaurentPoly>> {
    let n = p as usize;
    let mut rows = Vec::with_capacity(gens.len() * n);
    for g in gens {
        for k in 0..n {
            rows.push(ModTp::reduce(p, &g.shift(k as i64)).coeffs);
        }
    }
    let lattice = Lattice::from_rows(Mat::new(rows, n));
    let coeffs = lattice.express(&ModTp::reduce(p, target).coeffs)?;
    let mut out = Vec::with_capacity(gens.len());
    for (i, _) in gens.iter().enumerate() {
        let mut c = LaurentPoly::zero();
        for k in 0..n {
            c.add_term(k as i64, coeffs[i * n + k].clone());
        }
        out.push(c);
    }
    Some(out)
}

/// Self-contained witness-pair evidence for g = t^p (constant payload 1) and
/// v = f - 1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WreathWitnessCertificate {
    pub p: u64,
    pub f: LaurentPoly,
    pub fbar: LaurentPoly,
    /// f * fbar = 1 + q (T^p - 1), exactly.
    pub q: LaurentPoly,
    /// Residues of f mod (T^p - 1), proving f != T^n for each n in [0, p).
    #[serde(with = "zmat::ser::big_vec")]
    pub f_residues: Vec<BigInt>,
    /// v = (T-1) * v_quotient exhibits v in (T-1) Z[T^±1] = [G,G].
    pub v_quotient: LaurentPoly,
    /// Combination coefficients c with (T-1) = c[0] * f(T-1) + c[1] * (T^p-1)
    /// modulo (T^p - 1), from the lattice computation.
    pub membership_combination: Vec<LaurentPoly>,
    pub nu_is_torsion: bool,
    pub f_is_power_of_t: bool,
}

impl WreathWitnessCertificate {
    /// Re-checks every field by pure arithmetic; no search is involved.
    pub fn verify(&self) -> Result<(), RingError> {
        let p = self.p;
        let fail = |m: &str| Err(RingError::CertificateInvalid(m.into()));
        if !is_prime(p) || p < 5 {
            return fail("p must be a prime >= 5");
        }
        // (a) nu = f(zeta) is not a torsion unit, and f is not a power of T.
        let nu = CycInt::from_laurent(p, &self.f);
        if self.nu_is_torsion || is_root_of_unity(p, &nu) {
            return fail("nu is a root of unity");
        }
        let fr = ModTp::reduce(p, &self.f);
        if fr.coeffs != self.f_residues {
            return fail("stored residue table differs from f mod (T^p-1)");
        }
        if self.f_is_power_of_t
            || (0..p as i64).any(|n| fr == ModTp::reduce(p, &LaurentPoly::monomial(n, BigInt::one())))
        {
            return fail("f is congruent to a power of T");
        }
        // (b) f * fbar = 1 + q (T^p - 1) exactly.
        let lhs = self.f.mul(&self.fbar);
        let rhs = LaurentPoly::one().add(
            &self
                .q
                .mul(&LaurentPoly::t_power_minus_one(p as i64)),
        );
        if lhs != rhs {
            return fail("f * fbar != 1 + q (T^p - 1)");
        }
        // One-unit normalisation.
        if !self.f.eval_at_one().is_one() || !self.fbar.eval_at_one().is_one() {
            return fail("f or fbar is not a one-unit at T = 1");
        }
        // (c) (T-1) = fbar * (f (T-1)) - (q (T-1)) (T^p - 1): both ideals
        // I_g and I_{gv} equal (T-1) Z[T^±1].
        let t1 = LaurentPoly::t_power_minus_one(1);
        let direct = self
            .fbar
            .mul(&self.f.mul(&t1))
            .sub(&self.q.mul(&t1).mul(&LaurentPoly::t_power_minus_one(p as i64)));
        if direct != t1 {
            return fail("the (T-1) combination identity fails");
        }
        // Cross-check: the stored lattice combination realises (T-1) from
        // the generators {f (T-1), T^p - 1} mod (T^p - 1).
        if self.membership_combination.len() != 2 {
            return fail("combination must cover the two generators");
        }
        let gens = [
            self.f.mul(&t1),
            LaurentPoly::t_power_minus_one(p as i64),
        ];
        let mut acc = LaurentPoly::zero();
        for (c, g) in self.membership_combination.iter().zip(&gens) {
            acc = acc.add(&c.mul(g));
        }
        if ModTp::reduce(p, &acc) != ModTp::reduce(p, &t1) {
            return fail("stored combination does not reach (T-1)");
        }
        // (d) v = f - 1 lies in (T-1) Z[T^±1]; g = t^p has nonzero shift.
        let v = self.f.sub(&LaurentPoly::one());
        if self.v_quotient.mul(&t1) != v {
            return fail("v_quotient * (T-1) != f - 1");
        }
        Ok(())
    }
}

/// Builds and verifies the certificate from a given one-unit pair; used both
/// for the constructed f and for externally supplied pairs.
pub fn witness_from_unit_polys(
    p: u64,
    f: LaurentPoly,
    fbar: LaurentPoly,
) -> Result<WreathWitnessCertificate, RingError> {
    if !is_prime(p) || p < 3 {
        return Err(RingError::BadParameter(format!("{p} is not an odd prime")));
    }
    let nu = CycInt::from_laurent(p, &f);
    if is_root_of_unity(p, &nu) {
        return Err(RingError::TorsionUnit("nu = f(zeta)".into()));
    }
    if p < 5 {
        return Err(RingError::BadParameter(
            "the construction needs p >= 5".into(),
        ));
    }
    let q = f
        .mul(&fbar)
        .sub(&LaurentPoly::one())
        .divide_exact(&LaurentPoly::t_power_minus_one(p as i64))?;
    let t1 = LaurentPoly::t_power_minus_one(1);
    let v_quotient = f.sub(&LaurentPoly::one()).divide_exact_by_tminus1()?;
    let membership_combination = ideal_membership_mod_tp(
        p,
        &[f.mul(&t1), LaurentPoly::t_power_minus_one(p as i64)],
        &t1,
    )
    .ok_or_else(|| RingError::InternalInvariant("(T-1) outside the ideal".into()))?;
    let cert = WreathWitnessCertificate {
        p,
        f_residues: ModTp::reduce(p, &f).coeffs.clone(),
        f,
        fbar,
        q,
        v_quotient,
        membership_combination,
        nu_is_torsion: false,
        f_is_power_of_t: false,
    };
    cert.verify()?;
    Ok(cert)
}

/// The full construction for a prime p >= 5; p = 3 fails with a torsion-unit
/// report, everything else is rejected outright.
pub fn verify_wreath_witness(p: u64) -> Result<WreathWitnessCertificate, RingError> {
    if !is_prime(p) || p < 3 {
        return Err(RingError::BadParameter(format!("{p} is not an odd prime")));
    }
    if p == 3 {
        // nu = (1 + zeta_3)^2 = zeta_3: the construction degenerates.
        let f = one_unit_poly(3);
        let nu = CycInt::from_laurent(3, &f);
        if is_root_of_unity(3, &nu) {
            return Err(RingError::TorsionUnit("nu = (1+zeta)^2".into()));
        }
        return Err(RingError::InternalInvariant(
            "p = 3 unexpectedly produced a non-torsion unit".into(),
        ));
    }
    let f = build_f(p)?;
    let (fbar, _q) = build_fbar(p, &f)?;
    witness_from_unit_polys(p, f, fbar)
}

/// A reference p = 5 pair: f0 = 3+2T-T^2-2T^3 and
/// fbar0 = -T+T^2-2T^3, packaged as f = 1 + (T-1) f0, fbar = 1 + (T-1) fbar0.
pub fn reference_p5_pair() -> (LaurentPoly, LaurentPoly) {
    let t1 = LaurentPoly::t_power_minus_one(1);
    let f0 = LaurentPoly::from_coeffs(0, &[3, 2, -1, -2]);
    let fbar0 = LaurentPoly::from_coeffs(0, &[0, -1, 1, -2]);
    (
        LaurentPoly::one().add(&t1.mul(&f0)),
        LaurentPoly::one().add(&t1.mul(&fbar0)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_quotients_are_integral() {
        for p in [5u64, 7, 11, 13] {
            let _ = one_unit_poly(p);
        }
    }

    #[test]
    fn build_f_guards() {
        assert!(build_f(3).is_err());
        assert!(build_f(4).is_err());
        assert!(build_f(2).is_err());
        assert!(build_f(5).is_ok());
    }

    #[test]
    fn f5_matches_reference_in_z_zeta() {
        // f and 1 + (T-1) f0 may differ by a Phi_5-multiple but agree at zeta.
        let f = build_f(5).unwrap();
        let (fp, _) = reference_p5_pair();
        assert_eq!(CycInt::from_laurent(5, &f), CycInt::from_laurent(5, &fp));
        assert!(f.eval_at_one().is_one());
    }

    #[test]
    fn fbar5_matches_reference_in_z_zeta() {
        let f = build_f(5).unwrap();
        let (fbar, _) = build_fbar(5, &f).unwrap();
        let (_, fbp) = reference_p5_pair();
        assert_eq!(
            CycInt::from_laurent(5, &fbar),
            CycInt::from_laurent(5, &fbp)
        );
        assert!(fbar.eval_at_one().is_one());
    }

    #[test]
    fn reference_pair_product_is_one_mod_t5_minus_1() {
        let (f, fbar) = reference_p5_pair();
        let prod = ModTp::reduce(5, &f.mul(&fbar));
        assert_eq!(prod, ModTp::reduce(5, &LaurentPoly::one()));
    }

    #[test]
    fn certificates_for_small_primes() {
        for p in [5u64, 7, 11, 13] {
            let cert = verify_wreath_witness(p).unwrap();
            cert.verify().unwrap();
        }
    }

    #[test]
    fn reference_pair_validates_as_alternative_certificate() {
        let (f, fbar) = reference_p5_pair();
        let cert = witness_from_unit_polys(5, f, fbar).unwrap();
        cert.verify().unwrap();
    }

    #[test]
    fn p3_fails_with_torsion_report() {
        match verify_wreath_witness(3) {
            Err(RingError::TorsionUnit(_)) => {}
            other => panic!("expected a torsion-unit report, got {other:?}"),
        }
    }

    #[test]
    fn tampered_certificate_rejected() {
        let mut cert = verify_wreath_witness(5).unwrap();
        cert.fbar = cert.fbar.add(&LaurentPoly::one());
        assert!(cert.verify().is_err());
    }

    #[test]
    fn membership_examples() {
        // Zero is always a member.
        let w = ideal_membership_mod_tp(
            5,
            &[LaurentPoly::t_power_minus_one(1)],
            &LaurentPoly::zero(),
        );
        assert!(w.is_some());
        // 1 is not in (T-1) mod (T^5-1): augmentation obstruction.
        let w = ideal_membership_mod_tp(
            5,
            &[LaurentPoly::t_power_minus_one(1)],
            &LaurentPoly::one(),
        );
        assert!(w.is_none());
    }

    #[test]
    fn ideal_t1_phi_has_index_p() {
        // (T-1, Phi_p) mod (T^p - 1) has index p in Z^p: the residue field.
        for p in [5u64, 7] {
            let n = p as usize;
            let mut rows = Vec::new();
            for g in [LaurentPoly::t_power_minus_one(1), LaurentPoly::cyclotomic(p)] {
                for k in 0..n {
                    rows.push(ModTp::reduce(p, &g.shift(k as i64)).coeffs);
                }
            }
            let lat = Lattice::from_rows(Mat::new(rows, n));
            assert_eq!(lat.index_in_ambient(), Some(BigInt::from(p)));
        }
    }

    #[test]
    fn json_roundtrip() {
        let cert = verify_wreath_witness(5).unwrap();
        let s = serde_json::to_string(&cert).unwrap();
        let back: WreathWitnessCertificate = serde_json::from_str(&s).unwrap();
        back.verify().unwrap();
        assert_eq!(back.f, cert.f);
    }
}
