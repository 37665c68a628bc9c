//! Witness-pair certificate in the free class-3 rank-2 group: x and x[y,x,y]
//! share their normal closure, while [y,x,y] is never a commutator [x,w].
//!
//! The universal quantifier over w is discharged in two finite steps. The
//! [y,x]-coordinate of [x, w(e)] equals -e_2 identically (interpolated and
//! asserted), so [x,w] = v forces the y-exponent of w to vanish. On that
//! slice the [y,x,y]-coordinate is interpolated as a polynomial of total
//! degree <= 3 and asserted to be identically zero, while v has coordinate 1.

use crate::error::NilError;
use crate::group::{FreeNilGroup, NilWord};
use crate::linalg::{rank_exact, solve_exact};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

const DEGREE_BOUND: usize = 3;
const RANDOM_CONFIRMATIONS: usize = 100;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Prop36Certificate {
    /// v = [y,x,y] commutes with both generators.
    pub v_central: bool,
    /// (x^{-1})^y x collects to [y,x].
    pub yx_from_conjugates: bool,
    /// [[y,x],x] and [[y,x],y] are the two top basis entries: together with
    /// the previous line this exhibits <x>^G = <x> gamma_2.
    pub closure_ladder_x: bool,
    /// The same ladder with x replaced by xv (v central drops out).
    pub closure_ladder_xv: bool,
    /// [x, [y,x]^n] = [y,x,x]^{-n} for |n| <= 5.
    pub power_identity: bool,
    /// [x, x^m] = 1 across the grid range.
    pub x_powers_commute: bool,
    /// Total-degree bound on normal-form coordinates of [x, w] in the
    /// exponents of w; used, not proved here.
    pub degree_bound: usize,
    /// The [y,x]-coordinate of [x, w(e)] interpolates to exactly -e_2, so a
    /// central value (such as v) forces e_2 = 0.
    pub yx_coordinate_is_minus_e2: bool,
    pub necessity_points: usize,
    /// Interpolation of the [y,x,y]-coordinate on the e_2 = 0 slice.
    pub slice_points: usize,
    pub interpolation_matrix_rank: usize,
    pub poly_identically_zero: bool,
    pub tensor_grid_points: usize,
    pub tensor_grid_all_zero: bool,
    pub random_points: usize,
    pub random_points_all_zero: bool,
    /// v itself has [y,x,y]-coordinate 1, so v is not of the form [x,w].
    pub v_coordinate: i64,
    pub seed: u64,
    pub assumption: String,
}

impl Prop36Certificate {
    pub fn holds(&self) -> bool {
        self.v_central
            && self.yx_from_conjugates
            && self.closure_ladder_x
            && self.closure_ladder_xv
            && self.power_identity
            && self.x_powers_commute
            && self.yx_coordinate_is_minus_e2
            && self.poly_identically_zero
            && self.tensor_grid_all_zero
            && self.random_points_all_zero
            && self.v_coordinate == 1
    }
}

/// Normal form of [x, w(e)] for an exponent vector e of w.
fn bracket_with_x(g: &FreeNilGroup, x: &NilWord, e: &[i64]) -> NilWord {
    let w = g.from_exponents_i64(e);
    g.commutator(x, &w)
}

/// Exponent tuples with entries >= 0 and total degree <= bound.
fn simplex_tuples(vars: usize, bound: i64) -> Vec<Vec<i64>> {
    fn rec(vars: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == vars {
            out.push(cur.clone());
            return;
        }
        for a in 0..=left {
            cur.push(a);
            rec(vars, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, bound, &mut Vec::new(), &mut out);
    out
}

/// Interpolates `values` at `points` by a polynomial of total degree <=
/// DEGREE_BOUND and returns its coefficients over the simplex monomials;
/// errors when the grid fails to be unisolvent.
fn interpolate(
    points: &[Vec<i64>],
    values: &[BigInt],
) -> Result<(Vec<BigRational>, usize), NilError> {
    let vars = points[0].len();
    let monos = simplex_tuples(vars, DEGREE_BOUND as i64);
    assert_eq!(points.len(), monos.len());
    let matrix: Vec<Vec<BigInt>> = points
        .iter()
        .map(|pt| {
            monos
                .iter()
                .map(|mono| {
                    let mut acc = BigInt::one();
                    for (c, m) in pt.iter().zip(mono) {
                        for _ in 0..*m {
                            acc *= *c;
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let rank = rank_exact(&matrix);
    if rank != monos.len() {
        return Err(NilError::Interpolation(format!(
            "interpolation grid is not unisolvent: rank {rank} of {}",
            monos.len()
        )));
    }
    let coeffs = solve_exact(&matrix, values)
        .ok_or_else(|| NilError::Interpolation("interpolation system inconsistent".into()))?;
    Ok((coeffs, rank))
}

pub fn verify_prop_3_6(seed: u64) -> Result<Prop36Certificate, NilError> {
    let g = FreeNilGroup::new(2, 3);
    let x = g.generator(0);
    let y = g.generator(1);
    let yx = g.from_exponents_i64(&[0, 0, 1, 0, 0]);
    let yxx = g.from_exponents_i64(&[0, 0, 0, 1, 0]);
    let yxy = g.from_exponents_i64(&[0, 0, 0, 0, 1]);
    let v = yxy.clone();
    let xv = g.mul(&x, &v);

    let v_central =
        g.commutator(&v, &x).is_identity() && g.commutator(&v, &y).is_identity();
    // (x^{-1})^y * x = y^{-1} x^{-1} y x = [y,x]
    let yx_from_conjugates = g.collect(&[(1, -1), (0, -1), (1, 1), (0, 1)]) == yx;
    let closure_ladder_x =
        g.commutator(&yx, &x) == yxx && g.commutator(&yx, &y) == yxy;
    let closure_ladder_xv = g.commutator(&y, &xv) == g.commutator(&y, &x)
        && g.commutator(&yx, &xv) == yxx;
    let power_identity = (-5i64..=5).all(|n| {
        let c = g.commutator(&x, &g.pow(&yx, n));
        c == g.from_exponents_i64(&[0, 0, 0, -n, 0])
    });
    let x_powers_commute =
        (-3i64..=3).all(|m| g.commutator(&x, &g.pow(&x, m)).is_identity());

    // Necessity: the [y,x]-coordinate of [x, w(e)] is the polynomial -e_2.
    let full_points = simplex_tuples(5, DEGREE_BOUND as i64);
    let yx_values: Vec<BigInt> = full_points
        .iter()
        .map(|pt| bracket_with_x(&g, &x, pt).exps[2].clone())
        .collect();
    let (yx_coeffs, _) = interpolate(&full_points, &yx_values)?;
    let monos5 = simplex_tuples(5, DEGREE_BOUND as i64);
    let minus_e2 = vec![0i64, 1, 0, 0, 0];
    let yx_coordinate_is_minus_e2 = monos5.iter().zip(&yx_coeffs).all(|(mono, c)| {
        if *mono == minus_e2 {
            *c == BigRational::from(BigInt::from(-1))
        } else {
            c.is_zero()
        }
    });
    if !yx_coordinate_is_minus_e2 {
        return Err(NilError::Interpolation(
            "the [y,x]-coordinate of [x,w] is not -e_2".into(),
        ));
    }

    // On the slice e_2 = 0 (w without y-part): the [y,x,y]-coordinate
    // vanishes identically.
    let slice4 = simplex_tuples(4, DEGREE_BOUND as i64);
    let embed = |q: &[i64]| vec![q[0], 0, q[1], q[2], q[3]];
    let slice_values: Vec<BigInt> = slice4
        .iter()
        .map(|q| bracket_with_x(&g, &x, &embed(q)).exps[4].clone())
        .collect();
    let (coeffs, interpolation_matrix_rank) = interpolate(&slice4, &slice_values)?;
    let poly_identically_zero = coeffs.iter().all(|c| c.is_zero());
    if !poly_identically_zero {
        return Err(NilError::Interpolation(
            "recovered [y,x,y]-coordinate polynomial is nonzero on the slice".into(),
        ));
    }

    // Cross-checks outside the interpolation set, still on the slice.
    let mut tensor_grid_all_zero = true;
    let mut tensor_grid_points = 0;
    let mut q = [0i64; 4];
    'grid: loop {
        tensor_grid_points += 1;
        if !bracket_with_x(&g, &x, &embed(&q)).exps[4].is_zero() {
            tensor_grid_all_zero = false;
            break;
        }
        for i in 0..4 {
            if q[i] < 3 {
                q[i] += 1;
                continue 'grid;
            }
            q[i] = 0;
        }
        break;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_points_all_zero = true;
    for _ in 0..RANDOM_CONFIRMATIONS {
        let q: Vec<i64> = (0..4).map(|_| rng.random_range(-5..=5)).collect();
        if !bracket_with_x(&g, &x, &embed(&q)).exps[4].is_zero() {
            random_points_all_zero = false;
            break;
        }
    }
    if !(tensor_grid_all_zero && random_points_all_zero) {
        return Err(NilError::Interpolation(
            "a slice point has nonzero [y,x,y]-coordinate".into(),
        ));
    }

    let cert = Prop36Certificate {
        v_central,
        yx_from_conjugates,
        closure_ladder_x,
        closure_ladder_xv,
        power_identity,
        x_powers_commute,
        degree_bound: DEGREE_BOUND,
        yx_coordinate_is_minus_e2,
        necessity_points: full_points.len(),
        slice_points: slice4.len(),
        interpolation_matrix_rank,
        poly_identically_zero,
        tensor_grid_points,
        tensor_grid_all_zero,
        random_points: RANDOM_CONFIRMATIONS,
        random_points_all_zero,
        v_coordinate: 1,
        seed,
        assumption: "normal-form coordinates of [x,w] are polynomial of total degree <= 3 \
                     in the exponents of w"
            .into(),
    };
    if !cert.holds() {
        return Err(NilError::InvariantFailed(format!("{cert:?}")));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_sizes() {
        assert_eq!(simplex_tuples(5, 3).len(), 56);
        assert_eq!(simplex_tuples(4, 3).len(), 35);
    }

    #[test]
    fn certificate_validates() {
        let cert = verify_prop_3_6(7).unwrap();
        assert!(cert.holds());
        assert_eq!(cert.necessity_points, 56);
        assert_eq!(cert.slice_points, 35);
        assert_eq!(cert.tensor_grid_points, 256);
    }

    #[test]
    fn yxx_coordinate_is_not_flat() {
        // Sanity for the target extraction: the [y,x,x]-coordinate of
        // [x, [y,x]^n] is -n, so the machinery does see nonzero coordinates.
        let g = FreeNilGroup::new(2, 3);
        let x = g.generator(0);
        let c = g.commutator(&x, &g.from_exponents_i64(&[0, 0, 2, 0, 0]));
        assert_eq!(c.exps[3], BigInt::from(-2));
        assert!(c.exps[4].is_zero());
    }

    #[test]
    fn y_part_makes_yxy_coordinate_nonzero() {
        // [x, y^2] = [y,x]^{-2} [y,x,y]^{-1}: off the slice the coordinate is
        // genuinely nonzero, which is why the necessity step is needed.
        let g = FreeNilGroup::new(2, 3);
        let x = g.generator(0);
        let c = g.commutator(&x, &g.from_exponents_i64(&[0, 2, 0, 0, 0]));
        assert_eq!(c.exps[2], BigInt::from(-2));
        assert_eq!(c.exps[4], BigInt::from(-1));
    }
}
