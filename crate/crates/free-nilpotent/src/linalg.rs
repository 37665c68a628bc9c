//! Small exact rational solver for the coordinate-extraction systems.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Solves a (possibly overdetermined but consistent) system a * x = b exactly
/// over Q. Returns `None` when the system is inconsistent or underdetermined
/// in a pivot column that matters.
pub fn solve_exact(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, rhs)| {
            r.iter()
                .chain(std::iter::once(rhs))
                .map(|x| BigRational::from(x.clone()))
                .collect()
        })
        .collect();
    let mut pivot_row_of_col = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for j in c..=cols {
            let v = &m[r][j] * &inv;
            m[r][j] = v;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let v = &m[i][j] - &f * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivot_row_of_col[c] = Some(r);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Inconsistent if a zero row has nonzero rhs.
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for c in 0..cols {
        match pivot_row_of_col[c] {
            Some(pr) => x[c] = m[pr][cols].clone(),
            // Free column: only acceptable if it never appears with the
            // given right-hand side; taking 0 and re-checking below.
            None => x[c] = BigRational::zero(),
        }
    }
    // Verify (covers free columns and any elimination slip).
    for (row, rhs) in a.iter().zip(b) {
        let mut acc = BigRational::zero();
        for (aij, xj) in row.iter().zip(&x) {
            if !aij.is_zero() {
                acc += BigRational::from(aij.clone()) * xj;
            }
        }
        if acc != BigRational::from(rhs.clone()) {
            return None;
        }
    }
    Some(x)
}

/// Rank over Q of an integer matrix.
pub fn rank_exact(a: &[Vec<BigInt>]) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].recip();
        for j in c..cols {
            let v = &m[rank][j] * &inv;
            m[rank][j] = v;
        }
        for i in 0..rows {
            if i != rank && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..cols {
                    let v = &m[i][j] - &f * &m[rank][j];
                    m[i][j] = v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn solves_square_system() {
        let a = vec![
            vec![BigInt::from(2), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(-1)],
        ];
        let b = vec![BigInt::from(4), BigInt::from(-1)];
        let x = solve_exact(&a, &b).unwrap();
        assert_eq!(x[0], BigRational::one());
        assert_eq!(x[1], BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn rejects_inconsistent() {
        let a = vec![vec![BigInt::from(1)], vec![BigInt::from(1)]];
        let b = vec![BigInt::from(1), BigInt::from(2)];
        assert!(solve_exact(&a, &b).is_none());
    }
}
