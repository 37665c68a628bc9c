//! Exact linear algebra over the integers: Hermite and Smith normal forms,
//! lattice membership with combination witnesses, and cokernel structure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub mod ser;

/// Dense integer matrix, stored as rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: Vec<Vec<BigInt>>,
    pub cols: usize,
}

impl Mat {
    pub fn new(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Mat { rows, cols }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Mat {
            rows: vec![vec![BigInt::zero(); ncols]; nrows],
            cols: ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_i64(rows: &[Vec<i64>], cols: usize) -> Self {
        Mat::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.nrows());
        let mut out = Mat::zero(self.nrows(), other.cols);
        for i in 0..self.nrows() {
            for k in 0..self.cols {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if !other.rows[k][j].is_zero() {
                        let prod = &self.rows[i][k] * &other.rows[k][j];
                        out.rows[i][j] += prod;
                    }
                }
            }
        }
        out
    }
}

/// Row-style Hermite normal form `H` of `a`, together with a unimodular
/// transform `u` such that `u * a = h`.
///
/// `h` is upper echelon with positive pivots and entries above each pivot
/// reduced into `[0, pivot)`. Zero rows sink to the bottom.
pub struct Hnf {
    pub h: Mat,
    pub u: Mat,
    pub rank: usize,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

pub fn hermite_normal_form(a: &Mat) -> Hnf {
    let mut h = a.clone();
    let mut u = Mat::identity(a.nrows());
    let (m, n) = (h.nrows(), h.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        // Clear column c below row r by gcd steps.
        loop {
            let mut k = None;
            for i in (r + 1)..m {
                if !h.rows[i][c].is_zero() {
                    k = Some(i);
                    break;
                }
            }
            let Some(i) = k else { break };
            if h.rows[r][c].is_zero() {
                h.rows.swap(r, i);
                u.rows.swap(r, i);
                continue;
            }
            // Replace rows r,i so that row r holds gcd in column c.
            let (g, x, y) = ext_gcd(&h.rows[r][c], &h.rows[i][c]);
            let p = -(&h.rows[i][c] / &g);
            let q = (&h.rows[r][c] / &g).clone();
            // new_r = x*row_r + y*row_i ; new_i = p*row_r + q*row_i (det = xq - yp = 1)
            for row in [&mut h, &mut u] {
                for j in 0..row.cols {
                    let a0 = row.rows[r][j].clone();
                    let b0 = row.rows[i][j].clone();
                    row.rows[r][j] = &x * &a0 + &y * &b0;
                    row.rows[i][j] = &p * &a0 + &q * &b0;
                }
            }
        }
        if h.rows[r][c].is_zero() {
            continue;
        }
        if h.rows[r][c].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        // Reduce entries above the pivot.
        for i in 0..r {
            let q = h.rows[i][c].div_floor(&h.rows[r][c]);
            if !q.is_zero() {
                row_sub_mul(&mut h, i, r, &q);
                row_sub_mul(&mut u, i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Hnf {
        h,
        u,
        rank: r,
        pivots,
    }
}

fn negate_row(m: &mut Mat, i: usize) {
    for x in &mut m.rows[i] {
        *x = -std::mem::take(x);
    }
}

/// row_i -= q * row_j
fn row_sub_mul(m: &mut Mat, i: usize, j: usize, q: &BigInt) {
    for k in 0..m.cols {
        let t = q * &m.rows[j][k];
        m.rows[i][k] -= t;
    }
}

/// Extended gcd: returns (g, x, y) with g = x*a + y*b, g > 0 (for (a,b) != (0,0)).
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    (e.gcd, e.x, e.y)
}

impl Hnf {
    /// Expresses `v` over the rows of `h`; `None` if `v` is outside the lattice.
    pub fn reduce(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.h.cols);
        let mut v = v.to_vec();
        let mut q = vec![BigInt::zero(); self.h.nrows()];
        for (r, &c) in self.pivots.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            let (quo, rem) = v[c].div_rem(&self.h.rows[r][c]);
            if !rem.is_zero() {
                return None;
            }
            for j in 0..self.h.cols {
                let t = &quo * &self.h.rows[r][j];
                v[j] -= t;
            }
            q[r] = quo;
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(q)
        } else {
            None
        }
    }

    /// Membership test for the row lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).is_some()
    }
}

/// Lattice spanned by the rows of `a`, with membership witnesses in terms of
/// the original generating rows.
pub struct Lattice {
    pub gens: Mat,
    pub hnf: Hnf,
}

impl Lattice {
    pub fn from_rows(a: Mat) -> Self {
        let hnf = hermite_normal_form(&a);
        Lattice { gens: a, hnf }
    }

    pub fn rank(&self) -> usize {
        self.hnf.rank
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.hnf.contains(v)
    }

    /// If `v` lies in the lattice, returns coefficients `c` with
    /// `v = sum_i c_i * gens_i`.
    pub fn express(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let q = self.hnf.reduce(v)?;
        // v = q * H = q * U * gens
        let m = self.gens.nrows();
        let mut c = vec![BigInt::zero(); m];
        for (r, qr) in q.iter().enumerate() {
            if qr.is_zero() {
                continue;
            }
            for j in 0..m {
                let t = qr * &self.hnf.u.rows[r][j];
                c[j] += t;
            }
        }
        Some(c)
    }

    /// Index of the lattice in Z^n (product of HNF pivots); `None` if the
    /// lattice has rank below n.
    pub fn index_in_ambient(&self) -> Option<BigInt> {
        if self.hnf.rank < self.hnf.h.cols {
            return None;
        }
        let mut idx = BigInt::one();
        for (r, &c) in self.hnf.pivots.iter().enumerate() {
            idx *= &self.hnf.h.rows[r][c];
        }
        Some(idx)
    }
}

/// Smith normal form `d` of `a` with unimodular `s`, `t` such that
/// `s * a * t = d`; the diagonal entries satisfy d1 | d2 | ... .
pub struct Snf {
    pub d: Mat,
    pub s: Mat,
    pub t: Mat,
}

pub fn smith_normal_form(a: &Mat) -> Snf {
    let mut d = a.clone();
    let mut s = Mat::identity(a.nrows());
    let mut t = Mat::identity(a.cols);
    let (m, n) = (d.nrows(), d.cols);
    let mut k = 0;
    while k < m.min(n) {
        // Find a nonzero entry at or below/right of (k,k).
        let mut piv = None;
        'search: for i in k..m {
            for j in k..n {
                if !d.rows[i][j].is_zero() {
                    piv = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = piv else { break };
        d.rows.swap(k, pi);
        s.rows.swap(k, pi);
        col_swap(&mut d, k, pj);
        col_swap(&mut t, k, pj);
        loop {
            // Clear column k.
            let mut dirty = false;
            for i in (k + 1)..m {
                if d.rows[i][k].is_zero() {
                    continue;
                }
                if (&d.rows[i][k] % &d.rows[k][k]).is_zero() {
                    let q = &d.rows[i][k] / &d.rows[k][k];
                    row_sub_mul(&mut d, i, k, &q);
                    row_sub_mul(&mut s, i, k, &q);
                } else {
                    let (g, x, y) = ext_gcd(&d.rows[k][k], &d.rows[i][k]);
                    let p = -(&d.rows[i][k] / &g);
                    let q = (&d.rows[k][k] / &g).clone();
                    for mat in [&mut d, &mut s] {
                        for j in 0..mat.cols {
                            let a0 = mat.rows[k][j].clone();
                            let b0 = mat.rows[i][j].clone();
                            mat.rows[k][j] = &x * &a0 + &y * &b0;
                            mat.rows[i][j] = &p * &a0 + &q * &b0;
                        }
                    }
                    dirty = true;
                }
            }
            // Clear row k.
            for j in (k + 1)..n {
                if d.rows[k][j].is_zero() {
                    continue;
                }
                if (&d.rows[k][j] % &d.rows[k][k]).is_zero() {
                    let q = (&d.rows[k][j] / &d.rows[k][k]).clone();
                    col_sub_mul(&mut d, j, k, &q);
                    col_sub_mul(&mut t, j, k, &q);
                } else {
                    let (g, x, y) = ext_gcd(&d.rows[k][k], &d.rows[k][j]);
                    let p = -(&d.rows[k][j] / &g);
                    let q = (&d.rows[k][k] / &g).clone();
                    for mat in [&mut d, &mut t] {
                        for i in 0..mat.nrows() {
                            let a0 = mat.rows[i][k].clone();
                            let b0 = mat.rows[i][j].clone();
                            mat.rows[i][k] = &x * &a0 + &y * &b0;
                            mat.rows[i][j] = &p * &a0 + &q * &b0;
                        }
                    }
                    dirty = true;
                }
            }
            let col_clear = ((k + 1)..m).all(|i| d.rows[i][k].is_zero());
            let row_clear = ((k + 1)..n).all(|j| d.rows[k][j].is_zero());
            if col_clear && row_clear && !dirty {
                break;
            }
        }
        k += 1;
    }
    // Enforce the divisibility chain.
    loop {
        let mut fixed = true;
        for i in 0..m.min(n).saturating_sub(1) {
            let (a0, b0) = (d.rows[i][i].clone(), d.rows[i + 1][i + 1].clone());
            if b0.is_zero() || (&b0 % &a0).is_zero() {
                continue;
            }
            fixed = false;
            // Standard trick: add column i+1 to column i, then re-clear the 2x2 block.
            col_add(&mut d, i, i + 1);
            col_add(&mut t, i, i + 1);
            let (g, x, y) = ext_gcd(&a0, &b0);
            let p = -(&b0 / &g);
            let q = (&a0 / &g).clone();
            for mat in [&mut d, &mut s] {
                for j in 0..mat.cols {
                    let r0 = mat.rows[i][j].clone();
                    let r1 = mat.rows[i + 1][j].clone();
                    mat.rows[i][j] = &x * &r0 + &y * &r1;
                    mat.rows[i + 1][j] = &p * &r0 + &q * &r1;
                }
            }
            // Column i now holds (g, 0)^T on the diagonal block; clear column i+1 residue.
            let q2 = (&d.rows[i][i + 1] / &d.rows[i][i]).clone();
            col_sub_mul(&mut d, i + 1, i, &q2);
            col_sub_mul(&mut t, i + 1, i, &q2);
        }
        if fixed {
            break;
        }
    }
    for i in 0..m.min(n) {
        if d.rows[i][i].is_negative() {
            negate_row(&mut d, i);
            negate_row(&mut s, i);
        }
    }
    Snf { d, s, t }
}

fn col_swap(m: &mut Mat, i: usize, j: usize) {
    for r in &mut m.rows {
        r.swap(i, j);
    }
}

/// col_i -= q * col_j
fn col_sub_mul(m: &mut Mat, i: usize, j: usize, q: &BigInt) {
    for r in &mut m.rows {
        let t = q * &r[j];
        r[i] -= t;
    }
}

fn col_add(m: &mut Mat, i: usize, j: usize) {
    for r in &mut m.rows {
        let t = r[j].clone();
        r[i] += t;
    }
}

impl Snf {
    /// Elementary divisors (nonzero diagonal entries).
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.d.nrows().min(self.d.cols);
        (0..n)
            .map(|i| self.d.rows[i][i].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    /// True when every elementary divisor is 1, i.e. the cokernel is free.
    pub fn cokernel_is_free(&self) -> bool {
        self.divisors().iter().all(|d| d.is_one())
    }
}

/// Structure of Z^n / rowspan(a): invariant factors > 1 plus the free rank,
/// and a map taking a vector to its coordinates in the decomposition.
pub struct Cokernel {
    snf: Snf,
    n: usize,
}

impl Cokernel {
    pub fn new(a: &Mat) -> Self {
        let snf = smith_normal_form(a);
        Cokernel { snf, n: a.cols }
    }

    /// Invariant factors (diagonal entries, zero-padded to n): entry i is the
    /// order of the i-th cyclic factor (0 meaning infinite).
    pub fn factors(&self) -> Vec<BigInt> {
        let mut f = Vec::with_capacity(self.n);
        let r = self.snf.d.nrows().min(self.n);
        for i in 0..self.n {
            if i < r {
                f.push(self.snf.d.rows[i][i].clone());
            } else {
                f.push(BigInt::zero());
            }
        }
        f
    }

    pub fn free_rank(&self) -> usize {
        self.factors().iter().filter(|x| x.is_zero()).count()
    }

    /// Coordinates of `v + L` in the cyclic decomposition: coordinate i is
    /// reduced mod the i-th invariant factor when finite.
    pub fn coords(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.n);
        // With S*A*T = D the cokernel map is x -> x*T, coordinate-wise mod d_i.
        let mut out = Vec::with_capacity(self.n);
        for j in 0..self.n {
            let mut c = BigInt::zero();
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() {
                    c += vi * &self.snf.t.rows[i][j];
                }
            }
            let f = if j < self.snf.d.nrows().min(self.n) {
                self.snf.d.rows[j][j].clone()
            } else {
                BigInt::zero()
            };
            if !f.is_zero() {
                c = c.mod_floor(&f);
            }
            out.push(c);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hnf_small() {
        let a = Mat::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]], 3);
        let hnf = hermite_normal_form(&a);
        // U * A = H must hold.
        assert_eq!(hnf.u.mul(&a), hnf.h);
        assert_eq!(hnf.rank, 3);
        // Product of HNF pivots = |det A| = 624 (cofactor expansion by hand).
        let det: BigInt = (0..3).map(|i| hnf.h.rows[i][hnf.pivots[i]].clone()).product();
        assert_eq!(det, bi(624));
    }

    #[test]
    fn lattice_membership_witness() {
        let a = Mat::from_i64(&[vec![2, 0], vec![0, 3]], 2);
        let lat = Lattice::from_rows(a);
        assert!(lat.contains(&[bi(4), bi(3)]));
        assert!(!lat.contains(&[bi(1), bi(0)]));
        let c = lat.express(&[bi(4), bi(-6)]).unwrap();
        assert_eq!(c, vec![bi(2), bi(-2)]);
    }

    #[test]
    fn snf_divisor_chain() {
        let a = Mat::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
        let snf = smith_normal_form(&a);
        assert_eq!(snf.s.mul(&a).mul(&snf.t), snf.d);
        let div = snf.divisors();
        for w in div.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        // |det| preserved: cofactor expansion by hand gives -144.
        let p: BigInt = div.iter().product();
        assert_eq!(p, bi(144));
    }

    #[test]
    fn cokernel_coords() {
        // Z^2 / <(2,0),(0,1)> = Z/2
        let a = Mat::from_i64(&[vec![2, 0], vec![0, 1]], 2);
        let ck = Cokernel::new(&a);
        let f = ck.factors();
        assert_eq!(f, vec![bi(1), bi(2)]);
        let x = ck.coords(&[bi(1), bi(0)]);
        let y = ck.coords(&[bi(3), bi(5)]);
        assert_eq!(x, y);
        let z = ck.coords(&[bi(2), bi(5)]);
        assert_ne!(x, z);
    }

    #[test]
    fn cokernel_free_part() {
        // Z^3 / <(1,0,0)+(0,2,0)> : factors 1 and free rank 2? rows: single row (1,2,0)
        let a = Mat::from_i64(&[vec![1, 2, 0]], 3);
        let ck = Cokernel::new(&a);
        assert_eq!(ck.free_rank(), 2);
        // (1,2,0) must map to zero.
        let c = ck.coords(&[bi(1), bi(2), bi(0)]);
        assert!(c.iter().all(|x| x.is_zero()));
        // (0,0,1) must not.
        let c = ck.coords(&[bi(0), bi(0), bi(1)]);
        assert!(!c.iter().all(|x| x.is_zero()));
    }
}
