//! Quotients of free class-<=3 nilpotent groups by relator sets inside the
//! derived subgroup, presented through graded-section relation lattices, and
//! the explicit Hirsch-length-9 construction.

use crate::error::NilError;
use crate::group::{FreeNilGroup, NilWord};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use zmat::{Cokernel, Lattice, Mat};

/// Quotient of a free nilpotent group (class <= 3) by the normal closure of
/// relators in gamma_2. Elements are lattice-reduced normal forms of the
/// ambient free group.
pub struct PcpGroup {
    pub ctx: Arc<FreeNilGroup>,
    /// Relation lattice over the weight->=2 coordinates.
    lattice: Lattice,
    /// Per-section relation lattices L_k (k = 2..=class) in the weight-k block.
    pub section_lattices: Vec<Lattice>,
    pub hirsch_length: usize,
    pub torsion_free: bool,
    /// Relative order per basis position: None = infinite.
    pub relative_orders: Vec<Option<BigInt>>,
}

/// Normal closure lattice of relators inside gamma_2, for class <= 3: spanned
/// by the relator vectors and the commutators [relator, generator].
pub fn quotient_by_relators(
    ctx: Arc<FreeNilGroup>,
    relators: &[NilWord],
) -> Result<PcpGroup, NilError> {
    let class = ctx.class();
    let rank = ctx.rank();
    if class > 3 {
        return Err(NilError::UnsupportedClass(class));
    }
    let dim = ctx.dim();
    let cols = dim - rank;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for r in relators {
        if r.exps[..rank].iter().any(|e| !e.is_zero()) {
            return Err(NilError::RelatorOutsideGamma2(format!("{:?}", r.exps)));
        }
        rows.push(r.exps[rank..].to_vec());
        if class == 3 {
            for g in 0..rank {
                let c = ctx.commutator(r, &ctx.generator(g));
                debug_assert!(c.exps[..rank].iter().all(|e| e.is_zero()));
                rows.push(c.exps[rank..].to_vec());
            }
        }
    }
    if rows.is_empty() {
        rows.push(vec![BigInt::zero(); cols]);
    }
    let lattice = Lattice::from_rows(Mat::new(rows, cols));

    // Per-section lattices from the echelon structure: a HNF row with pivot in
    // the weight-k block has zero entries in all earlier blocks.
    let mut section_lattices = Vec::new();
    let mut hirsch = rank;
    let mut torsion_free = true;
    let mut relative_orders: Vec<Option<BigInt>> = vec![None; dim];
    for k in 2..=class {
        let block = ctx.basis.positions_of_weight(k);
        let (lo, hi) = (block.start - rank, block.end - rank);
        let mut krows: Vec<Vec<BigInt>> = Vec::new();
        for (r, &pc) in lattice.hnf.pivots.iter().enumerate() {
            if pc >= lo && pc < hi {
                krows.push(lattice.hnf.h.rows[r][lo..hi].to_vec());
            }
        }
        if krows.is_empty() {
            krows.push(vec![BigInt::zero(); hi - lo]);
        }
        let lk = Lattice::from_rows(Mat::new(krows, hi - lo));
        hirsch += (hi - lo) - lk.rank();
        let snf = zmat::smith_normal_form(&lk.gens);
        if !snf.cokernel_is_free() {
            torsion_free = false;
        }
        for (r, &pc) in lk.hnf.pivots.iter().enumerate() {
            relative_orders[rank + lo + pc] = Some(lk.hnf.h.rows[r][pc].clone());
        }
        section_lattices.push(lk);
    }
    Ok(PcpGroup {
        ctx,
        lattice,
        section_lattices,
        hirsch_length: hirsch,
        torsion_free,
        relative_orders,
    })
}

impl PcpGroup {
    pub fn rank(&self) -> usize {
        self.ctx.rank()
    }

    pub fn class(&self) -> usize {
        self.ctx.class()
    }

    /// Canonical coset representative: the weight->=2 part is reduced into
    /// the fundamental domain of the relation lattice.
    pub fn reduce(&self, w: &NilWord) -> NilWord {
        let rank = self.rank();
        let mut v = w.exps[rank..].to_vec();
        let h = &self.lattice.hnf;
        for (r, &c) in h.pivots.iter().enumerate() {
            if v[c].is_zero() {
                continue;
            }
            let q = num_integer::Integer::div_floor(&v[c], &h.h.rows[r][c]);
            if q.is_zero() {
                continue;
            }
            for j in 0..v.len() {
                let t = &q * &h.h.rows[r][j];
                v[j] -= t;
            }
        }
        let mut exps = w.exps[..rank].to_vec();
        exps.extend(v);
        self.ctx.from_exponents(exps)
    }

    pub fn mul(&self, a: &NilWord, b: &NilWord) -> NilWord {
        self.reduce(&self.ctx.mul(a, b))
    }

    pub fn inv(&self, a: &NilWord) -> NilWord {
        self.reduce(&self.ctx.inv(a))
    }

    pub fn commutator(&self, a: &NilWord, b: &NilWord) -> NilWord {
        self.reduce(&self.ctx.commutator(a, b))
    }

    pub fn is_trivial_in_quotient(&self, w: &NilWord) -> bool {
        self.reduce(w).is_identity()
    }

    /// Free ranks of the graded sections (weight 1..=class).
    pub fn section_ranks(&self) -> Vec<usize> {
        let mut out = vec![self.rank()];
        for (k, lk) in self.section_lattices.iter().enumerate() {
            let block = self.ctx.basis.positions_of_weight(k + 2);
            out.push(block.len() - lk.rank());
        }
        out
    }

    /// Randomized associativity and inverse checks on reduced forms.
    pub fn check_consistency(&self, trials: usize, seed: u64) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = self.ctx.dim();
        let random_word = |rng: &mut ChaCha8Rng| {
            let exps: Vec<BigInt> = (0..dim)
                .map(|_| BigInt::from(rng.random_range(-2i64..=2)))
                .collect();
            self.reduce(&self.ctx.from_exponents(exps))
        };
        for _ in 0..trials {
            let (u, v, w) = (
                random_word(&mut rng),
                random_word(&mut rng),
                random_word(&mut rng),
            );
            if self.mul(&self.mul(&u, &v), &w) != self.mul(&u, &self.mul(&v, &w)) {
                return false;
            }
            if !self.mul(&u, &self.inv(&u)).is_identity() {
                return false;
            }
        }
        true
    }

    /// HNF rows of the per-section relation matrices.
    pub fn section_matrices(&self) -> Vec<Vec<Vec<BigInt>>> {
        self.section_lattices
            .iter()
            .map(|lk| {
                lk.hnf.h.rows[..lk.rank()]
                    .iter()
                    .map(|r| r.clone())
                    .collect()
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
pub struct PcpGroupJson {
    pub rank: usize,
    pub class: usize,
    pub basis: Vec<String>,
    #[serde(with = "zmat::ser::big_mat")]
    pub relation_lattice: Vec<Vec<BigInt>>,
    pub section_matrices: Vec<Vec<Vec<String>>>,
    pub hirsch_length: usize,
    pub torsion_free: bool,
    pub relative_orders: Vec<Option<String>>,
}

impl PcpGroup {
    pub fn to_json(&self) -> PcpGroupJson {
        PcpGroupJson {
            rank: self.rank(),
            class: self.class(),
            basis: (0..self.ctx.dim())
                .map(|i| self.ctx.basis.bracket_string(i))
                .collect(),
            relation_lattice: self.lattice.hnf.h.rows[..self.lattice.rank()].to_vec(),
            section_matrices: self
                .section_matrices()
                .iter()
                .map(|m| {
                    m.iter()
                        .map(|r| r.iter().map(|x| x.to_string()).collect())
                        .collect()
                })
                .collect(),
            hirsch_length: self.hirsch_length,
            torsion_free: self.torsion_free,
            relative_orders: self
                .relative_orders
                .iter()
                .map(|o| o.as_ref().map(|d| d.to_string()))
                .collect(),
        }
    }
}

/// Evidence produced while building the Hirsch-length-9 group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct G9Certificate {
    pub hirsch_length: usize,
    pub torsion_free: bool,
    pub section_ranks: Vec<usize>,
    pub pairing_rows: Vec<String>,
    pub pairing_cols: Vec<String>,
    pub pairing_matrix: Vec<Vec<i64>>,
    pub pairing_det: i64,
    pub gamma3_generator: String,
    pub gamma3_generator_coordinate: i64,
    pub center_equals_gamma3: bool,
    pub wyx_trivial: bool,
    pub witt_consequences_trivial: bool,
    pub consistency_trials: usize,
    pub consistency_ok: bool,
}

fn det4(m: &[Vec<i64>]) -> i64 {
    fn det_rec(m: &[Vec<i64>], cols: &mut Vec<usize>, row: usize) -> i64 {
        if cols.is_empty() {
            return 1;
        }
        let mut acc = 0;
        for k in 0..cols.len() {
            let c = cols.remove(k);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            acc += sign * m[row][c] * det_rec(m, cols, row + 1);
            cols.insert(k, c);
        }
        acc
    }
    det_rec(m, &mut (0..m.len()).collect(), 0)
}

/// Builds the 4-generated, torsion-free, class-3 quotient of Hirsch length 9
/// and verifies its structural invariants; any failure names the invariant.
pub fn build_g9() -> Result<(PcpGroup, G9Certificate), NilError> {
    let ctx = Arc::new(FreeNilGroup::new(4, 3));
    let (x, y, z, w) = (0usize, 1usize, 2usize, 3usize);
    let c2 = |a: usize, b: usize| ctx.commutator(&ctx.generator(a), &ctx.generator(b));
    let c3 = |a: usize, b: usize, c: usize| ctx.left_normed(&[a, b, c]);
    let pair = |a: NilWord, b: NilWord| ctx.mul(&a, &ctx.inv(&b));

    let mut relators = vec![c2(z, y), c2(w, z)];
    relators.extend([
        c3(y, x, x),
        c3(y, x, y),
        pair(c3(y, x, z), c3(z, x, y)),
        c3(y, x, w),
        c3(z, x, x),
        c3(z, x, z),
        c3(z, x, w),
        pair(c3(w, x, x), c3(z, x, y)),
        c3(w, x, y),
        c3(w, x, z),
        c3(w, x, w),
        c3(w, y, y),
        c3(w, y, z),
        pair(c3(w, y, w), c3(z, x, y)),
    ]);
    assert_eq!(relators.len(), 16);

    let q = quotient_by_relators(ctx.clone(), &relators)?;
    let fail = |name: &str| Err(NilError::InvariantFailed(name.into()));

    if q.hirsch_length != 9 {
        return fail("hirsch length 9");
    }
    if !q.torsion_free {
        return fail("torsion-free");
    }
    let section_ranks = q.section_ranks();
    if section_ranks != vec![4, 4, 1] {
        return fail("section ranks 4, 4, 1");
    }

    // Section-2 data: surviving basis classes and the coordinate map.
    let w2 = ctx.basis.positions_of_weight(2);
    let ck2 = Cokernel::new(&q.section_lattices[0].gens);
    let free2: Vec<usize> = ck2
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_zero())
        .map(|(i, _)| i)
        .collect();
    if free2.len() != 4 {
        return fail("section 2 free rank 4");
    }
    let coords2 = |v: &NilWord| -> Vec<BigInt> {
        let raw = ck2.coords(&v.exps[w2.start..w2.end]);
        free2.iter().map(|&i| raw[i].clone()).collect()
    };

    // Section-3 data.
    let w3 = ctx.basis.positions_of_weight(3);
    let ck3 = Cokernel::new(&q.section_lattices[1].gens);
    let free3: Vec<usize> = ck3
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, f)| f.is_zero())
        .map(|(i, _)| i)
        .collect();
    if free3.len() != 1 {
        return fail("section 3 free rank 1");
    }
    let coord3 = |v: &[BigInt]| ck3.coords(v)[free3[0]].clone();

    // gamma_3 is generated by the class of [z,x,y].
    let zxy = ctx
        .basis
        .left_normed_position(&[z, x, y])
        .expect("[[z,x],y] is basic");
    let mut e_zxy = vec![BigInt::zero(); w3.len()];
    e_zxy[zxy - w3.start] = BigInt::one();
    let gen_sign = coord3(&e_zxy);
    if !gen_sign.abs().is_one() {
        return fail("gamma_3 generated by the class of [z,x,y]");
    }

    // Pairing between gamma_2/Z (basis [y,x],[z,x],[w,x],[w,y]) and G/gamma_2.
    let row_positions = [
        ctx.basis.left_normed_position(&[y, x]).unwrap(),
        ctx.basis.left_normed_position(&[z, x]).unwrap(),
        ctx.basis.left_normed_position(&[w, x]).unwrap(),
        ctx.basis.left_normed_position(&[w, y]).unwrap(),
    ];
    let mut beta = vec![vec![0i64; 4]; 4];
    for (i, &bp) in row_positions.iter().enumerate() {
        let mut exps = vec![BigInt::zero(); ctx.dim()];
        exps[bp] = BigInt::one();
        let bw = ctx.from_exponents(exps);
        for j in 0..4 {
            let c = ctx.commutator(&bw, &ctx.generator(j));
            debug_assert!(c.exps[..w3.start].iter().all(|e| e.is_zero()));
            let val = coord3(&c.exps[w3.start..w3.end]) * &gen_sign;
            beta[i][j] = i64::try_from(&val).expect("pairing entry fits i64");
        }
    }
    let expected = [[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]];
    for i in 0..4 {
        for j in 0..4 {
            if beta[i][j] != expected[i][j] {
                return fail("pairing matrix matches the commutator table");
            }
        }
    }
    let det = det4(&beta);
    if det.abs() != 1 {
        return fail("pairing determinant +-1");
    }

    // Center = gamma_3: no section-1 class pairs trivially with everything
    // (the 4x16 matrix of [x_i, x_j] section-2 coordinates has full rank),
    // and beta is nondegenerate; gamma_3 is central since the class is 3.
    let mut b1_rows = Vec::new();
    for i in 0..4 {
        let mut row = Vec::new();
        for j in 0..4 {
            let c = ctx.commutator(&ctx.generator(i), &ctx.generator(j));
            row.extend(coords2(&c));
        }
        b1_rows.push(row);
    }
    let b1 = Lattice::from_rows(Mat::new(b1_rows, 16));
    let center_equals_gamma3 = b1.rank() == 4 && det.abs() == 1;
    if !center_equals_gamma3 {
        return fail("center equals gamma_3");
    }

    // [w,y,x] = 1 in the quotient (a Jacobi-identity consequence of the degree-2 relators).
    let wyx_trivial = q.is_trivial_in_quotient(&c3(w, y, x));
    if !wyx_trivial {
        return fail("[w,y,x] trivial in the quotient");
    }
    // [z,y,x] = [w,z,x] = [w,z,y] = 1 come along with the degree-2 relators.
    let witt_consequences_trivial = q.is_trivial_in_quotient(&c3(z, y, x))
        && q.is_trivial_in_quotient(&c3(w, z, x))
        && q.is_trivial_in_quotient(&c3(w, z, y));
    if !witt_consequences_trivial {
        return fail("degree-2 relator consequences trivial");
    }

    let consistency_trials = 10_000;
    let consistency_ok = q.check_consistency(consistency_trials, 0x9009);
    if !consistency_ok {
        return fail("randomized associativity");
    }

    let cert = G9Certificate {
        hirsch_length: q.hirsch_length,
        torsion_free: q.torsion_free,
        section_ranks,
        pairing_rows: row_positions
            .iter()
            .map(|&p| ctx.basis.bracket_string(p))
            .collect(),
        pairing_cols: (0..4).map(|i| ctx.basis.generator_name(i)).collect(),
        pairing_matrix: beta,
        pairing_det: det,
        gamma3_generator: ctx.basis.bracket_string(zxy),
        gamma3_generator_coordinate: i64::try_from(&gen_sign).unwrap(),
        center_equals_gamma3,
        wyx_trivial,
        witt_consequences_trivial,
        consistency_trials,
        consistency_ok,
    };
    Ok((q, cert))
}
