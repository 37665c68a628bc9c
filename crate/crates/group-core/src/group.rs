//! Finite groups given by explicit multiplication tables, and the closure
//! algorithms (subgroup generation, normal closure, co-centraliser) that the
//! brute-force deciders are built on.

use crate::error::GroupError;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Element of a [`FiniteGroup`], an index into its multiplication table.
pub type Elt = u32;

const FULL_ASSOC_LIMIT: usize = 512;
const SAMPLED_ASSOC_TRIPLES: usize = 100_000;
const ASSOC_SEED: u64 = 0xA550_C1A7;

/// A finite group as an explicit multiplication table.
///
/// The identity is always element 0 and elements are enumerated in the
/// lexicographic order of their normal-form words, so that tables built by the
/// constructors here are reproducible.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<Elt>,
    inv: Vec<Elt>,
    labels: Vec<String>,
    generators: Vec<Elt>,
}

impl FiniteGroup {
    /// Validates a multiplication table and wraps it as a group.
    ///
    /// Checks identity at index 0, two-sided inverses, closure, generation,
    /// and associativity (all triples up to order 512, 10^5 seeded random
    /// triples beyond that).
    pub fn new(
        mul_rows: Vec<Vec<Elt>>,
        labels: Vec<String>,
        generators: Vec<Elt>,
    ) -> Result<Self, GroupError> {
        let n = mul_rows.len();
        if n == 0 {
            return Err(GroupError::BadTable("empty table".into()));
        }
        if labels.len() != n {
            return Err(GroupError::BadTable(format!(
                "{} labels for {} elements",
                labels.len(),
                n
            )));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in &mul_rows {
            if row.len() != n {
                return Err(GroupError::BadTable("ragged table".into()));
            }
            for &x in row {
                if (x as usize) >= n {
                    return Err(GroupError::BadTable(format!("entry {x} out of range")));
                }
            }
            mul.extend_from_slice(row);
        }
        let at = |x: usize, y: usize| mul[x * n + y] as usize;
        for x in 0..n {
            if at(0, x) != x || at(x, 0) != x {
                return Err(GroupError::BadTable("element 0 is not the identity".into()));
            }
        }
        // Rows and columns must be permutations (Latin square).
        let mut seen = vec![false; n];
        for x in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                if std::mem::replace(&mut seen[at(x, y)], true) {
                    return Err(GroupError::BadTable(format!("row {x} is not a permutation")));
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            for y in 0..n {
                if std::mem::replace(&mut seen[at(y, x)], true) {
                    return Err(GroupError::BadTable(format!(
                        "column {x} is not a permutation"
                    )));
                }
            }
        }
        let mut inv = vec![0 as Elt; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == 0)
                .expect("row is a permutation");
            if at(y, x) != 0 {
                return Err(GroupError::BadTable(format!("{x} has no two-sided inverse")));
            }
            inv[x] = y as Elt;
        }
        if n <= FULL_ASSOC_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    let xy = at(x, y);
                    for z in 0..n {
                        if at(xy, z) != at(x, at(y, z)) {
                            return Err(GroupError::BadTable(format!(
                                "associativity fails at ({x},{y},{z})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let (x, y, z) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                if at(at(x, y), z) != at(x, at(y, z)) {
                    return Err(GroupError::BadTable(format!(
                        "associativity fails at ({x},{y},{z})"
                    )));
                }
            }
        }
        for &g in &generators {
            if (g as usize) >= n {
                return Err(GroupError::BadTable(format!("generator {g} out of range")));
            }
        }
        let group = FiniteGroup {
            order: n,
            mul,
            inv,
            labels,
            generators,
        };
        if group.subgroup_generated(&group.generators).len() != n {
            return Err(GroupError::BadTable(
                "generators do not generate the group".into(),
            ));
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Elt {
        0
    }

    #[inline]
    pub fn mul(&self, x: Elt, y: Elt) -> Elt {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: Elt) -> Elt {
        self.inv[x as usize]
    }

    /// x^w = w^{-1} x w
    #[inline]
    pub fn conj(&self, x: Elt, w: Elt) -> Elt {
        self.mul(self.mul(self.inv(w), x), w)
    }

    /// [x,y] = x^{-1} x^y
    #[inline]
    pub fn comm(&self, x: Elt, y: Elt) -> Elt {
        self.mul(self.inv(x), self.conj(x, y))
    }

    pub fn pow(&self, x: Elt, e: i64) -> Elt {
        let (mut base, mut e) = if e < 0 {
            (self.inv(x), e.unsigned_abs())
        } else {
            (x, e as u64)
        };
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elt) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn label(&self, x: Elt) -> &str {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn generators(&self) -> &[Elt] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = Elt> {
        0..self.order as Elt
    }

    pub fn mul_rows(&self) -> Vec<Vec<Elt>> {
        (0..self.order)
            .map(|x| self.mul[x * self.order..(x + 1) * self.order].to_vec())
            .collect()
    }

    /// Subgroup generated by `gens`: BFS from the identity under right
    /// multiplication. Returns the sorted element list.
    pub fn subgroup_generated(&self, gens: &[Elt]) -> Vec<Elt> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut list = vec![0 as Elt];
        let gens: Vec<Elt> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !in_set[y as usize] {
                    in_set[y as usize] = true;
                    list.push(y);
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Smallest normal subgroup containing `seed`, by closure under products,
    /// inverses and conjugation by the group generators.
    ///
    /// Subgroup generators are added incrementally; each addition at least
    /// doubles the subgroup, so at most log2 |G| re-closures happen.
    pub fn normal_closure(&self, seed: &[Elt]) -> Subgroup {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut list = vec![0 as Elt];
        let mut sgens: Vec<Elt> = Vec::new();
        let mut pending: Vec<Elt> = seed.to_vec();
        let mut head = 0;
        while head < pending.len() {
            let x = pending[head];
            head += 1;
            if in_set[x as usize] {
                continue;
            }
            sgens.push(x);
            in_set.iter_mut().for_each(|s| *s = false);
            in_set[0] = true;
            list.clear();
            list.push(0);
            let mut h = 0;
            while h < list.len() {
                let y = list[h];
                h += 1;
                for &g in &sgens {
                    let z = self.mul(y, g);
                    if !in_set[z as usize] {
                        in_set[z as usize] = true;
                        list.push(z);
                    }
                }
            }
            for &t in &self.generators {
                pending.push(self.conj(x, t));
            }
        }
        list.sort_unstable();
        Subgroup { members: list }
    }

    /// cc_G(g): the subgroup generated by all commutators [g,w].
    pub fn cocentraliser(&self, g: Elt) -> Subgroup {
        let set = self.commutator_set(g);
        Subgroup {
            members: self.closure_of_set(&set),
        }
    }

    /// The raw set { [g,w] | w in G }, sorted.
    pub fn commutator_set(&self, g: Elt) -> Vec<Elt> {
        let mut in_set = vec![false; self.order];
        let mut out = Vec::new();
        for w in self.elements() {
            let c = self.comm(g, w);
            if !in_set[c as usize] {
                in_set[c as usize] = true;
                out.push(c);
            }
        }
        out.sort_unstable();
        out
    }

    /// Subgroup generated by a set, adding generators only when they enlarge
    /// the running subgroup.
    fn closure_of_set(&self, set: &[Elt]) -> Vec<Elt> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut list = vec![0 as Elt];
        let mut sgens: Vec<Elt> = Vec::new();
        for &x in set {
            if in_set[x as usize] {
                continue;
            }
            sgens.push(x);
            in_set.iter_mut().for_each(|s| *s = false);
            in_set[0] = true;
            list.clear();
            list.push(0);
            let mut h = 0;
            while h < list.len() {
                let y = list[h];
                h += 1;
                for &g in &sgens {
                    let z = self.mul(y, g);
                    if !in_set[z as usize] {
                        in_set[z as usize] = true;
                        list.push(z);
                    }
                }
            }
        }
        list.sort_unstable();
        list
    }

    /// Subgroup generated by an arbitrary element list.
    pub fn subgroup_closure(&self, gens: &[Elt]) -> Subgroup {
        Subgroup {
            members: self.closure_of_set(gens),
        }
    }

    /// Partition into conjugacy classes: (class id per element, classes).
    pub fn conjugacy_classes(&self) -> (Vec<u32>, Vec<Vec<Elt>>) {
        let mut class_id = vec![u32::MAX; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if class_id[x as usize] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let mut orbit = vec![x];
            class_id[x as usize] = id;
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                head += 1;
                for &t in &self.generators {
                    let z = self.conj(y, t);
                    if class_id[z as usize] == u32::MAX {
                        class_id[z as usize] = id;
                        orbit.push(z);
                    }
                }
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        (class_id, classes)
    }

    /// Checks that `sub` is closed under multiplication and inversion.
    pub fn is_subgroup(&self, sub: &Subgroup) -> bool {
        let mut in_set = vec![false; self.order];
        for &m in &sub.members {
            in_set[m as usize] = true;
        }
        if !in_set[0] {
            return false;
        }
        sub.members.iter().all(|&x| {
            in_set[self.inv(x) as usize]
                && sub.members.iter().all(|&y| in_set[self.mul(x, y) as usize])
        })
    }

    pub fn is_normal(&self, sub: &Subgroup) -> bool {
        let mut in_set = vec![false; self.order];
        for &m in &sub.members {
            in_set[m as usize] = true;
        }
        sub.members
            .iter()
            .all(|&m| self.generators.iter().all(|&t| in_set[self.conj(m, t) as usize]))
    }
}

/// A subgroup, stored as its sorted member list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    members: Vec<Elt>,
}

impl Subgroup {
    /// Wraps a member list after checking the subgroup axioms in `parent`.
    pub fn new(parent: &FiniteGroup, mut members: Vec<Elt>) -> Result<Self, GroupError> {
        members.sort_unstable();
        members.dedup();
        let sub = Subgroup { members };
        if !parent.is_subgroup(&sub) {
            return Err(GroupError::NotSubgroup(
                "not closed under multiplication/inverse".into(),
            ));
        }
        if parent.order() % sub.order() != 0 {
            return Err(GroupError::NotSubgroup("Lagrange violation".into()));
        }
        Ok(sub)
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elt] {
        &self.members
    }

    pub fn contains(&self, x: Elt) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

fn word_label(parts: &[(&str, u64)]) -> String {
    let mut out = String::new();
    for &(name, e) in parts {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        if e == 1 {
            out.push_str(name);
        } else {
            out.push_str(&format!("{name}^{e}"));
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Cyclic group of order m on one generator g.
pub fn build_cyclic(m: u64) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::BadParameter("cyclic group of order 0".into()));
    }
    let n = m as usize;
    let rows: Vec<Vec<Elt>> = (0..n)
        .map(|i| (0..n).map(|j| ((i + j) % n) as Elt).collect())
        .collect();
    let labels = (0..n as u64).map(|i| word_label(&[("g", i)])).collect();
    let gens = vec![(1 % m) as Elt];
    FiniteGroup::new(rows, labels, gens)
}

/// Dihedral group of the given (even) order 2k, k >= 1: normal forms s^f r^i.
pub fn build_dihedral(order: u64) -> Result<FiniteGroup, GroupError> {
    if order < 2 || order % 2 != 0 {
        return Err(GroupError::BadParameter(format!(
            "dihedral group needs even order >= 2, got {order}"
        )));
    }
    let k = (order / 2) as usize;
    let n = order as usize;
    let idx = |f: usize, i: usize| (f * k + i) as Elt;
    let mut rows = vec![vec![0 as Elt; n]; n];
    for f1 in 0..2 {
        for i1 in 0..k {
            for f2 in 0..2 {
                for i2 in 0..k {
                    // (s^f1 r^i1)(s^f2 r^i2) = s^(f1+f2) r^(±i1 + i2)
                    let i = if f2 == 1 { (k - i1) % k } else { i1 };
                    rows[idx(f1, i1) as usize][idx(f2, i2) as usize] =
                        idx((f1 + f2) % 2, (i + i2) % k);
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for f in 0..2u64 {
        for i in 0..k as u64 {
            labels.push(word_label(&[("s", f), ("r", i)]));
        }
    }
    let gens = if k == 1 {
        vec![idx(1, 0)]
    } else {
        vec![idx(0, 1), idx(1, 0)]
    };
    FiniteGroup::new(rows, labels, gens)
}

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

/// The metacyclic p-group < t, a | [a,t] = a^p, t^(p^(c-1)) = a^(p^c) = 1 >
/// realised on normal forms t^i a^j; the order is p^(2c-1).
pub fn build_metacyclic(p: u64, c: u32) -> Result<FiniteGroup, GroupError> {
    if p % 2 == 0 || !is_prime(p) {
        return Err(GroupError::BadParameter(format!(
            "p must be an odd prime, got {p}"
        )));
    }
    if c < 1 {
        return Err(GroupError::BadParameter("c must be >= 1".into()));
    }
    let tm = p.checked_pow(c - 1).ok_or_else(|| {
        GroupError::BadParameter("p^(c-1) overflows".into())
    })? as u128;
    let am = p.checked_pow(c).ok_or_else(|| {
        GroupError::BadParameter("p^c overflows".into())
    })? as u128;
    let n = (tm * am) as usize;
    if n > 20_000 {
        return Err(GroupError::BadParameter(format!(
            "order {n} exceeds the table limit"
        )));
    }
    // Powers of the action 1+p modulo p^c, one per t-exponent.
    let mut act = Vec::with_capacity(tm as usize);
    let mut cur: u128 = 1;
    for _ in 0..tm {
        act.push(cur);
        cur = cur * (1 + p as u128) % am;
    }
    let idx = |i: u128, j: u128| (i * am + j) as usize;
    let mut rows = vec![vec![0 as Elt; n]; n];
    for i1 in 0..tm {
        for j1 in 0..am {
            let x = idx(i1, j1);
            for i2 in 0..tm {
                let a1 = j1 * act[i2 as usize] % am;
                for j2 in 0..am {
                    rows[x][idx(i2, j2)] = idx((i1 + i2) % tm, (a1 + j2) % am) as Elt;
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for i in 0..tm as u64 {
        for j in 0..am as u64 {
            labels.push(word_label(&[("t", i), ("a", j)]));
        }
    }
    let a = idx(0, 1) as Elt;
    let gens = if tm > 1 {
        vec![idx(1, 0) as Elt, a]
    } else {
        vec![a]
    };
    FiniteGroup::new(rows, labels, gens)
}

/// The class-2 group < t,a,b | t^3 = a^9 = b^9 = [a,b] = [a,t]b^3 = [b,t]a^3 = 1 >
/// of order 243, on normal forms t^i a^j b^k with a^t = a b^-3, b^t = b a^-3.
pub fn build_three_group() -> Result<FiniteGroup, GroupError> {
    let n = 243;
    let idx = |i: usize, j: usize, k: usize| (81 * i + 9 * j + k) as Elt;
    // Conjugation by t on the abelian part <a,b>.
    let phi = |j: usize, k: usize| ((j + 9 * 3 - 3 * k) % 9, (k + 9 * 3 - 3 * j) % 9);
    let mut rows = vec![vec![0 as Elt; n]; n];
    for i1 in 0..3 {
        for j1 in 0..9 {
            for k1 in 0..9 {
                let x = idx(i1, j1, k1) as usize;
                for i2 in 0..3 {
                    let (mut ja, mut ka) = (j1, k1);
                    for _ in 0..i2 {
                        let t = phi(ja, ka);
                        ja = t.0;
                        ka = t.1;
                    }
                    for j2 in 0..9 {
                        for k2 in 0..9 {
                            rows[x][idx(i2, j2, k2) as usize] =
                                idx((i1 + i2) % 3, (ja + j2) % 9, (ka + k2) % 9);
                        }
                    }
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for i in 0..3u64 {
        for j in 0..9u64 {
            for k in 0..9u64 {
                labels.push(word_label(&[("t", i), ("a", j), ("b", k)]));
            }
        }
    }
    let gens = vec![idx(1, 0, 0), idx(0, 1, 0), idx(0, 0, 1)];
    FiniteGroup::new(rows, labels, gens)
}

/// Direct product with pairwise multiplication; labels are (left,right) pairs.
pub fn build_direct_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Result<FiniteGroup, GroupError> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > 20_000 {
        return Err(GroupError::BadParameter(format!(
            "order {n} exceeds the table limit"
        )));
    }
    let idx = |x: Elt, y: Elt| x * nh as Elt + y;
    let mut rows = vec![vec![0 as Elt; n]; n];
    for x1 in g.elements() {
        for y1 in h.elements() {
            let r = idx(x1, y1) as usize;
            for x2 in g.elements() {
                for y2 in h.elements() {
                    rows[r][idx(x2, y2) as usize] = idx(g.mul(x1, x2), h.mul(y1, y2));
                }
            }
        }
    }
    let mut labels = Vec::with_capacity(n);
    for x in g.elements() {
        for y in h.elements() {
            labels.push(format!("({},{})", g.label(x), h.label(y)));
        }
    }
    let mut gens = Vec::new();
    for &x in g.generators() {
        gens.push(idx(x, 0));
    }
    for &y in h.generators() {
        gens.push(idx(0, y));
    }
    FiniteGroup::new(rows, labels, gens)
}

/// Quotient G/N for normal N; elements are minimal coset representatives.
pub fn build_quotient(g: &FiniteGroup, n: &Subgroup) -> Result<FiniteGroup, GroupError> {
    if !g.is_subgroup(n) {
        return Err(GroupError::NotSubgroup("quotient by a non-subgroup".into()));
    }
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let order = g.order();
    let mut rep = vec![Elt::MAX; order];
    let mut reps = Vec::new();
    for x in g.elements() {
        if rep[x as usize] != Elt::MAX {
            continue;
        }
        for &m in n.members() {
            rep[g.mul(x, m) as usize] = x;
        }
        reps.push(x);
    }
    let mut pos = vec![0u32; order];
    for (i, &r) in reps.iter().enumerate() {
        pos[r as usize] = i as u32;
    }
    let k = reps.len();
    let mut rows = vec![vec![0 as Elt; k]; k];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            rows[i][j] = pos[rep[g.mul(ri, rj) as usize] as usize];
        }
    }
    let labels = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let mut gens: Vec<Elt> = g
        .generators()
        .iter()
        .map(|&t| pos[rep[t as usize] as usize])
        .collect();
    gens.sort_unstable();
    gens.dedup();
    FiniteGroup::new(rows, labels, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c6 = build_cyclic(6).unwrap();
        assert_eq!(c6.order(), 6);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.pow(1, -1), 5);
        let c1 = build_cyclic(1).unwrap();
        assert_eq!(c1.order(), 1);
    }

    #[test]
    fn direct_product_c2_c3_is_c6() {
        let g = build_direct_product(&build_cyclic(2).unwrap(), &build_cyclic(3).unwrap()).unwrap();
        assert_eq!(g.order(), 6);
        // coprime orders: some element has order 6
        assert!(g.elements().any(|x| g.element_order(x) == 6));
    }

    #[test]
    fn metacyclic_rejects_bad_input() {
        assert!(build_metacyclic(4, 2).is_err());
        assert!(build_metacyclic(2, 2).is_err());
        assert!(build_metacyclic(9, 1).is_err());
        assert!(build_metacyclic(3, 0).is_err());
    }

    #[test]
    fn metacyclic_3_1_is_c3() {
        let g = build_metacyclic(3, 1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.element_order(1), 3);
    }

    #[test]
    fn metacyclic_orders() {
        assert_eq!(build_metacyclic(3, 2).unwrap().order(), 27);
        assert_eq!(build_metacyclic(5, 2).unwrap().order(), 125);
        assert_eq!(build_metacyclic(5, 3).unwrap().order(), 3125);
    }

    #[test]
    fn metacyclic_defining_relation() {
        // [a,t] = a^p must hold in the table.
        for (p, c) in [(3u64, 2u32), (5, 2), (7, 2), (3, 3)] {
            let g = build_metacyclic(p, c).unwrap();
            let am = p.pow(c);
            let t = (am) as Elt; // index (1,0)
            let a = 1 as Elt; // index (0,1)
            assert_eq!(g.comm(a, t), g.pow(a, p as i64), "p={p} c={c}");
            assert_eq!(g.element_order(t), p.pow(c - 1) as usize);
            assert_eq!(g.element_order(a), am as usize);
        }
    }

    #[test]
    fn three_group_relations() {
        let g = build_three_group().unwrap();
        assert_eq!(g.order(), 243);
        let (t, a, b) = (81, 9, 1);
        assert_eq!(g.element_order(t), 3);
        assert_eq!(g.element_order(a), 9);
        assert_eq!(g.element_order(b), 9);
        // [a,b] = 1, [a,t] b^3 = 1, [b,t] a^3 = 1
        assert_eq!(g.comm(a, b), 0);
        assert_eq!(g.mul(g.comm(a, t), g.pow(b, 3)), 0);
        assert_eq!(g.mul(g.comm(b, t), g.pow(a, 3)), 0);
    }

    #[test]
    fn normal_closure_examples() {
        let g = build_three_group().unwrap();
        let a = 9;
        // <a>^G = <a, b^3> has order 27 (9 powers of a times 3 powers of b^3).
        assert_eq!(g.normal_closure(&[a]).order(), 27);
        assert_eq!(g.normal_closure(&[0]).order(), 1);

        let m = build_metacyclic(3, 2).unwrap();
        assert_eq!(m.normal_closure(&[1]).order(), 9);
    }

    #[test]
    fn cocentraliser_examples() {
        let g = build_three_group().unwrap();
        let a = 9;
        // cc(a) = <b^3> of order 3.
        let cc = g.cocentraliser(a);
        assert_eq!(cc.order(), 3);
        assert!(cc.contains(g.pow(1, 3)));
        assert_eq!(g.cocentraliser(0).order(), 1);

        let m = build_metacyclic(5, 2).unwrap();
        let t = 25;
        let cs = m.commutator_set(t);
        let cc = m.cocentraliser(t);
        assert_eq!(cs, cc.members().to_vec());
        // cc(t) = <a^5>
        let a5 = m.pow(1, 5);
        assert_eq!(cc.members(), m.subgroup_closure(&[a5]).members());
    }

    #[test]
    fn quotient_by_center_of_three_group() {
        let g = build_three_group().unwrap();
        let z = crate::series::center(&g);
        assert_eq!(z.order(), 9);
        let q = build_quotient(&g, &z).unwrap();
        assert_eq!(q.order(), 27);
        // elementary abelian of rank 3
        assert!(q.elements().all(|x| q.pow(x, 3) == 0));
        assert!(q
            .elements()
            .all(|x| q.elements().all(|y| q.mul(x, y) == q.mul(y, x))));
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let d8 = build_dihedral(8).unwrap();
        // <s> is not normal in D8.
        let s = d8.subgroup_closure(&[4]);
        assert_eq!(s.order(), 2);
        assert!(matches!(
            build_quotient(&d8, &s),
            Err(GroupError::NotNormal)
        ));
    }

    #[test]
    fn conjugacy_classes_of_s3() {
        let s3 = build_dihedral(6).unwrap();
        let (_, classes) = s3.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }
}
