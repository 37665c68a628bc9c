//! Magnus-property deciders: the plain property, the bounded (weak) variant
//! with the identity bound, and the supporting per-element closure table.

use crate::error::GroupError;
use crate::group::{Elt, FiniteGroup, Subgroup};
use crate::series::{derived_subgroup, nilpotency_class};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Normal closure of every element, deduplicated into buckets of elements
/// sharing the same closure.
pub struct ClosureTable {
    pub closure_id: Vec<u32>,
    pub closures: Vec<Subgroup>,
    /// Elements grouped by closure, each bucket sorted; buckets ordered by
    /// their minimal element.
    pub buckets: Vec<Vec<Elt>>,
}

pub fn element_closures(g: &FiniteGroup) -> ClosureTable {
    let per_elt: Vec<Subgroup> = g
        .elements()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&x| g.normal_closure(&[x]))
        .collect();
    let mut ids: HashMap<Vec<Elt>, u32> = HashMap::new();
    let mut closures = Vec::new();
    let mut closure_id = vec![0u32; g.order()];
    for (x, sub) in per_elt.into_iter().enumerate() {
        let id = *ids.entry(sub.members().to_vec()).or_insert_with(|| {
            closures.push(sub);
            (closures.len() - 1) as u32
        });
        closure_id[x] = id;
    }
    let mut buckets = vec![Vec::new(); closures.len()];
    for x in g.elements() {
        buckets[closure_id[x as usize] as usize].push(x);
    }
    buckets.sort_by_key(|b| b[0]);
    ClosureTable {
        closure_id,
        closures,
        buckets,
    }
}

/// Minimal data for one pair with equal normal closures, as found by
/// [`is_weak_mp_linear`]. Pairs are stored unordered (g <= h); the record for
/// (h,g) is the same with k/l and r/s swapped.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PairData {
    pub g: Elt,
    pub h: Elt,
    /// Minimal number of conjugates of g^{±1} whose product is h.
    pub k_min: u32,
    /// Minimal number of conjugates of h^{±1} whose product is g.
    pub l_min: u32,
    /// Minimal |r| with g conjugate to h^r, if any.
    pub r_min: Option<u32>,
    /// Minimal |s| with h conjugate to g^s, if any.
    pub s_min: Option<u32>,
}

/// Outcome of a Magnus-property decision.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MpReport {
    pub verdict: bool,
    /// First pair (by element order) with equal normal closure but no
    /// conjugating or inverse-conjugating element.
    pub counterexample: Option<(Elt, Elt)>,
    /// First pair violating the weak bound while still cross-conjugate.
    pub bound_violation: Option<(Elt, Elt)>,
    pub pair_data: Vec<PairData>,
}

/// Decides the Magnus property: for every pair with equal normal closure
/// there must be w with g^w in {h, h^{-1}}.
pub fn is_mp(g: &FiniteGroup) -> MpReport {
    let table = element_closures(g);
    let (class_id, _) = g.conjugacy_classes();
    for bucket in &table.buckets {
        for (i, &x) in bucket.iter().enumerate() {
            for &y in &bucket[i + 1..] {
                if class_id[x as usize] != class_id[y as usize]
                    && class_id[x as usize] != class_id[g.inv(y) as usize]
                {
                    return MpReport {
                        verdict: false,
                        counterexample: Some((x, y)),
                        bound_violation: None,
                        pair_data: Vec::new(),
                    };
                }
            }
        }
    }
    MpReport {
        verdict: true,
        counterexample: None,
        bound_violation: None,
        pair_data: Vec::new(),
    }
}

/// Re-checks that (g,h) really witnesses failure of the Magnus property.
pub fn verify_counterexample(g: &FiniteGroup, x: Elt, y: Elt) -> bool {
    if g.normal_closure(&[x]).members() != g.normal_closure(&[y]).members() {
        return false;
    }
    let (class_id, _) = g.conjugacy_classes();
    class_id[x as usize] != class_id[y as usize]
        && class_id[x as usize] != class_id[g.inv(y) as usize]
}

/// Distances from the identity in the Cayley graph whose step set is the
/// conjugacy class of x together with the class of x^{-1}; dist[h] is the
/// minimal number of conjugates of x^{±1} multiplying to h.
fn conjugate_product_distances(g: &FiniteGroup, x: Elt, class_of: &[Vec<Elt>], class_id: &[u32]) -> Vec<u32> {
    let mut steps: Vec<Elt> = class_of[class_id[x as usize] as usize].clone();
    let inv_class = &class_of[class_id[g.inv(x) as usize] as usize];
    if inv_class[0] != steps[0] {
        steps.extend_from_slice(inv_class);
    }
    let mut dist = vec![u32::MAX; g.order()];
    dist[0] = 0;
    let mut frontier = vec![0 as Elt];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for &cur in &frontier {
            for &s in &steps {
                let y = g.mul(cur, s);
                if dist[y as usize] == u32::MAX {
                    dist[y as usize] = d;
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Decides the bounded Magnus property with the identity bound: every pair
/// with equal normal closure must satisfy max(r_min, s_min) <= max(k_min,
/// l_min), where the four minima are as in [`PairData`].
pub fn is_weak_mp_linear(g: &FiniteGroup) -> MpReport {
    let table = element_closures(g);
    let (class_id, classes) = g.conjugacy_classes();
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();

    let bucket_results: Vec<(Vec<PairData>, Option<(Elt, Elt)>, Option<(Elt, Elt)>)> = table
        .buckets
        .par_iter()
        .map(|bucket| {
            let mut pairs = Vec::new();
            let mut counterexample = None;
            let mut violation = None;
            if bucket.len() == 1 {
                let x = bucket[0];
                // (x, x): one conjugate of x is x itself; r = s = 1 (or 0 for 1).
                let triv = if x == 0 { 0 } else { 1 };
                pairs.push(PairData {
                    g: x,
                    h: x,
                    k_min: triv,
                    l_min: triv,
                    r_min: Some(triv),
                    s_min: Some(triv),
                });
                return (pairs, counterexample, violation);
            }
            let dists: Vec<Vec<u32>> = bucket
                .iter()
                .map(|&x| conjugate_product_distances(g, x, &classes, &class_id))
                .collect();
            // Minimal |r| with target conjugate to base^r.
            let min_power_exponent = |base: Elt, target: Elt| -> Option<u32> {
                let ord = orders[base as usize];
                let tclass = class_id[target as usize];
                let mut best: Option<u32> = None;
                let mut p = 0 as Elt;
                for r in 0..ord {
                    if r > 0 {
                        p = g.mul(p, base);
                    }
                    if class_id[p as usize] == tclass {
                        let m = if r == 0 { 0 } else { (r).min(ord - r) as u32 };
                        best = Some(best.map_or(m, |b: u32| b.min(m)));
                    }
                }
                best
            };
            for (i, &x) in bucket.iter().enumerate() {
                for (j, &y) in bucket.iter().enumerate().skip(i) {
                    let k_min = dists[i][y as usize];
                    let l_min = dists[j][x as usize];
                    let r_min = min_power_exponent(y, x);
                    let s_min = min_power_exponent(x, y);
                    let ok = match (r_min, s_min) {
                        (Some(r), Some(s)) => r.max(s) <= k_min.max(l_min),
                        _ => false,
                    };
                    if !ok {
                        if r_min.is_none() || s_min.is_none() {
                            counterexample.get_or_insert((x, y));
                        } else {
                            violation.get_or_insert((x, y));
                        }
                    }
                    pairs.push(PairData {
                        g: x,
                        h: y,
                        k_min,
                        l_min,
                        r_min,
                        s_min,
                    });
                }
            }
            (pairs, counterexample, violation)
        })
        .collect();

    let mut pair_data = Vec::new();
    let mut counterexample = None;
    let mut bound_violation = None;
    for (pairs, ce, bv) in bucket_results {
        pair_data.extend(pairs);
        if counterexample.is_none() {
            counterexample = ce;
        }
        if bound_violation.is_none() {
            bound_violation = bv;
        }
    }
    MpReport {
        verdict: counterexample.is_none() && bound_violation.is_none(),
        counterexample,
        bound_violation,
        pair_data,
    }
}

/// True iff the commutator set { [x,w] } is already the whole co-centraliser
/// cc_G(x), for every x.
pub fn cocentraliser_closed(g: &FiniteGroup) -> bool {
    let elements: Vec<Elt> = g.elements().collect();
    elements
        .par_iter()
        .all(|&x| g.commutator_set(x) == g.cocentraliser(x).members())
}

/// The class-2 3-group criterion: Z(G) and G/Z(G) elementary abelian, and
/// every element of order 9 admits h with [g,h] = g^3.
pub fn check_3group_criterion(g: &FiniteGroup) -> Result<bool, GroupError> {
    let mut n = g.order();
    while n % 3 == 0 {
        n /= 3;
    }
    if n != 1 {
        return Err(GroupError::Rejected(format!(
            "order {} is not a power of 3",
            g.order()
        )));
    }
    let class = nilpotency_class(g)?;
    if class > 2 {
        return Err(GroupError::Rejected(format!(
            "nilpotency class {class} exceeds 2"
        )));
    }
    let z = crate::series::center(g);
    // Z(G) elementary abelian.
    if !z.members().iter().all(|&x| g.pow(x, 3) == 0) {
        return Ok(false);
    }
    // G/Z elementary abelian: cubes and commutators land in Z.
    for x in g.elements() {
        if !z.contains(g.pow(x, 3)) {
            return Ok(false);
        }
    }
    for x in g.elements() {
        for y in g.elements() {
            if !z.contains(g.comm(x, y)) {
                return Ok(false);
            }
        }
    }
    for x in g.elements() {
        if g.element_order(x) != 9 {
            continue;
        }
        let cube = g.pow(x, 3);
        if !g.elements().any(|h| g.comm(x, h) == cube) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checked form of a witness pair (g, v): v lies in [G,G] but not in the
/// commutator set of g, g^2 is nontrivial mod [G,G], and g, gv share their
/// normal closure. A valid pair forces `is_mp` to fail on (g, gv).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessPairCheck {
    pub g: Elt,
    pub v: Elt,
    pub v_in_derived: bool,
    pub v_not_commutator: bool,
    pub g_squared_nontrivial_mod_derived: bool,
    pub closures_equal: bool,
    pub pair_not_cross_conjugate: bool,
}

impl WitnessPairCheck {
    pub fn holds(&self) -> bool {
        self.v_in_derived
            && self.v_not_commutator
            && self.g_squared_nontrivial_mod_derived
            && self.closures_equal
            && self.pair_not_cross_conjugate
    }
}

/// Re-verifies an imported witness pair against the table.
pub fn verify_basic_witness_pair(g: &FiniteGroup, x: Elt, v: Elt) -> WitnessPairCheck {
    let derived = derived_subgroup(g);
    let v_in_derived = derived.contains(v);
    let v_not_commutator = !g.commutator_set(x).contains(&v);
    // g^2 not in [G,G]: nontrivial square image in the abelianisation.
    let g_squared_nontrivial_mod_derived = !derived.contains(g.pow(x, 2));
    let xv = g.mul(x, v);
    let closures_equal =
        g.normal_closure(&[x]).members() == g.normal_closure(&[xv]).members();
    let pair_not_cross_conjugate = verify_counterexample(g, x, xv);
    WitnessPairCheck {
        g: x,
        v,
        v_in_derived,
        v_not_commutator,
        g_squared_nontrivial_mod_derived,
        closures_equal,
        pair_not_cross_conjugate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_metacyclic, build_three_group};

    #[test]
    fn cyclic_mp_exactly_1_2_3_4_6() {
        for m in 1..=30u64 {
            let g = build_cyclic(m).unwrap();
            let expect = matches!(m, 1 | 2 | 3 | 4 | 6);
            assert_eq!(is_mp(&g).verdict, expect, "C_{m}");
        }
    }

    #[test]
    fn trivial_group_is_mp() {
        assert!(is_mp(&build_cyclic(1).unwrap()).verdict);
    }

    #[test]
    fn three_group_not_mp_and_a_a4_witnesses() {
        let g = build_three_group().unwrap();
        let report = is_mp(&g);
        assert!(!report.verdict);
        let (x, y) = report.counterexample.unwrap();
        assert!(verify_counterexample(&g, x, y));
        // the pair (a, a^4) also witnesses the failure
        let a = 9;
        let a4 = g.pow(a, 4);
        assert!(verify_counterexample(&g, a, a4));
        // (a, a^3) is a basic witness pair: v = a^3 central in [G,G].
        let check = verify_basic_witness_pair(&g, a, g.pow(a, 3));
        assert!(check.holds(), "{check:?}");
    }

    #[test]
    fn weak_mp_on_c9_with_hand_values() {
        // In C_9 with g = 1, h = 2 (additive indices): h = g^2 so s_min = 2;
        // g = h^r needs 2r = 1 mod 9, r in {5, -4}, so r_min = 4; k_min = 2
        // (1+1), l_min = 4 (sums of ±2 reaching 1 need m = -4, l = 4).
        let g = build_cyclic(9).unwrap();
        let report = is_weak_mp_linear(&g);
        assert!(report.verdict);
        let rec = report
            .pair_data
            .iter()
            .find(|r| r.g == 1 && r.h == 2)
            .unwrap();
        assert_eq!(rec.k_min, 2);
        assert_eq!(rec.l_min, 4);
        assert_eq!(rec.r_min, Some(4));
        assert_eq!(rec.s_min, Some(2));
    }

    #[test]
    fn weak_mp_metacyclic_3_2() {
        let g = build_metacyclic(3, 2).unwrap();
        assert!(cocentraliser_closed(&g));
        assert!(is_weak_mp_linear(&g).verdict);
    }

    #[test]
    fn criterion_examples() {
        let g = build_three_group().unwrap();
        assert!(!check_3group_criterion(&g).unwrap());
        let m = build_metacyclic(3, 2).unwrap();
        assert!(check_3group_criterion(&m).unwrap());
        assert!(is_mp(&m).verdict);
        // elementary abelian C3 x C3: no order-9 elements, criterion true
        let e = crate::group::build_direct_product(
            &build_cyclic(3).unwrap(),
            &build_cyclic(3).unwrap(),
        )
        .unwrap();
        assert!(check_3group_criterion(&e).unwrap());
        // wrong input class rejected
        let c2 = build_cyclic(2).unwrap();
        assert!(check_3group_criterion(&c2).is_err());
    }

    #[test]
    fn abelian_cocentralisers_trivial() {
        let g = build_cyclic(12).unwrap();
        assert!(cocentraliser_closed(&g));
        for x in g.elements() {
            assert!(g.cocentraliser(x).is_trivial());
        }
    }
}
