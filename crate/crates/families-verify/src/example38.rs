//! Bounded verification in G = C_inf ⋉ C_{3^c} with a^t = a^4: commutator
//! sets {[g,w]} equal <a^{3^n}> with n = 1 + min(v_3(l), v_3(m)), and the
//! Magnus conclusion holds for every closure-equal pair in the box.
//!
//! The conjugator quantifier is finite here: [g, t^i a^j] depends on i only
//! through 4^i mod 3^c, whose multiplicative order is 3^{c-1}, so one period
//! of i together with all j is a complete sweep.

use crate::error::SuiteError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Example38Certificate {
    pub c: u32,
    pub l_bound: i64,
    pub box_elements: usize,
    pub all_sets_match: bool,
    pub all_sets_closed: bool,
    pub closure_equal_pairs: usize,
    pub mp_conclusion_ok: bool,
    pub completeness_note: String,
    pub failures: Vec<String>,
}

impl Example38Certificate {
    pub fn holds(&self) -> bool {
        self.all_sets_match && self.all_sets_closed && self.mp_conclusion_ok
    }
}

fn v3(n: i64) -> Option<u32> {
    if n == 0 {
        return None;
    }
    let mut n = n.unsigned_abs();
    let mut v = 0;
    while n % 3 == 0 {
        n /= 3;
        v += 1;
    }
    Some(v)
}

struct Model {
    modulus: u64,
    /// 4^i mod 3^c for i in one period.
    pow4: Vec<u64>,
    period: u64,
}

impl Model {
    fn new(c: u32) -> Self {
        let modulus = 3u64.pow(c);
        let period = 3u64.pow(c - 1);
        let mut pow4 = Vec::with_capacity(period as usize);
        let mut cur = 1u64;
        for _ in 0..period {
            pow4.push(cur);
            cur = cur * 4 % modulus;
        }
        Model {
            modulus,
            pow4,
            period,
        }
    }

    fn act(&self, l: i64, m: u64) -> u64 {
        let i = l.rem_euclid(self.period as i64) as usize;
        m * self.pow4[i] % self.modulus
    }

    /// Payload of [g, w] for g = t^l a^m, w = t^i a^j:
    /// m (4^i - 1) - j (4^l - 1) mod 3^c.
    fn commutator(&self, (l, m): (i64, u64), (i, j): (i64, u64)) -> u64 {
        let a = self.act(i, m) + self.modulus - m % self.modulus;
        let b = self.act(l, j) + self.modulus - j % self.modulus;
        (a + self.modulus * 2 - b % self.modulus) % self.modulus
    }
}

pub fn verify_example_3_8(c: u32, l_bound: i64) -> Result<Example38Certificate, SuiteError> {
    if c < 1 || l_bound < 3i64.pow(c) {
        return Err(SuiteError::Assertion(format!(
            "need c >= 1 and l_bound >= 3^c, got c = {c}, l_bound = {l_bound}"
        )));
    }
    let model = Model::new(c);
    let modulus = model.modulus;
    let mut failures = Vec::new();
    let mut all_sets_match = true;
    let mut all_sets_closed = true;

    // Box elements with their valuation data n(g).
    let mut elements: Vec<(i64, u64, u32)> = Vec::new();
    for l in -l_bound..=l_bound {
        for m in 0..modulus {
            if l == 0 && m == 0 {
                continue;
            }
            let vl = v3(l);
            let vm = v3(m as i64);
            let n = 1 + match (vl, vm) {
                (Some(a), Some(b)) => a.min(b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => unreachable!("nontrivial element"),
            };
            elements.push((l, m, n));
        }
    }

    for &(l, m, n) in &elements {
        let mut set: BTreeSet<u64> = BTreeSet::new();
        for i in 0..model.period as i64 {
            for j in 0..modulus {
                set.insert(model.commutator((l, m), (i, j)));
            }
        }
        let step = 3u64.pow(n.min(c));
        let expect: BTreeSet<u64> = (0..modulus).step_by(step as usize).collect();
        if set != expect {
            all_sets_match = false;
            if failures.len() < 8 {
                failures.push(format!("g = t^{l} a^{m}: n = {n}, set size {}", set.len()));
            }
        }
        let closed = set
            .iter()
            .all(|&x| set.iter().all(|&y| set.contains(&((x + y) % modulus))));
        if !closed {
            all_sets_closed = false;
            failures.push(format!("g = t^{l} a^{m}: set not closed"));
        }
    }

    // Magnus conclusion on closure-equal pairs: g ≡ h or g ≡ h^{-1} mod M.
    let mut closure_equal_pairs = 0;
    let mut mp_conclusion_ok = true;
    let inv = |l: i64, m: u64| -> (i64, u64) {
        // (l, m)^{-1} = (-l, -m 4^{-l})
        let neg = (modulus - m % modulus) % modulus;
        (-l, model.act(-l, neg))
    };
    for (idx, &(l1, m1, n1)) in elements.iter().enumerate() {
        for &(l2, m2, n2) in &elements[idx..] {
            if n1 != n2 {
                continue;
            }
            let step = 3u64.pow(n1.min(c));
            let congruent = |a: (i64, u64), b: (i64, u64)| a.0 == b.0 && (a.1 % modulus) % step == (b.1 % modulus) % step;
            let g = (l1, m1);
            let h = (l2, m2);
            // Equal normal closure: <g>M = <h>M, decided via generators of
            // the infinite cyclic (or finite cyclic) image mod M.
            let equal_closure = if l1 == 0 && l2 == 0 {
                // Both lie in the torsion part: closures are <a^{3^{n-1}}>M.
                true
            } else if l1 != 0 && l2 != 0 && (l1 == l2 || l1 == -l2) {
                congruent(if l1 == l2 { g } else { inv(g.0, g.1) }, h)
            } else {
                false
            };
            if !equal_closure {
                continue;
            }
            closure_equal_pairs += 1;
            let conclusion = congruent(g, h) || congruent(inv(g.0, g.1), h);
            if !conclusion {
                mp_conclusion_ok = false;
                if failures.len() < 8 {
                    failures.push(format!(
                        "pair t^{l1} a^{m1}, t^{l2} a^{m2}: closure-equal but not congruent"
                    ));
                }
            }
        }
    }

    Ok(Example38Certificate {
        c,
        l_bound,
        box_elements: elements.len(),
        all_sets_match,
        all_sets_closed,
        closure_equal_pairs,
        mp_conclusion_ok,
        completeness_note: format!(
            "[g, t^i a^j] depends on i only through 4^i mod 3^{c}; the sweep over one period \
             of length 3^{} and all j is complete",
            c - 1
        ),
        failures,
    })
}
