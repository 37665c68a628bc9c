//! Commutator sets {[h,y]} in the finite metacyclic quotients: for every
//! nontrivial h = t^lambda a^mu the set equals the subgroup <a^{p^m}> with
//! m = 1 + min(v_p(lambda), v_p(mu)), zero parameters contributing their
//! modulus valuation.

use crate::error::SuiteError;
use group_core::build_metacyclic;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PadicClosureCertificate {
    pub p: u64,
    pub c: u32,
    pub order: usize,
    pub elements_checked: usize,
    pub all_sets_match: bool,
    pub all_sets_closed: bool,
    pub failures: Vec<String>,
}

impl PadicClosureCertificate {
    pub fn holds(&self) -> bool {
        self.all_sets_match && self.all_sets_closed
    }
}

fn vp(p: u64, mut n: u64) -> u32 {
    debug_assert!(n > 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

pub fn padic_closure_check(p: u64, c: u32) -> Result<PadicClosureCertificate, SuiteError> {
    let g = build_metacyclic(p, c)?;
    let tm = p.pow(c - 1);
    let am = p.pow(c);
    let mut failures = Vec::new();
    let mut all_sets_match = true;
    let mut all_sets_closed = true;
    let mut checked = 0;
    for lambda in 0..tm {
        for mu in 0..am {
            if lambda == 0 && mu == 0 {
                continue;
            }
            checked += 1;
            let h = (lambda * am + mu) as group_core::Elt;
            // Zero parameters take the valuation of their modulus.
            let vl = if lambda == 0 { c - 1 } else { vp(p, lambda) };
            let vm = if mu == 0 { c } else { vp(p, mu) };
            let m = 1 + vl.min(vm);
            let gen = g.pow(1, (p as i64).pow(m.min(c)));
            let expect = g.subgroup_closure(&[gen]);
            let set = g.commutator_set(h);
            if set != expect.members() {
                all_sets_match = false;
                failures.push(format!(
                    "t^{lambda} a^{mu}: set size {} vs <a^{{p^{m}}}> size {}",
                    set.len(),
                    expect.order()
                ));
            }
            // Multiplicative closure of the raw set.
            let closed = set.iter().all(|&x| {
                set.iter()
                    .all(|&y| set.binary_search(&g.mul(x, y)).is_ok())
            });
            if !closed {
                all_sets_closed = false;
                failures.push(format!("t^{lambda} a^{mu}: set not closed"));
            }
        }
    }
    Ok(PadicClosureCertificate {
        p,
        c,
        order: g.order(),
        elements_checked: checked,
        all_sets_match,
        all_sets_closed,
        failures,
    })
}
