//! The metacyclic family sweep: class, lower central terms, closed
//! commutator sets, and the bounded Magnus property, per (p, c).

use group_core::{
    build_metacyclic, cocentraliser_closed, is_mp, is_weak_mp_linear, lower_central_series,
    nilpotency_class,
};
use serde::{Deserialize, Serialize};

pub const ORDER_CAP: u64 = 10_000;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub p: u64,
    pub c: u32,
    pub order: u64,
    pub skipped: bool,
    pub skip_reason: Option<String>,
    pub class_ok: bool,
    /// gamma_{i+1} = <a^{p^i}> for 1 <= i <= c.
    pub gamma_terms_ok: bool,
    pub gamma_orders: Vec<usize>,
    pub cocentraliser_closed: bool,
    pub weak_mp: bool,
    /// Informational: the plain Magnus property verdict is recorded, not
    /// asserted.
    pub plain_mp: Option<bool>,
    pub failed: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyReport {
    pub records: Vec<FamilyRecord>,
}

impl FamilyReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.skipped || !r.failed)
    }
}

pub fn verify_gp_family(primes: &[u64], classes: &[u32]) -> FamilyReport {
    let mut records = Vec::new();
    for &p in primes {
        for &c in classes {
            let order = (p as u128).pow(2 * c - 1);
            if order > ORDER_CAP as u128 {
                records.push(FamilyRecord {
                    p,
                    c,
                    order: order.min(u64::MAX as u128) as u64,
                    skipped: true,
                    skip_reason: Some(format!("order {order} exceeds the cap {ORDER_CAP}")),
                    class_ok: false,
                    gamma_terms_ok: false,
                    gamma_orders: Vec::new(),
                    cocentraliser_closed: false,
                    weak_mp: false,
                    plain_mp: None,
                    failed: false,
                });
                continue;
            }
            let g = build_metacyclic(p, c).expect("family parameters are valid");
            let class_ok = nilpotency_class(&g).is_ok_and(|x| x == c as usize);
            let lcs = lower_central_series(&g);
            let mut gamma_terms_ok = lcs.len() == c as usize + 1;
            let mut gamma_orders = Vec::new();
            for i in 1..=c as usize {
                let api = g.pow(1, (p as i64).pow(i as u32));
                let expect = g.subgroup_closure(&[api]);
                let got = lcs.get(i);
                let ok = got.is_some_and(|s| s.members() == expect.members());
                gamma_terms_ok &= ok;
                gamma_orders.push(got.map_or(0, |s| s.order()));
            }
            let cc_closed = cocentraliser_closed(&g);
            let weak = is_weak_mp_linear(&g).verdict;
            let plain = is_mp(&g).verdict;
            let failed = !(class_ok && gamma_terms_ok && cc_closed && weak);
            records.push(FamilyRecord {
                p,
                c,
                order: order as u64,
                skipped: false,
                skip_reason: None,
                class_ok,
                gamma_terms_ok,
                gamma_orders,
                cocentraliser_closed: cc_closed,
                weak_mp: weak,
                plain_mp: Some(plain),
                failed,
            });
        }
    }
    FamilyReport { records }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_family_passes() {
        let report = verify_gp_family(&[3], &[1, 2]);
        assert!(report.all_passed());
        // (3,1) is cyclic C3: weak and plain MP both hold.
        let r31 = &report.records[0];
        assert_eq!(r31.order, 3);
        assert!(r31.weak_mp);
        assert_eq!(r31.plain_mp, Some(true));
        // (3,2): order 27, gamma_2 of order 3.
        let r32 = &report.records[1];
        assert_eq!(r32.order, 27);
        assert_eq!(r32.gamma_orders, vec![3, 1]);
    }

    #[test]
    fn oversized_entries_are_skipped() {
        let report = verify_gp_family(&[7], &[3]);
        assert!(report.records[0].skipped);
        assert!(report.all_passed());
    }
}
