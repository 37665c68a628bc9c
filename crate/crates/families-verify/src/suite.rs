//! One-shot verification suite: every checkable computation in the source
//! material runs with fixed parameters and lands in a JSON bundle whose
//! entries carry their own certificates.

use crate::corpus::{all_normal_subgroups, corpus, corpus_products};
use crate::error::SuiteError;
use crate::example38::verify_example_3_8;
use crate::family::verify_gp_family;
use crate::padic::padic_closure_check;
use group_core::{
    build_quotient, build_three_group, center, check_3group_criterion, cocentraliser_closed,
    derived_subgroup, is_mp, is_weak_mp_linear, verify_counterexample, FiniteGroup,
};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::time::Instant;

pub const SUITE_VERSION: &str = "1";
pub const DEFAULT_SEED: u64 = 0x4D41474E;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub name: String,
    pub params: serde_json::Value,
    pub verdict: String,
    pub expected: String,
    pub runtime_ms: u128,
    pub certificate: serde_json::Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteBundle {
    pub suite_version: String,
    pub seed: u64,
    pub entries: Vec<SuiteEntry>,
}

impl SuiteBundle {
    pub fn passes(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == e.expected)
    }

    /// Byte-stable form: runtimes zeroed (they are the only nondeterminism).
    pub fn canonical_json(&self) -> String {
        let mut b = self.clone();
        for e in &mut b.entries {
            e.runtime_ms = 0;
        }
        serde_json::to_string_pretty(&b).expect("bundle serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bundle serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, SuiteError> {
        Ok(serde_json::from_str(s)?)
    }

    /// The manifest check: every expected entry must be present, including
    /// the expected-failure ones; missing entries invalidate the bundle.
    pub fn check_manifest(&self) -> Result<(), SuiteError> {
        for name in expected_entry_names() {
            if !self.entries.iter().any(|e| e.name == name) {
                return Err(SuiteError::Bundle(format!("missing entry {name}")));
            }
        }
        for e in &self.entries {
            if e.verdict != e.expected {
                return Err(SuiteError::Bundle(format!(
                    "entry {} has verdict {} but expected {}",
                    e.name, e.verdict, e.expected
                )));
            }
        }
        Ok(())
    }
}

pub fn expected_entry_names() -> Vec<String> {
    let mut names = vec![
        "cyclic-mp-table".to_string(),
        "three-group".to_string(),
        "hall-basis-counts".to_string(),
        "build-g9".to_string(),
        "prop-3-6".to_string(),
    ];
    for p in [5, 7, 11, 13] {
        names.push(format!("wreath-witness-{p}"));
    }
    names.push("wreath-witness-3-negative".to_string());
    for c in 1..=3 {
        names.push(format!("prop-4-3-p5-c{c}"));
    }
    for c in 1..=2 {
        names.push(format!("prop-4-5-p5-c{c}"));
    }
    names.push("gp-family".to_string());
    names.push("padic-closure-3-3".to_string());
    names.push("padic-closure-5-2".to_string());
    for c in 1..=3 {
        names.push(format!("example-3-8-c{c}"));
    }
    names.push("lemma-2-7-suite".to_string());
    names.push("cor-2-4-quotients".to_string());
    names.push("retract-inheritance".to_string());
    names.push("commutator-set-criterion".to_string());
    names
}

fn entry<F>(name: &str, params: serde_json::Value, expected: &str, run: F) -> SuiteEntry
where
    F: FnOnce() -> (bool, serde_json::Value),
{
    let t0 = Instant::now();
    let (pass, certificate) = run();
    SuiteEntry {
        name: name.to_string(),
        params,
        verdict: if pass { "pass" } else { "fail" }.to_string(),
        expected: expected.to_string(),
        runtime_ms: t0.elapsed().as_millis(),
        certificate,
    }
}

/// Lemma-style co-centraliser identities, exhaustively over one group.
pub fn cocentraliser_identities_hold(g: &FiniteGroup) -> bool {
    let n = g.order();
    let closures: Vec<_> = g.elements().map(|x| g.normal_closure(&[x])).collect();
    let ccs: Vec<_> = g.elements().map(|x| g.cocentraliser(x)).collect();
    let subset = |a: &[group_core::Elt], b: &[group_core::Elt]| {
        a.iter().all(|x| b.binary_search(x).is_ok())
    };
    for x in 0..n {
        // (1) cc normal and <g>^G = <g> cc(g).
        if !g.is_normal(&ccs[x]) {
            return false;
        }
        let cyclic = g.subgroup_closure(&[x as group_core::Elt]);
        let mut product: Vec<group_core::Elt> = Vec::new();
        for &a in cyclic.members() {
            for &b in ccs[x].members() {
                product.push(g.mul(a, b));
            }
        }
        product.sort_unstable();
        product.dedup();
        if product != closures[x].members() {
            return false;
        }
        // (2) cc(g) = [<g>^G, G].
        let comm = group_core::commutator_with_group(g, &closures[x]);
        if comm.members() != ccs[x].members() {
            return false;
        }
        // (3) h in <g>^G implies cc(h) <= cc(g).
        for &h in closures[x].members() {
            if !subset(ccs[h as usize].members(), ccs[x].members()) {
                return false;
            }
        }
    }
    // (4) equal closures give equal co-centralisers.
    for x in 0..n {
        for y in (x + 1)..n {
            if closures[x].members() == closures[y].members()
                && ccs[x].members() != ccs[y].members()
            {
                return false;
            }
        }
    }
    true
}

pub fn run_full_suite(seed: u64) -> SuiteBundle {
    let mut entries = Vec::new();

    entries.push(entry("cyclic-mp-table", json!({"max_m": 30}), "pass", || {
        let mut table = Vec::new();
        let mut ok = true;
        for m in 1..=30u64 {
            let verdict = is_mp(&group_core::build_cyclic(m).unwrap()).verdict;
            let expect = matches!(m, 1 | 2 | 3 | 4 | 6);
            ok &= verdict == expect;
            table.push(json!({"m": m, "mp": verdict}));
        }
        (ok, json!({ "table": table }))
    }));

    entries.push(entry("three-group", json!({}), "pass", || {
        let g = build_three_group().unwrap();
        let z = center(&g);
        let d = derived_subgroup(&g);
        let q = build_quotient(&g, &z).unwrap();
        let a = 9;
        let a4 = g.pow(a, 4);
        let closure_a = g.normal_closure(&[a]);
        let report = is_mp(&g);
        let criterion = check_3group_criterion(&g);
        let checks = json!({
            "order": g.order(),
            "center_order": z.order(),
            "center_equals_derived": z.members() == d.members(),
            "quotient_order": q.order(),
            "quotient_elementary_abelian":
                q.elements().all(|x| q.pow(x, 3) == 0)
                    && q.elements().all(|x| q.elements().all(|y| q.mul(x,y) == q.mul(y,x))),
            "closure_of_a_order": closure_a.order(),
            "mp_verdict": report.verdict,
            "counterexample": report.counterexample,
            "a_a4_witnesses": verify_counterexample(&g, a, a4),
            "criterion_false": criterion.as_ref().map(|v| !v).unwrap_or(false),
        });
        let ok = g.order() == 243
            && z.order() == 9
            && z.members() == d.members()
            && q.order() == 27
            && closure_a.order() == 27
            && !report.verdict
            && verify_counterexample(&g, a, a4)
            && matches!(criterion, Ok(false));
        (ok, checks)
    }));

    entries.push(entry("hall-basis-counts", json!({}), "pass", || {
        let b43 = free_nilpotent::HallBasis::new(4, 3);
        let b23 = free_nilpotent::HallBasis::new(2, 3);
        let ok = b43.counts_by_weight() == vec![4, 6, 20]
            && b23.counts_by_weight() == vec![2, 1, 2];
        (
            ok,
            json!({"counts_4_3": b43.counts_by_weight(), "counts_2_3": b23.counts_by_weight()}),
        )
    }));

    entries.push(entry("build-g9", json!({}), "pass", || {
        match free_nilpotent::build_g9() {
            Ok((_, cert)) => {
                let ok = cert.hirsch_length == 9
                    && cert.torsion_free
                    && cert.pairing_det.abs() == 1
                    && cert.consistency_ok;
                (ok, serde_json::to_value(&cert).unwrap())
            }
            Err(e) => (false, json!({"error": e.to_string()})),
        }
    }));

    entries.push(entry("prop-3-6", json!({"seed": seed}), "pass", || {
        match free_nilpotent::verify_prop_3_6(seed) {
            Ok(cert) => (cert.holds(), serde_json::to_value(&cert).unwrap()),
            Err(e) => (false, json!({"error": e.to_string()})),
        }
    }));

    for p in [5u64, 7, 11, 13] {
        entries.push(entry(
            &format!("wreath-witness-{p}"),
            json!({"p": p}),
            "pass",
            || match laurent_cyclotomic::verify_wreath_witness(p) {
                Ok(cert) => (
                    cert.verify().is_ok(),
                    serde_json::to_value(&cert).unwrap(),
                ),
                Err(e) => (false, json!({"error": e.to_string()})),
            },
        ));
    }
    {
        // The p = 3 construction must fail with a torsion-unit report.
        let t0 = Instant::now();
        let (verdict, certificate) = match laurent_cyclotomic::verify_wreath_witness(3) {
            Err(laurent_cyclotomic::RingError::TorsionUnit(msg)) => (
                "expected-failure".to_string(),
                json!({"torsion_unit_report": msg}),
            ),
            Err(e) => ("fail".to_string(), json!({"unexpected_error": e.to_string()})),
            Ok(_) => (
                "fail".to_string(),
                json!({"unexpected": "certificate built for p = 3"}),
            ),
        };
        entries.push(SuiteEntry {
            name: "wreath-witness-3-negative".into(),
            params: json!({"p": 3}),
            verdict,
            expected: "expected-failure".into(),
            runtime_ms: t0.elapsed().as_millis(),
            certificate,
        });
    }

    for c in 1..=3usize {
        entries.push(entry(
            &format!("prop-4-3-p5-c{c}"),
            json!({"p": 5, "c": c, "samples": 3, "seed": seed}),
            "pass",
            || match magnus_embedding::verify_prop_4_3(5, c, 3, seed) {
                Ok(cert) => (cert.holds(), serde_json::to_value(&cert).unwrap()),
                Err(e) => (false, json!({"error": e.to_string()})),
            },
        ));
    }

    for c in 1..=2usize {
        entries.push(entry(
            &format!("prop-4-5-p5-c{c}"),
            json!({"p": 5, "c": c, "seed": seed}),
            "pass",
            || match magnus_embedding::verify_prop_4_5(5, c, seed) {
                Ok(cert) => (cert.holds(), serde_json::to_value(&cert).unwrap()),
                Err(e) => (false, json!({"error": e.to_string()})),
            },
        ));
    }

    entries.push(entry(
        "gp-family",
        json!({"primes": [3, 5, 7], "classes": [1, 2, 3]}),
        "pass",
        || {
            let report = verify_gp_family(&[3, 5, 7], &[1, 2, 3]);
            (report.all_passed(), serde_json::to_value(&report).unwrap())
        },
    ));

    for (p, c) in [(3u64, 3u32), (5, 2)] {
        entries.push(entry(
            &format!("padic-closure-{p}-{c}"),
            json!({"p": p, "c": c}),
            "pass",
            || match padic_closure_check(p, c) {
                Ok(cert) => (cert.holds(), serde_json::to_value(&cert).unwrap()),
                Err(e) => (false, json!({"error": e.to_string()})),
            },
        ));
    }

    for c in 1..=3u32 {
        entries.push(entry(
            &format!("example-3-8-c{c}"),
            json!({"c": c, "l_bound": 3i64.pow(c)}),
            "pass",
            || match verify_example_3_8(c, 3i64.pow(c)) {
                Ok(cert) => (cert.holds(), serde_json::to_value(&cert).unwrap()),
                Err(e) => (false, json!({"error": e.to_string()})),
            },
        ));
    }

    entries.push(entry("lemma-2-7-suite", json!({}), "pass", || {
        let mut ok = true;
        let mut checked = Vec::new();
        for (name, g) in corpus() {
            let holds = cocentraliser_identities_hold(&g);
            ok &= holds;
            checked.push(json!({"group": name, "order": g.order(), "ok": holds}));
        }
        (ok, json!({ "groups": checked }))
    }));

    entries.push(entry("cor-2-4-quotients", json!({}), "pass", || {
        let mut ok = true;
        let mut checked = Vec::new();
        for (name, g) in corpus() {
            if !is_mp(&g).verdict {
                continue;
            }
            let normals = all_normal_subgroups(&g);
            let mut all_quotients_mp = true;
            for n in &normals {
                let q = build_quotient(&g, n).expect("normal subgroup");
                all_quotients_mp &= is_mp(&q).verdict;
            }
            ok &= all_quotients_mp;
            checked.push(json!({
                "group": name,
                "normal_subgroups": normals.len(),
                "all_quotients_mp": all_quotients_mp,
            }));
        }
        (ok, json!({ "mp_groups": checked }))
    }));

    entries.push(entry("retract-inheritance", json!({}), "pass", || {
        let mut ok = true;
        let mut checked = Vec::new();
        for (name, prod, h, k) in corpus_products() {
            let mp = is_mp(&prod).verdict;
            let consistent = !mp || (is_mp(&h).verdict && is_mp(&k).verdict);
            ok &= consistent;
            checked.push(json!({"product": name, "mp": mp, "factors_inherit": consistent}));
        }
        (ok, json!({ "products": checked }))
    }));

    entries.push(entry("commutator-set-criterion", json!({}), "pass", || {
        // Closed commutator sets force the bounded Magnus property.
        let mut ok = true;
        let mut checked = Vec::new();
        for (name, g) in corpus() {
            if !cocentraliser_closed(&g) {
                continue;
            }
            let weak = is_weak_mp_linear(&g).verdict;
            ok &= weak;
            checked.push(json!({"group": name, "weak_mp": weak}));
        }
        (ok, json!({ "closed_groups": checked }))
    }));

    SuiteBundle {
        suite_version: SUITE_VERSION.to_string(),
        seed,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_flags_missing_negative_entry() {
        let mut bundle = SuiteBundle {
            suite_version: SUITE_VERSION.into(),
            seed: 1,
            entries: expected_entry_names()
                .into_iter()
                .map(|name| SuiteEntry {
                    name,
                    params: json!({}),
                    verdict: "pass".into(),
                    expected: "pass".into(),
                    runtime_ms: 0,
                    certificate: json!({}),
                })
                .collect(),
        };
        assert!(bundle.check_manifest().is_ok());
        bundle.entries.retain(|e| e.name != "wreath-witness-3-negative");
        let err = bundle.check_manifest().unwrap_err();
        assert!(err.to_string().contains("wreath-witness-3-negative"));
    }

    #[test]
    fn verdict_mismatch_detected() {
        let mut bundle = SuiteBundle {
            suite_version: SUITE_VERSION.into(),
            seed: 1,
            entries: vec![SuiteEntry {
                name: "cyclic-mp-table".into(),
                params: json!({}),
                verdict: "fail".into(),
                expected: "pass".into(),
                runtime_ms: 0,
                certificate: json!({}),
            }],
        };
        assert!(!bundle.passes());
        bundle.entries[0].verdict = "pass".into();
        assert!(bundle.passes());
    }

    #[test]
    fn entry_names_are_unique() {
        let names = expected_entry_names();
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len());
    }
}
