//! The fixed test corpus of finite groups that the invariant suites sweep.

use group_core::{
    build_cyclic, build_dihedral, build_direct_product, build_metacyclic, build_quotient,
    build_three_group, center, derived_subgroup, lower_central_series, FiniteGroup,
};

/// Named corpus groups, all of order <= 512.
pub fn corpus() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    for m in 1..=30u64 {
        out.push((format!("cyclic-{m}"), build_cyclic(m).unwrap()));
    }
    let three = build_three_group().unwrap();
    out.push(("three-group".into(), three.clone()));
    for (p, c) in [(3u64, 1u32), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)] {
        out.push((
            format!("metacyclic-{p}-{c}"),
            build_metacyclic(p, c).unwrap(),
        ));
    }
    out.push(("dihedral-6".into(), build_dihedral(6).unwrap()));
    out.push(("dihedral-8".into(), build_dihedral(8).unwrap()));

    let c2 = build_cyclic(2).unwrap();
    let c3 = build_cyclic(3).unwrap();
    let c9 = build_cyclic(9).unwrap();
    let m32 = build_metacyclic(3, 2).unwrap();
    out.push(("c2xc2".into(), build_direct_product(&c2, &c2).unwrap()));
    out.push(("c2xc3".into(), build_direct_product(&c2, &c3).unwrap()));
    out.push(("c3xc3".into(), build_direct_product(&c3, &c3).unwrap()));
    out.push(("c3xc9".into(), build_direct_product(&c3, &c9).unwrap()));
    out.push((
        "metacyclic-3-2xc2".into(),
        build_direct_product(&m32, &c2).unwrap(),
    ));
    out.push((
        "three-groupxc2".into(),
        build_direct_product(&three, &c2).unwrap(),
    ));

    out.push((
        "three-group-mod-center".into(),
        build_quotient(&three, &center(&three)).unwrap(),
    ));
    let m33 = build_metacyclic(3, 3).unwrap();
    let gamma3 = &lower_central_series(&m33)[2];
    out.push((
        "metacyclic-3-3-mod-gamma3".into(),
        build_quotient(&m33, gamma3).unwrap(),
    ));
    let d = derived_subgroup(&three);
    debug_assert_eq!(d.order(), 9);
    out
}

/// The direct products in the corpus with their factors, for the retract
/// inheritance sweep.
pub fn corpus_products() -> Vec<(String, FiniteGroup, FiniteGroup, FiniteGroup)> {
    let c2 = build_cyclic(2).unwrap();
    let c3 = build_cyclic(3).unwrap();
    let c9 = build_cyclic(9).unwrap();
    let m32 = build_metacyclic(3, 2).unwrap();
    let three = build_three_group().unwrap();
    vec![
        (
            "c2xc2".into(),
            build_direct_product(&c2, &c2).unwrap(),
            c2.clone(),
            c2.clone(),
        ),
        (
            "c2xc3".into(),
            build_direct_product(&c2, &c3).unwrap(),
            c2.clone(),
            c3.clone(),
        ),
        (
            "c3xc3".into(),
            build_direct_product(&c3, &c3).unwrap(),
            c3.clone(),
            c3.clone(),
        ),
        (
            "c3xc9".into(),
            build_direct_product(&c3, &c9).unwrap(),
            c3.clone(),
            c9.clone(),
        ),
        (
            "metacyclic-3-2xc2".into(),
            build_direct_product(&m32, &c2).unwrap(),
            m32,
            c2.clone(),
        ),
        (
            "three-groupxc2".into(),
            build_direct_product(&three, &c2).unwrap(),
            three,
            c2,
        ),
    ]
}

/// All normal subgroups, as the join-closure of the cyclic normal closures.
pub fn all_normal_subgroups(g: &FiniteGroup) -> Vec<group_core::Subgroup> {
    use std::collections::BTreeSet;
    let mut seen: BTreeSet<Vec<group_core::Elt>> = BTreeSet::new();
    seen.insert(vec![0]);
    for x in g.elements() {
        seen.insert(g.normal_closure(&[x]).members().to_vec());
    }
    loop {
        let snapshot: Vec<Vec<group_core::Elt>> = seen.iter().cloned().collect();
        let before = seen.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                let mut gens = a.clone();
                gens.extend_from_slice(b);
                seen.insert(g.subgroup_closure(&gens).members().to_vec());
            }
        }
        if seen.len() == before {
            break;
        }
    }
    seen.into_iter()
        .map(|members| group_core::Subgroup::new(g, members).expect("join of normals"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_bounded_and_nonempty() {
        let c = corpus();
        assert!(c.len() > 40);
        for (name, g) in &c {
            assert!(g.order() <= 512, "{name} exceeds the corpus bound");
        }
    }

    #[test]
    fn normal_subgroups_of_c6() {
        let g = build_cyclic(6).unwrap();
        let ns = all_normal_subgroups(&g);
        // Divisor count: 1, 2, 3, 6.
        assert_eq!(ns.len(), 4);
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let g = build_dihedral(6).unwrap();
        let ns = all_normal_subgroups(&g);
        // 1, A3, S3.
        assert_eq!(ns.len(), 3);
    }
}
