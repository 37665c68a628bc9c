//! Central and derived series by brute force on the multiplication table.

use crate::error::GroupError;
use crate::group::{Elt, FiniteGroup, Subgroup};

/// Z(G): elements commuting with every generator.
pub fn center(g: &FiniteGroup) -> Subgroup {
    let members: Vec<Elt> = g
        .elements()
        .filter(|&x| g.generators().iter().all(|&t| g.mul(x, t) == g.mul(t, x)))
        .collect();
    Subgroup::new(g, members).expect("center is a subgroup")
}

/// Upper central series 1 = Z_0 <= Z_1 <= ... up to its stable term.
pub fn upper_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut series = vec![Subgroup::trivial()];
    loop {
        let prev = series.last().unwrap();
        let mut in_prev = vec![false; g.order()];
        for &m in prev.members() {
            in_prev[m as usize] = true;
        }
        let members: Vec<Elt> = g
            .elements()
            .filter(|&x| {
                g.generators()
                    .iter()
                    .all(|&t| in_prev[g.comm(x, t) as usize])
            })
            .collect();
        if members.len() == prev.order() {
            return series;
        }
        series.push(Subgroup::new(g, members).expect("upper central term is a subgroup"));
    }
}

/// [H, G]: normal closure of the commutators of H-members with generators.
pub fn commutator_with_group(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut seed = Vec::new();
    for &x in h.members() {
        for &t in g.generators() {
            seed.push(g.comm(x, t));
        }
    }
    g.normal_closure(&seed)
}

/// Lower central series G = γ_1 >= γ_2 >= ..., ending at its stable term.
pub fn lower_central_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = Subgroup::new(g, g.elements().collect()).expect("whole group");
    let mut series = vec![whole];
    loop {
        let next = commutator_with_group(g, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

/// [H, H] as a subgroup of G.
pub fn derived_of(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    let mut seen = vec![false; g.order()];
    let mut seed = Vec::new();
    for &x in h.members() {
        for &y in h.members() {
            let c = g.comm(x, y);
            if !seen[c as usize] {
                seen[c as usize] = true;
                seed.push(c);
            }
        }
    }
    g.subgroup_closure(&seed)
}

/// Derived series G >= [G,G] >= ... down to its stable term.
pub fn derived_series(g: &FiniteGroup) -> Vec<Subgroup> {
    let whole = Subgroup::new(g, g.elements().collect()).expect("whole group");
    let mut series = vec![whole];
    loop {
        let next = derived_of(g, series.last().unwrap());
        if next.order() == series.last().unwrap().order() {
            return series;
        }
        series.push(next);
    }
}

/// The derived subgroup [G,G].
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let series = lower_central_series(g);
    if series.len() > 1 {
        series[1].clone()
    } else {
        Subgroup::trivial()
    }
}

/// Nilpotency class: length of the lower central series to triviality minus
/// one. Fails on non-nilpotent input.
pub fn nilpotency_class(g: &FiniteGroup) -> Result<usize, GroupError> {
    let series = lower_central_series(g);
    if series.last().unwrap().is_trivial() {
        Ok(series.len() - 1)
    } else {
        Err(GroupError::NotNilpotent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, build_dihedral, build_metacyclic, build_three_group};

    #[test]
    fn abelian_class_one() {
        let g = build_cyclic(12).unwrap();
        assert_eq!(nilpotency_class(&g).unwrap(), 1);
        let lcs = lower_central_series(&g);
        assert_eq!(lcs.len(), 2);
        assert!(lcs[1].is_trivial());
    }

    #[test]
    fn trivial_group_class_zero() {
        let g = build_cyclic(1).unwrap();
        assert_eq!(nilpotency_class(&g).unwrap(), 0);
    }

    #[test]
    fn s3_not_nilpotent() {
        let g = build_dihedral(6).unwrap();
        assert!(matches!(nilpotency_class(&g), Err(GroupError::NotNilpotent)));
    }

    #[test]
    fn metacyclic_class_and_gamma_terms() {
        // class exactly c, gamma_{i+1} = <a^{p^i}>
        for (p, c) in [(3u64, 1u32), (3, 2), (5, 2), (3, 3)] {
            let g = build_metacyclic(p, c).unwrap();
            assert_eq!(nilpotency_class(&g).unwrap(), c as usize, "p={p} c={c}");
            let lcs = lower_central_series(&g);
            for i in 1..=c as usize {
                let api = g.pow(1, p.pow(i as u32) as i64);
                let expect = g.subgroup_closure(&[api]);
                assert_eq!(lcs[i].members(), expect.members(), "gamma_{} p={p} c={c}", i + 1);
            }
        }
    }

    #[test]
    fn three_group_center_equals_derived() {
        let g = build_three_group().unwrap();
        assert_eq!(nilpotency_class(&g).unwrap(), 2);
        let z = center(&g);
        let d = derived_subgroup(&g);
        assert_eq!(z.members(), d.members());
        assert_eq!(z.order(), 9);
        // Z(G) = <a^3, b^3>
        let expect = g.subgroup_closure(&[g.pow(9, 3), g.pow(1, 3)]);
        assert_eq!(z.members(), expect.members());
    }

    #[test]
    fn upper_series_reaches_whole_group_when_nilpotent() {
        let g = build_metacyclic(3, 2).unwrap();
        let ucs = upper_central_series(&g);
        assert_eq!(ucs.last().unwrap().order(), g.order());
        assert_eq!(ucs.len() - 1, 2);
    }
}
