//! Named builtin groups for the command line.

use group_core::{
    build_cyclic, build_dihedral, build_metacyclic, build_three_group, FiniteGroup, GroupError,
};

/// (pattern, description); every name matches exactly one constructor.
pub fn builtin_patterns() -> Vec<(&'static str, &'static str)> {
    vec![
        ("trivial", "the one-element group"),
        ("cyclic-<m>", "cyclic group of order m"),
        ("dihedral-<n>", "dihedral group of (even) order n"),
        (
            "metacyclic-<p>-<c>",
            "the p-group <t,a | [a,t]=a^p, t^(p^(c-1)), a^(p^c)> of order p^(2c-1)",
        ),
        (
            "three-group",
            "<t,a,b | t^3, a^9, b^9, [a,b], [a,t]b^3, [b,t]a^3> of order 243",
        ),
    ]
}

/// Resolves a builtin name; `None` when the name matches no pattern.
pub fn build_builtin(name: &str) -> Option<Result<FiniteGroup, GroupError>> {
    if name == "trivial" {
        return Some(build_cyclic(1));
    }
    if name == "three-group" {
        return Some(build_three_group());
    }
    if let Some(m) = name.strip_prefix("cyclic-") {
        let m: u64 = m.parse().ok()?;
        return Some(build_cyclic(m));
    }
    if let Some(n) = name.strip_prefix("dihedral-") {
        let n: u64 = n.parse().ok()?;
        return Some(build_dihedral(n));
    }
    if let Some(rest) = name.strip_prefix("metacyclic-") {
        let (p, c) = rest.split_once('-')?;
        let p: u64 = p.parse().ok()?;
        let c: u32 = c.parse().ok()?;
        return Some(build_metacyclic(p, c));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(build_builtin("trivial").unwrap().unwrap().order(), 1);
        assert_eq!(build_builtin("cyclic-12").unwrap().unwrap().order(), 12);
        assert_eq!(build_builtin("dihedral-8").unwrap().unwrap().order(), 8);
        assert_eq!(
            build_builtin("metacyclic-3-2").unwrap().unwrap().order(),
            27
        );
        assert_eq!(build_builtin("three-group").unwrap().unwrap().order(), 243);
        assert!(build_builtin("nonsense").is_none());
        assert!(build_builtin("cyclic-x").is_none());
    }

    #[test]
    fn bad_parameters_surface_errors() {
        assert!(build_builtin("metacyclic-4-2").unwrap().is_err());
        assert!(build_builtin("dihedral-7").unwrap().is_err());
    }
}
