//! JSON import/export of multiplication tables. All indices are 0-based and
//! imported tables go through full validation.

use crate::error::GroupError;
use crate::group::{Elt, FiniteGroup};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub labels: Vec<String>,
    pub mul: Vec<Vec<Elt>>,
    pub generators: Vec<Elt>,
}

pub fn to_json(g: &FiniteGroup) -> GroupJson {
    GroupJson {
        order: g.order(),
        labels: g.labels().to_vec(),
        mul: g.mul_rows(),
        generators: g.generators().to_vec(),
    }
}

pub fn from_json(doc: &GroupJson) -> Result<FiniteGroup, GroupError> {
    if doc.mul.len() != doc.order {
        return Err(GroupError::BadTable(format!(
            "declared order {} but table has {} rows",
            doc.order,
            doc.mul.len()
        )));
    }
    FiniteGroup::new(doc.mul.clone(), doc.labels.clone(), doc.generators.clone())
}

pub fn to_json_string(g: &FiniteGroup) -> String {
    serde_json::to_string_pretty(&to_json(g)).expect("group serializes")
}

pub fn from_json_str(s: &str) -> Result<FiniteGroup, GroupError> {
    let doc: GroupJson = serde_json::from_str(s)?;
    from_json(&doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_metacyclic;

    #[test]
    fn roundtrip() {
        let g = build_metacyclic(3, 2).unwrap();
        let s = to_json_string(&g);
        let g2 = from_json_str(&s).unwrap();
        assert_eq!(g.order(), g2.order());
        assert_eq!(g.mul_rows(), g2.mul_rows());
        assert_eq!(g.labels(), g2.labels());
    }

    #[test]
    fn import_rejects_broken_table() {
        let g = build_metacyclic(3, 1).unwrap();
        let mut doc = to_json(&g);
        doc.mul[1][2] = 1; // no longer a Latin square
        assert!(from_json(&doc).is_err());
    }
}
