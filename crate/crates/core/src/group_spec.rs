//! JSON description of a group: a named type or an explicit Cartan matrix,
//! with optional non-reduced marks and weights.
//!
//! ```json
//! {"type": "B2", "weights": {"2": 3}}
//! {"cartan": [[2, -1], [-2, 2]], "nonreduced": [2]}
//! ```
//!
//! Simple-root indices are 1-based. A weight given for a simple root applies
//! to its whole W-orbit.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::coxeter::{CartanMatrix, GroupConfig, RootSystem, WeightFunction, WeylGroup};
use crate::error::{Error, Result};
use crate::orbit::OrbitModel;

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(rename = "type", default)]
    pub type_name: Option<String>,
    #[serde(default)]
    pub cartan: Option<Vec<Vec<i32>>>,
    #[serde(default)]
    pub nonreduced: Vec<usize>,
    #[serde(default)]
    pub weights: BTreeMap<String, u32>,
}

impl GroupSpec {
    pub fn from_type(name: &str) -> Self {
        GroupSpec {
            type_name: Some(name.to_string()),
            ..Default::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::GroupSpec(e.to_string()))
    }

    fn cartan_matrix(&self) -> Result<CartanMatrix> {
        match (&self.type_name, &self.cartan) {
            (Some(t), None) => CartanMatrix::from_type(t),
            (None, Some(m)) => CartanMatrix::new(m.clone()),
            (Some(_), Some(_)) => Err(Error::GroupSpec(
                "give either \"type\" or \"cartan\", not both".into(),
            )),
            (None, None) => Err(Error::GroupSpec("missing \"type\" or \"cartan\"".into())),
        }
    }

    fn zero_based(&self, i: usize, rank: usize) -> Result<usize> {
        if i == 0 || i > rank {
            Err(Error::IndexOutOfRange { index: i, rank })
        } else {
            Ok(i - 1)
        }
    }

    pub fn build(&self, config: GroupConfig) -> Result<OrbitModel> {
        let cartan = self.cartan_matrix()?;
        let rank = cartan.rank();
        let marks = self
            .nonreduced
            .iter()
            .map(|&i| self.zero_based(i, rank))
            .collect::<Result<Vec<_>>>()?;
        let roots = RootSystem::new(cartan, &marks)?;
        let mut simple = BTreeMap::new();
        for (key, &c) in &self.weights {
            let i: usize = key
                .trim()
                .parse()
                .map_err(|_| Error::GroupSpec(format!("weight key `{key}` is not an index")))?;
            simple.insert(self.zero_based(i, rank)?, c);
        }
        let weights = WeightFunction::from_simple(&roots, &simple)?;
        let group = Arc::new(WeylGroup::new(roots, config)?);
        OrbitModel::with_weights(group, weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_named_and_explicit() {
        let m = GroupSpec::from_json(r#"{"type":"A2"}"#)
            .unwrap()
            .build(GroupConfig::default())
            .unwrap();
        assert_eq!(m.group().order(), 6);
        let m = GroupSpec::from_json(r#"{"cartan":[[2,-2],[-1,2]],"weights":{"1":2}}"#)
            .unwrap()
            .build(GroupConfig::default())
            .unwrap();
        assert_eq!(m.group().order(), 8);
        assert!(!m.weights().is_unit());
    }

    #[test]
    fn nonreduced_marks() {
        let m = GroupSpec::from_json(r#"{"cartan":[[2,-1],[-2,2]],"nonreduced":[2]}"#)
            .unwrap()
            .build(GroupConfig::default())
            .unwrap();
        assert!(!m.group().root_system().is_reduced());
        assert_eq!(m.group().order(), 8);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GroupSpec::from_json(r#"{"type":"A2","cartan":[[2]]}"#)
            .unwrap()
            .build(GroupConfig::default())
            .is_err());
        assert!(GroupSpec::from_json(r#"{}"#)
            .unwrap()
            .build(GroupConfig::default())
            .is_err());
        assert!(GroupSpec::from_json(r#"{"typo":"A2"}"#).is_err());
        assert!(GroupSpec::from_json(r#"{"type":"A2","weights":{"3":1}}"#)
            .unwrap()
            .build(GroupConfig::default())
            .is_err());
        assert!(matches!(
            GroupSpec::from_type("A4").build(GroupConfig { cap: 10 }),
            Err(Error::CapExceeded { cap: 10 })
        ));
    }
}
