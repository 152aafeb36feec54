//! W-invariant positive weights on roots.

use std::collections::BTreeMap;

use crate::coxeter::roots::RootSystem;
use crate::error::{Error, Result};

/// A positive weight `c(α)` on the non-divisible positive roots, constant on
/// W-orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    values: Vec<u32>,
}

impl WeightFunction {
    pub fn unit(roots: &RootSystem) -> Self {
        WeightFunction {
            values: vec![1; roots.reduced_count()],
        }
    }

    /// Weights indexed by reduced positive root; checked for positivity and
    /// W-invariance.
    pub fn new(roots: &RootSystem, values: Vec<u32>) -> Result<Self> {
        if values.len() != roots.reduced_count() {
            return Err(Error::InvalidWeights(format!(
                "expected {} weights, got {}",
                roots.reduced_count(),
                values.len()
            )));
        }
        if let Some(k) = values.iter().position(|&v| v == 0) {
            return Err(Error::InvalidWeights(format!(
                "weight of root {:?} is not positive",
                roots.positive_roots()[k]
            )));
        }
        let orbits = roots.root_orbits();
        for k in 0..values.len() {
            for i in 0..roots.rank() {
                let m = roots.reflect_positive(i, k);
                if values[m] != values[k] {
                    return Err(Error::InvalidWeights(format!(
                        "weights differ on roots {:?} and {:?} in orbit {}",
                        roots.positive_roots()[k],
                        roots.positive_roots()[m],
                        orbits[k]
                    )));
                }
            }
        }
        Ok(WeightFunction { values })
    }

    /// Extends weights given on some simple roots (0-based) to their
    /// W-orbits; unspecified orbits get weight 1.
    pub fn from_simple(roots: &RootSystem, simple: &BTreeMap<usize, u32>) -> Result<Self> {
        let orbits = roots.root_orbits();
        let mut per_orbit: BTreeMap<usize, (usize, u32)> = BTreeMap::new();
        for (&i, &c) in simple {
            if i >= roots.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i + 1,
                    rank: roots.rank(),
                });
            }
            if c == 0 {
                return Err(Error::InvalidWeights(format!(
                    "weight of simple root {} is not positive",
                    i + 1
                )));
            }
            let orbit = orbits[roots.simple_root_index(i)];
            match per_orbit.insert(orbit, (i, c)) {
                Some((j, d)) if d != c => {
                    return Err(Error::InvalidWeights(format!(
                        "simple roots {} and {} are W-conjugate but have weights {} and {}",
                        j + 1,
                        i + 1,
                        d,
                        c
                    )))
                }
                _ => {}
            }
        }
        let values = (0..roots.reduced_count())
            .map(|k| per_orbit.get(&orbits[k]).map_or(1, |&(_, c)| c))
            .collect();
        Ok(WeightFunction { values })
    }

    /// Weight of the reduced positive root with the given index.
    pub fn weight(&self, k: usize) -> u32 {
        self.values[k]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn is_unit(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn propagate_over_orbits() {
        let r = RootSystem::from_type("B2").unwrap();
        let c = WeightFunction::from_simple(&r, &BTreeMap::from([(1, 3)])).unwrap();
        // two short roots and two long roots
        let short: Vec<u32> = (0..4).map(|k| c.weight(k)).collect();
        assert_eq!(short.iter().filter(|&&v| v == 3).count(), 2);
        assert_eq!(short.iter().filter(|&&v| v == 1).count(), 2);
        assert!(!c.is_unit());
    }

    #[test]
    fn conjugate_simple_roots_must_agree() {
        let r = RootSystem::from_type("A2").unwrap();
        let err = WeightFunction::from_simple(&r, &BTreeMap::from([(0, 1), (1, 2)]));
        assert!(matches!(err, Err(Error::InvalidWeights(_))));
        assert!(WeightFunction::from_simple(&r, &BTreeMap::from([(0, 2), (1, 2)])).is_ok());
    }

    #[test]
    fn explicit_weights_checked() {
        let r = RootSystem::from_type("A2").unwrap();
        assert!(WeightFunction::new(&r, vec![1, 1, 2]).is_err());
        assert!(WeightFunction::new(&r, vec![0, 0, 0]).is_err());
        assert!(WeightFunction::new(&r, vec![2, 2, 2]).is_ok());
    }
}
