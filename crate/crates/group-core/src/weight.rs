use serde::{Deserialize, Serialize};

use crate::error::GroupError;
use crate::frobenius::FrobeniusStructure;

/// Weight `f` on the Frobenius orbits of nontrivial classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightFunction {
    /// `f` per class orbit, indexed like `FrobeniusStructure::class_orbits`.
    pub f: Vec<u64>,
    pub fmin: u64,
    /// Orbits where `f` is minimal.
    pub c_f: Vec<usize>,
}

impl WeightFunction {
    pub fn new(f: Vec<u64>) -> Result<Self, GroupError> {
        if f.is_empty() || f.iter().any(|&x| x == 0) {
            return Err(GroupError::BadSpec("weights must be positive and nonempty".into()));
        }
        let fmin = *f.iter().min().unwrap();
        let c_f = (0..f.len()).filter(|&i| f[i] == fmin).collect();
        Ok(WeightFunction { f, fmin, c_f })
    }

    pub fn constant(frob: &FrobeniusStructure, value: u64) -> Self {
        Self::new(vec![value; frob.num_orbits()]).expect("positive constant")
    }

    /// Builds from one value per conjugacy class (the identity class is ignored).
    pub fn from_classes(frob: &FrobeniusStructure, per_class: &[u64]) -> Result<Self, GroupError> {
        let mut f = Vec::with_capacity(frob.num_orbits());
        for orbit in &frob.class_orbits {
            let v = per_class[orbit[0]];
            if orbit.iter().any(|&c| per_class[c] != v) {
                return Err(GroupError::NotConstantOnOrbits);
            }
            f.push(v);
        }
        Self::new(f)
    }

    /// `a(f) = 1/fmin` as `(numerator, denominator)`.
    pub fn a(&self) -> (u64, u64) {
        (1, self.fmin)
    }
    pub fn b(&self) -> usize {
        self.c_f.len()
    }
    /// `f` of a class, or 0 for the identity class.
    pub fn of_class(&self, frob: &FrobeniusStructure, class: usize) -> u64 {
        frob.orbit_of_class[class].map_or(0, |o| self.f[o])
    }
    /// Classes (not orbits) in `C_f`.
    pub fn c_f_classes(&self, frob: &FrobeniusStructure) -> Vec<usize> {
        let mut v: Vec<usize> = self.c_f.iter().flat_map(|&o| frob.class_orbits[o].iter().copied()).collect();
        v.sort_unstable();
        v
    }
}
