use num_integer::Integer;

use crate::classes::{conjugacy_classes, ConjugacyTable};
use crate::error::GroupError;
use crate::group::FiniteGroup;

/// Arithmetic Frobenius on the anticyclotomic twist of a constant group,
/// optionally composed with conjugation by an element `σ`.
#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    pub q: u64,
    /// `q⁻¹ mod exp(G)`
    pub r: u64,
    pub exponent: usize,
    pub twist: Option<usize>,
    /// `g ↦ σ g^r σ⁻¹`
    pub action: Vec<usize>,
    pub classes: ConjugacyTable,
    /// Permutation of classes induced by `action`.
    pub class_perm: Vec<usize>,
    /// Orbits of nontrivial classes. Each orbit starts at its least class and
    /// lists `c, F(c), F²(c), …`; orbits are sorted by their first class.
    pub class_orbits: Vec<Vec<usize>>,
    /// Orbit index of each class; `None` for the identity class.
    pub orbit_of_class: Vec<Option<usize>>,
}

impl FrobeniusStructure {
    pub fn deg(&self, orbit: usize) -> usize {
        self.class_orbits[orbit].len()
    }
    pub fn num_orbits(&self) -> usize {
        self.class_orbits.len()
    }
    /// Order of `action` as a permutation of G.
    pub fn action_order(&self) -> usize {
        let mut seen = vec![false; self.action.len()];
        let mut ord = 1usize;
        for s in 0..self.action.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.action[x];
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }
    /// Whether a class vector is constant on Frobenius orbits.
    pub fn is_invariant(&self, per_class: &[i64]) -> bool {
        (0..per_class.len()).all(|c| per_class[c] == per_class[self.class_perm[c]])
    }
    /// Whether a set of classes is a union of orbits.
    pub fn is_stable(&self, class_ids: &[usize]) -> bool {
        class_ids.iter().all(|&c| class_ids.contains(&self.class_perm[c]))
    }
}

pub fn frobenius_structure(g: &FiniteGroup, q: u64, twist: Option<usize>) -> Result<FrobeniusStructure, GroupError> {
    if q.gcd(&(g.order() as u64)) != 1 {
        return Err(GroupError::NonCoprimeOrder { q, order: g.order() });
    }
    let exponent = g.exponent();
    let e = exponent as u64;
    let r = if e == 1 { 1 } else { (1..e).find(|&r| (q % e) * r % e == 1).expect("q is a unit mod exp(G)") };
    let sigma = twist.unwrap_or(g.identity());
    let action: Vec<usize> = (0..g.order()).map(|x| g.conj(sigma, g.pow(x, r as i64))).collect();
    let classes = conjugacy_classes(g);
    let class_perm: Vec<usize> = classes.classes.iter().map(|c| classes.class_of[action[c[0]]]).collect();
    let triv = classes.trivial_class();
    let mut orbit_of_class = vec![None; classes.len()];
    let mut class_orbits = Vec::new();
    for c in 0..classes.len() {
        if c == triv || orbit_of_class[c].is_some() {
            continue;
        }
        let mut orbit = vec![c];
        let mut x = class_perm[c];
        while x != c {
            orbit.push(x);
            x = class_perm[x];
        }
        for &y in &orbit {
            orbit_of_class[y] = Some(class_orbits.len());
        }
        class_orbits.push(orbit);
    }
    Ok(FrobeniusStructure { q, r, exponent, twist, action, classes, class_perm, class_orbits, orbit_of_class })
}

/// Number of `F_{q^d}`-points of a class orbit of degree `deg`.
pub fn class_points(deg: usize, d: usize) -> usize {
    if d % deg == 0 {
        deg
    } else {
        0
    }
}
