use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::abelian::AbelianGroup;
use crate::error::GroupError;
use crate::group::FiniteGroup;
use crate::lattice::abelian_group_table;

/// On-disk group description: permutation generators or a full table.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct GroupSpec {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub perm_generators: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    pub table: Option<Vec<Vec<usize>>>,
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        let name = self.name.as_deref().unwrap_or("G");
        match (&self.perm_generators, &self.table) {
            (Some(gens), None) => {
                if gens.is_empty() {
                    return Err(GroupError::BadSpec("perm_generators is empty".into()));
                }
                FiniteGroup::from_permutations(name, gens)
            }
            (None, Some(t)) => FiniteGroup::from_table(name, t.clone()),
            _ => Err(GroupError::BadSpec("give exactly one of perm_generators or table".into())),
        }
    }
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, GroupError> {
    let text = std::fs::read_to_string(path).map_err(|e| GroupError::BadSpec(format!("{}: {e}", path.display())))?;
    let spec: GroupSpec =
        serde_json::from_str(&text).map_err(|e| GroupError::BadSpec(format!("{}: {e}", path.display())))?;
    spec.build()
}

/// Named groups: `Zn`, `Dn` (order 2n), `Sn`, `An`, `Q8`, `V4`, `PSL2_p`, and
/// products like `Z2xZ4`.
pub fn builtin_group(name: &str) -> Result<FiniteGroup, GroupError> {
    let bad = || GroupError::BadSpec(format!("unknown group name {name:?}"));
    if name.contains('x') {
        let parts: Vec<&str> = name.split('x').collect();
        if parts.iter().all(|p| p.starts_with('Z')) {
            let orders: Result<Vec<u64>, _> = parts.iter().map(|p| p[1..].parse::<u64>()).collect();
            let orders = orders.map_err(|_| bad())?;
            return Ok(abelian_group_table(&AbelianGroup { invariants: orders }).renamed(name));
        }
        let mut it = parts.iter().map(|p| builtin_group(p));
        let first = it.next().ok_or_else(bad)??;
        return it.try_fold(first, |acc, h| Ok(FiniteGroup::direct_product(&acc, &h?)));
    }
    let num = |prefix: &str| name.strip_prefix(prefix).and_then(|s| s.parse::<usize>().ok()).filter(|&n| n >= 1);
    match name {
        "Q8" => return Ok(FiniteGroup::quaternion()),
        "V4" => return builtin_group("Z2xZ2"),
        _ => {}
    }
    if let Some(p) = num("PSL2_") {
        return Ok(FiniteGroup::psl2(p));
    }
    if let Some(n) = num("Z") {
        return Ok(FiniteGroup::cyclic(n));
    }
    if let Some(n) = num("D").filter(|&n| n >= 3) {
        return Ok(FiniteGroup::dihedral(n));
    }
    if let Some(n) = num("S") {
        return Ok(FiniteGroup::symmetric(n));
    }
    if let Some(n) = num("A").filter(|&n| n >= 3) {
        return Ok(FiniteGroup::alternating(n));
    }
    Err(bad())
}
