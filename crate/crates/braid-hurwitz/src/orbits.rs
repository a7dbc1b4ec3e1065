use std::collections::HashMap;
use std::hash::Hash;

use group_core::{ConjugacyTable, FiniteGroup};
use serde::Serialize;

use crate::error::BraidError;
use crate::moves::{braid_move, Direction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitInfo {
    /// Lexicographically least tuple in the orbit.
    pub representative: Vec<usize>,
    pub size: usize,
}

/// Braid orbits on tuples with fixed multidegree and boundary element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCatalog {
    pub nbar: Vec<usize>,
    /// `γ = (g₁⋯g_n)⁻¹`
    pub gamma: usize,
    pub connected: bool,
    pub total_tuples: usize,
    /// Sorted by representative.
    pub orbits: Vec<OrbitInfo>,
}

impl OrbitCatalog {
    pub fn count(&self) -> usize {
        self.orbits.len()
    }
}

/// Number of tuples per class, `|n̄|!/∏ n_c! · ∏ |c|^{n_c}`, saturating.
pub fn admissible_tuple_count(ct: &ConjugacyTable, nbar: &[usize]) -> u128 {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for (c, &k) in nbar.iter().enumerate() {
        let size = ct.classes[c].len() as u128;
        for j in 0..k as u128 {
            placed += 1;
            // multiply by C(placed, j+1)/(...) incrementally: placed/(j+1)
            total = total.saturating_mul(placed).saturating_mul(size) / (j + 1);
        }
    }
    total
}

pub fn multidegree(ct: &ConjugacyTable, t: &[usize]) -> Vec<usize> {
    let mut v = vec![0; ct.len()];
    for &x in t {
        v[ct.class_of[x]] += 1;
    }
    v
}

struct Dsu(Vec<u32>);

impl Dsu {
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.0[r as usize] != r {
            r = self.0[r as usize];
        }
        let mut y = x;
        while self.0[y as usize] != r {
            let next = self.0[y as usize];
            self.0[y as usize] = r;
            y = next;
        }
        r
    }
    // keeps the smaller index as root, so the root is the first tuple seen
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb) as usize] = ra.min(rb);
        }
    }
}

/// Enumerates tuples `(g₁,…,g_n)` with multidegree `nbar` and `(g₁⋯g_n)⁻¹ = γ`,
/// optionally only those generating G, and splits them into braid orbits.
pub fn orbit_enumerate(
    g: &FiniteGroup,
    ct: &ConjugacyTable,
    nbar: &[usize],
    gamma: usize,
    connected: bool,
    budget: u128,
) -> Result<OrbitCatalog, BraidError> {
    if nbar.len() != ct.len() {
        return Err(BraidError::BadMultidegree { got: nbar.len(), expected: ct.len() });
    }
    let attempted = admissible_tuple_count(ct, nbar);
    if attempted > budget {
        return Err(BraidError::BudgetExceeded { attempted, budget });
    }
    let n: usize = nbar.iter().sum();
    if n == 0 {
        let present = gamma == g.identity() && (!connected || g.order() == 1);
        let orbits = if present { vec![OrbitInfo { representative: vec![], size: 1 }] } else { vec![] };
        return Ok(OrbitCatalog { nbar: nbar.to_vec(), gamma, connected, total_tuples: orbits.len(), orbits });
    }
    let tuples = enumerate_tuples(g, ct, nbar, g.inv(gamma), connected);
    let celems = ct.union(&(0..ct.len()).filter(|&c| nbar[c] > 0).collect::<Vec<_>>());
    let orbits = if celems.len() <= 64 && n <= 10 {
        let mut pos = vec![0u64; g.order()];
        for (i, &x) in celems.iter().enumerate() {
            pos[x] = i as u64;
        }
        split_orbits(g, &tuples, n, |t| t.iter().fold(0u64, |acc, &x| acc << 6 | pos[x]))
    } else {
        split_orbits(g, &tuples, n, |t| t.iter().map(|&x| x as u16).collect::<Vec<u16>>())
    };
    Ok(OrbitCatalog { nbar: nbar.to_vec(), gamma, connected, total_tuples: tuples.len() / n, orbits })
}

fn split_orbits<K: Hash + Eq>(g: &FiniteGroup, flat: &[usize], n: usize, key: impl Fn(&[usize]) -> K) -> Vec<OrbitInfo> {
    let count = flat.len() / n;
    let index: HashMap<K, u32> = (0..count).map(|i| (key(&flat[i * n..(i + 1) * n]), i as u32)).collect();
    let mut dsu = Dsu((0..count as u32).collect());
    for i in 0..count {
        let t = &flat[i * n..(i + 1) * n];
        for pos in 1..n {
            let moved = braid_move(g, t, pos, Direction::Left).expect("in range");
            dsu.union(i as u32, index[&key(&moved)]);
        }
    }
    let mut sizes: HashMap<u32, usize> = HashMap::new();
    for i in 0..count as u32 {
        *sizes.entry(dsu.find(i)).or_insert(0) += 1;
    }
    // tuples are generated in lexicographic order, so the root index is the least tuple
    let mut out: Vec<OrbitInfo> = sizes
        .into_iter()
        .map(|(r, size)| OrbitInfo { representative: flat[r as usize * n..(r as usize + 1) * n].to_vec(), size })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// Flat list of admissible tuples in lexicographic order, with product `target`.
fn enumerate_tuples(g: &FiniteGroup, ct: &ConjugacyTable, nbar: &[usize], target: usize, connected: bool) -> Vec<usize> {
    let n: usize = nbar.iter().sum();
    let mut out = Vec::new();
    let celems = ct.union(&(0..ct.len()).filter(|&c| nbar[c] > 0).collect::<Vec<_>>());
    let mut remaining = nbar.to_vec();
    let mut cur = Vec::with_capacity(n);
    let mut gen_memo: HashMap<Vec<u64>, bool> = HashMap::new();
    dfs(g, ct, &celems, &mut remaining, &mut cur, g.identity(), target, n, connected, &mut gen_memo, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    g: &FiniteGroup,
    ct: &ConjugacyTable,
    celems: &[usize],
    remaining: &mut [usize],
    cur: &mut Vec<usize>,
    prod: usize,
    target: usize,
    n: usize,
    connected: bool,
    memo: &mut HashMap<Vec<u64>, bool>,
    out: &mut Vec<usize>,
) {
    if cur.len() + 1 == n {
        // last entry is forced
        let x = g.mul(g.inv(prod), target);
        let c = ct.class_of[x];
        if c < remaining.len() && remaining[c] == 1 {
            cur.push(x);
            if !connected || generates(g, cur, memo) {
                out.extend_from_slice(cur);
            }
            cur.pop();
        }
        return;
    }
    for &x in celems {
        let c = ct.class_of[x];
        if remaining[c] == 0 {
            continue;
        }
        remaining[c] -= 1;
        cur.push(x);
        dfs(g, ct, celems, remaining, cur, g.mul(prod, x), target, n, connected, memo, out);
        cur.pop();
        remaining[c] += 1;
    }
}

fn generates(g: &FiniteGroup, t: &[usize], memo: &mut HashMap<Vec<u64>, bool>) -> bool {
    let mut sig = vec![0u64; g.order().div_ceil(64)];
    for &x in t {
        sig[x / 64] |= 1 << (x % 64);
    }
    *memo.entry(sig).or_insert_with(|| g.generates(t))
}
