use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use crate::abelian::{invariant_factors, invariants_from_orders, AbelianGroup};
use crate::error::GroupError;
use crate::group::FiniteGroup;

/// Table of `Z/d₁ × … × Z/d_k` in mixed radix, last coordinate fastest.
pub fn abelian_group_table(a: &AbelianGroup) -> FiniteGroup {
    let dims = &a.invariants;
    let n: usize = dims.iter().map(|&d| d as usize).product();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut v = vec![0; dims.len()];
        for i in (0..dims.len()).rev() {
            v[i] = x % dims[i] as usize;
            x /= dims[i] as usize;
        }
        v
    };
    let table = (0..n)
        .map(|x| {
            let dx = digits(x);
            (0..n)
                .map(|y| {
                    let dy = digits(y);
                    dims.iter().enumerate().fold(0, |acc, (i, &d)| acc * d as usize + (dx[i] + dy[i]) % d as usize)
                })
                .collect()
        })
        .collect();
    let name = if dims.is_empty() {
        "1".to_string()
    } else {
        dims.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join("x")
    };
    FiniteGroup::from_table(&name, table).expect("abelian table")
}

fn to_bits(n: usize, elems: &[usize]) -> Vec<u64> {
    let mut b = vec![0u64; n.div_ceil(64)];
    for &e in elems {
        b[e / 64] |= 1 << (e % 64);
    }
    b
}

fn has(bits: &[u64], e: usize) -> bool {
    bits[e / 64] >> (e % 64) & 1 == 1
}

/// Every subgroup of `g` as a sorted element list, smallest first.
///
/// Every subgroup is a join of cyclic subgroups, so the list is closed under
/// `H ↦ ⟨H, x⟩` with x running over generators of distinct cyclic subgroups.
/// In the abelian case `⟨H, x⟩/H` is cyclic, and any y generating it gives the
/// same join, so such y are skipped for this H.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let abelian = g.is_abelian();
    let mut cyclic_seen: HashSet<Vec<u64>> = HashSet::new();
    let mut cyclic_gens = Vec::new();
    for x in 1..n {
        if cyclic_seen.insert(to_bits(n, &g.generated_subgroup(&[x]))) {
            cyclic_gens.push(x);
        }
    }
    let trivial = vec![g.identity()];
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(to_bits(n, &trivial));
    // (elements, generators)
    let mut subs: Vec<(Vec<usize>, Vec<usize>)> = vec![(trivial, vec![])];
    let mut i = 0;
    while i < subs.len() {
        let (elems, gens) = subs[i].clone();
        let mask = to_bits(n, &elems);
        let mut covered = mask.clone();
        for &x in &cyclic_gens {
            if has(&covered, x) {
                continue;
            }
            let join = if abelian {
                abelian_join(g, &elems, &mask, x, &mut covered)
            } else {
                join_with(g, &elems, &mask, &gens, x)
            };
            let bits = to_bits(n, &join);
            if seen.insert(bits) {
                let mut ng = gens.clone();
                ng.push(x);
                subs.push((join, ng));
            }
        }
        i += 1;
    }
    let mut out: Vec<Vec<usize>> = subs.into_iter().map(|(e, _)| e).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `⟨H, x⟩ = ⋃ H·xᵏ`; marks the cosets `H·xᵏ` with `gcd(k, m) = 1` in `covered`.
fn abelian_join(g: &FiniteGroup, elems: &[usize], mask: &[u64], x: usize, covered: &mut [u64]) -> Vec<usize> {
    let mut m = 1;
    let mut p = x;
    while !has(mask, p) {
        p = g.mul(p, x);
        m += 1;
    }
    let mut out = Vec::with_capacity(elems.len() * m);
    let mut xk = g.identity();
    for k in 0..m {
        let gen = num_integer::gcd(k, m) == 1;
        for &h in elems {
            let y = g.mul(h, xk);
            out.push(y);
            if gen {
                covered[y / 64] |= 1 << (y % 64);
            }
        }
        xk = g.mul(xk, x);
    }
    out.sort_unstable();
    out
}

/// `⟨H, x⟩` grown from the elements of H by right multiplication with the generators.
fn join_with(g: &FiniteGroup, elems: &[usize], mask: &[u64], gens: &[usize], x: usize) -> Vec<usize> {
    let mut inside = mask.to_vec();
    let mut out = elems.to_vec();
    let mut stack = elems.to_vec();
    while let Some(y) = stack.pop() {
        for &s in gens.iter().chain(std::iter::once(&x)) {
            let z = g.mul(y, s);
            if !has(&inside, z) {
                inside[z / 64] |= 1 << (z % 64);
                out.push(z);
                stack.push(z);
            }
        }
    }
    out.sort_unstable();
    out
}

/// A subgroup `M ⊆ L ⊆ G` with the abelian quotient `G/L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalEntry {
    pub elements: Vec<usize>,
    pub quotient: AbelianGroup,
}

pub fn subgroup_interval(g: &FiniteGroup, m: &[usize]) -> Result<Vec<IntervalEntry>, GroupError> {
    if !g.is_subgroup(m) || !g.is_normal(m) {
        return Err(GroupError::NotNormal);
    }
    let (gm, proj) = g.quotient(m)?;
    if !gm.is_abelian() {
        return Err(GroupError::QuotientNotAbelian);
    }
    let mut out = Vec::new();
    for sub in all_subgroups(&gm) {
        let mask = to_bits(gm.order(), &sub);
        let elements: Vec<usize> = (0..g.order()).filter(|&x| has(&mask, proj[x])).collect();
        let (gl, _) = gm.quotient(&sub)?;
        out.push(IntervalEntry { elements, quotient: invariant_factors(&gl) });
    }
    Ok(out)
}

fn memo() -> &'static Mutex<HashMap<AbelianGroup, i64>> {
    static M: OnceLock<Mutex<HashMap<AbelianGroup, i64>>> = OnceLock::new();
    M.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Möbius function of the subgroup lattice, `μ(A) = [A = 0] − Σ_{B ⊊ A} μ(B)`.
///
/// μ(B) only depends on the isomorphism type of B, so values are cached by invariants.
pub fn moebius_abelian(a: &AbelianGroup) -> i64 {
    if a.is_trivial() {
        return 1;
    }
    if let Some(&v) = memo().lock().unwrap().get(a) {
        return v;
    }
    let table = abelian_group_table(a);
    let mut s = 0i64;
    for sub in all_subgroups(&table) {
        if sub.len() == table.order() {
            continue;
        }
        let orders: Vec<u64> = sub.iter().map(|&x| table.element_order(x) as u64).collect();
        let b = invariants_from_orders(&orders);
        s += moebius_abelian(&b);
    }
    let v = -s;
    memo().lock().unwrap().insert(a.clone(), v);
    v
}
