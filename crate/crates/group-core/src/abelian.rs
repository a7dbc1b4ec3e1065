use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::frobenius::FrobeniusStructure;
use crate::group::FiniteGroup;

/// Finite abelian group `Z/d₁ × … × Z/d_k` with `d₁ | d₂ | …` and all `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub invariants: Vec<u64>,
}

impl AbelianGroup {
    /// Normalizes an arbitrary list of cyclic orders into invariant-factor form.
    pub fn from_cyclic(orders: &[u64]) -> Self {
        let mut pparts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &n in orders {
            for (p, e) in factor(n) {
                pparts.entry(p).or_default().push(e);
            }
        }
        Self::from_prime_partitions(pparts)
    }

    fn from_prime_partitions(mut pparts: BTreeMap<u64, Vec<u32>>) -> Self {
        let rank = pparts.values().map(|v| v.len()).max().unwrap_or(0);
        let mut inv = vec![1u64; rank];
        for (p, es) in pparts.iter_mut() {
            es.sort_unstable_by(|a, b| b.cmp(a));
            for (i, &e) in es.iter().enumerate() {
                // largest exponent goes into the last factor
                inv[rank - 1 - i] *= p.pow(e);
            }
        }
        AbelianGroup { invariants: inv.into_iter().filter(|&d| d > 1).collect() }
    }

    pub fn trivial() -> Self {
        AbelianGroup { invariants: vec![] }
    }
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }
    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }
}

pub(crate) fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factors of an abelian group given by its table.
///
/// For each prime p the number of elements killed by `p^k` is `p^{Σ min(eᵢ,k)}`,
/// which determines the partition of exponents.
pub fn invariant_factors(g: &FiniteGroup) -> AbelianGroup {
    assert!(g.is_abelian(), "invariant_factors needs an abelian group");
    let orders: Vec<u64> = (0..g.order()).map(|x| g.element_order(x) as u64).collect();
    invariants_from_orders(&orders)
}

/// Same as [`invariant_factors`] from the multiset of element orders of an abelian group.
pub(crate) fn invariants_from_orders(orders: &[u64]) -> AbelianGroup {
    let mut pparts = BTreeMap::new();
    for (p, emax) in factor(orders.len() as u64) {
        // s[k] = Σ min(e_i, k)
        let s: Vec<u32> = (0..=emax + 1)
            .map(|k| {
                let pk = p.pow(k);
                let cnt = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
                ilog(cnt, p)
            })
            .collect();
        // number of e_i >= k is s[k] - s[k-1]
        let ge: Vec<u32> = (1..s.len()).map(|k| s[k] - s[k - 1]).collect();
        let mut exps = Vec::new();
        for k in 1..=ge.len() {
            let here = ge[k - 1] - ge.get(k).copied().unwrap_or(0);
            exps.extend(std::iter::repeat(k as u32).take(here as usize));
        }
        pparts.insert(p, exps);
    }
    AbelianGroup::from_prime_partitions(pparts)
}

fn ilog(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        assert!(n % p == 0, "not a prime power");
        n /= p;
        k += 1;
    }
    k
}

/// `G → G^ab` with the quotient kept as a table.
#[derive(Clone, Debug)]
pub struct Abelianization {
    pub group: AbelianGroup,
    pub quotient: FiniteGroup,
    pub proj: Vec<usize>,
}

impl Abelianization {
    /// Frobenius induced on the quotient.
    pub fn induced_action(&self, g: &FiniteGroup, frob: &FrobeniusStructure) -> Vec<usize> {
        let mut act = vec![usize::MAX; self.quotient.order()];
        for x in 0..g.order() {
            act[self.proj[x]] = self.proj[frob.action[x]];
        }
        act
    }
    /// Brute-force count of Frobenius-fixed points on the quotient.
    pub fn fixed_points(&self, g: &FiniteGroup, frob: &FrobeniusStructure) -> u64 {
        let act = self.induced_action(g, frob);
        act.iter().enumerate().filter(|&(x, &y)| x == y).count() as u64
    }
}

pub fn abelianization(g: &FiniteGroup) -> Abelianization {
    let comm = g.commutator_subgroup();
    let (quotient, proj) = g.quotient(&comm).expect("commutator subgroup is normal");
    let group = invariant_factors(&quotient);
    Abelianization { group, quotient, proj }
}

/// `|A(−1)(F_q)| = #{x : x^{q−1} = 1} = Π gcd(dᵢ, q−1)`.
pub fn twisted_fixed_count(a: &AbelianGroup, q: u64) -> u64 {
    a.invariants.iter().map(|&d| d.gcd(&(q - 1))).product()
}
