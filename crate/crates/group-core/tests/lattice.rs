use std::collections::{BTreeMap, HashMap};

use group_core::*;

// Subsets closed under the group law, by exhaustion.
fn brute_subgroup_count(g: &FiniteGroup) -> usize {
    let n = g.order();
    assert!(n <= 16);
    (0u32..1 << n)
        .filter(|&s| {
            s & 1 == 1
                && (0..n).all(|a| s >> a & 1 == 0 || (0..n).all(|b| s >> b & 1 == 0 || s >> g.mul(a, b) & 1 == 1))
        })
        .count()
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn abelian_groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let mut f = BTreeMap::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        while m % p == 0 {
            *f.entry(p).or_insert(0u32) += 1;
            m /= p;
        }
        p += 1;
    }
    let mut out = vec![vec![]];
    for (&p, &e) in &f {
        let mut next = Vec::new();
        for base in &out {
            for part in partitions(e, e) {
                let mut v: Vec<u64> = base.clone();
                v.extend(part.iter().map(|&k| p.pow(k)));
                next.push(v);
            }
        }
        out = next;
    }
    out.iter().map(|v| AbelianGroup::from_cyclic(v)).collect()
}

// μ(A) = Π_p (−1)^k p^{k(k−1)/2} if each Sylow A_p is elementary abelian of rank k, else 0.
fn closed_form_mu(a: &AbelianGroup) -> i64 {
    let mut sylow: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in &a.invariants {
        let mut m = d;
        let mut p = 2;
        while m > 1 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if e > 0 {
                sylow.entry(p).or_default().push(e);
            }
            p += 1;
        }
    }
    let mut mu = 1i64;
    for (p, es) in sylow {
        if es.iter().any(|&e| e > 1) {
            return 0;
        }
        let k = es.len() as u32;
        mu *= (-1i64).pow(k) * (p as i64).pow(k * (k - 1) / 2);
    }
    mu
}

// An abelian group is determined by the multiset of its element orders.
fn identify(t: &FiniteGroup, sub: &[usize], cache: &mut HashMap<Vec<usize>, AbelianGroup>) -> AbelianGroup {
    let mut orders: Vec<usize> = sub.iter().map(|&x| t.element_order(x)).collect();
    orders.sort_unstable();
    if let Some(a) = cache.get(&orders) {
        return a.clone();
    }
    let a = abelian_groups_of_order(sub.len() as u64)
        .into_iter()
        .find(|a| {
            let mut o = vec![1usize];
            for &d in &a.invariants {
                let d = d as usize;
                o = o.iter().flat_map(|&x| (0..d).map(move |k| num_integer::lcm(x, d / num_integer::gcd(k, d)))).collect();
            }
            o.sort_unstable();
            o == orders
        })
        .unwrap();
    cache.insert(orders, a.clone());
    a
}

#[test]
fn interval_examples() {
    let z4 = FiniteGroup::cyclic(4);
    let iv = subgroup_interval(&z4, &[0]).unwrap();
    assert_eq!(iv.iter().map(|e| e.elements.len()).collect::<Vec<_>>(), vec![1, 2, 4]);
    assert_eq!(iv[0].quotient.invariants, vec![4]);

    let v4 = builtin_group("V4").unwrap();
    assert_eq!(subgroup_interval(&v4, &[0]).unwrap().len(), 5);

    let s3 = FiniteGroup::symmetric(3);
    let a3 = s3.commutator_subgroup();
    let iv = subgroup_interval(&s3, &a3).unwrap();
    assert_eq!(iv.len(), 2);
    assert_eq!(iv[0].elements, a3);
    assert_eq!(iv[0].quotient.invariants, vec![2]);
    assert!(iv[1].quotient.is_trivial());

    assert_eq!(subgroup_interval(&s3, &[0]).unwrap_err(), GroupError::QuotientNotAbelian);
    // a transposition subgroup is not normal
    let t = vec![0, s3.generated_subgroup(&[1])[1]];
    assert_eq!(subgroup_interval(&s3, &t).unwrap_err(), GroupError::NotNormal);
}

#[test]
fn subgroup_counts_match_exhaustion() {
    for name in ["Z4", "V4", "S3", "Z6", "D4", "Q8", "Z2xZ4", "Z2xZ2xZ2", "A4", "Z12"] {
        let g = builtin_group(name).unwrap();
        assert_eq!(all_subgroups(&g).len(), brute_subgroup_count(&g), "{name}");
    }
}

#[test]
fn moebius_examples() {
    let a = |v: Vec<u64>| AbelianGroup { invariants: v };
    assert_eq!(moebius_abelian(&a(vec![])), 1);
    assert_eq!(moebius_abelian(&a(vec![5])), -1);
    assert_eq!(moebius_abelian(&a(vec![2, 2])), 2);
    assert_eq!(moebius_abelian(&a(vec![4])), 0);
}

#[test]
fn moebius_all_abelian_groups_to_128() {
    let mut cache = HashMap::new();
    for n in 1..=128u64 {
        for a in abelian_groups_of_order(n) {
            let mu = moebius_abelian(&a);
            assert_eq!(mu, closed_form_mu(&a), "{:?}", a.invariants);
            // defining recursion over the full subgroup lattice
            if n > 1 {
                let t = abelian_group_table(&a);
                let s: i64 = all_subgroups(&t).iter().map(|sub| moebius_abelian(&identify(&t, sub, &mut cache))).sum();
                assert_eq!(s, 0, "{:?}", a.invariants);
            }
        }
    }
}
