use std::collections::{BTreeSet, HashSet, VecDeque};

use braid_hurwitz::*;
use group_core::{builtin_group, conjugacy_classes, ConjugacyTable, FiniteGroup};
use proptest::prelude::*;

const BUDGET: u128 = 10_000_000;

// S3 elements in the library's order: permutations of {0,1,2} sorted by image vector.
fn s3_perms() -> Vec<[usize; 3]> {
    let mut v = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    v.sort();
    v
}

fn perm_index(p: [usize; 3]) -> usize {
    s3_perms().iter().position(|&q| q == p).unwrap()
}

// Naive orbit oracle: all tuples over the given elements, closed under both moves.
fn naive_orbit_sizes(g: &FiniteGroup, ct: &ConjugacyTable, nbar: &[usize], gamma: usize, connected: bool) -> Vec<usize> {
    let n: usize = nbar.iter().sum();
    let elems: Vec<usize> = (0..g.order()).filter(|&x| nbar[ct.class_of[x]] > 0).collect();
    let mut all = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let t: Vec<usize> = idx.iter().map(|&i| elems[i]).collect();
        let mut md = vec![0; ct.len()];
        t.iter().for_each(|&x| md[ct.class_of[x]] += 1);
        let prod = t.iter().fold(0, |a, &x| g.mul(a, x));
        if md == nbar && g.inv(prod) == gamma && (!connected || g.generated_subgroup(&t).len() == g.order()) {
            all.push(t);
        }
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut sizes = Vec::new();
    for t in all {
        if seen.contains(&t) {
            continue;
        }
        let mut size = 0;
        let mut q = VecDeque::from([t.clone()]);
        seen.insert(t);
        while let Some(u) = q.pop_front() {
            size += 1;
            for i in 1..n {
                for d in [Direction::Left, Direction::Right] {
                    let mut w = u.clone();
                    let (a, b) = (u[i - 1], u[i]);
                    match d {
                        Direction::Left => {
                            w[i - 1] = g.mul(g.mul(a, b), g.inv(a));
                            w[i] = a;
                        }
                        Direction::Right => {
                            w[i - 1] = b;
                            w[i] = g.mul(g.mul(g.inv(b), a), b);
                        }
                    }
                    if seen.insert(w.clone()) {
                        q.push_back(w);
                    }
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable();
    sizes
}

fn sizes(cat: &OrbitCatalog) -> Vec<usize> {
    let mut v: Vec<usize> = cat.orbits.iter().map(|o| o.size).collect();
    v.sort_unstable();
    v
}

#[test]
fn s3_move_examples() {
    let g = FiniteGroup::symmetric(3);
    let t12 = perm_index([1, 0, 2]);
    let t23 = perm_index([0, 2, 1]);
    let t13 = perm_index([2, 1, 0]);
    assert_eq!(braid_move(&g, &[t12, t23], 1, Direction::Left).unwrap(), vec![t13, t12]);
    for x in 0..6 {
        assert_eq!(braid_move(&g, &[x, x], 1, Direction::Left).unwrap(), vec![x, x]);
    }
    // ((123),(12)) ↦ ((12), (12)⁻¹(123)(12)); the conjugate is the other 3-cycle
    let c123 = perm_index([1, 2, 0]);
    let c132 = perm_index([2, 0, 1]);
    assert_eq!(braid_move(&g, &[c123, t12], 1, Direction::Right).unwrap(), vec![t12, c132]);
    assert_eq!(
        braid_move(&g, &[t12], 1, Direction::Left).unwrap_err(),
        BraidError::IndexOutOfRange { index: 1, len: 1 }
    );
    assert!(braid_move(&g, &[t12, t13], 0, Direction::Left).is_err());
}

#[test]
fn s3_transpositions_one_orbit() {
    let g = FiniteGroup::symmetric(3);
    let ct = conjugacy_classes(&g);
    let nbar = vec![0, 4, 0];
    let cat = orbit_enumerate(&g, &ct, &nbar, 0, true, BUDGET).unwrap();
    assert_eq!(cat.count(), 1);
    assert_eq!(sizes(&cat), naive_orbit_sizes(&g, &ct, &nbar, 0, true));
}

#[test]
fn z2_single_orbit() {
    let g = FiniteGroup::cyclic(2);
    let ct = conjugacy_classes(&g);
    for n in 1..8 {
        let gamma = g.pow(1, -(n as i64));
        let cat = orbit_enumerate(&g, &ct, &[0, n], gamma, false, BUDGET).unwrap();
        assert_eq!(cat.count(), 1);
        assert_eq!(cat.orbits[0].size, 1);
        assert_eq!(cat.orbits[0].representative, vec![1; n]);
        let wrong = orbit_enumerate(&g, &ct, &[0, n], g.mul(gamma, 1), false, BUDGET).unwrap();
        assert_eq!(wrong.count(), 0);
    }
}

#[test]
fn empty_tuple() {
    let g = FiniteGroup::symmetric(3);
    let ct = conjugacy_classes(&g);
    assert_eq!(orbit_enumerate(&g, &ct, &[0, 0, 0], 0, false, BUDGET).unwrap().count(), 1);
    assert_eq!(orbit_enumerate(&g, &ct, &[0, 0, 0], 0, true, BUDGET).unwrap().count(), 0);
}

#[test]
fn matches_naive_oracle_on_corpus() {
    let cases: Vec<(&str, Vec<Vec<usize>>)> = vec![
        ("S3", vec![vec![0, 2, 0], vec![0, 3, 1], vec![0, 2, 2], vec![0, 4, 0], vec![0, 1, 3]]),
        ("D4", vec![vec![0, 0, 1, 1, 2], vec![0, 1, 2, 2, 0], vec![0, 0, 2, 2, 0]]),
        ("Q8", vec![vec![0, 0, 2, 2, 0], vec![0, 0, 1, 1, 2], vec![0, 1, 1, 1, 1]]),
        ("V4", vec![vec![0, 2, 2, 2], vec![0, 1, 1, 2]]),
        ("A4", vec![vec![0, 0, 2, 2], vec![0, 2, 1, 1]]),
    ];
    for (name, nbars) in cases {
        let g = builtin_group(name).unwrap();
        let ct = conjugacy_classes(&g);
        for nbar in nbars {
            let nbar: Vec<usize> = nbar.into_iter().chain(std::iter::repeat(0)).take(ct.len()).collect();
            for gamma in 0..g.order() {
                for connected in [false, true] {
                    let cat = orbit_enumerate(&g, &ct, &nbar, gamma, connected, BUDGET).unwrap();
                    assert_eq!(sizes(&cat), naive_orbit_sizes(&g, &ct, &nbar, gamma, connected), "{name} {nbar:?} γ={gamma}");
                    assert_eq!(cat.total_tuples, cat.orbits.iter().map(|o| o.size).sum::<usize>());
                    let reps: Vec<&Vec<usize>> = cat.orbits.iter().map(|o| &o.representative).collect();
                    assert!(reps.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
    }
}

#[test]
fn representatives_are_orbit_minima() {
    let g = FiniteGroup::symmetric(3);
    let ct = conjugacy_classes(&g);
    let cat = orbit_enumerate(&g, &ct, &[0, 2, 2], 0, false, BUDGET).unwrap();
    for o in &cat.orbits {
        let mut seen = BTreeSet::from([o.representative.clone()]);
        let mut stack = vec![o.representative.clone()];
        while let Some(t) = stack.pop() {
            for i in 1..t.len() {
                for d in [Direction::Left, Direction::Right] {
                    let u = braid_move(&g, &t, i, d).unwrap();
                    if seen.insert(u.clone()) {
                        stack.push(u);
                    }
                }
            }
        }
        assert_eq!(seen.len(), o.size);
        assert_eq!(seen.iter().next().unwrap(), &o.representative);
    }
}

#[test]
fn abelian_orbits_are_multisets() {
    let g = builtin_group("Z2xZ4").unwrap();
    let ct = conjugacy_classes(&g);
    let mut nbar = vec![0; ct.len()];
    nbar[1] = 2;
    nbar[3] = 1;
    nbar[5] = 2;
    for gamma in 0..g.order() {
        let cat = orbit_enumerate(&g, &ct, &nbar, gamma, false, BUDGET).unwrap();
        // multisets of elements with the given class counts and product
        let mut multisets = BTreeSet::new();
        let n: usize = nbar.iter().sum();
        let elems: Vec<usize> = (0..g.order()).filter(|&x| nbar[ct.class_of[x]] > 0).collect();
        let mut idx = vec![0; n];
        loop {
            let mut t: Vec<usize> = idx.iter().map(|&i| elems[i]).collect();
            let mut md = vec![0; ct.len()];
            t.iter().for_each(|&x| md[ct.class_of[x]] += 1);
            if md == nbar && g.inv(g.product(&t)) == gamma {
                t.sort_unstable();
                multisets.insert(t);
            }
            let mut k = 0;
            while k < n {
                idx[k] += 1;
                if idx[k] < elems.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        assert_eq!(cat.count(), multisets.len());
    }
}

#[test]
fn conjugation_invariance() {
    let g = builtin_group("D4").unwrap();
    let ct = conjugacy_classes(&g);
    let nbar: Vec<usize> = vec![0, 0, 2, 1, 1].into_iter().take(ct.len()).collect();
    for gamma in 0..g.order() {
        let base = orbit_enumerate(&g, &ct, &nbar, gamma, false, BUDGET).unwrap().count();
        for h in 0..g.order() {
            // classes are conjugation stable, so only γ moves
            let c = orbit_enumerate(&g, &ct, &nbar, g.conj(h, gamma), false, BUDGET).unwrap().count();
            assert_eq!(base, c);
        }
    }
}

#[test]
fn budget_is_enforced() {
    let g = FiniteGroup::symmetric(4);
    let ct = conjugacy_classes(&g);
    let mut nbar = vec![0; ct.len()];
    nbar[1] = 12;
    match orbit_enumerate(&g, &ct, &nbar, 0, false, 1000) {
        Err(BraidError::BudgetExceeded { attempted, budget }) => {
            assert_eq!(budget, 1000);
            assert_eq!(attempted, 6u128.pow(12));
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(admissible_tuple_count(&ct, &{
        let mut v = vec![0; ct.len()];
        v[1] = 2;
        v[2] = 1;
        v
    }), 3 * 6 * 6 * ct.classes[2].len() as u128);
}

proptest! {
    #[test]
    fn moves_preserve_product_and_classes(
        gi in 0usize..6,
        raw in proptest::collection::vec(0usize..1000, 2..7),
        pos in 0usize..100,
    ) {
        let names = ["S3", "D4", "Q8", "A4", "S4", "Z2xS3"];
        let g = builtin_group(names[gi]).unwrap();
        let ct = conjugacy_classes(&g);
        let t: Vec<usize> = raw.iter().map(|&x| x % g.order()).collect();
        let i = 1 + pos % (t.len() - 1);
        for d in [Direction::Left, Direction::Right] {
            let u = braid_move(&g, &t, i, d).unwrap();
            prop_assert_eq!(g.product(&u), g.product(&t));
            prop_assert_eq!(multidegree(&ct, &u), multidegree(&ct, &t));
        }
        let l = braid_move(&g, &t, i, Direction::Left).unwrap();
        prop_assert_eq!(braid_move(&g, &l, i, Direction::Right).unwrap(), t.clone());
        let r = braid_move(&g, &t, i, Direction::Right).unwrap();
        prop_assert_eq!(braid_move(&g, &r, i, Direction::Left).unwrap(), t);
    }
}
