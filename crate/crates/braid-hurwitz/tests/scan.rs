use braid_hurwitz::*;
use group_core::{conjugacy_classes, FiniteGroup};

#[test]
fn z2_counts_are_one() {
    let g = FiniteGroup::cyclic(2);
    let ct = conjugacy_classes(&g);
    let nbars: Vec<Vec<usize>> = (2..10).step_by(2).map(|n| vec![0, n]).collect();
    let rep = stabilization_scan(&g, &ct, 0, &nbars, true, 1_000_000, |_| 1).unwrap();
    assert!(rep.rows.iter().all(|r| r.orbits == 1));
    assert_eq!(rep.stable_from, Some(2));
    assert!(rep.empirical);
}

#[test]
fn s3_transpositions_stabilize_at_one() {
    let g = FiniteGroup::symmetric(3);
    let ct = conjugacy_classes(&g);
    let nbars: Vec<Vec<usize>> = (2..=8).step_by(2).map(|n| vec![0, n, 0]).collect();
    let rep = stabilization_scan(&g, &ct, 0, &nbars, true, 10_000_000, |_| 1).unwrap();
    // two transpositions with trivial product are equal, so they do not generate
    assert_eq!(rep.rows[0].orbits, 0);
    assert!(rep.rows[1..].iter().all(|r| r.orbits == 1));
    assert_eq!(rep.stable_from, Some(4));
}

#[test]
fn s3_mixed_classes_stabilize() {
    let g = FiniteGroup::symmetric(3);
    let ct = conjugacy_classes(&g);
    let mut nbars = Vec::new();
    for a in 1..=4usize {
        for b in 1..=3usize {
            if a + b <= 7 {
                nbars.push(vec![0, a, b]);
            }
        }
    }
    for gamma in 0..6 {
        // parity of the transposition count decides whether γ is even or odd
        let sign_ok = |v: &[usize]| {
            let odd_gamma = ct.class_of[gamma] == 1;
            (v[1] % 2 == 1) == odd_gamma
        };
        let rep = stabilization_scan(&g, &ct, gamma, &nbars, true, 10_000_000, |v| sign_ok(v) as usize).unwrap();
        assert!(rep.stable_from.is_some_and(|n| n <= 2), "γ={gamma} {:?}", rep.rows);
    }
}
