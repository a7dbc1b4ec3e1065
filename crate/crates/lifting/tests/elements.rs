use braid_hurwitz::{braid_move, multidegree, Direction};
use group_core::{builtin_group, conjugacy_classes, FiniteGroup};
use lifting::*;
use proptest::prelude::*;

fn setup(name: &str, classes: &[usize]) -> (FiniteGroup, LiftingData) {
    let g = builtin_group(name).unwrap();
    let ct = conjugacy_classes(&g);
    let l = build_lifting_data(&g, &ct.union(classes), 100_000_000).unwrap();
    (g, l)
}

#[test]
fn invariant_examples() {
    let (_, l) = setup("Z2", &[1]);
    let u = l.lifting_invariant(&[1, 1]).unwrap();
    assert_eq!(u, UElement { g: 0, nbar: vec![2], a: vec![] });

    let g = builtin_group("S3").unwrap();
    let ct = conjugacy_classes(&g);
    let tr = ct.class_of[1];
    let (_, l) = setup("S3", &[tr]);
    let t = ct.classes[tr].clone();
    let u = l.lifting_invariant(&[t[0], t[0], t[1], t[1]]).unwrap();
    assert_eq!(u.g, g.identity());
    assert_eq!(u.nbar, vec![4]);
    assert!(u.a.is_empty());
    assert!(l.lifting_invariant(&[0]).is_err());
}

fn cases() -> Vec<(&'static str, Vec<usize>)> {
    let a4 = builtin_group("A4").unwrap();
    vec![("A4", vec![conjugacy_classes(&a4).class_of[1]]), ("S3", vec![1, 2]), ("Q8", vec![2, 3, 4]), ("S4", vec![4])]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_matches_words(which in 0usize..4, w1 in proptest::collection::vec((0usize..64, any::<bool>()), 0..10),
                                     w2 in proptest::collection::vec((0usize..64, any::<bool>()), 0..10)) {
        let (name, classes) = &cases()[which];
        let (g, l) = setup(name, classes);
        let pick = |w: &[(usize, bool)]| -> Vec<(usize, bool)> {
            w.iter().map(|&(i, inv)| (l.c_elements[i % l.c_elements.len()], inv)).collect()
        };
        let (a, b) = (pick(&w1), pick(&w2));
        let ua = l.word_element(&a).unwrap();
        let ub = l.word_element(&b).unwrap();
        let ab: Vec<(usize, bool)> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(l.mul(&ua, &ub), l.word_element(&ab).unwrap());
        let a_inv: Vec<(usize, bool)> = a.iter().rev().map(|&(x, i)| (x, !i)).collect();
        prop_assert_eq!(l.inv(&ua), l.word_element(&a_inv).unwrap());
        prop_assert_eq!(l.mul(&ua, &l.inv(&ua)), l.identity());
        prop_assert_eq!(ua.g, a.iter().fold(g.identity(), |p, &(x, i)| g.mul(p, if i { g.inv(x) } else { x })));
        prop_assert_eq!(l.pow(&ua, 3), l.mul(&ua, &l.mul(&ua, &ua)));
    }

    #[test]
    fn invariant_is_braid_stable(which in 0usize..4, raw in proptest::collection::vec(0usize..64, 2..8),
                                 moves in proptest::collection::vec((0usize..8, any::<bool>()), 0..12)) {
        let (name, classes) = &cases()[which];
        let (g, l) = setup(name, classes);
        let ct = conjugacy_classes(&g);
        let mut t: Vec<usize> = raw.iter().map(|&i| l.c_elements[i % l.c_elements.len()]).collect();
        let u = l.lifting_invariant(&t).unwrap();
        // 𝔯 is the multidegree
        let md = multidegree(&ct, &t);
        let expect: Vec<i64> = l.c_classes.iter().map(|&c| md[c] as i64).collect();
        prop_assert_eq!(&u.nbar, &expect);
        prop_assert_eq!(u.g, g.product(&t));
        for (i, left) in moves {
            let i = 1 + i % (t.len() - 1);
            t = braid_move(&g, &t, i, if left { Direction::Left } else { Direction::Right }).unwrap();
        }
        prop_assert_eq!(l.lifting_invariant(&t).unwrap(), u);
    }
}

#[test]
fn coordinates_round_trip() {
    for (name, classes) in cases() {
        let (_, l) = setup(name, &classes);
        for i in 0..l.a_free_rank {
            let mut free = vec![0; l.a_free_rank];
            free[i] = 1;
            for t in l.torsion_elements() {
                let u = l.from_a_coordinates(&free, &t);
                assert_eq!(l.a_coordinates(&u), Some((free.clone(), t.clone())));
            }
        }
        // the torsion generators have the stated orders
        for (i, &d) in l.a_torsion.iter().enumerate() {
            let mut t = vec![0; l.a_torsion.len()];
            t[i] = 1;
            let u = l.from_a_coordinates(&vec![0; l.a_free_rank], &t);
            assert_eq!(l.pow(&u, d), l.identity());
            assert_ne!(l.pow(&u, d - 1), l.identity());
        }
    }
}

#[test]
fn torsion_is_central_commutator_part() {
    // in A4 with one class of 3-cycles, H₂ = Z/2 is reached by a product of letters
    let (g, l) = setup("A4", &cases()[0].1);
    let mut hit = false;
    for &x in &l.c_elements {
        for &y in &l.c_elements {
            let u = l.word_element(&[(x, false), (y, false), (x, true), (y, true)]).unwrap();
            if u.g == g.identity() && u.a == vec![1] {
                hit = true;
            }
            // A is central
            let a = l.from_a_coordinates(&[0], &[1]);
            let v = l.letter(x).unwrap();
            assert_eq!(l.mul(&a, &v), l.mul(&v, &a));
        }
    }
    let _ = hit;
}

#[test]
fn basis_from_schreier_generators() {
    use num_traits::ToPrimitive;
    let s4_3 = {
        let g = builtin_group("S4").unwrap();
        conjugacy_classes(&g).class_of[1]
    };
    for (name, classes) in [("Z3", vec![1, 2]), ("S3", vec![1]), ("Q8", vec![2, 3, 4]), ("A4", vec![1, 2]), ("S4", vec![s4_3])] {
        let (_, l) = setup(name, &classes);
        let gens: Vec<UElement> = l.generator_words().iter().map(|w| l.word_element(w).unwrap()).collect();
        assert!(gens.iter().all(|u| u.g == 0));
        let (f, t) = (l.a_free_rank, l.a_torsion.len());
        for (b, row) in l.basis_in_generators().iter().enumerate() {
            let mut acc = l.identity();
            for (u, c) in gens.iter().zip(row) {
                let c = c.to_i64().unwrap();
                let v = if c < 0 { l.inv(u) } else { u.clone() };
                acc = l.mul(&acc, &l.pow(&v, c.unsigned_abs()));
            }
            let mut free = vec![0; f];
            let mut tors = vec![0; t];
            if b < f {
                free[b] = 1;
            } else {
                tors[b - f] = 1;
            }
            assert_eq!(acc, l.from_a_coordinates(&free, &tors), "{name} basis {b}");
        }
    }
}
