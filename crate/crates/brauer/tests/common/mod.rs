#![allow(dead_code)]

use brauer::{enumerate_brauer, BrauerGroup};
use group_core::{builtin_group, conjugacy_classes, frobenius_structure, FiniteGroup, FrobeniusStructure};
use lifting::{build_lifting_data, frobenius_on_u, FrobeniusOnU, LiftingData};

pub const BUDGET: u128 = 100_000_000;

pub struct Case {
    pub g: FiniteGroup,
    pub l: LiftingData,
    pub frob: FrobeniusStructure,
    pub fu: FrobeniusOnU,
    pub br: BrauerGroup,
}

pub fn case(name: &str, classes: &[usize], q: u64, twist: Option<usize>) -> Case {
    let g = builtin_group(name).unwrap();
    let ct = conjugacy_classes(&g);
    let l = build_lifting_data(&g, &ct.union(classes), BUDGET).unwrap();
    let frob = frobenius_structure(&g, q, twist).unwrap();
    let fu = frobenius_on_u(&l, &frob).unwrap();
    let br = enumerate_brauer(&l, &fu);
    Case { g, l, frob, fu, br }
}

pub fn a4_class() -> Vec<usize> {
    vec![conjugacy_classes(&builtin_group("A4").unwrap()).class_of[1]]
}

/// (group, classes, q, twist) with Frobenius-stable C.
pub fn corpus() -> Vec<(&'static str, Vec<usize>, u64, Option<usize>)> {
    vec![
        ("Z2", vec![1], 3, None),
        ("Z2", vec![1], 5, None),
        ("Z3", vec![1, 2], 5, None),
        ("Z3", vec![1, 2], 7, None),
        ("Z4", vec![1, 3], 3, None),
        ("Z4", vec![1, 3], 5, None),
        ("V4", vec![1, 2, 3], 3, None),
        ("S3", vec![1], 5, None),
        ("S3", vec![1, 2], 7, None),
        ("S3", vec![1], 7, Some(1)),
        ("D4", vec![1, 2], 3, None),
        ("D4", vec![1, 2], 5, Some(1)),
        ("Q8", vec![2, 3, 4], 3, None),
        ("Q8", vec![2, 3, 4], 5, Some(2)),
        ("A4", a4_class(), 7, None),
        ("A4", a4_class(), 13, None),
        ("A4", a4_class(), 7, Some(1)),
        ("S4", vec![4], 5, None),
    ]
}

/// Frobenius-invariant multidegrees with entries in `0..=max`.
pub fn invariant_multidegrees(perm: &[usize], max: usize) -> Vec<Vec<usize>> {
    let k = perm.len();
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out.into_iter().flat_map(|v: Vec<usize>| (0..=max).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.retain(|v| (0..k).all(|c| v[c] == v[perm[c]]));
    out
}
