#![allow(dead_code)]

use constants::Setting;
use group_core::{builtin_group, conjugacy_classes, frobenius_structure, WeightFunction};

pub const BUDGET: u128 = 100_000_000;

/// Setting with `f` given per conjugacy class (entry 0 is the identity and ignored).
pub fn setting(name: &str, per_class: &[u64], q: u64, twist: Option<usize>) -> Setting {
    let g = builtin_group(name).unwrap();
    let frob = frobenius_structure(&g, q, twist).unwrap();
    let w = WeightFunction::from_classes(&frob, per_class).unwrap();
    Setting::new(&g, q, twist, w, BUDGET).unwrap()
}

pub fn ones(name: &str) -> Vec<u64> {
    let g = builtin_group(name).unwrap();
    vec![1; conjugacy_classes(&g).len()]
}

/// Balanced corpus: (group, f per class, q, twist).
pub fn corpus() -> Vec<(&'static str, Vec<u64>, u64, Option<usize>)> {
    vec![
        ("Z2", vec![0, 1], 3, None),
        ("Z2", vec![0, 1], 5, None),
        ("Z3", vec![0, 1, 1], 5, None),
        ("Z3", vec![0, 1, 1], 7, None),
        ("Z3", vec![0, 1, 2], 7, None),
        ("Z4", vec![0, 1, 1, 1], 3, None),
        ("Z4", vec![0, 1, 2, 1], 5, None),
        ("V4", vec![0, 1, 1, 2], 3, None),
        ("S3", vec![0, 1, 2], 5, None),
        ("S3", vec![0, 1, 1], 7, None),
        ("S3", vec![0, 1, 2], 7, Some(1)),
        ("D4", vec![0, 2, 1, 1, 3], 3, None),
        ("Q8", vec![0, 2, 1, 1, 1], 5, None),
        ("A4", vec![0, 2, 1, 1], 7, None),
        ("A4", vec![0, 1, 1, 2], 5, None),
    ]
}
