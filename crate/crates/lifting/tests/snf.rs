use lifting::smith_normal_form;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n)
        .flat_map(|last| {
            subsets(last, k - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

/// gcd of all k×k minors
fn determinantal_divisor(m: &[Vec<i64>], cols: usize, k: usize) -> i64 {
    let mut g = 0i64;
    for rs in subsets(m.len(), k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}

fn check(m: Vec<Vec<i64>>, cols: usize) {
    let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let s = smith_normal_form(big.clone(), cols);
    // Q·Q⁻¹ = 1
    for i in 0..cols {
        for j in 0..cols {
            let v: BigInt = (0..cols).map(|k| &s.q[i][k] * &s.q_inv[k][j]).sum();
            assert_eq!(v, BigInt::from((i == j) as i64));
        }
    }
    // rows of M·Q lie in the lattice spanned by the diagonal
    for row in &big {
        for i in 0..cols {
            let v: BigInt = (0..cols).map(|k| &row[k] * &s.q[k][i]).sum();
            if i < s.rank {
                assert!(v.is_multiple_of(&s.diagonal[i]));
            } else {
                assert!(v.is_zero());
            }
        }
    }
    for i in 1..s.rank {
        assert!(s.diagonal[i].is_multiple_of(&s.diagonal[i - 1]));
    }
    // d₁⋯d_k = gcd of k-minors
    let mut prod = BigInt::one();
    for k in 1..=m.len().min(cols) {
        let dk = determinantal_divisor(&m, cols, k);
        if k <= s.rank {
            prod *= &s.diagonal[k - 1];
            assert_eq!(prod, BigInt::from(dk.abs()), "k={k} m={m:?}");
        } else {
            assert_eq!(dk, 0);
        }
    }
}

#[test]
fn small_examples() {
    check(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]], 3);
    check(vec![vec![2, 0], vec![0, 3]], 2);
    check(vec![vec![0, 0, 0]], 3);
    check(vec![], 2);
    let s = smith_normal_form(vec![vec![BigInt::from(2), BigInt::zero()], vec![BigInt::zero(), BigInt::from(3)]], 2);
    assert_eq!(s.cokernel(), (vec![BigInt::from(6)], 0));
    let s = smith_normal_form(vec![vec![BigInt::from(4), BigInt::from(6), BigInt::zero()]], 3);
    assert_eq!(s.cokernel(), (vec![BigInt::from(2)], 2));
}

proptest! {
    #[test]
    fn random_matrices(rows in 0usize..5, cols in 1usize..5, seed in proptest::collection::vec(-7i64..8, 20)) {
        let m: Vec<Vec<i64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 4 + c]).collect()).collect();
        check(m, cols);
    }
}
