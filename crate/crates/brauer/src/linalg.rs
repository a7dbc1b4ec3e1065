use std::collections::HashSet;

use group_core::Qz;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub(crate) fn invert(m: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|&x| q(x)).chain((0..n).map(|j| q((i == j) as i64))).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular matrix");
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

pub(crate) fn to_qz(x: &BigRational) -> Qz {
    let d = x.denom().clone();
    let n = x.numer().mod_floor(&d);
    Qz::new(n.to_i64().expect("numerator fits"), d.to_i64().expect("denominator fits"))
}

pub(crate) fn qz_to_rat(x: Qz) -> BigRational {
    BigRational::new(BigInt::from(x.num()), BigInt::from(x.den()))
}

/// `{ψ : M ψ ∈ Zⁿ} / Zⁿ`, generated by the columns of `M⁻¹`.
pub(crate) fn kernel_mod_one(m: &[Vec<i64>]) -> Vec<Vec<Qz>> {
    let n = m.len();
    if n == 0 {
        return vec![vec![]];
    }
    let inv = invert(m);
    let gens: Vec<Vec<Qz>> = (0..n).map(|j| (0..n).map(|i| to_qz(&inv[i][j])).collect()).collect();
    span(&gens, n)
}

/// Subgroup of `(Q/Z)ⁿ` generated by finitely many torsion vectors.
pub(crate) fn span(gens: &[Vec<Qz>], n: usize) -> Vec<Vec<Qz>> {
    let zero = vec![Qz::ZERO; n];
    let mut seen: HashSet<Vec<Qz>> = HashSet::from([zero.clone()]);
    let mut out = vec![zero];
    let mut i = 0;
    while i < out.len() {
        for g in gens {
            let s: Vec<Qz> = out[i].iter().zip(g).map(|(&a, &b)| a + b).collect();
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        i += 1;
    }
    out.sort();
    out
}

pub(crate) fn add(a: &[Qz], b: &[Qz]) -> Vec<Qz> {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}
