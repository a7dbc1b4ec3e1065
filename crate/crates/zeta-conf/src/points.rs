use num_bigint::BigInt;
use num_traits::One;

use crate::series::Series;

pub fn moebius(n: u64) -> i64 {
    let mut m = n;
    let mut mu = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if m > 1 {
        mu = -mu;
    }
    mu
}

/// Number of closed points of degree n on A¹ over F_q: `(1/n) Σ_{d|n} μ(d) q^{n/d}`.
pub fn closed_points(q: u64, n: u64) -> u128 {
    assert!(n >= 1);
    let mut s: i128 = 0;
    for d in 1..=n {
        if n % d == 0 {
            s += moebius(d) as i128 * (q as i128).pow((n / d) as u32);
        }
    }
    (s / n as i128) as u128
}

/// Euler product `∏_{deg P ≤ max_deg} (1 − X^{deg P})⁻¹` truncated at `X^order`.
pub fn euler_partial_a1(q: u64, max_deg: usize, order: usize) -> Vec<BigInt> {
    let mut acc = Series::<BigInt>::one(vec![order]);
    for d in 1..=max_deg.min(order) {
        let n = closed_points(q, d as u64);
        // (1 − X^d)^{−n} = Σ_k C(n+k−1, k) X^{dk}
        let mut factor = Series::<BigInt>::zero(vec![order]);
        let mut binom = BigInt::one();
        for k in 0..=order / d {
            factor.set(&[d * k], binom.clone());
            binom = binom * BigInt::from(n + k as u128) / BigInt::from(k + 1);
        }
        acc = acc.mul(&factor);
    }
    (0..=order).map(|i| acc.get(&[i]).clone()).collect()
}

/// Zeta function of A¹ to order `order`, from its Euler product.
pub fn zeta_a1(q: u64, order: usize) -> Vec<BigInt> {
    euler_partial_a1(q, order, order)
}

