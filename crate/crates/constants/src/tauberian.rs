use group_core::Qz;
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::value::Value;

/// A pole of order `order` at `X = e(z)·q^{−a}` with leading coefficient
/// `coeff = lim (1 − X/X₀)^order F(X)`.
#[derive(Clone, Debug, Serialize)]
pub struct Pole {
    pub z: Qz,
    pub order: usize,
    pub coeff: Value,
}

/// Poles of a generating series on the circle `|X| = q^{−a}`, `a = a.0/a.1`.
#[derive(Clone, Debug, Serialize)]
pub struct PoleData {
    pub q: u64,
    pub a: (u64, u64),
    pub poles: Vec<Pole>,
}

impl PoleData {
    pub fn max_order(&self) -> usize {
        self.poles.iter().map(|p| p.order).max().unwrap_or(0)
    }
}

/// `n^{b−1}/(b−1)! · Σ cᵢ zᵢ^{−n} · q^{a n}` over the poles of maximal order b.
pub fn tauberian(p: &PoleData, n: u64) -> Value {
    let b = p.max_order();
    if b == 0 {
        return Value::int(0);
    }
    let fact: BigInt = (1..b as u64).map(BigInt::from).product();
    let lead = BigRational::new(BigInt::from(n).pow(b as u32 - 1), fact);
    let sum: Value = p
        .poles
        .iter()
        .filter(|pole| pole.order == b)
        .map(|pole| {
            let ph = pole.z.scale(-(n as i64));
            pole.coeff.clone() * Value::e(ph.num(), ph.den() as u64)
        })
        .sum();
    Value::ratio(lead) * sum * Value::q_power(p.q, (p.a.0 * n) as i64, p.a.1)
}
