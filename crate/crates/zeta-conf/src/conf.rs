use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ConfError;
use crate::ffield::SmallField;
use crate::points::closed_points;
use crate::series::Series;

/// Colors are Frobenius orbits of classes; `degrees[c]` is the orbit size `m_c`.
///
/// A closed point of degree d can carry color c only if `m_c | d`, and then in
/// `m_c` ways. A multidegree entry `n_c` counts points per geometric class, so
/// color c uses total degree `m_c n_c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorSpec {
    pub degrees: Vec<usize>,
}

impl ColorSpec {
    pub fn new(degrees: Vec<usize>) -> Self {
        assert!(degrees.iter().all(|&m| m >= 1), "orbit degrees are positive");
        ColorSpec { degrees }
    }
    /// `|c(F_{q^d})|`
    pub fn points(&self, c: usize, d: usize) -> usize {
        if d % self.degrees[c] == 0 {
            self.degrees[c]
        } else {
            0
        }
    }
    /// Exponent of `T_c` that carries `n_c`.
    pub fn targets(&self, nbar: &[usize]) -> Result<Vec<usize>, ConfError> {
        if nbar.len() != self.degrees.len() {
            return Err(ConfError::BadColors(format!("{} colors, {} entries", self.degrees.len(), nbar.len())));
        }
        Ok(nbar.iter().zip(&self.degrees).map(|(&n, &m)| n * m).collect())
    }
}

/// `∏_P (1 + Σ_c |c(F_q(P))| T_c^{deg P})` truncated at `T_c^{bounds[c]}`.
pub fn conf_series(q: u64, colors: &ColorSpec, bounds: &[usize]) -> Series<BigInt> {
    let k = colors.degrees.len();
    let mut acc = Series::<BigInt>::one(bounds.to_vec());
    let maxd = bounds.iter().copied().max().unwrap_or(0);
    let total: usize = bounds.iter().sum();
    for d in 1..=maxd {
        let mut s = Series::<BigInt>::zero(bounds.to_vec());
        let mut any = false;
        for c in 0..k {
            let w = colors.points(c, d);
            if w > 0 && d <= bounds[c] {
                let mut e = vec![0; k];
                e[c] = d;
                s.set(&e, BigInt::from(w));
                any = true;
            }
        }
        if !any {
            continue;
        }
        // (1 + S)^N = Σ_j C(N, j) S^j, and S^j vanishes once dj exceeds the total degree
        let n = closed_points(q, d as u64);
        let mut factor = Series::<BigInt>::one(bounds.to_vec());
        let mut sj = Series::<BigInt>::one(bounds.to_vec());
        let mut binom = BigInt::one();
        for j in 1..=(total / d) as u128 {
            if j > n {
                break;
            }
            sj = sj.mul(&s);
            binom = binom * BigInt::from(n - j + 1) / BigInt::from(j);
            factor = factor.add(&sj.scale(&binom));
        }
        acc = acc.mul(&factor);
    }
    acc
}

/// `#Conf_{C,n̄}(F_q)` as the coefficient of `∏ T_c^{m_c n_c}` in the Euler product.
pub fn conf_count(q: u64, colors: &ColorSpec, nbar: &[usize]) -> Result<BigInt, ConfError> {
    let t = colors.targets(nbar)?;
    Ok(conf_series(q, colors, &t).get(&t).clone())
}

/// Direct count: squarefree monic polynomials of degree `Σ m_c n_c`, factored by
/// trial division, times the number of admissible colorings of their factors.
pub fn brute_conf(q: u64, colors: &ColorSpec, nbar: &[usize], budget: u128) -> Result<u128, ConfError> {
    let t = colors.targets(nbar)?;
    let n: usize = t.iter().sum();
    let attempted = (q as u128).saturating_pow(n as u32);
    if attempted > budget {
        return Err(ConfError::BudgetExceeded { attempted, budget });
    }
    let field = SmallField::new(q as u32)?;
    let irr: Vec<Vec<_>> = (0..=n / 2).map(|e| if e == 0 { vec![] } else { field.irreducibles(e) }).collect();
    let mut shapes: HashMap<Vec<usize>, u128> = HashMap::new();
    for f in field.monics(n) {
        if let Some(mut degs) = field.squarefree_factor_degrees(&f, &irr) {
            degs.sort_unstable();
            *shapes.entry(degs).or_insert(0) += 1;
        }
    }
    let mut total = 0u128;
    for (degs, count) in shapes {
        total += count * colorings(colors, &degs, &t);
    }
    Ok(total)
}

/// Ways to color factors of the given degrees so color c receives total degree `t[c]`.
fn colorings(colors: &ColorSpec, degs: &[usize], t: &[usize]) -> u128 {
    let mut dp: HashMap<Vec<usize>, u128> = HashMap::from([(vec![0; t.len()], 1)]);
    for &d in degs {
        let mut next = HashMap::new();
        for (state, ways) in dp {
            for c in 0..t.len() {
                let w = colors.points(c, d) as u128;
                if w == 0 || state[c] + d > t[c] {
                    continue;
                }
                let mut s = state.clone();
                s[c] += d;
                *next.entry(s).or_insert(0) += ways * w;
            }
        }
        dp = next;
    }
    dp.get(t).copied().unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfBound {
    pub count: String,
    pub bound: String,
    pub holds: bool,
}

/// Checks `#Conf_{C,n̄}(F_q) ≤ q^{|n̄|}` with `|n̄| = Σ m_c n_c`.
pub fn conf_bound_check(q: u64, colors: &ColorSpec, nbar: &[usize]) -> Result<ConfBound, ConfError> {
    let count = conf_count(q, colors, nbar)?;
    let n: usize = colors.targets(nbar)?.iter().sum();
    let bound = num_traits::pow(BigInt::from(q), n);
    let holds = count <= bound && !(count < BigInt::zero());
    Ok(ConfBound { count: count.to_string(), bound: bound.to_string(), holds })
}
