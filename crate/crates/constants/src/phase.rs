use std::collections::BTreeMap;

use group_core::Qz;
use num_complex::Complex64;

/// Polynomial in `t` with coefficients in the group ring `Z[Q/Z]`.
///
/// Specializing at a closed point of degree D sends `[x] ↦ e(Dx)` and
/// `t ↦ t^D`, so products over closed points only see `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePoly {
    terms: BTreeMap<(usize, Qz), i128>,
}

impl PhasePoly {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, Qz::ZERO), 1);
        PhasePoly { terms }
    }

    pub fn monomial(deg: usize, x: Qz, c: i128) -> Self {
        let mut p = PhasePoly { terms: BTreeMap::new() };
        p.add_term(deg, x, c);
        p
    }

    pub fn add_term(&mut self, deg: usize, x: Qz, c: i128) {
        let e = self.terms.entry((deg, x)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(deg, x));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Qz, i128)> + '_ {
        self.terms.iter().map(|(&(d, x), &c)| (d, x, c))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Product, dropping terms of degree above `trunc`.
    pub fn mul(&self, o: &Self, trunc: usize) -> Self {
        let mut out = PhasePoly { terms: BTreeMap::new() };
        for (&(d1, x1), &c1) in &self.terms {
            for (&(d2, x2), &c2) in &o.terms {
                if d1 + d2 <= trunc {
                    out.add_term(d1 + d2, x1 + x2, c1 * c2);
                }
            }
        }
        out
    }

    /// `(1 − [x] t^deg)^k` for any integer k, truncated.
    pub fn binomial(deg: usize, x: Qz, k: i128, trunc: usize) -> Self {
        let mut out = Self::one();
        let mut coef: i128 = 1;
        let mut j: i128 = 1;
        while deg > 0 && (j as usize) * deg <= trunc {
            // coefficient of (−μ)^j in (1 − μ)^k is C(k, j)
            coef = coef * (k - j + 1) / j;
            if coef == 0 {
                break;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            out.add_term(j as usize * deg, x.scale(j as i64), sign * coef);
            j += 1;
        }
        out
    }

    /// Coefficients of `t^j` after `[x] ↦ e(Dx)`.
    pub fn specialize(&self, d: u64) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.degree() + 1];
        for (&(j, x), &c) in &self.terms {
            let y = x.scale(d as i64);
            let ang = 2.0 * std::f64::consts::PI * y.to_f64();
            out[j] += Complex64::from_polar(c as f64, ang);
        }
        out
    }

    /// `Σ_x |n_x|` per degree.
    pub fn l1_by_degree(&self) -> Vec<f64> {
        let mut out = vec![0.0; self.degree() + 1];
        for (&(j, _), &c) in &self.terms {
            out[j] += (c as f64).abs();
        }
        out
    }

    /// Exponents `b_μ` with `self = ∏_μ (1 − μ)^{−b_μ}` modulo `t^{trunc+1}`.
    pub fn plethystic_exponents(&self, trunc: usize) -> Vec<(usize, Qz, i128)> {
        let mut h = self.clone();
        let mut out = Vec::new();
        for j in 1..=trunc {
            let layer: Vec<(Qz, i128)> = h.terms.iter().filter(|(k, _)| k.0 == j).map(|(k, &c)| (k.1, c)).collect();
            for (x, b) in layer {
                out.push((j, x, b));
                h = h.mul(&Self::binomial(j, x, b, trunc), trunc);
            }
        }
        debug_assert!(h.terms.iter().all(|(k, _)| k.0 == 0));
        out
    }
}
