use group_core::Qz;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use zeta_conf::closed_points;

use crate::error::ConstantsError;
use crate::euler::absolute_part;
use crate::phase::PhasePoly;
use crate::setting::Setting;
use crate::value::Value;

/// `lim (1 − e(α) q^{a} X)^b F_β(X)` at `X = e(−α) q^{−a}`.
#[derive(Clone, Debug, Serialize)]
pub struct Regularized {
    /// The closed form when the absolutely convergent part factors into finitely
    /// many zeta values, otherwise the partial product.
    pub value: Value,
    /// Partial product over closed points of degree ≤ `cutoff`, times the zeta limits.
    pub partial: Complex64,
    /// Bound on `|limit − partial|`.
    pub tail_bound: f64,
    pub cutoff: u64,
    pub closed_form: bool,
}

/// `log(1 + z)` without cancellation for small `z`.
fn log1p(z: Complex64) -> Complex64 {
    let re = 0.5 * (2.0 * z.re + z.norm_sqr()).ln_1p();
    Complex64::new(re, z.im.atan2(1.0 + z.re))
}

pub fn regularized_tau(s: &Setting, beta: usize, alpha: Qz, cutoff: u64) -> Result<Regularized, ConstantsError> {
    regularized_tau_on(s, beta, alpha, cutoff, &s.c_beta(beta))
}

/// As [`regularized_tau`], with the Euler factors summed over `orbits ⊆ C_β` only.
pub fn regularized_tau_on(
    s: &Setting,
    beta: usize,
    alpha: Qz,
    cutoff: u64,
    orbits: &[usize],
) -> Result<Regularized, ConstantsError> {
    let ell = alpha.scale(s.fmin() as i64);
    if beta >= s.brauer.order() {
        return Err(ConstantsError::UnknownElement(beta));
    }
    if !s.in_subset(beta, ell) {
        return Err(ConstantsError::NotInSubset(ell.to_string()));
    }
    let fmin = s.fmin();
    let g = absolute_part(s, beta, alpha, orbits)?;

    // a(f)^b ∏_o ∏_{k<m_o} (1 − e(k/m_o))⁻¹ = a(f)^b ∏_o 1/m_o
    let mut denom = BigInt::from(fmin).pow(s.b() as u32);
    for od in s.orbits.iter().filter(|od| od.in_c_f) {
        denom *= od.degree;
    }
    let prefactor = BigRational::new(1.into(), denom);

    let lnq = (s.q as f64).ln();
    let mut log_sum = Complex64::new(0.0, 0.0);
    for d in 1..=cutoff {
        let coeffs = g.specialize(d);
        let z: Complex64 = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * (-(d as f64) * j as f64 * lnq / fmin as f64).exp())
            .sum();
        log_sum += closed_points(s.q, d) as f64 * log1p(z);
    }
    let pf = prefactor.to_f64().expect("finite prefactor");
    let partial = log_sum.exp() * pf;

    let l1 = g.l1_by_degree();
    let next = (cutoff + 1) as f64;
    let mut eps = 0.0;
    let mut tail = 0.0;
    for (j, &w) in l1.iter().enumerate().skip(1) {
        if w == 0.0 {
            continue;
        }
        let r = (lnq * (1.0 - j as f64 / fmin as f64)).exp();
        eps += w * (-next * j as f64 * lnq / fmin as f64).exp();
        tail += if r < 1.0 { w * r.powf(next) / (next * (1.0 - r)) } else { f64::INFINITY };
    }
    let tail_bound = if eps < 1.0 {
        let t = tail / (1.0 - eps);
        partial.norm() * t.exp_m1() + 1e-14 * cutoff as f64 * partial.norm()
    } else {
        f64::INFINITY
    };

    let closed = closed_form(&g, s.q, fmin);
    let (value, closed_form) = match closed {
        Some(v) => (Value::ratio(prefactor) * v, true),
        None => (Value::approx(partial), false),
    };
    Ok(Regularized { value, partial, tail_bound, cutoff, closed_form })
}

/// `∏_P g(P)` when `g = ∏_μ (1 − μ)^{c_μ}` is a finite product, via `∏_P (1 − μ^{deg P}) = 1 − qμ`.
pub fn closed_form(g: &PhasePoly, q: u64, fmin: u64) -> Option<Value> {
    let top = g.degree();
    let exps = g.plethystic_exponents(top);
    if exps.iter().any(|&(_, _, b)| b > 0) {
        return None;
    }
    let mut rebuilt = PhasePoly::one();
    for &(j, x, b) in &exps {
        rebuilt = rebuilt.mul(&PhasePoly::binomial(j, x, -b, usize::MAX), usize::MAX);
    }
    if rebuilt != *g {
        return None;
    }
    let mut v = Value::int(1);
    for &(j, x, b) in &exps {
        let factor = Value::int(1) + Value::int(-1) * Value::e(x.num(), x.den() as u64)
            * Value::q_power(q, fmin as i64 - j as i64, fmin);
        for _ in 0..-b {
            v = v * factor.clone();
        }
    }
    Some(v)
}
