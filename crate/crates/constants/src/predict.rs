use group_core::{moebius_abelian, subgroup_interval, Qz};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::ConstantsError;
use crate::local::{tau_infinity, HeightSpec};
use crate::regularize::{regularized_tau_on, Regularized};
use crate::setting::Setting;
use crate::tauberian::{tauberian, Pole, PoleData};
use crate::value::Value;

/// Relative size below which a floating-point pole coefficient counts as zero.
pub const ZERO_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Serialize)]
pub struct Term {
    pub alpha: Qz,
    pub beta: usize,
    /// Möbius weight and subgroup order of L; `(1, |G|)` in the balanced case.
    pub mu: i64,
    pub subgroup_order: usize,
    pub tau_infinity: Value,
    pub euler: Regularized,
    pub value: Value,
}

/// Everything independent of d.
#[derive(Clone, Debug, Serialize)]
pub struct ConstantData {
    pub group: String,
    pub q: u64,
    pub f: Vec<u64>,
    pub b: usize,
    pub a: (u64, u64),
    /// `|Z(G)(F_q)| / |G^ab(−1)(F_q)|`
    pub prefactor: Value,
    pub poles: PoleData,
    pub period: u64,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PredictionRecord {
    pub group: String,
    pub q: u64,
    pub f: Vec<u64>,
    pub d: u64,
    pub c_h: Value,
    pub main_term: Value,
    pub period: u64,
    pub terms: Vec<Term>,
}

fn is_nonzero(v: &Value, scale: f64) -> bool {
    match &v.exact {
        Some(c) => !num_traits::Zero::is_zero(c),
        None => v.approx.norm() > ZERO_TOLERANCE * scale.max(1e-300),
    }
}

fn assemble(s: &Setting, h: &HeightSpec, cutoff: u64, lattice: &[(Vec<usize>, i64)]) -> Result<ConstantData, ConstantsError> {
    let fmin = s.fmin() as i64;
    let levels = s.ell_denominator() as i64;
    let mut terms = Vec::new();
    let mut by_alpha: Vec<(Qz, Value)> = Vec::new();
    for j in 0..fmin * levels {
        let alpha = Qz::new(j, fmin * levels);
        let ell = alpha.scale(fmin);
        let mut k = Value::int(0);
        for beta in 0..s.brauer.order() {
            if !s.in_subset(beta, ell) {
                continue;
            }
            let tau = tau_infinity(s, beta, alpha, h)?;
            for (elements, mu) in lattice {
                let orbits: Vec<usize> = s
                    .c_beta(beta)
                    .into_iter()
                    .filter(|&o| s.orbits[o].classes.iter().all(|&c| elements.contains(&s.frob.classes.classes[c][0])))
                    .collect();
                let euler = regularized_tau_on(s, beta, alpha, cutoff, &orbits)?;
                let value = Value::int(*mu) * tau.clone() * euler.value.clone();
                k = k + value.clone();
                terms.push(Term {
                    alpha,
                    beta,
                    mu: *mu,
                    subgroup_order: elements.len(),
                    tau_infinity: tau.clone(),
                    euler,
                    value,
                });
            }
        }
        by_alpha.push((alpha, k));
    }

    let prefactor = Value::ratio(BigRational::new(
        BigInt::from(s.center_points()),
        BigInt::from(s.twisted_abelianization_points()),
    ));
    let scale = by_alpha.iter().map(|(_, v)| v.approx.norm()).fold(0.0, f64::max);
    let mut period = 1u64;
    let mut poles = Vec::new();
    for (alpha, k) in by_alpha {
        if !is_nonzero(&k, scale) {
            continue;
        }
        period = period.lcm(&(alpha.den() as u64));
        poles.push(Pole { z: -alpha, order: s.b(), coeff: prefactor.clone() * k });
    }
    Ok(ConstantData {
        group: s.group.name().to_string(),
        q: s.q,
        f: s.weight.f.clone(),
        b: s.b(),
        a: (1, s.fmin()),
        prefactor,
        poles: PoleData { q: s.q, a: (1, s.fmin()), poles },
        period,
        terms,
    })
}

/// Leading-constant data when `C_f` generates G.
pub fn constant_data(s: &Setting, h: &HeightSpec, cutoff: u64) -> Result<ConstantData, ConstantsError> {
    if !s.balanced {
        return Err(ConstantsError::UnbalancedInput);
    }
    assemble(s, h, cutoff, &[((0..s.group.order()).collect(), 1)])
}

/// Leading-constant data as a Möbius sum over `M ⊆ L ⊆ G`.
pub fn constant_data_unbalanced(s: &Setting, m: &[usize], h: &HeightSpec, cutoff: u64) -> Result<ConstantData, ConstantsError> {
    let g = &s.group;
    let mut m: Vec<usize> = m.to_vec();
    m.sort_unstable();
    m.dedup();
    if !g.is_subgroup(&m) || !g.is_normal(&m) {
        return Err(ConstantsError::LatticeViolation("M is not a normal subgroup".into()));
    }
    let c_f = s.frob.classes.union(&s.weight.c_f_classes(&s.frob));
    if g.generated_subgroup(&c_f) != m {
        return Err(ConstantsError::LatticeViolation("C_f does not generate M".into()));
    }
    let mut mz = m.clone();
    mz.extend(g.center());
    if !g.generates(&mz) {
        return Err(ConstantsError::LatticeViolation("M·Z(G) ≠ G".into()));
    }
    let lattice: Vec<(Vec<usize>, i64)> = subgroup_interval(g, &m)?
        .into_iter()
        .map(|e| {
            let mu = moebius_abelian(&e.quotient);
            (e.elements, mu)
        })
        .filter(|(_, mu)| *mu != 0)
        .collect();
    assemble(s, h, cutoff, &lattice)
}

impl ConstantData {
    /// `c_H(d)`, with `(b−1)!` and `a(f)^b` included.
    pub fn c_h(&self, d: u64) -> Value {
        let fact: BigInt = (1..self.b as u64).map(BigInt::from).product();
        let sum: Value = self
            .poles
            .poles
            .iter()
            .map(|p| {
                let ph = p.z.scale(-(d as i64));
                p.coeff.clone() * Value::e(ph.num(), ph.den() as u64)
            })
            .sum();
        Value::ratio(BigRational::new(1.into(), fact)) * sum
    }

    pub fn record(&self, d: u64) -> PredictionRecord {
        PredictionRecord {
            group: self.group.clone(),
            q: self.q,
            f: self.f.clone(),
            d,
            c_h: self.c_h(d),
            main_term: tauberian(&self.poles, d),
            period: self.period,
            terms: self.terms.clone(),
        }
    }
}

pub fn predict(s: &Setting, h: &HeightSpec, d: u64, cutoff: u64) -> Result<PredictionRecord, ConstantsError> {
    Ok(constant_data(s, h, cutoff)?.record(d))
}

pub fn predict_unbalanced(
    s: &Setting,
    m: &[usize],
    h: &HeightSpec,
    d: u64,
    cutoff: u64,
) -> Result<PredictionRecord, ConstantsError> {
    Ok(constant_data_unbalanced(s, m, h, cutoff)?.record(d))
}
