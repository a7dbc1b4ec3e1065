use std::collections::BTreeSet;

use group_core::{FiniteGroup, FrobeniusStructure, Qz};
use serde::{Deserialize, Serialize};

use crate::error::ConstantsError;
use crate::setting::Setting;
use crate::value::Value;

/// A point `(σ, γ)` of `BG` over the local field at ∞, up to simultaneous conjugation.
///
/// `σ` is the element whose conjugation, composed with `g ↦ g^{q⁻¹}`, is the local
/// Frobenius; `γ` generates inertia and satisfies `σ γ^{q⁻¹} σ⁻¹ = γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LocalPoint {
    pub sigma: usize,
    pub gamma: usize,
    pub aut_order: usize,
}

fn canonical(g: &FiniteGroup, sigma: usize, gamma: usize) -> (usize, usize) {
    (0..g.order()).map(|h| (g.conj(h, sigma), g.conj(h, gamma))).min().expect("nonempty group")
}

/// Representatives of all local points, sorted.
pub fn local_points(g: &FiniteGroup, frob: &FrobeniusStructure) -> Vec<LocalPoint> {
    let t = frob.twist.unwrap_or(g.identity());
    let mut reps = BTreeSet::new();
    for s in 0..g.order() {
        let sigma = g.mul(s, t);
        for gamma in 0..g.order() {
            if g.conj(sigma, g.pow(gamma, frob.r as i64)) == gamma {
                reps.insert(canonical(g, sigma, gamma));
            }
        }
    }
    reps.into_iter()
        .map(|(sigma, gamma)| {
            let aut_order = (0..g.order()).filter(|&h| g.conj(h, sigma) == sigma && g.conj(h, gamma) == gamma).count();
            LocalPoint { sigma, gamma, aut_order }
        })
        .collect()
}

/// Height contribution at ∞ as a function of the inertia class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HInf {
    Zero,
    /// `f` of the class of γ, and 0 when γ is trivial.
    Weight,
    /// One value per conjugacy class of γ.
    PerClass(Vec<u64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Omega {
    All,
    /// `γ = 1`
    Unramified,
    /// Points whose γ lies in one of these conjugacy classes.
    GammaClasses(Vec<usize>),
    /// Explicit `(σ, γ)` pairs; conjugate pairs are identified.
    Points(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightSpec {
    pub h_inf: HInf,
    pub omega: Omega,
}

impl HeightSpec {
    /// `h∞ = f`, `Ω∞ = all`: the height counting by the weighted discriminant.
    pub fn standard() -> Self {
        HeightSpec { h_inf: HInf::Weight, omega: Omega::All }
    }

    pub fn height(&self, s: &Setting, p: &LocalPoint) -> u64 {
        let class = s.frob.classes.class_of[p.gamma];
        match &self.h_inf {
            HInf::Zero => 0,
            HInf::Weight => s.weight.of_class(&s.frob, class),
            HInf::PerClass(v) => v[class],
        }
    }

    pub fn contains(&self, s: &Setting, p: &LocalPoint) -> bool {
        let g = &s.group;
        match &self.omega {
            Omega::All => true,
            Omega::Unramified => p.gamma == g.identity(),
            Omega::GammaClasses(cl) => cl.contains(&s.frob.classes.class_of[p.gamma]),
            Omega::Points(list) => list.iter().any(|&(a, b)| canonical(g, a, b) == (p.sigma, p.gamma)),
        }
    }
}

/// `Σ_{p ∈ Ω∞} e(∂_γ(β)(σ)) e(−h∞(p)α) q^{−a(f) h∞(p)} / |Aut p|`
pub fn tau_infinity(s: &Setting, beta: usize, alpha: Qz, h: &HeightSpec) -> Result<Value, ConstantsError> {
    if beta >= s.brauer.order() {
        return Err(ConstantsError::UnknownElement(beta));
    }
    let mut total = Value::int(0);
    for (i, p) in s.points.iter().enumerate() {
        if !h.contains(s, p) {
            continue;
        }
        let hp = h.height(s, p);
        let phase = s.infinity[i][beta] - alpha.scale(hp as i64);
        let term = Value::e(phase.num(), phase.den() as u64)
            * Value::q_power(s.q, -(hp as i64), s.fmin())
            * Value::ratio(num_rational::BigRational::new(1.into(), (p.aut_order as i64).into()));
        total = total + term;
    }
    Ok(total)
}

/// `Σ_{p : γ = 1} 1/|Aut p|`, which is 1.
pub fn unramified_mass(points: &[LocalPoint], identity: usize) -> num_rational::BigRational {
    points
        .iter()
        .filter(|p| p.gamma == identity)
        .map(|p| num_rational::BigRational::new(1.into(), (p.aut_order as i64).into()))
        .sum()
}
