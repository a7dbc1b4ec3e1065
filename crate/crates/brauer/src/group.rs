use std::collections::BTreeSet;

use group_core::Qz;
use lifting::{FrobeniusOnU, LiftingData, UElement};
use serde::Serialize;

use crate::linalg::{add, kernel_mod_one, qz_to_rat, span, to_qz, invert};

/// A class `(α, ψ)` with `α − α∘Frob⁻¹ = ψ∘R` on A.
///
/// Stored reduced: `α` vanishes on the free part of the basis of A, and `ψ` is
/// the least representative of its coset under the remaining gauge pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BrauerElement {
    /// Values of α on the basis of A, free coordinates first.
    pub alpha: Vec<Qz>,
    /// `ψ(Frob)` on the indicator of each class of C.
    pub psi: Vec<Qz>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BrauerGroup {
    pub q: u64,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    /// Frobenius orbits on the classes of C, as cycles of positions.
    pub class_orbits: Vec<Vec<usize>>,
    pub elements: Vec<BrauerElement>,
    #[serde(skip)]
    pub(crate) gauge: Vec<Vec<Qz>>,
    #[serde(skip)]
    pub(crate) frob: FrobeniusOnU,
}

pub(crate) fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = perm[x];
        }
        out.push(orbit);
    }
    out
}

/// `χ(t) = Σ tⱼ χⱼ`
pub(crate) fn eval(chi: &[Qz], t: &[i64]) -> Qz {
    chi.iter().zip(t).map(|(&c, &x)| c.scale(x)).sum()
}

fn characters(torsion: &[u64]) -> Vec<Vec<Qz>> {
    let mut out = vec![vec![]];
    for &d in torsion {
        out = out
            .into_iter()
            .flat_map(|v| (0..d as i64).map(move |x| [v.clone(), vec![Qz::new(x, d as i64)]].concat()))
            .collect();
    }
    out
}

impl BrauerGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn zero(&self) -> BrauerElement {
        BrauerElement {
            alpha: vec![Qz::ZERO; self.free_rank + self.torsion.len()],
            psi: vec![Qz::ZERO; self.class_orbits.iter().map(Vec::len).sum()],
        }
    }

    pub fn frobenius(&self) -> &FrobeniusOnU {
        &self.frob
    }

    /// Least representative of `ψ` modulo the gauge pairs with `α`-part zero.
    pub fn reduce_psi(&self, psi: &[Qz]) -> Vec<Qz> {
        self.gauge.iter().map(|d| add(psi, d)).min().expect("gauge contains zero")
    }

    pub fn add(&self, x: &BrauerElement, y: &BrauerElement) -> BrauerElement {
        BrauerElement { alpha: add(&x.alpha, &y.alpha), psi: self.reduce_psi(&add(&x.psi, &y.psi)) }
    }

    pub fn neg(&self, x: &BrauerElement) -> BrauerElement {
        BrauerElement {
            alpha: x.alpha.iter().map(|&a| -a).collect(),
            psi: self.reduce_psi(&x.psi.iter().map(|&a| -a).collect::<Vec<_>>()),
        }
    }

    pub fn scale(&self, x: &BrauerElement, k: i64) -> BrauerElement {
        BrauerElement {
            alpha: x.alpha.iter().map(|a| a.scale(k)).collect(),
            psi: self.reduce_psi(&x.psi.iter().map(|a| a.scale(k)).collect::<Vec<_>>()),
        }
    }

    pub fn contains(&self, x: &BrauerElement) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// `α(a)` for `a ∈ A`.
    pub fn alpha_on(&self, l: &LiftingData, beta: &BrauerElement, a: &UElement) -> Qz {
        let (_, tors) = l.a_coordinates(a).expect("element of A");
        eval(&beta.alpha[self.free_rank..], &tors)
    }

    /// `ψ(x)` for `x ∈ Z^C`.
    pub fn psi_on(&self, beta: &BrauerElement, x: &[i64]) -> Qz {
        eval(&beta.psi, x)
    }

    /// Checks the cocycle condition `α(Frob x) − α(x) = ψ(R(Frob x))` on a basis of A.
    pub fn is_compatible(&self, l: &LiftingData, beta: &BrauerElement) -> bool {
        let n = self.free_rank + self.torsion.len();
        (0..n).all(|i| {
            let mut free = vec![0; self.free_rank];
            let mut tors = vec![0; self.torsion.len()];
            if i < self.free_rank {
                free[i] = 1;
            } else {
                tors[i - self.free_rank] = 1;
            }
            let x = l.from_a_coordinates(&free, &tors);
            let fx = self.frob.frob_a(l, &x);
            let (ffree, ftors) = l.a_coordinates(&fx).expect("Frobenius preserves A");
            let alpha = |f: &[i64], t: &[i64]| eval(&beta.alpha[..self.free_rank], f) + eval(&beta.alpha[self.free_rank..], t);
            alpha(&ffree, &ftors) - alpha(&free, &tors) == self.psi_on(beta, &fx.nbar)
        })
    }
}

/// All classes `(α, ψ)` for the Frobenius `fu` on `U(G,C)`.
pub fn enumerate_brauer(l: &LiftingData, fu: &FrobeniusOnU) -> BrauerGroup {
    let f = l.a_free_rank;
    let k = l.num_classes();
    let nt = l.a_torsion.len();
    let unit = |i: usize| {
        let mut v = vec![0; f];
        v[i] = 1;
        v
    };
    let frob_free: Vec<UElement> = (0..f).map(|i| fu.frob_a(l, &l.from_a_coordinates(&unit(i), &vec![0; nt]))).collect();
    let m: Vec<Vec<i64>> = frob_free.iter().map(|u| u.nbar.clone()).collect();
    let m_inv = invert(&m);
    let ker_m = kernel_mod_one(&m);

    let rf: Vec<Vec<i64>> = l.r_matrix[..f].to_vec();
    let k0 = kernel_mod_one(&rf);
    let pinv = {
        let mut p = vec![0; k];
        for (i, &j) in fu.class_perm.iter().enumerate() {
            p[j] = i;
        }
        p
    };
    let gauge_gens: Vec<Vec<Qz>> = k0.iter().map(|h| (0..k).map(|c| h[c] - h[pinv[c]]).collect()).collect();
    let gauge = span(&gauge_gens, k);

    let frob_tors: Vec<Vec<i64>> = (0..nt)
        .map(|j| {
            let mut e = vec![0; nt];
            e[j] = 1;
            fu.frob_torsion(l, &e)
        })
        .collect();

    let mut group = BrauerGroup {
        q: fu.q,
        free_rank: f,
        torsion: l.a_torsion.clone(),
        class_orbits: cycles(&fu.class_perm),
        elements: Vec::new(),
        gauge,
        frob: fu.clone(),
    };

    let mut found = BTreeSet::new();
    for chi in characters(&l.a_torsion) {
        let invariant = (0..nt).all(|j| eval(&chi, &frob_tors[j]) == chi[j]);
        if !invariant {
            continue;
        }
        let v: Vec<Qz> = frob_free.iter().map(|u| eval(&chi, &u.a)).collect();
        let psi0: Vec<Qz> = (0..k)
            .map(|c| to_qz(&(0..f).map(|i| &m_inv[c][i] * qz_to_rat(v[i])).sum()))
            .collect();
        let mut alpha = vec![Qz::ZERO; f];
        alpha.extend(chi.iter().copied());
        for kappa in &ker_m {
            let psi = group.reduce_psi(&add(&psi0, kappa));
            found.insert(BrauerElement { alpha: alpha.clone(), psi });
        }
    }
    group.elements = found.into_iter().collect();
    group
}

/// `H¹(Frob, T) × H⁰(Frob, Hom(T, Q/Z)) → Q/Z`, `(t, χ) ↦ χ(t)`, for a finite
/// module `T = ⊕ Z/dⱼ` with Frobenius given by the images of basis vectors.
/// Returns whether both sides have the same size and the pairing has trivial kernels.
pub fn pairing_is_perfect(torsion: &[u64], frob_rows: &[Vec<i64>]) -> bool {
    let n = torsion.len();
    let reduce = |v: Vec<i64>| -> Vec<i64> { v.iter().zip(torsion).map(|(&x, &d)| x.rem_euclid(d as i64)).collect() };
    let apply = |t: &[i64]| -> Vec<i64> {
        reduce((0..n).map(|j| (0..n).map(|i| t[i] * frob_rows[i][j]).sum()).collect())
    };
    let elements: Vec<Vec<i64>> = characters(torsion)
        .into_iter()
        .map(|c| c.iter().zip(torsion).map(|(x, &d)| x.num() * (d as i64 / x.den())).collect())
        .collect();
    let image: BTreeSet<Vec<i64>> = elements
        .iter()
        .map(|t| reduce(apply(t).iter().zip(t).map(|(a, b)| a - b).collect()))
        .collect();
    let coinv = elements.len() / image.len();
    let invariant: Vec<Vec<Qz>> = characters(torsion)
        .into_iter()
        .filter(|chi| (0..n).all(|j| {
            let mut e = vec![0; n];
            e[j] = 1;
            eval(chi, &apply(&e)) == chi[j]
        }))
        .collect();
    if invariant.len() != coinv {
        return false;
    }
    let left_ok = elements
        .iter()
        .filter(|t| !image.contains(*t))
        .all(|t| invariant.iter().any(|chi| !eval(chi, t).is_zero()));
    let right_ok = invariant
        .iter()
        .filter(|chi| chi.iter().any(|x| !x.is_zero()))
        .all(|chi| elements.iter().any(|t| !eval(chi, t).is_zero()));
    let well_defined = invariant.iter().all(|chi| image.iter().all(|t| eval(chi, t).is_zero()));
    left_ok && right_ok && well_defined
}
