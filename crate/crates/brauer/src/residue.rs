use group_core::{FrobeniusStructure, Qz, WeightFunction};
use lifting::{LiftingData, UElement};
use serde::Serialize;

use crate::error::BrauerError;
use crate::group::{BrauerElement, BrauerGroup};

/// Corestricted residue along a Frobenius orbit of classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueValue {
    pub value: Qz,
    pub field_degree: usize,
}

impl BrauerGroup {
    fn orbit_of_position(&self, pos: usize) -> &[usize] {
        self.class_orbits.iter().find(|o| o.contains(&pos)).expect("every position lies in an orbit")
    }

    /// `∂_c(β)` summed over the Frobenius orbit of the conjugacy class `class`.
    pub fn residue(&self, l: &LiftingData, beta: &BrauerElement, class: usize) -> Result<ResidueValue, BrauerError> {
        let pos = l.c_classes.iter().position(|&c| c == class).ok_or(BrauerError::ClassOutsideC(class))?;
        let orbit = self.orbit_of_position(pos);
        Ok(ResidueValue { value: orbit.iter().map(|&p| beta.psi[p]).sum(), field_degree: orbit.len() })
    }

    /// `∂_γ(β) = ψ(R γ̃) − α(δ) + ψ(R δ)` with `δ = Frob(γ̃)·γ̃⁻¹`.
    pub fn residue_at_infinity_with(
        &self,
        l: &LiftingData,
        beta: &BrauerElement,
        gamma: usize,
        lift: &UElement,
    ) -> Result<Qz, BrauerError> {
        if lift.g != gamma {
            return Err(BrauerError::BadLift { got: lift.g, expected: gamma });
        }
        if self.frob.action_on_g(gamma) != gamma {
            return Err(BrauerError::GammaNotFixed(gamma));
        }
        let delta = l.mul(&self.frob.frob(l, lift), &l.inv(lift));
        Ok(self.psi_on(beta, &lift.nbar) - self.alpha_on(l, beta, &delta) + self.psi_on(beta, &delta.nbar))
    }

    /// Residue at infinity using the section lift of `γ`.
    pub fn residue_at_infinity(&self, l: &LiftingData, beta: &BrauerElement, gamma: usize) -> Result<Qz, BrauerError> {
        self.residue_at_infinity_with(l, beta, gamma, &l.section_element(gamma))
    }

    /// `∂_γ(β) + Σ_c n_c ψ_c`, with `nbar` indexed like `l.c_classes`.
    pub fn obstruction_value(
        &self,
        l: &LiftingData,
        beta: &BrauerElement,
        nbar: &[usize],
        gamma: usize,
    ) -> Result<Qz, BrauerError> {
        if nbar.len() != beta.psi.len() || (0..nbar.len()).any(|c| nbar[c] != nbar[self.frob.class_perm[c]]) {
            return Err(BrauerError::NonInvariantMultidegree);
        }
        let n: Vec<i64> = nbar.iter().map(|&x| x as i64).collect();
        Ok(self.residue_at_infinity(l, beta, gamma)? + self.psi_on(beta, &n))
    }

    pub fn obstruction_vanishes(
        &self,
        l: &LiftingData,
        beta: &BrauerElement,
        nbar: &[usize],
        gamma: usize,
    ) -> Result<bool, BrauerError> {
        Ok(self.obstruction_value(l, beta, nbar, gamma)?.is_zero())
    }

    /// Whether no element of the group obstructs `(n̄, γ)`.
    pub fn criterion_all(&self, l: &LiftingData, nbar: &[usize], gamma: usize) -> Result<bool, BrauerError> {
        for beta in &self.elements {
            if !self.obstruction_vanishes(l, beta, nbar, gamma)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership masks over `elements`: residue `m·ℓ` on every orbit of `C_f`
    /// (where `m` is the orbit degree), and zero residue on every orbit of C.
    pub fn br_subsets(
        &self,
        l: &LiftingData,
        frob: &FrobeniusStructure,
        f: &WeightFunction,
        ell: Qz,
    ) -> Result<BrSubsets, BrauerError> {
        let mut reps = Vec::new();
        for class in f.c_f_classes(frob) {
            let pos = l.c_classes.iter().position(|&c| c == class).ok_or(BrauerError::ClassOutsideC(class))?;
            let orbit = self.orbit_of_position(pos);
            if orbit[0] == pos {
                reps.push(class);
            }
        }
        let orbit_sum = |beta: &BrauerElement, orbit: &[usize]| orbit.iter().map(|&p| beta.psi[p]).sum::<Qz>();
        let mut in_c_f = Vec::with_capacity(self.elements.len());
        for beta in &self.elements {
            let mut ok = true;
            for &class in &reps {
                let r = self.residue(l, beta, class)?;
                ok &= r.value == ell.scale(r.field_degree as i64);
            }
            in_c_f.push(ok);
        }
        let unramified = self
            .elements
            .iter()
            .map(|beta| self.class_orbits.iter().all(|o| orbit_sum(beta, o).is_zero()))
            .collect();
        Ok(BrSubsets { ell, in_c_f, unramified })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BrSubsets {
    pub ell: Qz,
    pub in_c_f: Vec<bool>,
    pub unramified: Vec<bool>,
}

impl BrSubsets {
    pub fn c_f_count(&self) -> usize {
        self.in_c_f.iter().filter(|&&b| b).count()
    }
    pub fn unramified_count(&self) -> usize {
        self.unramified.iter().filter(|&&b| b).count()
    }
}
