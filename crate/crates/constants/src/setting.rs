use std::collections::HashMap;

use num_integer::Integer;

use brauer::{enumerate_brauer, BrauerElement, BrauerGroup};
use group_core::{abelianization, frobenius_structure, FiniteGroup, FrobeniusStructure, Qz, WeightFunction};
use lifting::{build_lifting_data_with, frobenius_on_u, FrobeniusOnU, LiftingData, SectionOrder};
use serde::Serialize;

use crate::error::ConstantsError;
use crate::local::{local_points, LocalPoint};

/// A Frobenius orbit of nontrivial classes with its weight.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitData {
    pub classes: Vec<usize>,
    pub degree: usize,
    pub weight: u64,
    pub in_c_f: bool,
}

/// Everything the constants need for one `(G, q, twist, f)`.
///
/// Brauer classes are modelled on `U(G, C_f)` when `C_f` generates `G`, and on
/// `U(G, C*)` with all nontrivial classes otherwise.
#[derive(Clone, Debug)]
pub struct Setting {
    pub group: FiniteGroup,
    pub q: u64,
    pub frob: FrobeniusStructure,
    pub weight: WeightFunction,
    pub balanced: bool,
    pub lifting: LiftingData,
    pub fu: FrobeniusOnU,
    pub brauer: BrauerGroup,
    pub orbits: Vec<OrbitData>,
    /// `residues[β][o]`: corestricted residue along orbit o, `None` when not algebraic.
    pub residues: Vec<Vec<Option<Qz>>>,
    pub points: Vec<LocalPoint>,
    /// `infinity[p][β] = ∂_γ(β)(σ)` at the local point p.
    pub infinity: Vec<Vec<Qz>>,
}

impl Setting {
    pub fn new(
        group: &FiniteGroup,
        q: u64,
        twist: Option<usize>,
        weight: WeightFunction,
        budget: u128,
    ) -> Result<Self, ConstantsError> {
        Self::with_section(group, q, twist, weight, budget, SectionOrder::LexLeast)
    }

    /// As [`Setting::new`] with a chosen transversal for the lifting data.
    pub fn with_section(
        group: &FiniteGroup,
        q: u64,
        twist: Option<usize>,
        weight: WeightFunction,
        budget: u128,
        order: SectionOrder,
    ) -> Result<Self, ConstantsError> {
        let frob = frobenius_structure(group, q, twist)?;
        if weight.f.len() != frob.num_orbits() {
            return Err(ConstantsError::BadWeight);
        }
        let c_f = frob.classes.union(&weight.c_f_classes(&frob));
        let balanced = group.generates(&c_f);
        let model_classes: Vec<usize> = if balanced {
            weight.c_f_classes(&frob)
        } else {
            frob.class_orbits.iter().flatten().copied().collect()
        };
        let lifting = build_lifting_data_with(group, &frob.classes.union(&model_classes), budget, order)?;
        let fu = frobenius_on_u(&lifting, &frob)?;
        let brauer = enumerate_brauer(&lifting, &fu);

        let orbits: Vec<OrbitData> = frob
            .class_orbits
            .iter()
            .enumerate()
            .map(|(o, cl)| OrbitData {
                classes: cl.clone(),
                degree: cl.len(),
                weight: weight.f[o],
                in_c_f: weight.c_f.contains(&o),
            })
            .collect();

        let mut residues = vec![vec![None; orbits.len()]; brauer.order()];
        for (o, od) in orbits.iter().enumerate() {
            if lifting.c_classes.contains(&od.classes[0]) {
                for (b, beta) in brauer.elements.iter().enumerate() {
                    residues[b][o] = Some(brauer.residue(&lifting, beta, od.classes[0])?.value);
                }
                continue;
            }
            let mut cls = model_classes.clone();
            cls.extend(&od.classes);
            let l_o = build_lifting_data_with(group, &frob.classes.union(&cls), budget, order)?;
            let fu_o = frobenius_on_u(&l_o, &frob)?;
            let br_o = enumerate_brauer(&l_o, &fu_o);
            let index: HashMap<&BrauerElement, usize> = brauer.elements.iter().enumerate().map(|(i, b)| (b, i)).collect();
            for beta in &br_o.elements {
                let r = brauer.restrict_from(&lifting, &br_o, &l_o, beta)?;
                let b = index[&r];
                residues[b][o] = Some(br_o.residue(&l_o, beta, od.classes[0])?.value);
            }
        }

        let points = local_points(group, &frob);
        let mut by_sigma: HashMap<usize, BrauerGroup> = HashMap::new();
        let mut infinity = Vec::with_capacity(points.len());
        for p in &points {
            if !by_sigma.contains_key(&p.sigma) {
                let fs = frobenius_structure(group, q, Some(p.sigma))?;
                let fus = frobenius_on_u(&lifting, &fs)?;
                let bs = enumerate_brauer(&lifting, &fus);
                debug_assert_eq!(bs.elements, brauer.elements);
                by_sigma.insert(p.sigma, bs);
            }
            let bs = &by_sigma[&p.sigma];
            let row = brauer
                .elements
                .iter()
                .map(|beta| bs.residue_at_infinity(&lifting, beta, p.gamma))
                .collect::<Result<Vec<_>, _>>()?;
            infinity.push(row);
        }

        Ok(Setting {
            group: group.clone(),
            q,
            frob,
            weight,
            balanced,
            lifting,
            fu,
            brauer,
            orbits,
            residues,
            points,
            infinity,
        })
    }

    pub fn fmin(&self) -> u64 {
        self.weight.fmin
    }
    pub fn b(&self) -> usize {
        self.weight.b()
    }

    /// Index of `beta` in `self.brauer.elements`.
    pub fn index_of(&self, beta: &BrauerElement) -> Option<usize> {
        self.brauer.elements.binary_search(beta).ok()
    }

    /// Orbits where `β` has an algebraic residue.
    pub fn c_beta(&self, beta: usize) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&o| self.residues[beta][o].is_some()).collect()
    }

    /// Whether `β ∈ Br_{C_f, ℓ}`: the residue along each orbit of `C_f` is `ℓ` restricted to its field.
    pub fn in_subset(&self, beta: usize, ell: Qz) -> bool {
        self.orbits.iter().enumerate().filter(|(_, od)| od.in_c_f).all(|(o, od)| {
            self.residues[beta][o] == Some(ell.scale(od.degree as i64))
        })
    }

    /// A common denominator for every `ℓ` with `Br_{C_f, ℓ}` nonempty: the lcm of the
    /// orbit degrees in `C_f` times the lcm of the residue denominators along them.
    pub fn ell_denominator(&self) -> u64 {
        let mut m = 1u64;
        let mut r = 1u64;
        for (o, od) in self.orbits.iter().enumerate().filter(|(_, od)| od.in_c_f) {
            m = m.lcm(&(od.degree as u64));
            for row in &self.residues {
                if let Some(v) = row[o] {
                    r = r.lcm(&(v.den() as u64));
                }
            }
        }
        m * r
    }

    /// `|Z(G)(F_q)|`; inner twists fix the center pointwise.
    pub fn center_points(&self) -> u64 {
        self.group.center().len() as u64
    }

    /// `|G^ab(−1)(F_q)|`
    pub fn twisted_abelianization_points(&self) -> u64 {
        abelianization(&self.group).fixed_points(&self.group, &self.frob)
    }
}
