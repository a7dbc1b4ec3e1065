use group_core::FrobeniusStructure;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::data::{LiftingData, UElement};
use crate::error::LiftingError;

/// Frobenius on U(G,C) and on A.
///
/// `f1_matrix` is the substitution `[g] ↦ [F(g)]^q` restricted to A, where
/// `F(g) = σ g^{q⁻¹} σ⁻¹`. The geometric Frobenius used for point counts is
/// `frob_matrix = f1_matrix / q`, well defined since q is prime to |H₂|.
/// Rows are images of basis vectors, in basis coordinates.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusOnU {
    pub q: u64,
    /// Permutation of the classes of C: position `i` goes to `class_perm[i]`.
    pub class_perm: Vec<usize>,
    pub f1_matrix: Vec<Vec<i64>>,
    pub frob_matrix: Vec<Vec<i64>>,
    #[serde(skip)]
    action: Vec<usize>,
    #[serde(skip)]
    r: u64,
    #[serde(skip)]
    section_frob: Vec<UElement>,
    #[serde(skip)]
    q_inv_tors: Vec<i64>,
}

fn inverse_mod(q: u64, d: i64) -> Option<i64> {
    let e = BigInt::from(q).extended_gcd(&BigInt::from(d));
    e.gcd.to_i64().filter(|&g| g == 1)?;
    Some(e.x.mod_floor(&BigInt::from(d)).to_i64().unwrap())
}

impl LiftingData {
    /// Word of `F1(w)`: each letter `x` becomes `F(x)` repeated q times.
    fn f1_word(&self, word: impl IntoIterator<Item = (usize, bool)>, action: &[usize], q: u64) -> Vec<(usize, bool)> {
        let mut out = Vec::new();
        for (x, inv) in word {
            out.extend(std::iter::repeat((action[x], inv)).take(q as usize));
        }
        out
    }

    fn section_word(&self, g: usize) -> Vec<(usize, bool)> {
        self.section[g].iter().map(|&x| (x, false)).collect()
    }
}

pub fn frobenius_on_u(l: &LiftingData, frob: &FrobeniusStructure) -> Result<FrobeniusOnU, LiftingError> {
    let g = l.group_ref();
    let q = frob.q;
    let action = frob.action.clone();
    if l.c_elements.iter().any(|&x| l.c_elements.binary_search(&action[x]).is_err()) {
        return Err(LiftingError::NonInvariantInput("C is not stable under Frobenius".into()));
    }
    let k = l.num_classes();
    let class_perm: Vec<usize> = (0..k)
        .map(|i| {
            let rep = l.c_elements.iter().copied().find(|&x| l.class_position(x).unwrap() == i).unwrap();
            l.class_position(action[rep]).unwrap()
        })
        .collect();
    let q_inv_tors = l
        .a_torsion
        .iter()
        .map(|&d| inverse_mod(q, d as i64))
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| LiftingError::NonInvariantInput(format!("q = {q} is not prime to |H₂|")))?;

    // F1 on the Schreier generators s(t)[c]s(tc)⁻¹
    let letters = &l.sch.letters;
    let gens: Vec<UElement> = l
        .sch
        .edges
        .iter()
        .map(|&(t, li)| {
            let x = letters[li];
            let tc = g.mul(t, x);
            let mut w = l.f1_word(l.section_word(t), &action, q);
            w.extend(l.f1_word([(x, false)], &action, q));
            let back = l.f1_word(l.section_word(tc), &action, q);
            w.extend(back.iter().rev().map(|&(y, inv)| (y, !inv)));
            l.word_element(&w).expect("F1 keeps words in C")
        })
        .collect();

    let nt = l.a_torsion.len();
    let mut f1_matrix = Vec::new();
    let mut frob_matrix = Vec::new();
    for row in &l.qinv_rows {
        let mut nbar = vec![BigInt::zero(); k];
        let mut tors = vec![BigInt::zero(); nt];
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            debug_assert_eq!(gens[j].g, g.identity());
            for (a, &b) in nbar.iter_mut().zip(&gens[j].nbar) {
                *a += x * b;
            }
            for (a, &b) in tors.iter_mut().zip(&gens[j].a) {
                *a += x * b;
            }
        }
        let tors: Vec<i64> = tors
            .iter()
            .zip(&l.a_torsion)
            .map(|(t, &d)| t.mod_floor(&BigInt::from(d)).to_i64().unwrap())
            .collect();
        let free = l.free_coords(&nbar).expect("F1 preserves A");
        f1_matrix.push([free.clone(), tors.clone()].concat());
        let qb = BigInt::from(q);
        assert!(nbar.iter().all(|x| x.is_multiple_of(&qb)), "𝔯∘F1 is divisible by q");
        let nbar_q: Vec<BigInt> = nbar.iter().map(|x| x / &qb).collect();
        let free_q = l.free_coords(&nbar_q).expect("F1/q preserves A");
        let tors_q: Vec<i64> = tors
            .iter()
            .zip(&q_inv_tors)
            .zip(&l.a_torsion)
            .map(|((&t, &qi), &d)| (t * qi).rem_euclid(d as i64))
            .collect();
        frob_matrix.push([free_q, tors_q].concat());
    }

    let mut out = FrobeniusOnU {
        q,
        class_perm,
        f1_matrix,
        frob_matrix,
        action,
        r: frob.r,
        section_frob: Vec::new(),
        q_inv_tors,
    };
    out.section_frob = (0..g.order())
        .map(|x| {
            let w = l.f1_word(l.section_word(x), &out.action, q);
            out.qth_root(l, &l.word_element(&w).unwrap())
        })
        .collect();
    Ok(out)
}

impl FrobeniusOnU {
    /// `F(g) = σ g^{q⁻¹} σ⁻¹`
    pub fn action_on_g(&self, x: usize) -> usize {
        self.action[x]
    }

    /// The unique `v` with `v^q = u`.
    pub fn qth_root(&self, l: &LiftingData, u: &UElement) -> UElement {
        let g = l.group_ref();
        let h = g.pow(u.g, self.r as i64);
        let q = self.q as i64;
        assert!(u.nbar.iter().all(|x| x % q == 0), "multidegree not divisible by q");
        let base = UElement { g: h, nbar: u.nbar.iter().map(|x| x / q).collect(), a: vec![0; u.a.len()] };
        let p = l.pow(&base, self.q);
        debug_assert_eq!((p.g, &p.nbar), (u.g, &u.nbar));
        let a = (0..u.a.len())
            .map(|i| ((u.a[i] - p.a[i]) * self.q_inv_tors[i]).rem_euclid(l.a_torsion[i] as i64))
            .collect();
        UElement { a, ..base }
    }

    /// `F1(u)`, the substitution endomorphism, on a word.
    pub fn f1_word_element(&self, l: &LiftingData, word: &[(usize, bool)]) -> Result<UElement, LiftingError> {
        l.word_element(&l.f1_word(word.iter().copied(), &self.action, self.q))
    }

    /// Apply a matrix (rows = images of basis vectors) to an element of A.
    fn apply(&self, l: &LiftingData, m: &[Vec<i64>], u: &UElement) -> UElement {
        let (free, tors) = l.a_coordinates(u).expect("element of A");
        let dim = l.a_free_rank + l.a_torsion.len();
        let mut out = vec![0i64; dim];
        for (i, &y) in free.iter().chain(&tors).enumerate() {
            for (o, &v) in out.iter_mut().zip(&m[i]) {
                *o += y * v;
            }
        }
        l.from_a_coordinates(&out[..l.a_free_rank], &out[l.a_free_rank..])
    }

    /// Geometric Frobenius on A.
    pub fn frob_a(&self, l: &LiftingData, u: &UElement) -> UElement {
        self.apply(l, &self.frob_matrix, u)
    }

    pub fn f1_a(&self, l: &LiftingData, u: &UElement) -> UElement {
        self.apply(l, &self.f1_matrix, u)
    }

    /// Geometric Frobenius on U: `u = a·s(g) ↦ Frob(a)·Frob(s(g))`.
    pub fn frob(&self, l: &LiftingData, u: &UElement) -> UElement {
        let s = l.section_element(u.g);
        let a = UElement {
            g: l.group_ref().identity(),
            nbar: u.nbar.iter().zip(&s.nbar).map(|(x, y)| x - y).collect(),
            a: u.a.clone(),
        };
        l.mul(&self.frob_a(l, &a), &self.section_frob[u.g])
    }

    /// Frobenius on torsion coordinates of H₂(G,C).
    pub fn frob_torsion(&self, l: &LiftingData, t: &[i64]) -> Vec<i64> {
        let f = l.a_free_rank;
        (0..t.len())
            .map(|j| {
                let s: i64 = t.iter().enumerate().map(|(i, &y)| y * self.frob_matrix[f + i][f + j]).sum();
                s.rem_euclid(l.a_torsion[j] as i64)
            })
            .collect()
    }

    /// `|H₂(G,C)^Frob|`
    pub fn h2_fixed_count(&self, l: &LiftingData) -> u64 {
        l.torsion_elements().iter().filter(|t| self.frob_torsion(l, t) == **t).count() as u64
    }
}
