use std::collections::HashSet;

use group_core::{conjugacy_classes, FiniteGroup};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::LiftingError;
use crate::schreier::{Schreier, SectionOrder};
use crate::snf::smith_normal_form;

/// Element of U(G,C): image in G, multidegree over the classes of C, and the
/// torsion coordinate of `u·s(g)⁻¹` in H₂(G,C).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct UElement {
    pub g: usize,
    pub nbar: Vec<i64>,
    pub a: Vec<i64>,
}

/// Shape of the SNF behind A, enough to re-derive H₂ by hand.
#[derive(Clone, Debug, Serialize)]
pub struct SnfCertificate {
    pub rows: usize,
    pub cols: usize,
    pub unit_entries: usize,
    pub nonunit_entries: Vec<String>,
}

/// `A = ker(U(G,C) → G)` in the basis from the Smith form: free coordinates
/// first, then torsion coordinates with moduli `a_torsion`.
#[derive(Clone, Debug, Serialize)]
pub struct LiftingData {
    pub group: String,
    pub group_order: usize,
    pub c_elements: Vec<usize>,
    /// Conjugacy class ids making up C; multidegrees are indexed by position here.
    pub c_classes: Vec<usize>,
    pub schreier_rank: usize,
    pub a_free_rank: usize,
    /// Invariant factors of the torsion of A, i.e. H₂(G,C).
    pub a_torsion: Vec<u64>,
    /// Row b is 𝔯 of the b-th basis vector of A.
    pub r_matrix: Vec<Vec<i64>>,
    /// Transversal word of each group element, as elements of C.
    pub section: Vec<Vec<usize>>,
    pub snf: SnfCertificate,
    #[serde(skip)]
    pub(crate) g: FiniteGroup,
    #[serde(skip)]
    pub(crate) sch: Schreier,
    #[serde(skip)]
    pub(crate) class_index: Vec<usize>,
    #[serde(skip)]
    gen_tors: Vec<Vec<i64>>,
    #[serde(skip)]
    pub(crate) qinv_rows: Vec<Vec<BigInt>>,
    #[serde(skip)]
    rf_inv: Vec<Vec<BigRational>>,
}

pub fn build_lifting_data(g: &FiniteGroup, c: &[usize], budget: u128) -> Result<LiftingData, LiftingError> {
    build_lifting_data_with(g, c, budget, SectionOrder::LexLeast)
}

pub fn build_lifting_data_with(
    g: &FiniteGroup,
    c: &[usize],
    budget: u128,
    order: SectionOrder,
) -> Result<LiftingData, LiftingError> {
    let ct = conjugacy_classes(g);
    let mut c: Vec<usize> = c.to_vec();
    c.sort_unstable();
    c.dedup();
    if c.is_empty() || c.contains(&g.identity()) {
        return Err(LiftingError::BadClassSet);
    }
    let c_classes = ct.classes_in(&c).ok_or(LiftingError::BadClassSet)?;
    if !g.generates(&c) {
        return Err(LiftingError::NotGenerating);
    }
    let sch = Schreier::new(g, &c, order).ok_or(LiftingError::NotGenerating)?;
    let n = g.order();
    let nl = sch.letters.len();
    let rank = sch.rank();
    let rows_bound = (nl * nl.saturating_sub(1) * n) as u128;
    let attempted = rows_bound * rank as u128;
    if attempted > budget {
        return Err(LiftingError::BudgetExceeded { attempted, budget });
    }

    // relators [h][g][h]⁻¹[hgh⁻¹]⁻¹, read from every coset
    let mut seen: HashSet<Vec<(usize, i64)>> = HashSet::new();
    let mut rows = Vec::new();
    let mut dense = vec![0i64; rank];
    for t in 0..n {
        for lh in 0..nl {
            for lg in 0..nl {
                if lh == lg {
                    continue;
                }
                let (h, x) = (sch.letters[lh], sch.letters[lg]);
                let lc = sch.letter_of[g.conj(h, x)].expect("C is conjugation invariant");
                let word = [(lh, false), (lg, false), (lh, true), (lc, true)];
                let mut touched = Vec::new();
                let end = sch.rewrite(g, t, word, |col, s| {
                    dense[col] += s;
                    touched.push(col);
                });
                debug_assert_eq!(end, t);
                touched.sort_unstable();
                touched.dedup();
                let sparse: Vec<(usize, i64)> =
                    touched.iter().filter(|&&col| dense[col] != 0).map(|&col| (col, dense[col])).collect();
                for &col in &touched {
                    dense[col] = 0;
                }
                if !sparse.is_empty() && seen.insert(sparse.clone()) {
                    rows.push(sparse);
                }
            }
        }
    }
    let nrows = rows.len();
    let mat: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); rank];
            for &(col, x) in r {
                v[col] = BigInt::from(x);
            }
            v
        })
        .collect();
    let snf = smith_normal_form(mat, rank);

    let mut basis = Vec::new();
    let mut moduli = Vec::new();
    for i in snf.rank..rank {
        basis.push(i);
    }
    let free_rank = basis.len();
    for i in 0..snf.rank {
        if !snf.diagonal[i].is_one() {
            basis.push(i);
            moduli.push(snf.diagonal[i].to_i64().expect("torsion fits in i64"));
        }
    }
    let gen_tors: Vec<Vec<i64>> = (0..rank)
        .map(|j| {
            basis[free_rank..]
                .iter()
                .zip(&moduli)
                .map(|(&i, &d)| snf.q[j][i].mod_floor(&BigInt::from(d)).to_i64().unwrap())
                .collect()
        })
        .collect();
    let qinv_rows: Vec<Vec<BigInt>> = basis.iter().map(|&i| snf.q_inv[i].clone()).collect();

    let class_index: Vec<usize> =
        sch.letters.iter().map(|&x| c_classes.iter().position(|&k| k == ct.class_of[x]).unwrap()).collect();
    let k = c_classes.len();
    let letter_counts = |w: &[usize]| {
        let mut v = vec![0i64; k];
        for &l in w {
            v[class_index[l]] += 1;
        }
        v
    };
    let gen_r: Vec<Vec<i64>> = sch
        .edges
        .iter()
        .map(|&(t, l)| {
            let tc = g.mul(t, sch.letters[l]);
            let (a, b) = (letter_counts(&sch.section[t]), letter_counts(&sch.section[tc]));
            let mut v: Vec<i64> = (0..k).map(|i| a[i] - b[i]).collect();
            v[class_index[l]] += 1;
            v
        })
        .collect();
    let r_matrix: Vec<Vec<i64>> = qinv_rows
        .iter()
        .map(|row| {
            let mut acc = vec![BigInt::zero(); k];
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    for (a, &r) in acc.iter_mut().zip(&gen_r[j]) {
                        *a += x * r;
                    }
                }
            }
            acc.iter().map(|a| a.to_i64().expect("R entries fit in i64")).collect()
        })
        .collect();
    let rf_inv = invert(&r_matrix[..free_rank]).expect("𝔯 is injective on the free part of A");

    let section = sch.section.iter().map(|w| w.iter().map(|&l| sch.letters[l]).collect()).collect();
    let certificate = SnfCertificate {
        rows: nrows,
        cols: rank,
        unit_entries: snf.diagonal[..snf.rank].iter().filter(|d| d.is_one()).count(),
        nonunit_entries: snf.diagonal[..snf.rank].iter().filter(|d| !d.is_one()).map(|d| d.to_string()).collect(),
    };
    Ok(LiftingData {
        group: g.name().to_string(),
        group_order: n,
        c_elements: c,
        c_classes,
        schreier_rank: rank,
        a_free_rank: free_rank,
        a_torsion: moduli.iter().map(|&d| d as u64).collect(),
        r_matrix,
        section,
        snf: certificate,
        g: g.clone(),
        sch,
        class_index,
        gen_tors,
        qinv_rows,
        rf_inv,
    })
}

fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().map(|&x| q(x)).chain((0..n).map(|j| q((i == j) as i64))).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl LiftingData {
    pub fn group_ref(&self) -> &FiniteGroup {
        &self.g
    }
    pub fn h2_order(&self) -> u64 {
        self.a_torsion.iter().product()
    }
    pub fn num_classes(&self) -> usize {
        self.c_classes.len()
    }
    /// Position of an element's class in `c_classes`.
    pub fn class_position(&self, x: usize) -> Result<usize, LiftingError> {
        self.sch.letter_of[x].map(|l| self.class_index[l]).ok_or(LiftingError::NotInC(x))
    }

    fn reduce(&self, a: &mut [i64]) {
        for (x, &d) in a.iter_mut().zip(&self.a_torsion) {
            *x = x.rem_euclid(d as i64);
        }
    }

    fn rewrite_tors(&self, start: usize, word: impl IntoIterator<Item = (usize, bool)>) -> (usize, Vec<i64>) {
        let mut a = vec![0i64; self.a_torsion.len()];
        let end = self.sch.rewrite(&self.g, start, word, |col, s| {
            for (x, &y) in a.iter_mut().zip(&self.gen_tors[col]) {
                *x += s * y;
            }
        });
        self.reduce(&mut a);
        (end, a)
    }

    pub fn identity(&self) -> UElement {
        UElement { g: self.g.identity(), nbar: vec![0; self.num_classes()], a: vec![0; self.a_torsion.len()] }
    }

    /// Element of U given by a word in C; `true` marks an inverted letter.
    pub fn word_element(&self, word: &[(usize, bool)]) -> Result<UElement, LiftingError> {
        let mut letters = Vec::with_capacity(word.len());
        let mut nbar = vec![0i64; self.num_classes()];
        for &(x, inv) in word {
            let l = self.sch.letter_of[x].ok_or(LiftingError::NotInC(x))?;
            nbar[self.class_index[l]] += if inv { -1 } else { 1 };
            letters.push((l, inv));
        }
        let (g, a) = self.rewrite_tors(self.g.identity(), letters);
        Ok(UElement { g, nbar, a })
    }

    /// `[g₁]⋯[g_n]`
    pub fn lifting_invariant(&self, t: &[usize]) -> Result<UElement, LiftingError> {
        let w: Vec<(usize, bool)> = t.iter().map(|&x| (x, false)).collect();
        self.word_element(&w)
    }

    pub fn letter(&self, x: usize) -> Result<UElement, LiftingError> {
        self.word_element(&[(x, false)])
    }

    /// The section `s(g)` itself.
    pub fn section_element(&self, g: usize) -> UElement {
        let mut nbar = vec![0i64; self.num_classes()];
        for &l in &self.sch.section[g] {
            nbar[self.class_index[l]] += 1;
        }
        UElement { g, nbar, a: vec![0; self.a_torsion.len()] }
    }

    /// Torsion part of `s(g₁)s(g₂)s(g₁g₂)⁻¹`.
    fn cocycle(&self, g1: usize, g2: usize) -> Vec<i64> {
        self.rewrite_tors(g1, self.sch.section[g2].iter().map(|&l| (l, false))).1
    }

    pub fn mul(&self, u: &UElement, v: &UElement) -> UElement {
        let c = self.cocycle(u.g, v.g);
        let mut a: Vec<i64> = (0..c.len()).map(|i| u.a[i] + v.a[i] + c[i]).collect();
        self.reduce(&mut a);
        UElement { g: self.g.mul(u.g, v.g), nbar: u.nbar.iter().zip(&v.nbar).map(|(x, y)| x + y).collect(), a }
    }

    pub fn inv(&self, u: &UElement) -> UElement {
        let gi = self.g.inv(u.g);
        let c = self.cocycle(u.g, gi);
        let mut a: Vec<i64> = (0..c.len()).map(|i| -u.a[i] - c[i]).collect();
        self.reduce(&mut a);
        UElement { g: gi, nbar: u.nbar.iter().map(|x| -x).collect(), a }
    }

    pub fn pow(&self, u: &UElement, mut e: u64) -> UElement {
        let mut base = u.clone();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Basis coordinates (free, torsion) of an element of A, i.e. with trivial image in G.
    pub fn a_coordinates(&self, u: &UElement) -> Option<(Vec<i64>, Vec<i64>)> {
        if u.g != self.g.identity() {
            return None;
        }
        let free = self.free_coords(&u.nbar.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())?;
        Some((free, u.a.clone()))
    }

    /// Solves `y·R_free = r` over Z.
    pub(crate) fn free_coords(&self, r: &[BigInt]) -> Option<Vec<i64>> {
        let f = self.a_free_rank;
        (0..f)
            .map(|j| {
                let s: BigRational =
                    (0..f).map(|i| BigRational::from_integer(r[i].clone()) * &self.rf_inv[i][j]).sum();
                s.is_integer().then(|| s.to_integer().to_i64()).flatten()
            })
            .collect()
    }

    /// Element of A with the given basis coordinates.
    pub fn from_a_coordinates(&self, free: &[i64], tors: &[i64]) -> UElement {
        let k = self.num_classes();
        let nbar = (0..k).map(|c| free.iter().enumerate().map(|(i, &y)| y * self.r_matrix[i][c]).sum()).collect();
        let mut a = tors.to_vec();
        self.reduce(&mut a);
        UElement { g: self.g.identity(), nbar, a }
    }

    /// Words in C for the Schreier generators `s(t)·x·s(tx)⁻¹` of A, one per column.
    pub fn generator_words(&self) -> Vec<Vec<(usize, bool)>> {
        self.sch
            .edges
            .iter()
            .map(|&(t, l)| {
                let x = self.sch.letters[l];
                let tx = self.g.mul(t, x);
                let mut w: Vec<(usize, bool)> = self.section[t].iter().map(|&y| (y, false)).collect();
                w.push((x, false));
                w.extend(self.section[tx].iter().rev().map(|&y| (y, true)));
                w
            })
            .collect()
    }

    /// Basis vectors of A (free first) as integer combinations of the Schreier generators.
    pub fn basis_in_generators(&self) -> &[Vec<BigInt>] {
        &self.qinv_rows
    }

    /// All elements of the torsion subgroup H₂(G,C), as coordinate vectors.
    pub fn torsion_elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for &d in &self.a_torsion {
            out = out.into_iter().flat_map(|v| (0..d as i64).map(move |x| [v.clone(), vec![x]].concat())).collect();
        }
        out
    }
}
