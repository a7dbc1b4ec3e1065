use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Coefficient ring for [`Series`].
pub trait Ring: Clone + Zero + One + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> + Sub<Output = Self> {}
impl<T> Ring for T where T: Clone + Zero + One + Add<Output = T> + Mul<Output = T> + Neg<Output = T> + Sub<Output = T> {}

/// Dense multivariate power series truncated at `bounds[i]` in variable i.
///
/// Products drop every monomial beyond the bounds, so retained coefficients are exact.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    bounds: Vec<usize>,
    coeffs: Vec<T>,
}

impl<T: Ring> Series<T> {
    pub fn zero(bounds: Vec<usize>) -> Self {
        let n = bounds.iter().map(|&b| b + 1).product();
        Series { bounds, coeffs: vec![T::zero(); n] }
    }
    pub fn one(bounds: Vec<usize>) -> Self {
        let mut s = Self::zero(bounds);
        s.coeffs[0] = T::one();
        s
    }
    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn flat(&self, e: &[usize]) -> Option<usize> {
        let mut idx = 0;
        for (i, &b) in self.bounds.iter().enumerate() {
            if e[i] > b {
                return None;
            }
            idx = idx * (b + 1) + e[i];
        }
        Some(idx)
    }
    fn unflat(&self, mut idx: usize) -> Vec<usize> {
        let mut e = vec![0; self.bounds.len()];
        for i in (0..self.bounds.len()).rev() {
            e[i] = idx % (self.bounds[i] + 1);
            idx /= self.bounds[i] + 1;
        }
        e
    }

    pub fn get(&self, e: &[usize]) -> &T {
        &self.coeffs[self.flat(e).expect("exponent within truncation")]
    }
    /// Sets a coefficient; exponents beyond the truncation are ignored.
    pub fn set(&mut self, e: &[usize], v: T) {
        if let Some(i) = self.flat(e) {
            self.coeffs[i] = v;
        }
    }
    pub fn add_at(&mut self, e: &[usize], v: T) {
        if let Some(i) = self.flat(e) {
            self.coeffs[i] = self.coeffs[i].clone() + v;
        }
    }
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &T)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.unflat(i), c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.bounds, other.bounds, "truncations must agree");
        let mut out = Self::zero(self.bounds.clone());
        let a: Vec<(Vec<usize>, &T)> = self.terms().collect();
        let b: Vec<(Vec<usize>, &T)> = other.terms().collect();
        let mut e = vec![0; self.bounds.len()];
        for (ea, ca) in &a {
            'next: for (eb, cb) in &b {
                for i in 0..e.len() {
                    e[i] = ea[i] + eb[i];
                    if e[i] > self.bounds[i] {
                        continue 'next;
                    }
                }
                let idx = out.flat(&e).unwrap();
                out.coeffs[idx] = out.coeffs[idx].clone() + (*ca).clone() * (*cb).clone();
            }
        }
        out
    }
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.bounds, other.bounds, "truncations must agree");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.clone() + b.clone()).collect();
        Series { bounds: self.bounds.clone(), coeffs }
    }
    pub fn scale(&self, c: &T) -> Self {
        Series { bounds: self.bounds.clone(), coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }
    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = Self::one(self.bounds.clone());
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
    /// Substitutes every variable by one variable `T`, so `∏ Tᵢ^{eᵢ} ↦ T^{Σ eᵢ}`.
    pub fn specialize_diagonal(&self, order: usize) -> Series<T> {
        let mut out = Series::zero(vec![order]);
        for (e, c) in self.terms() {
            out.add_at(&[e.iter().sum()], c.clone());
        }
        out
    }
    /// Coefficients of a univariate series.
    pub fn to_vec(&self) -> Vec<T> {
        assert_eq!(self.bounds.len(), 1);
        self.coeffs.clone()
    }
}
