//! A `Z/n`-cover of `P¹` over `F_q` with `n | q − 1` is `y^n = c·f(t)`, where `c` runs
//! over `F_q^×/(F_q^×)^n` and `f = ∏ P^{e_P}` is monic with `0 < e_P < n`. It is
//! geometrically connected iff `gcd(n, e_P) = 1`, it has inertia `e_P` at `P` and
//! `−deg f` at ∞, and its Frobenius at ∞ is the power residue class of `c`.

use constants::{HInf, HeightSpec, Omega};
use group_core::{conjugacy_classes, FiniteGroup};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use zeta_conf::{closed_points, SmallField};

use crate::error::OracleError;

struct Cyclic {
    n: u64,
    f: Vec<u64>,
    h: HeightSpec,
    class_of: Vec<usize>,
}

impl Cyclic {
    fn new(n: u64, q: u64, f: &[u64], h: &HeightSpec) -> Result<Self, OracleError> {
        if n < 2 || (q - 1) % n != 0 {
            return Err(OracleError::InvalidKummer { n, q });
        }
        if f.len() != n as usize || f[1..].iter().any(|&x| x == 0) {
            return Err(OracleError::BadWeight(n));
        }
        let g = FiniteGroup::cyclic(n as usize);
        Ok(Cyclic { n, f: f.to_vec(), h: h.clone(), class_of: conjugacy_classes(&g).class_of })
    }

    fn h_inf(&self, gamma: u64) -> u64 {
        match &self.h.h_inf {
            HInf::Zero => 0,
            HInf::Weight if gamma == 0 => 0,
            HInf::Weight => self.f[gamma as usize],
            HInf::PerClass(v) => v[self.class_of[gamma as usize]],
        }
    }

    fn in_omega(&self, sigma: u64, gamma: u64) -> bool {
        match &self.h.omega {
            Omega::All => true,
            Omega::Unramified => gamma == 0,
            Omega::GammaClasses(cl) => cl.contains(&self.class_of[gamma as usize]),
            Omega::Points(list) => list.contains(&(sigma as usize, gamma as usize)),
        }
    }

    /// Number of classes `c` giving a connected cover of height `d`, for a finite part
    /// with height `finite`, `Σ e_P deg P ≡ esum` and `gcd(n, e_P) = g`.
    fn completions(&self, finite: u64, esum: u64, g: u64, d: u64) -> u64 {
        if g.gcd(&self.n) != 1 {
            return 0;
        }
        let gamma = (self.n - esum % self.n) % self.n;
        if finite + self.h_inf(gamma) != d {
            return 0;
        }
        (0..self.n).filter(|&sigma| self.in_omega(sigma, gamma)).count() as u64
    }
}

fn binomial(n: u128, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k as u128 {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

struct Shapes<'a> {
    cy: &'a Cyclic,
    d: u64,
    /// `(degree, exponent, height)` of each part type
    types: Vec<(u64, u64, u64)>,
    points: Vec<u128>,
    used: Vec<u64>,
    /// Optional bound on the total degree carrying each exponent, and what is spent.
    caps: Option<Vec<u64>>,
    spent: Vec<u64>,
    visited: u128,
    budget: u128,
}

impl Shapes<'_> {
    fn walk(&mut self, t: usize, finite: u64, esum: u64, g: u64, weight: BigUint, out: &mut BigUint) -> Result<(), OracleError> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(OracleError::BudgetExceeded { attempted: self.visited, budget: self.budget });
        }
        if t == self.types.len() {
            let k = self.cy.completions(finite, esum, g, self.d);
            if k > 0 {
                *out += weight * BigUint::from(k);
            }
            return Ok(());
        }
        let (deg, e, w) = self.types[t];
        let di = deg as usize;
        let free = self.points[di] - self.used[di] as u128;
        let mut k = 0u64;
        loop {
            if finite + k * w > self.d || k as u128 > free {
                break;
            }
            if let Some(c) = &self.caps {
                if self.spent[e as usize] + k * deg > c[e as usize] {
                    break;
                }
            }
            let gk = if k == 0 { g } else { g.gcd(&e) };
            let wk = &weight * binomial(free, k);
            self.used[di] += k;
            self.spent[e as usize] += k * deg;
            self.walk(t + 1, finite + k * w, (esum + k * e * deg) % self.cy.n, gk, wk, out)?;
            self.used[di] -= k;
            self.spent[e as usize] -= k * deg;
            k += 1;
        }
        Ok(())
    }
}

/// Number of geometrically connected `Z/n`-covers of `P¹_{F_q}` of height `q^d`.
///
/// `f` has one weight per element of `Z/n` (entry 0 ignored). Covers are counted as
/// G-covers, so each field with group `Z/n` appears `φ(n)` times. The count runs over
/// factorization shapes of `f`, each weighted by the number of ways to choose its
/// irreducible factors; `budget` bounds the number of shapes visited.
pub fn kummer_count(n: u64, q: u64, d: u64, f: &[u64], h: &HeightSpec, budget: u128) -> Result<BigUint, OracleError> {
    let cy = Cyclic::new(n, q, f, h)?;
    let fmin = f[1..].iter().min().copied().unwrap_or(1);
    shapes(&cy, q, d, d / fmin, None, budget)
}

fn shapes(cy: &Cyclic, q: u64, d: u64, max_deg: u64, caps: Option<Vec<u64>>, budget: u128) -> Result<BigUint, OracleError> {
    let mut types = Vec::new();
    for deg in 1..=max_deg {
        for e in 1..cy.n {
            let w = deg * cy.f[e as usize];
            if w <= d {
                types.push((deg, e, w));
            }
        }
    }
    let points = (0..=max_deg).map(|k| if k == 0 { 0 } else { closed_points(q, k) }).collect();
    let mut walker = Shapes { cy, d, types, points, used: vec![0; max_deg as usize + 1], caps, spent: vec![0; cy.n as usize], visited: 0, budget };
    let mut out = BigUint::zero();
    walker.walk(0, 0, 0, cy.n, BigUint::one(), &mut out)?;
    Ok(out)
}

/// Number of connected `Z/n`-covers with finite ramification multidegree `nbar`,
/// where `nbar[e − 1]` is the total degree of the points with inertia `e`, and any
/// behaviour at ∞.
pub fn kummer_multidegree(n: u64, q: u64, nbar: &[u64], budget: u128) -> Result<BigUint, OracleError> {
    if n < 2 || (q - 1) % n != 0 {
        return Err(OracleError::InvalidKummer { n, q });
    }
    assert_eq!(nbar.len() as u64, n - 1, "one entry per nontrivial element");
    // encode the multidegree as a height with weights (1, B, B², ...) and ∞ weightless;
    // with each digit capped below B the encoding is unique
    let base = nbar.iter().max().copied().unwrap_or(0) + 1;
    let mut f = vec![0u64; n as usize];
    for e in 1..n as usize {
        f[e] = base.pow(e as u32 - 1);
    }
    let d: u64 = nbar.iter().enumerate().map(|(i, &k)| k * f[i + 1]).sum();
    let h = HeightSpec { h_inf: HInf::Zero, omega: Omega::All };
    let cy = Cyclic::new(n, q, &f, &h)?;
    let caps = std::iter::once(0).chain(nbar.iter().copied()).collect();
    shapes(&cy, q, d, base - 1, Some(caps), budget)
}

/// `(degree, multiplicity)` of each irreducible factor of a monic `f`, by trial division
/// up to half the degree of what is left.
fn factor(k: &SmallField, f: &[u16], irr: &[Vec<Vec<u16>>]) -> Vec<(u64, u64)> {
    let mut rest = f.to_vec();
    let mut out = Vec::new();
    let mut deg = 1;
    while 2 * deg < rest.len() {
        for g in &irr[deg] {
            let mut e = 0;
            loop {
                let (quo, r) = k.divrem_monic(&rest, g);
                if !r.is_empty() {
                    break;
                }
                rest = quo;
                e += 1;
            }
            if e > 0 {
                out.push((deg as u64, e));
            }
        }
        deg += 1;
    }
    if rest.len() > 1 {
        out.push((rest.len() as u64 - 1, 1));
    }
    out
}

/// [`kummer_count`] by listing every monic `f` over `F_q` and factoring it.
///
/// The classes of `c` enter only through their power residue, as in [`kummer_count`].
pub fn kummer_brute(n: u64, q: u64, d: u64, f: &[u64], h: &HeightSpec, budget: u128) -> Result<u128, OracleError> {
    let cy = Cyclic::new(n, q, f, h)?;
    let k = SmallField::new(q as u32)?;
    let fmin = f[1..].iter().min().copied().unwrap_or(1);
    let max_deg = ((n - 1) * (d / fmin)) as usize;
    let attempted: u128 = (0..=max_deg as u32).map(|m| (q as u128).pow(m)).sum();
    if attempted > budget {
        return Err(OracleError::BudgetExceeded { attempted, budget });
    }
    let irr: Vec<Vec<Vec<u16>>> = (0..=max_deg / 2).map(|m| if m == 0 { vec![] } else { k.irreducibles(m) }).collect();
    let mut total = 0u128;
    for m in 0..=max_deg {
        for poly in k.monics(m) {
            let parts = factor(&k, &poly, &irr);
            if parts.iter().any(|&(_, e)| e >= n) {
                continue;
            }
            let finite: u64 = parts.iter().map(|&(deg, e)| deg * f[e as usize]).sum();
            if finite > d {
                continue;
            }
            let esum = parts.iter().map(|&(deg, e)| deg * e).sum::<u64>() % n;
            let g = parts.iter().fold(n, |g, &(_, e)| g.gcd(&e));
            total += cy.completions(finite, esum, g, d) as u128;
        }
    }
    Ok(total)
}

/// `2q^d(1 − q⁻²)`, the quadratic count for even `d ≥ 4`.
pub fn quadratic_closed_form(q: u64, d: u64) -> BigRational {
    let q = BigInt::from(q);
    let qd = num_traits::pow(q.clone(), d as usize);
    BigRational::from_integer(BigInt::from(2) * qd) * (BigRational::one() - BigRational::new(BigInt::one(), &q * &q))
}
