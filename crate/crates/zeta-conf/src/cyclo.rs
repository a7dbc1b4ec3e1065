use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static C: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `Φ_n`, coefficients low to high.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1);
    if let Some(p) = cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut f = vec![BigInt::zero(); n as usize + 1];
    f[0] = BigInt::from(-1);
    f[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            f = exact_div_monic(&f, &cyclotomic_poly(d));
        }
    }
    let p = Arc::new(f);
    cache().lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    let mut quo = vec![BigInt::zero(); f.len() - dg];
    for i in (dg..f.len()).rev() {
        let c = r[i].clone();
        if !c.is_zero() {
            for j in 0..=dg {
                r[i - dg + j] -= &c * &g[j];
            }
            quo[i - dg] = c;
        }
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    quo
}

/// Element of `Q(ζ_n)` in the power basis `1, ζ, …, ζ^{φ(n)−1}`, stored as
/// integer numerators over one positive common denominator.
///
/// Operands with different `n` are lifted to the lcm, so the zero and one of
/// [`Zero`]/[`One`] live in `Q = Q(ζ_1)`.
#[derive(Clone, Debug)]
pub struct Cyclo {
    n: u64,
    num: Vec<BigInt>,
    den: BigInt,
}

fn reduce_mod_phi(n: u64, mut poly: Vec<BigInt>) -> Vec<BigInt> {
    let phi = cyclotomic_poly(n);
    let d = phi.len() - 1;
    if poly.len() < d {
        poly.resize(d, BigInt::zero());
        return poly;
    }
    for i in (d..poly.len()).rev() {
        let c = std::mem::take(&mut poly[i]);
        if !c.is_zero() {
            for j in 0..d {
                poly[i - d + j] -= &c * &phi[j];
            }
        }
    }
    poly.truncate(d);
    poly
}

impl Cyclo {
    fn normalized(n: u64, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|x| *x = -std::mem::take(x));
        }
        let mut g = den.clone();
        for x in &num {
            g = g.gcd(x);
        }
        if num.iter().all(Zero::is_zero) {
            return Cyclo { n, num, den: BigInt::one() };
        }
        if !g.is_one() {
            num.iter_mut().for_each(|x| *x = &*x / &g);
            den = den / g;
        }
        Cyclo { n, num, den }
    }

    pub fn from_int(v: i64) -> Self {
        Cyclo { n: 1, num: vec![BigInt::from(v)], den: BigInt::one() }
    }
    pub fn from_ratio(r: &BigRational) -> Self {
        Self::normalized(1, vec![r.numer().clone()], r.denom().clone())
    }
    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::normalized(1, vec![BigInt::from(num)], BigInt::from(den))
    }
    /// `ζ_n^k`
    pub fn root(k: i64, n: u64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigInt::zero(); e + 1];
        poly[e] = BigInt::one();
        Cyclo { n, num: reduce_mod_phi(n, poly), den: BigInt::one() }
    }
    /// `e(num/den) = exp(2πi·num/den)`
    pub fn e(num: i64, den: u64) -> Self {
        let g = (num.rem_euclid(den as i64) as u64).gcd(&den).max(1);
        Self::root(num.rem_euclid(den as i64) / g as i64, den / g)
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Same element in `Q(ζ_m)` for a multiple m of n.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.n == 0, "{} does not divide {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut poly = vec![BigInt::zero(); step * self.num.len().max(1)];
        for (i, c) in self.num.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Cyclo { n: m, num: reduce_mod_phi(m, poly), den: self.den.clone() }
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    pub fn to_complex(&self) -> Complex64 {
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ang = 2.0 * std::f64::consts::PI * i as f64 / self.n as f64;
            // ratio first keeps large numerators and denominators in range
            let v = BigRational::new(c.clone(), self.den.clone()).to_f64().unwrap_or(c.to_f64().unwrap() / den);
            z += Complex64::from_polar(v, ang);
        }
        z
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut poly = vec![BigInt::zero(); n.max(1)];
        for (i, c) in self.num.iter().enumerate() {
            poly[(n - i) % n] += c;
        }
        Self::normalized(self.n, reduce_mod_phi(self.n, poly), self.den.clone())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inv().expect("inverse of zero") } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Cyclo::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b.clone();
            }
            e >>= 1;
            if e > 0 {
                b = b.clone() * b;
            }
        }
        acc
    }

    /// Multiplicative inverse by solving `x · self = 1` in the power basis.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let d = self.num.len();
        // column j of M is self·ζ^j
        let cols: Vec<Vec<BigInt>> = (0..d)
            .map(|j| {
                let mut poly = vec![BigInt::zero(); j];
                poly.extend(self.num.iter().cloned());
                reduce_mod_phi(self.n, poly)
            })
            .collect();
        let mut m: Vec<Vec<BigRational>> = (0..d)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..d).map(|j| BigRational::from_integer(cols[j][i].clone())).collect();
                row.push(if i == 0 { BigRational::from_integer(self.den.clone()) } else { BigRational::zero() });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let piv = m[c][c].clone();
            for x in m[c].iter_mut() {
                *x = &*x / &piv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=d {
                        let v = &m[c][k] * &f;
                        m[r][k] -= v;
                    }
                }
            }
        }
        let den = m.iter().fold(BigInt::one(), |acc, row| acc.lcm(row[d].denom()));
        let num = m.iter().map(|row| row[d].numer() * (&den / row[d].denom())).collect();
        Some(Self::normalized(self.n, num, den))
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::from_int(0)
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::from_int(1)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclo::common(self, other);
        a.den == b.den && a.num == b.num
    }
}
impl Eq for Cyclo {}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, o: Cyclo) -> Cyclo {
        let (a, b) = Cyclo::common(&self, &o);
        let num = a.num.iter().zip(&b.num).map(|(x, y)| x * &b.den + y * &a.den).collect();
        Cyclo::normalized(a.n, num, &a.den * &b.den)
    }
}
impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { n: self.n, num: self.num.into_iter().map(|x| -x).collect(), den: self.den }
    }
}
impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, o: Cyclo) -> Cyclo {
        self + (-o)
    }
}
impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, o: Cyclo) -> Cyclo {
        let (a, b) = Cyclo::common(&self, &o);
        if a.is_zero() || b.is_zero() {
            return Cyclo::normalized(a.n, vec![BigInt::zero(); a.num.len()], BigInt::one());
        }
        let mut poly = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                poly[i + j] += x * y;
            }
        }
        Cyclo::normalized(a.n, reduce_mod_phi(a.n, poly), &a.den * &b.den)
    }
}
impl Div for Cyclo {
    type Output = Cyclo;
    fn div(self, o: Cyclo) -> Cyclo {
        self * o.inv().expect("division by zero")
    }
}
impl From<BigInt> for Cyclo {
    fn from(v: BigInt) -> Self {
        Cyclo { n: 1, num: vec![v], den: BigInt::one() }
    }
}
impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if self.den.is_one() { c.to_string() } else { format!("{c}/{}", self.den) };
            parts.push(match i {
                0 => coef,
                1 => format!("({coef})*z{}", self.n),
                _ => format!("({coef})*z{}^{i}", self.n),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
