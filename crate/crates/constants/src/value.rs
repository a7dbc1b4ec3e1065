use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use zeta_conf::Cyclo;

/// A number known in floating point, and exactly in `Q(ζ)` when possible.
#[derive(Clone, Debug)]
pub struct Value {
    pub exact: Option<Cyclo>,
    pub approx: Complex64,
}

impl Value {
    pub fn exact(c: Cyclo) -> Self {
        let approx = c.to_complex();
        Value { exact: Some(c), approx }
    }
    pub fn approx(z: Complex64) -> Self {
        Value { exact: None, approx: z }
    }
    pub fn int(v: i64) -> Self {
        Self::exact(Cyclo::from_int(v))
    }
    pub fn ratio(r: BigRational) -> Self {
        Self::exact(Cyclo::from_ratio(&r))
    }
    /// `e(x)` for `x = num/den`.
    pub fn e(num: i64, den: u64) -> Self {
        Self::exact(Cyclo::e(num, den))
    }
    /// `q^(num/den)`, exact when the exponent is an integer.
    pub fn q_power(q: u64, num: i64, den: u64) -> Self {
        if num % den as i64 == 0 {
            let k = num / den as i64;
            let p = BigInt::from(q).pow(k.unsigned_abs() as u32);
            let r = if k >= 0 { BigRational::from_integer(p) } else { BigRational::new(BigInt::one(), p) };
            Self::ratio(r)
        } else {
            Self::approx(Complex64::new((q as f64).powf(num as f64 / den as f64), 0.0))
        }
    }
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
    pub fn is_zero(&self) -> bool {
        match &self.exact {
            Some(c) => c.is_zero(),
            None => self.approx == Complex64::zero(),
        }
    }
    pub fn as_rational(&self) -> Option<BigRational> {
        self.exact.as_ref().and_then(Cyclo::as_rational)
    }
    pub fn scale_f64(&self, s: f64) -> Self {
        Self::approx(self.approx * s)
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, o: Value) -> Value {
        match (self.exact, o.exact) {
            (Some(a), Some(b)) => Value::exact(a + b),
            _ => Value::approx(self.approx + o.approx),
        }
    }
}

impl Mul for Value {
    type Output = Value;
    fn mul(self, o: Value) -> Value {
        match (self.exact, o.exact) {
            (Some(a), Some(b)) => Value::exact(a * b),
            _ => Value::approx(self.approx * o.approx),
        }
    }
}

impl std::iter::Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::int(0), |a, b| a + b)
    }
}

impl std::iter::Product for Value {
    fn product<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::int(1), |a, b| a * b)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{:.12e}{:+.12e}i", self.approx.re, self.approx.im),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Value", 3)?;
        st.serialize_field("exact", &self.exact.as_ref().map(|c| c.to_string()))?;
        st.serialize_field("re", &self.approx.re)?;
        st.serialize_field("im", &self.approx.im)?;
        st.end()
    }
}
