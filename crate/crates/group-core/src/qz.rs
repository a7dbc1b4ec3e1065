use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// An element of Q/Z, stored as `num/den` with `0 <= num < den` and `gcd(num, den) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Qz {
    num: i64,
    den: i64,
}

impl Qz {
    pub const ZERO: Qz = Qz { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let n = num.rem_euclid(den);
        let g = n.gcd(&den);
        Qz { num: n / g, den: den / g }
    }
    pub fn num(&self) -> i64 {
        self.num
    }
    pub fn den(&self) -> i64 {
        self.den
    }
    pub fn is_zero(&self) -> bool {
        self.num == 0
    }
    pub fn scale(self, k: i64) -> Self {
        Qz::new((self.num as i128 * k as i128).rem_euclid(self.den as i128) as i64, self.den)
    }
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl Default for Qz {
    fn default() -> Self {
        Qz::ZERO
    }
}

impl Add for Qz {
    type Output = Qz;
    fn add(self, o: Qz) -> Qz {
        let l = self.den.lcm(&o.den);
        let a = self.num as i128 * (l / self.den) as i128 + o.num as i128 * (l / o.den) as i128;
        Qz::new(a.rem_euclid(l as i128) as i64, l)
    }
}
impl AddAssign for Qz {
    fn add_assign(&mut self, o: Qz) {
        *self = *self + o;
    }
}
impl Neg for Qz {
    type Output = Qz;
    fn neg(self) -> Qz {
        Qz::new(-self.num, self.den)
    }
}
impl Sub for Qz {
    type Output = Qz;
    fn sub(self, o: Qz) -> Qz {
        self + (-o)
    }
}
impl Mul<i64> for Qz {
    type Output = Qz;
    fn mul(self, k: i64) -> Qz {
        self.scale(k)
    }
}
impl std::iter::Sum for Qz {
    fn sum<I: Iterator<Item = Qz>>(iter: I) -> Qz {
        iter.fold(Qz::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Qz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.num == 0 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
