use crate::error::ConfError;

/// `F_q` for small prime powers, as addition and multiplication tables.
///
/// Elements are `0..q`; for `q = p^k` an element is the base-p digit vector of
/// a polynomial in `t` modulo a fixed irreducible of degree k. 0 and 1 are the
/// field's zero and one.
#[derive(Clone, Debug)]
pub struct SmallField {
    pub q: u32,
    pub p: u32,
    pub k: u32,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

impl SmallField {
    pub fn new(q: u32) -> Result<Self, ConfError> {
        let (p, k) = prime_power(q).ok_or(ConfError::NotPrimePower(q as u64))?;
        if q > 1024 {
            return Err(ConfError::BudgetExceeded { attempted: q as u128 * q as u128, budget: 1 << 20 });
        }
        let digits = |mut x: u32| -> Vec<u32> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let pack = |v: &[u32]| -> u16 { v.iter().rev().fold(0, |acc, &d| acc * p + d) as u16 };
        let modulus = find_irreducible(p, k);
        let n = q as usize;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = (0..k as usize).map(|i| (da[i] + db[i]) % p).collect();
                add[a as usize * n + b as usize] = pack(&s);
                // schoolbook product then reduce by the monic modulus
                let mut prod = vec![0u32; 2 * k as usize];
                for i in 0..k as usize {
                    for j in 0..k as usize {
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                    }
                }
                for i in (k as usize..2 * k as usize).rev() {
                    let c = prod[i];
                    if c != 0 {
                        for j in 0..=k as usize {
                            let idx = i - k as usize + j;
                            prod[idx] = (prod[idx] + (p - c) * modulus[j]) % p;
                        }
                    }
                }
                mul[a as usize * n + b as usize] = pack(&prod[..k as usize]);
            }
        }
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a * n + b] == 0).unwrap() as u16).collect();
        Ok(SmallField { q, p, k, add, mul, neg })
    }
    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.q as usize + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }
    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.q as u16
    }
}

pub(crate) fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut m = q;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// Monic irreducible of degree k over F_p, coefficients low to high (length k+1).
fn find_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    let total = p.pow(k);
    for code in 0..total {
        let mut f: Vec<u32> = (0..k).map(|i| code / p.pow(i) % p).collect();
        f.push(1);
        if is_irreducible_mod_p(&f, p) {
            return f;
        }
    }
    unreachable!("irreducibles exist in every degree")
}

fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g: Vec<u32> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            g.push(1);
            let mut r = f.to_vec();
            for i in (d..=deg).rev() {
                let c = r[i];
                if c != 0 {
                    for j in 0..=d {
                        r[i - d + j] = (r[i - d + j] + (p - c) * g[j]) % p;
                    }
                }
            }
            if r[..d].iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// Polynomial over a [`SmallField`], coefficients low to high, no trailing zeros.
pub type Poly = Vec<u16>;

impl SmallField {
    /// All monic polynomials of degree `d`, in order of their coefficient code.
    pub fn monics(&self, d: usize) -> impl Iterator<Item = Poly> + '_ {
        let q = self.q as u64;
        (0..q.pow(d as u32)).map(move |code| {
            let mut f: Poly = (0..d).map(|i| (code / q.pow(i as u32) % q) as u16).collect();
            f.push(1);
            f
        })
    }

    /// Quotient and remainder by a monic divisor.
    pub fn divrem_monic(&self, f: &[u16], g: &[u16]) -> (Poly, Poly) {
        let dg = g.len() - 1;
        if f.len() <= dg {
            return (vec![], f.to_vec());
        }
        let mut r = f.to_vec();
        let mut quo = vec![0u16; f.len() - dg];
        for i in (dg..f.len()).rev() {
            let c = r[i];
            if c != 0 {
                quo[i - dg] = c;
                for j in 0..=dg {
                    r[i - dg + j] = self.sub(r[i - dg + j], self.mul(c, g[j]));
                }
            }
        }
        r.truncate(dg);
        while r.last() == Some(&0) {
            r.pop();
        }
        (quo, r)
    }

    /// Monic irreducibles of degree d, by trial division.
    pub fn irreducibles(&self, d: usize) -> Vec<Poly> {
        let lower: Vec<Poly> = (1..=d / 2).flat_map(|e| self.irreducibles(e)).collect();
        self.monics(d).filter(|f| lower.iter().all(|g| !self.divrem_monic(f, g).1.is_empty())).collect()
    }

    /// Degrees of the irreducible factors of a monic `f`, or `None` if f is not squarefree.
    /// `irr[e]` must hold the monic irreducibles of degree e for `e ≤ deg f / 2`.
    pub fn squarefree_factor_degrees(&self, f: &[u16], irr: &[Vec<Poly>]) -> Option<Vec<usize>> {
        let mut rest = f.to_vec();
        let mut degs = Vec::new();
        let mut e = 1;
        while 2 * e <= rest.len() - 1 {
            for g in &irr[e] {
                let (quo, r) = self.divrem_monic(&rest, g);
                if r.is_empty() {
                    if self.divrem_monic(&quo, g).1.is_empty() {
                        return None;
                    }
                    rest = quo;
                    degs.push(e);
                }
            }
            e += 1;
        }
        if rest.len() > 1 {
            degs.push(rest.len() - 1);
        }
        Some(degs)
    }
}
