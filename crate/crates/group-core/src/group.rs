use std::collections::{BTreeSet, HashMap, VecDeque};

use num_integer::Integer;

use crate::error::GroupError;

/// A finite group stored as a dense multiplication table.
///
/// Elements are `0..order`. Constructors always put the identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    id: usize,
}

impl FiniteGroup {
    /// Validates a table and relabels it so that the identity is element 0.
    pub fn from_table(name: &str, table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::InvalidTable("table is not square over 0..n".into()));
            }
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        // relabel: swap id with 0
        let relabel = |x: usize| if x == id { 0 } else if x == 0 { id } else { x };
        let mut mult = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mult[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
            }
        }
        Self::from_flat(name, n, mult)
    }

    fn from_flat(name: &str, n: usize, mult: Vec<usize>) -> Result<Self, GroupError> {
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mult[a * n + b] == 0 {
                    if mult[b * n + a] != 0 {
                        return Err(GroupError::InvalidTable("one-sided inverse".into()));
                    }
                    inv[a] = b;
                }
            }
            if inv[a] == usize::MAX {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        let g = FiniteGroup { name: name.to_string(), order: n, mult, inv, id: 0 };
        g.check_associative()?;
        Ok(g)
    }

    fn check_associative(&self) -> Result<(), GroupError> {
        let n = self.order;
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if n <= 256 {
            Box::new((0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
        } else {
            // deterministic sample
            let mut s = 0x9e3779b97f4a7c15u64;
            let mut v = Vec::with_capacity(200_000);
            for _ in 0..200_000 {
                s ^= s << 13;
                s ^= s >> 7;
                s ^= s << 17;
                let a = (s % n as u64) as usize;
                let b = ((s >> 20) % n as u64) as usize;
                let c = ((s >> 40) % n as u64) as usize;
                v.push((a, b, c));
            }
            Box::new(v.into_iter())
        };
        for (a, b, c) in triples {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
            }
        }
        Ok(())
    }

    /// Closure of a set of permutations of `0..degree`.
    ///
    /// Composition is `(p*q)(x) = p(q(x))`. Elements are sorted lexicographically
    /// as images, so the identity permutation gets index 0.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Result<Self, GroupError> {
        let degree = gens.first().map(|g| g.len()).unwrap_or(0);
        for g in gens {
            let set: BTreeSet<_> = g.iter().copied().collect();
            if g.len() != degree || set.len() != degree || set.iter().any(|&x| x >= degree) {
                return Err(GroupError::InvalidTable("generator is not a permutation".into()));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(p) = queue.pop_front() {
            for g in gens {
                let r: Vec<usize> = (0..degree).map(|x| p[g[x]]).collect();
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let elems: Vec<Vec<usize>> = seen.into_iter().collect();
        let index: HashMap<&Vec<usize>, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let n = elems.len();
        let mut mult = vec![0; n * n];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let r: Vec<usize> = (0..degree).map(|x| p[q[x]]).collect();
                mult[i * n + j] = index[&r];
            }
        }
        Self::from_flat(name, n, mult)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(&format!("Z{n}"), table).expect("cyclic table")
    }

    /// Dihedral group of order `2n` acting on an n-gon.
    pub fn dihedral(n: usize) -> Self {
        let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(&format!("D{n}"), &[rot, refl]).expect("dihedral")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut t: Vec<usize> = (0..n).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        } else {
            gens.push((0..n).collect());
        }
        Self::from_permutations(&format!("S{n}"), &gens).expect("symmetric")
    }

    pub fn alternating(n: usize) -> Self {
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| {
                let mut p: Vec<usize> = (0..n).collect();
                p[0] = 1;
                p[1] = k;
                p[k] = 0;
                p
            })
            .collect();
        let gens = if gens.is_empty() { vec![(0..n).collect()] } else { gens };
        Self::from_permutations(&format!("A{n}"), &gens).expect("alternating")
    }

    /// Quaternion group; elements are `±1, ±i, ±j, ±k` in that order.
    pub fn quaternion() -> Self {
        // unit products: u*v = sign * w, units 0=1,1=i,2=j,3=k
        let unit = |u: usize, v: usize| -> (bool, usize) {
            match (u, v) {
                (0, w) | (w, 0) => (false, w),
                (a, b) if a == b => (true, 0),
                (1, 2) => (false, 3),
                (2, 3) => (false, 1),
                (3, 1) => (false, 2),
                (2, 1) => (true, 3),
                (3, 2) => (true, 1),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (neg, w) = unit(a / 2, b / 2);
                        let sign = (a % 2 == 1) ^ (b % 2 == 1) ^ neg;
                        2 * w + sign as usize
                    })
                    .collect()
            })
            .collect();
        Self::from_table("Q8", table).expect("quaternion")
    }

    /// PSL₂(F_p) acting on the projective line, points `0..p` and ∞ = p.
    pub fn psl2(p: usize) -> Self {
        let inf = p;
        let shift: Vec<usize> = (0..=p).map(|x| if x == inf { inf } else { (x + 1) % p }).collect();
        let inv_p = |x: usize| (1..p).find(|y| x * y % p == 1).unwrap();
        let flip: Vec<usize> = (0..=p)
            .map(|x| if x == inf { 0 } else if x == 0 { inf } else { (p - inv_p(x)) % p })
            .collect();
        let gen = (2..p).find(|&g| (1..p - 1).all(|k| num_pow_mod(g, k, p) != 1)).unwrap_or(1);
        let sq = gen * gen % p;
        let scale: Vec<usize> = (0..=p).map(|x| if x == inf { inf } else { x * sq % p }).collect();
        Self::from_permutations(&format!("PSL2_{p}"), &[shift, flip, scale]).expect("psl2")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (n, m) = (a.order, b.order);
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m)).collect())
            .collect();
        Self::from_table(&format!("{}x{}", a.name, b.name), table).expect("product")
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn order(&self) -> usize {
        self.order
    }
    pub fn identity(&self) -> usize {
        self.id
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
    /// `h g h⁻¹`
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv[h])
    }
    pub fn pow(&self, g: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv[g] } else { g };
        let mut e = k.unsigned_abs();
        let (mut acc, mut b) = (self.id, base);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(self.id, |acc, &g| self.mul(acc, g))
    }
    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != self.id {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }
    pub fn exponent(&self) -> usize {
        (0..self.order).fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }
    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&z| (0..self.order).all(|g| self.mul(z, g) == self.mul(g, z))).collect()
    }
    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order).filter(|&h| self.mul(h, g) == self.mul(g, h)).collect()
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.id] = true;
        let mut stack = vec![self.id];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }
    pub fn generates(&self, gens: &[usize]) -> bool {
        self.generated_subgroup(gens).len() == self.order
    }
    pub fn commutator_subgroup(&self) -> Vec<usize> {
        let comms: BTreeSet<usize> = (0..self.order)
            .flat_map(|a| (0..self.order).map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv[a], self.inv[b])))
            .collect();
        self.generated_subgroup(&comms.into_iter().collect::<Vec<_>>())
    }
    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        sub.iter().for_each(|&x| mask[x] = true);
        sub.iter().all(|&x| (0..self.order).all(|h| mask[self.conj(h, x)]))
    }
    pub fn is_subgroup(&self, sub: &[usize]) -> bool {
        let mut mask = vec![false; self.order];
        sub.iter().for_each(|&x| mask[x] = true);
        mask[self.id] && sub.iter().all(|&a| sub.iter().all(|&b| mask[self.mul(a, self.inv[b])]))
    }

    /// Quotient by a normal subgroup. Returns the quotient and the projection.
    /// Cosets are labelled in order of their least element.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_subgroup(normal) || !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let mut proj = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if proj[g] == usize::MAX {
                let label = reps.len();
                reps.push(g);
                for &n in normal {
                    proj[self.mul(g, n)] = label;
                }
            }
        }
        let k = reps.len();
        let table = (0..k).map(|a| (0..k).map(|b| proj[self.mul(reps[a], reps[b])]).collect()).collect();
        let q = FiniteGroup::from_table(&format!("{}/N", self.name), table)?;
        Ok((q, proj))
    }
}

pub(crate) fn num_pow_mod(b: usize, e: usize, m: usize) -> usize {
    let mut r = 1 % m;
    for _ in 0..e {
        r = r * b % m;
    }
    r
}
