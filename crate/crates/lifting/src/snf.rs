use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Smith form `P·M·Q = D` of an integer matrix; only the column side is kept.
#[derive(Clone, Debug)]
pub struct Snf {
    /// Diagonal of D, nonnegative, each entry dividing the next nonzero one.
    pub diagonal: Vec<BigInt>,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
    pub cols: usize,
    pub q: Vec<Vec<BigInt>>,
    pub q_inv: Vec<Vec<BigInt>>,
}

impl Snf {
    /// Invariant factors of the cokernel `Z^cols / rowspace(M)`: the torsion part
    /// (entries > 1) and the free rank.
    pub fn cokernel(&self) -> (Vec<BigInt>, usize) {
        let tors = self.diagonal[..self.rank].iter().filter(|d| !d.is_one()).cloned().collect();
        (tors, self.cols - self.rank)
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

struct Work {
    m: Vec<Vec<BigInt>>,
    q: Vec<Vec<BigInt>>,
    q_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.m.iter_mut().chain(self.q.iter_mut()) {
            row.swap(a, b);
        }
        self.q_inv.swap(a, b);
    }
    /// col_j -= k·col_p
    fn col_sub(&mut self, j: usize, p: usize, k: &BigInt, from_row: usize) {
        for row in self.m[from_row..].iter_mut() {
            if !row[p].is_zero() {
                let t = &row[p] * k;
                row[j] -= t;
            }
        }
        for row in self.q.iter_mut() {
            if !row[p].is_zero() {
                let t = &row[p] * k;
                row[j] -= t;
            }
        }
        let (lo, hi) = if p < j { self.q_inv.split_at_mut(j) } else { self.q_inv.split_at_mut(p) };
        let (rp, rj) = if p < j { (&mut lo[p], &hi[0]) } else { (&mut hi[0], &lo[j]) };
        for (x, y) in rp.iter_mut().zip(rj) {
            if !y.is_zero() {
                *x += y * k;
            }
        }
    }
    /// row_i -= k·row_p, over columns ≥ p
    fn row_sub(&mut self, i: usize, p: usize, k: &BigInt) {
        let (lo, hi) = self.m.split_at_mut(i.max(p));
        let (ri, rp) = if i > p { (&mut hi[0], &lo[p]) } else { (&mut lo[i], &hi[0]) };
        for c in p..rp.len() {
            if !rp[c].is_zero() {
                ri[c] -= &rp[c] * k;
            }
        }
    }
}

/// Smith normal form by repeated least-pivot elimination.
pub fn smith_normal_form(rows: Vec<Vec<BigInt>>, cols: usize) -> Snf {
    let r = rows.len();
    let mut w = Work { m: rows, q: identity(cols), q_inv: identity(cols) };
    let mut p = 0;
    while p < r.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in p..r {
            for j in p..cols {
                let v = &w.m[i][j];
                if !v.is_zero() && best.map_or(true, |(a, b)| v.abs() < w.m[a][b].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        w.m.swap(p, bi);
        w.swap_cols(p, bj);
        loop {
            let mut clean = true;
            for i in p + 1..r {
                if !w.m[i][p].is_zero() {
                    let k = w.m[i][p].div_floor(&w.m[p][p]);
                    w.row_sub(i, p, &k);
                    clean &= w.m[i][p].is_zero();
                }
            }
            for j in p + 1..cols {
                if !w.m[p][j].is_zero() {
                    let k = w.m[p][j].div_floor(&w.m[p][p]);
                    w.col_sub(j, p, &k, p);
                    clean &= w.m[p][j].is_zero();
                }
            }
            if !clean {
                // bring the least remainder in row p / column p to the pivot
                let mut bi = p;
                let mut bj = p;
                for i in p + 1..r {
                    if !w.m[i][p].is_zero() && w.m[i][p].abs() < w.m[bi][bj].abs() {
                        (bi, bj) = (i, p);
                    }
                }
                for j in p + 1..cols {
                    if !w.m[p][j].is_zero() && w.m[p][j].abs() < w.m[bi][bj].abs() {
                        (bi, bj) = (p, j);
                    }
                }
                w.m.swap(p, bi);
                w.swap_cols(p, bj);
                continue;
            }
            let piv = w.m[p][p].clone();
            let bad = (p + 1..r).find(|&i| (p + 1..cols).any(|j| !w.m[i][j].is_multiple_of(&piv)));
            match bad {
                Some(i) => {
                    let (lo, hi) = w.m.split_at_mut(i);
                    for c in p..cols {
                        let t = hi[0][c].clone();
                        lo[p][c] += t;
                    }
                }
                None => break,
            }
        }
        if w.m[p][p].is_negative() {
            for c in p..cols {
                w.m[p][c] = -w.m[p][c].clone();
            }
        }
        p += 1;
    }
    let diagonal: Vec<BigInt> = (0..r.min(cols)).map(|i| w.m[i][i].clone()).collect();
    let rank = diagonal.iter().take_while(|d| !d.is_zero()).count();
    Snf { diagonal, rank, cols, q: w.q, q_inv: w.q_inv }
}
