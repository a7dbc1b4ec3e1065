use std::collections::VecDeque;

use group_core::FiniteGroup;

/// Order in which generators are tried when building the transversal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SectionOrder {
    /// Shortest, then lexicographically least words in increasing element order.
    #[default]
    LexLeast,
    /// Same, with the letters taken in decreasing element order.
    Reversed,
}

/// Schreier transversal of `ker(Free(C) → G)` and its free generators
/// `s(t)·[c]·s(tc)⁻¹` for non-tree edges `(t, c)`.
#[derive(Clone, Debug)]
pub(crate) struct Schreier {
    pub letters: Vec<usize>,
    pub letter_of: Vec<Option<usize>>,
    /// Transversal word of each group element, as letter indices.
    pub section: Vec<Vec<usize>>,
    /// Column of the edge `(t, letter)` at `t * nletters + letter`; `None` on tree edges.
    pub column: Vec<Option<usize>>,
    /// `(t, letter)` for each column.
    pub edges: Vec<(usize, usize)>,
}

impl Schreier {
    pub fn new(g: &FiniteGroup, c: &[usize], order: SectionOrder) -> Option<Self> {
        let mut letters = c.to_vec();
        letters.sort_unstable();
        if order == SectionOrder::Reversed {
            letters.reverse();
        }
        let n = g.order();
        let nl = letters.len();
        let mut letter_of = vec![None; n];
        for (i, &x) in letters.iter().enumerate() {
            letter_of[x] = Some(i);
        }
        let mut section: Vec<Option<Vec<usize>>> = vec![None; n];
        let mut tree = vec![false; n * nl];
        section[g.identity()] = Some(vec![]);
        let mut queue = VecDeque::from([g.identity()]);
        while let Some(t) = queue.pop_front() {
            for (l, &x) in letters.iter().enumerate() {
                let u = g.mul(t, x);
                if section[u].is_none() {
                    let mut w = section[t].clone().unwrap();
                    w.push(l);
                    section[u] = Some(w);
                    tree[t * nl + l] = true;
                    queue.push_back(u);
                }
            }
        }
        let section: Vec<Vec<usize>> = section.into_iter().collect::<Option<_>>()?;
        let mut column = vec![None; n * nl];
        let mut edges = Vec::new();
        for t in 0..n {
            for l in 0..nl {
                if !tree[t * nl + l] {
                    column[t * nl + l] = Some(edges.len());
                    edges.push((t, l));
                }
            }
        }
        Some(Schreier { letters, letter_of, section, column, edges })
    }

    pub fn rank(&self) -> usize {
        self.edges.len()
    }

    /// Rewrites a word read from coset `start` into Schreier generators,
    /// calling `emit(column, ±1)`; returns the final coset.
    pub fn rewrite(
        &self,
        g: &FiniteGroup,
        start: usize,
        word: impl IntoIterator<Item = (usize, bool)>,
        mut emit: impl FnMut(usize, i64),
    ) -> usize {
        let nl = self.letters.len();
        let mut t = start;
        for (l, inverse) in word {
            let x = self.letters[l];
            if inverse {
                let s = g.mul(t, g.inv(x));
                if let Some(c) = self.column[s * nl + l] {
                    emit(c, -1);
                }
                t = s;
            } else {
                if let Some(c) = self.column[t * nl + l] {
                    emit(c, 1);
                }
                t = g.mul(t, x);
            }
        }
        t
    }
}
