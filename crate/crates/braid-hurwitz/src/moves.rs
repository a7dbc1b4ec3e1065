use group_core::FiniteGroup;

use crate::error::BraidError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `(g, h) ↦ (g h g⁻¹, g)`
    Left,
    /// `(g, h) ↦ (h, h⁻¹ g h)`
    Right,
}

/// Applies the braid generator at positions `i, i+1` (1-based, `1 ≤ i < n`).
pub fn braid_move(g: &FiniteGroup, t: &[usize], i: usize, dir: Direction) -> Result<Vec<usize>, BraidError> {
    if i == 0 || i >= t.len() {
        return Err(BraidError::IndexOutOfRange { index: i, len: t.len() });
    }
    let mut out = t.to_vec();
    let (a, b) = (t[i - 1], t[i]);
    match dir {
        Direction::Left => {
            out[i - 1] = g.conj(a, b);
            out[i] = a;
        }
        Direction::Right => {
            out[i - 1] = b;
            out[i] = g.conj(g.inv(b), a);
        }
    }
    Ok(out)
}
