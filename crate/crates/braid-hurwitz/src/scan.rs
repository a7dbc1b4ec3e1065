use group_core::{ConjugacyTable, FiniteGroup};
use serde::Serialize;

use crate::error::BraidError;
use crate::orbits::orbit_enumerate;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub nbar: Vec<usize>,
    pub orbits: usize,
    pub expected: usize,
}

/// Orbit counts over a family of multidegrees.
///
/// `stable_from` is the least N such that every scanned row whose smallest
/// entry on the common support is at least N has the expected count. It is
/// an observation on the scanned range only, not a proven bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    pub stable_from: Option<usize>,
    pub empirical: bool,
}

pub fn stabilization_scan(
    g: &FiniteGroup,
    ct: &ConjugacyTable,
    gamma: usize,
    nbars: &[Vec<usize>],
    connected: bool,
    budget: u128,
    expected: impl Fn(&[usize]) -> usize,
) -> Result<ScanReport, BraidError> {
    let mut rows = Vec::with_capacity(nbars.len());
    for nbar in nbars {
        let cat = orbit_enumerate(g, ct, nbar, gamma, connected, budget)?;
        rows.push(ScanRow { nbar: nbar.clone(), orbits: cat.count(), expected: expected(nbar) });
    }
    let support: Vec<usize> = (0..ct.len()).filter(|&c| nbars.iter().any(|v| v[c] > 0)).collect();
    let level = |v: &[usize]| support.iter().map(|&c| v[c]).min().unwrap_or(0);
    let mut levels: Vec<usize> = rows.iter().map(|r| level(&r.nbar)).collect();
    levels.sort_unstable();
    levels.dedup();
    let stable_from =
        levels.into_iter().find(|&n| rows.iter().filter(|r| level(&r.nbar) >= n).all(|r| r.orbits == r.expected));
    Ok(ScanReport { rows, stable_from, empirical: true })
}
