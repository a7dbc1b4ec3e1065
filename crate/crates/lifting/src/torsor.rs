use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::data::{LiftingData, UElement};
use crate::error::LiftingError;
use crate::frob::FrobeniusOnU;

/// Outcome of the bounded search for a tuple in the fiber.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TupleSearch {
    Found,
    /// Exhaustive search found no tuple.
    Exhausted,
    /// Search stopped at the budget without finding a tuple.
    BudgetHit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberStatus {
    /// Base point is the lifting invariant of a tuple.
    TupleBase,
    /// No tuple was found, but the fiber of U is nonempty; the base point is a word.
    WordBase,
    /// The fiber of U over (n̄, γ⁻¹) is empty.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberCount {
    pub count: u64,
    pub status: FiberStatus,
    pub tuple_search: TupleSearch,
    /// Lexicographically least tuple in the fiber, if found.
    pub base_tuple: Option<Vec<usize>>,
    pub base: Option<UElement>,
}

/// Lexicographically least tuple over C with multidegree `nbar` (indexed by
/// `c_classes`) and `g₁⋯g_n = γ⁻¹`. `Err(())` when the budget runs out.
pub fn find_base_tuple(l: &LiftingData, nbar: &[usize], gamma: usize, budget: u128) -> Result<Option<Vec<usize>>, ()> {
    let g = l.group_ref();
    let target = g.inv(gamma);
    let n: usize = nbar.iter().sum();
    let cls: Vec<usize> = l.c_elements.iter().map(|&x| l.class_position(x).unwrap()).collect();
    let mut dead: HashSet<(Vec<usize>, usize)> = HashSet::new();
    let mut nodes: u128 = 0;
    let mut remaining = nbar.to_vec();
    let mut tuple = Vec::with_capacity(n);

    #[allow(clippy::too_many_arguments)]
    fn go(
        l: &LiftingData,
        cls: &[usize],
        target: usize,
        prod: usize,
        remaining: &mut Vec<usize>,
        tuple: &mut Vec<usize>,
        dead: &mut HashSet<(Vec<usize>, usize)>,
        nodes: &mut u128,
        budget: u128,
    ) -> Result<bool, ()> {
        if remaining.iter().all(|&r| r == 0) {
            return Ok(prod == target);
        }
        if dead.contains(&(remaining.clone(), prod)) {
            return Ok(false);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(());
        }
        let g = l.group_ref();
        for (i, &x) in l.c_elements.iter().enumerate() {
            let c = cls[i];
            if remaining[c] == 0 {
                continue;
            }
            remaining[c] -= 1;
            tuple.push(x);
            let found = go(l, cls, target, g.mul(prod, x), remaining, tuple, dead, nodes, budget)?;
            if found {
                return Ok(true);
            }
            tuple.pop();
            remaining[c] += 1;
        }
        dead.insert((remaining.clone(), prod));
        Ok(false)
    }

    let found = go(l, &cls, target, g.identity(), &mut remaining, &mut tuple, &mut dead, &mut nodes, budget)?;
    Ok(found.then_some(tuple))
}

/// `|U(G,C)_{n̄,γ}(F_q)|`: zero or `|H₂(G,C)^Frob|`.
pub fn torsor_fixed_count(
    l: &LiftingData,
    fu: &FrobeniusOnU,
    nbar: &[usize],
    gamma: usize,
    budget: u128,
) -> Result<FiberCount, LiftingError> {
    if nbar.len() != l.num_classes() {
        return Err(LiftingError::NonInvariantInput(format!(
            "multidegree has {} entries, C has {} classes",
            nbar.len(),
            l.num_classes()
        )));
    }
    if (0..nbar.len()).any(|i| nbar[fu.class_perm[i]] != nbar[i]) {
        return Err(LiftingError::NonInvariantInput("n̄ is not Frobenius invariant".into()));
    }
    if fu.action_on_g(gamma) != gamma {
        return Err(LiftingError::NonInvariantInput("γ is not Frobenius fixed".into()));
    }
    let (search, tuple) = match find_base_tuple(l, nbar, gamma, budget) {
        Ok(Some(t)) => (TupleSearch::Found, Some(t)),
        Ok(None) => (TupleSearch::Exhausted, None),
        Err(()) => (TupleSearch::BudgetHit, None),
    };
    let (status, base) = match &tuple {
        Some(t) => (FiberStatus::TupleBase, Some(l.lifting_invariant(t)?)),
        None => match word_base(l, nbar, gamma) {
            Some(u) => (FiberStatus::WordBase, Some(u)),
            None => (FiberStatus::Empty, None),
        },
    };
    let count = match &base {
        Some(u) => fixed_points_from_element(l, fu, u)?,
        None => 0,
    };
    Ok(FiberCount { count, status, tuple_search: search, base_tuple: tuple, base })
}

/// Some element of U with multidegree `nbar` and image `γ⁻¹`, if one exists.
///
/// A positive word fixes the multidegree; the image is then corrected inside the
/// subgroup generated by `xy⁻¹` for x, y in one class, which is the image of `ker 𝔯`.
pub fn word_base(l: &LiftingData, nbar: &[usize], gamma: usize) -> Option<UElement> {
    let g = l.group_ref();
    let mut reps = vec![None; l.num_classes()];
    for &x in &l.c_elements {
        let c = l.class_position(x).unwrap();
        reps[c].get_or_insert(x);
    }
    let word: Vec<(usize, bool)> =
        nbar.iter().enumerate().flat_map(|(c, &n)| std::iter::repeat((reps[c].unwrap(), false)).take(n)).collect();
    let w = l.word_element(&word).unwrap();
    let target = g.mul(g.inv(w.g), g.inv(gamma));
    let mut gens = Vec::new();
    for &x in &l.c_elements {
        for &y in &l.c_elements {
            if x != y && l.class_position(x).unwrap() == l.class_position(y).unwrap() {
                gens.push(l.word_element(&[(x, false), (y, true)]).unwrap());
            }
        }
    }
    let mut found: Vec<Option<UElement>> = vec![None; g.order()];
    found[g.identity()] = Some(l.identity());
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(h) = queue.pop_front() {
        if h == target {
            break;
        }
        let cur = found[h].clone().unwrap();
        for z in &gens {
            let next = l.mul(&cur, z);
            let h2 = next.g;
            if found[h2].is_none() {
                queue.push_back(h2);
                found[h2] = Some(next);
            }
        }
    }
    found[target].as_ref().map(|z| l.mul(&w, z))
}

/// Frobenius-fixed points of the fiber through the lifting invariant of `base`:
/// `a·u₀` is fixed iff `(Frob − 1)a = −δ` with `δ = Frob(u₀)·u₀⁻¹`.
pub fn fixed_points_from(l: &LiftingData, fu: &FrobeniusOnU, base: &[usize]) -> Result<u64, LiftingError> {
    fixed_points_from_element(l, fu, &l.lifting_invariant(base)?)
}

pub fn fixed_points_from_element(l: &LiftingData, fu: &FrobeniusOnU, u0: &UElement) -> Result<u64, LiftingError> {
    let delta = l.mul(&fu.frob(l, u0), &l.inv(u0));
    if delta.g != l.group_ref().identity() || delta.nbar.iter().any(|&x| x != 0) {
        return Err(LiftingError::NonInvariantInput("Frobenius moves the fiber".into()));
    }
    let count = l
        .torsion_elements()
        .iter()
        .filter(|a| {
            let fa = fu.frob_torsion(l, a);
            (0..a.len()).all(|i| (fa[i] - a[i] + delta.a[i]).rem_euclid(l.a_torsion[i] as i64) == 0)
        })
        .count();
    Ok(count as u64)
}
