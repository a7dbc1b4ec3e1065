use crate::group::FiniteGroup;

/// Conjugacy classes, labelled in order of their least element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyTable {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub centralizer_order: Vec<usize>,
}

impl ConjugacyTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
    /// Index of the class of the identity.
    pub fn trivial_class(&self) -> usize {
        self.class_of[0]
    }
    /// Union of the given classes, sorted.
    pub fn union(&self, class_ids: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = class_ids.iter().flat_map(|&c| self.classes[c].iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
    /// Classes contained in an element set, or `None` if the set is not a union of classes.
    pub fn classes_in(&self, elems: &[usize]) -> Option<Vec<usize>> {
        let mut ids: Vec<usize> = elems.iter().map(|&g| self.class_of[g]).collect();
        ids.sort_unstable();
        ids.dedup();
        (self.union(&ids).len() == {
            let mut e = elems.to_vec();
            e.sort_unstable();
            e.dedup();
            e.len()
        })
        .then_some(ids)
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjugacyTable {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut cls: Vec<usize> = (0..n).map(|h| g.conj(h, x)).collect();
        cls.sort_unstable();
        cls.dedup();
        for &y in &cls {
            class_of[y] = id;
        }
        classes.push(cls);
    }
    let centralizer_order = classes.iter().map(|c| n / c.len()).collect();
    ConjugacyTable { class_of, classes, centralizer_order }
}
