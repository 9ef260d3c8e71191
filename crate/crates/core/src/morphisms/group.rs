//! Permutation groups given by explicit element lists.

use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::iso::{find_isomorphisms_budgeted, Limit};
use super::Permutation;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// How a group was assembled, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureLabel {
    /// Side-preserving maps induced by automorphisms only.
    PlainAut,
    /// Side-preserving maps from automorphisms and side-swapping maps from antimorphisms.
    AutUnionAntimorphisms,
    /// The above extended by one extra involution-type automorphism (family case).
    SemidirectZ2,
    /// The symmetric group on five letters (prism of the pentagon).
    S5,
    Unlabeled,
}

/// A finite permutation group on `0..degree`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescription {
    pub degree: usize,
    /// Sorted, duplicate-free.
    pub elements: Vec<Permutation>,
    pub order: usize,
    pub orbits: Vec<Vec<usize>>,
    pub structure_label: StructureLabel,
}

impl GroupDescription {
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>, label: StructureLabel) -> Self {
        elements.sort();
        elements.dedup();
        let orbits = orbits_of_images(degree, elements.iter().map(|p| p.image()));
        GroupDescription {
            degree,
            order: elements.len(),
            elements,
            orbits,
            structure_label: label,
        }
    }

    /// Closure of `generators`, failing beyond `cap` elements.
    pub fn generated_by(degree: usize, generators: &[Permutation], cap: usize, label: StructureLabel) -> Result<Self> {
        Ok(GroupDescription::from_elements(degree, closure(degree, generators, cap)?, label))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Contains the identity and is closed under composition.
    pub fn is_closed(&self) -> bool {
        let set: HashSet<&Permutation> = self.elements.iter().collect();
        set.contains(&Permutation::identity(self.degree))
            && self.elements.iter().all(|a| self.elements.iter().all(|b| set.contains(&a.compose(b))))
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits.len() <= 1
    }
}

/// All products of `generators` (plus the identity).
pub fn closure(degree: usize, generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in generators {
            let q = g.compose(&p);
            if !seen.contains(&q) {
                if seen.len() >= cap {
                    return Err(Error::GroupCapExceeded(cap));
                }
                seen.insert(q.clone());
                queue.push_back(q);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

pub(crate) fn orbits_of_images<'a>(degree: usize, images: impl Iterator<Item = &'a [usize]>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for img in images {
        for (v, &w) in img.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; degree];
    for v in 0..degree {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[index[r]].push(v);
    }
    groups
}

/// Orbits of the group generated by `generators`, each sorted, ordered by least element.
pub fn orbits(degree: usize, generators: &[Permutation]) -> Vec<Vec<usize>> {
    orbits_of_images(degree, generators.iter().map(|p| p.image()))
}

/// Single automorphism orbit, decided by searching one automorphism `0 ↦ v` per
/// vertex not yet reached.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut found: Vec<Permutation> = Vec::new();
    for v in 1..n {
        if orbits(n, &found)[0].contains(&v) {
            continue;
        }
        let maps = find_isomorphisms_budgeted(g, g, Limit::AtMost(1), &[(0, v)], &mut Budget::unlimited())
            .expect("unlimited budget");
        match maps.into_iter().next() {
            Some(p) => found.push(p),
            None => return false,
        }
    }
    true
}

/// A subgroup acting regularly on `0..degree`, built by choosing for each new target
/// vertex an element sending 0 there and closing up. Exhaustive: `Ok(None)` means no
/// regular subgroup exists. Elements must form a group.
pub fn find_regular_subgroup(elements: &[Permutation], degree: usize) -> Result<Option<Vec<Permutation>>> {
    if degree == 0 {
        return Ok(Some(vec![Permutation::identity(0)]));
    }
    if elements.iter().any(|p| p.len() != degree) {
        return Err(Error::DimensionMismatch("group elements have the wrong degree".into()));
    }
    let candidates: Vec<&Permutation> = elements.iter().filter(|p| p.fixed_points().is_empty()).collect();
    let start = vec![Permutation::identity(degree)];
    let mut tried: HashSet<Vec<Permutation>> = HashSet::new();
    Ok(extend_regular(&start, &candidates, degree, &mut tried))
}

/// Closure of `h ∪ {g}` if it stays semiregular (no non-identity element fixes a point).
fn semiregular_closure(h: &[Permutation], g: &Permutation, degree: usize) -> Option<Vec<Permutation>> {
    let mut seen: HashSet<Permutation> = h.iter().cloned().collect();
    let mut queue: VecDeque<Permutation> = h.iter().cloned().collect();
    let mut gens: Vec<Permutation> = h.to_vec();
    gens.push(g.clone());
    while let Some(p) = queue.pop_front() {
        for s in &gens {
            let q = s.compose(&p);
            if seen.contains(&q) {
                continue;
            }
            if !q.is_identity() && !q.fixed_points().is_empty() {
                return None;
            }
            seen.insert(q.clone());
            if seen.len() > degree {
                return None;
            }
            queue.push_back(q);
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    Some(out)
}

fn extend_regular(
    h: &[Permutation],
    candidates: &[&Permutation],
    degree: usize,
    tried: &mut HashSet<Vec<Permutation>>,
) -> Option<Vec<Permutation>> {
    if h.len() == degree {
        return Some(h.to_vec());
    }
    let reached: HashSet<usize> = h.iter().map(|p| p.apply(0)).collect();
    let target = (0..degree).find(|v| !reached.contains(v)).expect("semiregular subgroup smaller than degree");
    for g in candidates.iter().filter(|g| g.apply(0) == target) {
        if let Some(k) = semiregular_closure(h, g, degree) {
            if tried.insert(k.clone()) {
                if let Some(r) = extend_regular(&k, candidates, degree, tried) {
                    return Some(r);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::morphisms::automorphisms;

    #[test]
    fn closure_of_rotation() {
        let r = Permutation::new(vec![1, 2, 3, 4, 0]).unwrap();
        let g = closure(5, &[r], DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.len(), 5);
        assert!(closure(5, &[Permutation::new(vec![1, 2, 3, 4, 0]).unwrap(), Permutation::new(vec![1, 0, 2, 3, 4]).unwrap()], 10).is_err());
    }

    #[test]
    fn automorphism_list_is_closed() {
        let g = GroupDescription::from_elements(10, automorphisms(&named::petersen()), StructureLabel::Unlabeled);
        assert!(g.is_closed());
        assert!(g.is_transitive());
    }

    #[test]
    fn regular_subgroups() {
        let c5 = automorphisms(&named::cycle(5));
        let r = find_regular_subgroup(&c5, 5).unwrap().unwrap();
        assert_eq!(r.len(), 5);
        let pet = automorphisms(&named::petersen());
        assert!(find_regular_subgroup(&pet, 10).unwrap().is_none());
    }

    #[test]
    fn vertex_transitivity() {
        assert!(is_vertex_transitive(&named::petersen()));
        assert!(is_vertex_transitive(&named::paley(13).unwrap()));
        assert!(!is_vertex_transitive(&named::path(4)));
        assert!(!is_vertex_transitive(&named::path(4).complementary_prism()));
    }

    #[test]
    fn orbit_partition() {
        let auts = automorphisms(&named::path(4));
        assert_eq!(orbits(4, &auts), vec![vec![0, 3], vec![1, 2]]);
    }
}
