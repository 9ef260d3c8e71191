//! Vertex maps between graphs and the searches that produce them.

mod canon;
mod core;
mod group;
mod hom;
mod iso;
mod wreath;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use self::core::{compute_core, is_core, verify_retraction, CoreOutcome, CoreReport};
pub use canon::{canonical_form, graphs_up_to_isomorphism};
pub use group::{
    closure, find_regular_subgroup, is_vertex_transitive, orbits, GroupDescription, StructureLabel,
    DEFAULT_GROUP_CAP,
};
pub use hom::{find_homomorphism, find_homomorphism_into};
pub use iso::{
    automorphisms, find_antimorphisms, find_isomorphisms, find_isomorphisms_budgeted, is_isomorphic,
    is_self_complementary, Limit,
};
pub use wreath::{lex_auto_conditions, wreath_aut_order, wreath_map, LexAutoConditions};

/// A bijection of `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidParameter(format!("{image:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Cycles of length at least one, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.image[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.image[x];
            }
            out.push(c);
        }
        out
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.image[i] == i).collect()
    }

    /// `u ~ v` in `g1` iff `p(u) ~ p(v)` in `g2`, checked pair by pair.
    pub fn is_isomorphism(&self, g1: &Graph, g2: &Graph) -> bool {
        let n = g1.n();
        if g2.n() != n || self.len() != n {
            return false;
        }
        (0..n).all(|u| (u + 1..n).all(|v| g1.adjacent(u, v) == g2.adjacent(self.image[u], self.image[v])))
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.is_isomorphism(g, g)
    }

    /// An isomorphism from `g` to its complement.
    pub fn is_antimorphism_of(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.len() != n {
            return false;
        }
        (0..n).all(|u| (u + 1..n).all(|v| g.adjacent(u, v) != g.adjacent(self.image[u], self.image[v])))
    }

    pub fn as_vertex_map(&self) -> VertexMap {
        VertexMap {
            image: self.image.clone(),
            target_n: self.len(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

/// Any map from `0..image.len()` into `0..target_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexMap {
    pub image: Vec<usize>,
    pub target_n: usize,
}

impl VertexMap {
    pub fn new(image: Vec<usize>, target_n: usize) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&x| x >= target_n) {
            return Err(Error::InvalidParameter(format!("image {bad} outside 0..{target_n}")));
        }
        Ok(VertexMap { image, target_n })
    }

    pub fn identity(n: usize) -> Self {
        VertexMap {
            image: (0..n).collect(),
            target_n: n,
        }
    }

    pub fn source_n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexMap) -> VertexMap {
        VertexMap {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
            target_n: self.target_n,
        }
    }

    /// Every edge of `g1` goes to an edge of `g2`.
    pub fn is_homomorphism(&self, g1: &Graph, g2: &Graph) -> bool {
        self.source_n() == g1.n()
            && self.target_n == g2.n()
            && self.image.iter().all(|&x| x < g2.n())
            && g1.edges().all(|(u, v)| g2.adjacent(self.image[u], self.image[v]))
    }

    /// Sorted distinct image vertices.
    pub fn image_set(&self) -> Vec<usize> {
        let mut s = self.image.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn is_bijective(&self) -> bool {
        self.source_n() == self.target_n && self.image_set().len() == self.target_n
    }

    /// Fibre sizes `|φ⁻¹(t)|` for every target vertex `t`.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut c = vec![0; self.target_n];
        for &x in &self.image {
            c[x] += 1;
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn permutation_basics() {
        let p = Permutation::new(vec![1, 2, 0, 3]).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.fixed_points(), vec![3]);
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).image(), &[2, 0, 1, 3]);
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn p4_antimorphism_of_order_four() {
        // 1→2→4→3→1 in 1-indexed labels.
        let s = Permutation::new(vec![1, 3, 0, 2]).unwrap();
        let p4 = named::path(4);
        assert!(s.is_antimorphism_of(&p4));
        assert_eq!(s.order(), 4);
        assert!(s.fixed_points().is_empty());
    }

    #[test]
    fn homomorphism_check() {
        let c5 = named::cycle(5);
        let k3 = named::complete(3);
        let col = VertexMap::new(vec![0, 1, 0, 1, 2], 3).unwrap();
        assert!(col.is_homomorphism(&c5, &k3));
        let bad = VertexMap::new(vec![0, 1, 0, 1, 0], 3).unwrap();
        assert!(!bad.is_homomorphism(&c5, &k3));
        assert_eq!(col.fibre_sizes(), vec![2, 2, 1]);
    }
}
