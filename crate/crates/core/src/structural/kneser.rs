//! Checkable facts about the Kneser graph `K(10, 4)` and its complement.

use serde::{Deserialize, Serialize};

use super::{is_proper_coloring, max_clique};
use crate::graph::named;
use crate::spectral::hoffman_bound;

/// Colour of a 4-set (bitmask over `{1, …, 10}`): its least element if at most 3, else 4.
/// Colours are returned 0-based.
pub fn min_rule_coloring(sets: &[u32]) -> Vec<usize> {
    sets.iter().map(|&m| (m.trailing_zeros() as usize).min(3)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KneserFacts {
    /// Exact clique number of `K(10, 4)` by search.
    pub omega_kneser: usize,
    /// Size of the family of 4-sets containing 1.
    pub star_size: usize,
    /// That family is a clique of the complement.
    pub star_is_clique_in_complement: bool,
    /// It stays a clique after deleting the special edge.
    pub star_is_clique_after_deletion: bool,
    /// Hoffman ratio bound on the independence number of `K(10, 4)`, which bounds the
    /// clique number of the complement (and of the complement minus an edge).
    pub hoffman_upper_bound: f64,
    /// The min-rule colouring is proper on `K(10, 4)` with the special edge added.
    pub min_rule_proper_with_edge: bool,
    pub min_rule_colours: usize,
    /// Cited lower bounds on χ(K(10,4)) and χ(complement − e); not computed here.
    pub cited_chi_kneser_lower: usize,
    pub cited_chi_complement_minus_edge_lower: usize,
}

impl KneserFacts {
    pub fn all_hold(&self) -> bool {
        self.omega_kneser == 2
            && self.star_size == 84
            && self.star_is_clique_in_complement
            && self.star_is_clique_after_deletion
            && (self.hoffman_upper_bound - 84.0).abs() < 1e-6
            && self.min_rule_proper_with_edge
            && self.min_rule_colours == 4
    }
}

pub fn kneser_facts() -> KneserFacts {
    let sets = named::kneser_subsets(10, 4);
    let k = named::kneser(10, 4).expect("valid parameters");
    let (a, b) = named::kneser_special_edge();
    let star: Vec<usize> = (0..sets.len()).filter(|&i| sets[i] & 1 == 1).collect();
    let complement = k.complement();
    let deleted = complement.without_edges(&[(a, b)]);
    let with_edge = k.with_edges(&[(a, b)]);
    let colouring = min_rule_coloring(&sets);
    KneserFacts {
        omega_kneser: max_clique(&k).len(),
        star_size: star.len(),
        star_is_clique_in_complement: complement.is_clique(&star),
        star_is_clique_after_deletion: deleted.is_clique(&star),
        hoffman_upper_bound: hoffman_bound(&k).expect("Kneser graphs are regular"),
        min_rule_proper_with_edge: is_proper_coloring(&with_edge, &colouring),
        min_rule_colours: super::colours_used(&colouring),
        cited_chi_kneser_lower: 4,
        cited_chi_complement_minus_edge_lower: 104,
    }
}
