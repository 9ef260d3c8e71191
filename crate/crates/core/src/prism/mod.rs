//! Structure of complementary prisms: the exceptional families, the automorphism group,
//! vertex-transitivity and Cayley status, diameter, core shapes and lexicographic
//! factorisations.

mod aut;
mod core_case;
mod family;
mod lex;

use serde::{Deserialize, Serialize};

pub use aut::{
    brute_prism_aut, classify_prism_automorphism, dichotomy_holds, governing_family, lift_antimorphism,
    lift_automorphism, ratio_class, structured_prism_aut, PrismAutKind, RatioClass, RatioReason,
};
pub use core_case::{classify_core_case, CoreCase, CoreCaseKind, CorePartition, PartitionChecks};
pub use family::{detect_family, special_automorphism, FamilyDetection};
pub use lex::{is_lex_product_with_inner_order, not_lex_product_by_enumeration, not_lex_product_check, LEX_CHECK_LIMIT};

use crate::error::Result;
use crate::graph::Graph;
use crate::morphisms::{find_regular_subgroup, is_self_complementary, is_vertex_transitive};

/// Groups larger than this are not searched for a regular subgroup.
pub const CAYLEY_SEARCH_LIMIT: usize = 5_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrismPredicates {
    /// The base graph is vertex-transitive and self-complementary.
    pub vertex_transitive: bool,
    /// Single orbit of the prism's automorphism group, computed directly.
    pub vertex_transitive_by_orbits: bool,
    /// Only the one-vertex base graph gives a Cayley prism.
    pub is_cayley: bool,
    /// Regular-subgroup search on the automorphism group, when small enough.
    pub cayley_by_search: Option<bool>,
    pub diameter: usize,
    /// `1` exactly for one vertex, `2` exactly when the graph and its complement both
    /// have diameter 2, otherwise `3`.
    pub diameter_rule_holds: bool,
}

impl PrismPredicates {
    pub fn consistent(&self) -> bool {
        self.vertex_transitive == self.vertex_transitive_by_orbits
            && self.cayley_by_search.is_none_or(|c| c == self.is_cayley)
            && self.diameter_rule_holds
    }
}

pub fn prism_predicates(g: &Graph) -> Result<PrismPredicates> {
    let n = g.n();
    let prism = g.complementary_prism();
    let vertex_transitive = is_vertex_transitive(g) && is_self_complementary(g);
    let vertex_transitive_by_orbits = is_vertex_transitive(&prism);
    let is_cayley = n == 1;
    let cayley_by_search = if !vertex_transitive_by_orbits {
        Some(false)
    } else {
        let group = structured_prism_aut(g)?;
        if group.order <= CAYLEY_SEARCH_LIMIT {
            Some(find_regular_subgroup(&group.elements, 2 * n)?.is_some())
        } else {
            None
        }
    };
    let diameter = prism.diameter().unwrap_or(0);
    let expected = if n == 1 {
        1
    } else if g.diameter() == Some(2) && g.complement().diameter() == Some(2) {
        2
    } else {
        3
    };
    Ok(PrismPredicates {
        vertex_transitive,
        vertex_transitive_by_orbits,
        is_cayley,
        cayley_by_search,
        diameter,
        diameter_rule_holds: diameter == expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn triple(g: &Graph) -> (bool, bool, usize) {
        let p = prism_predicates(g).unwrap();
        assert!(p.consistent(), "{p:?}");
        (p.vertex_transitive, p.is_cayley, p.diameter)
    }

    #[test]
    fn corpus_triples() {
        assert_eq!(triple(&named::cycle(5)), (true, false, 2));
        assert_eq!(triple(&named::path(4)), (false, false, 3));
        assert_eq!(triple(&named::complete(1)), (true, true, 1));
        assert!(triple(&named::paley(9).unwrap()).0);
        assert!(!triple(&named::complete(3)).0);
    }
}
