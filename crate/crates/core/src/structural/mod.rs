//! Combinatorial invariants, Cheeger numbers, Hamiltonicity and bound checks.

mod bounds;
mod cheeger;
mod clique;
mod coloring;
mod connectivity;
mod hamilton;
mod kneser;

use serde::{Deserialize, Serialize};

pub use bounds::{bound_checks, BoundReport, Check, CheckOutcome};
pub use cheeger::{cheeger_brute_force, cheeger_closed_form, edge_boundary, CheegerMethod, CheegerReport, BRUTE_FORCE_LIMIT};
pub use clique::{
    clique_number_by_subsets, max_clique, max_clique_budgeted, max_clique_partial, max_independent_set,
    max_independent_set_budgeted,
};
pub use coloring::{chromatic, chromatic_by_enumeration, colours_used, dsatur_coloring, is_proper_coloring, ChromaticResult};
pub use connectivity::{connectivity_by_subsets, separates, vertex_connectivity, Connectivity, MAX_FLOW_LIMIT};
pub use hamilton::{
    hamiltonian, hamiltonian_connected, hamiltonian_cycle, hamiltonian_path, hamiltonian_path_between,
    hamiltonian_path_from, is_hamiltonian_cycle, is_hamiltonian_path, prism_cycle_construction,
    prism_pair_construction, prism_path_from_cycles, witness_holds, HamMode, HamWitness,
};
pub use kneser::{kneser_facts, min_rule_coloring, KneserFacts};

use crate::budget::Budget;
use crate::graph::Graph;

/// Closed range known to contain a quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: usize,
    pub upper: usize,
}

impl Interval {
    pub fn exact(v: usize) -> Self {
        Interval { lower: v, upper: v }
    }

    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn value(&self) -> Option<usize> {
        self.is_exact().then_some(self.lower)
    }
}

/// Order above which the chromatic number is only bracketed.
pub const EXACT_CHROMATIC_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub alpha: Interval,
    pub omega: Interval,
    pub chi: Interval,
    pub kappa: Interval,
    /// Largest independent set found.
    pub independent_set: Vec<usize>,
    /// Largest clique found.
    pub clique: Vec<usize>,
    /// Proper colouring with `chi.upper` colours.
    pub coloring: Vec<usize>,
    /// Minimum separating set; absent for complete graphs.
    pub vertex_cut: Option<Vec<usize>>,
}

impl InvariantReport {
    /// Every witness is what it claims to be and the values respect `χ ≥ ω` and `χ·α ≥ n`.
    pub fn witnesses_hold(&self, g: &Graph) -> bool {
        g.is_independent(&self.independent_set)
            && self.independent_set.len() == self.alpha.lower
            && g.is_clique(&self.clique)
            && self.clique.len() == self.omega.lower
            && is_proper_coloring(g, &self.coloring)
            && colours_used(&self.coloring) == self.chi.upper
            && self.vertex_cut.as_ref().is_none_or(|c| c.len() == self.kappa.upper && (g.n() < 2 || separates(g, c)))
            && self.chi.upper >= self.omega.lower
            && self.chi.upper * self.alpha.upper.max(1) >= g.n()
    }
}

/// α, ω, χ and κ with witnesses; values are intervals when `budget` runs out or the
/// graph is beyond the exact limits.
pub fn invariants(g: &Graph, budget: &mut Budget) -> InvariantReport {
    let n = g.n();
    let (independent_set, alpha_done) = max_clique_partial(&g.complement(), budget);
    let (clique, omega_done) = max_clique_partial(g, budget);
    let alpha = if alpha_done { Interval::exact(independent_set.len()) } else { Interval { lower: independent_set.len(), upper: n } };
    let omega = if omega_done { Interval::exact(clique.len()) } else { Interval { lower: clique.len(), upper: n } };
    let (chi, coloring) = if n <= EXACT_CHROMATIC_LIMIT {
        let r = chromatic(g, budget);
        (Interval { lower: r.lower.max(omega.lower), upper: r.upper }, r.coloring)
    } else {
        let c = dsatur_coloring(g);
        let by_alpha = if alpha.upper == 0 { 0 } else { n.div_ceil(alpha.upper) };
        (Interval { lower: omega.lower.max(by_alpha), upper: colours_used(&c) }, c)
    };
    let (kappa, vertex_cut) = match vertex_connectivity(g) {
        Ok(c) => (Interval::exact(c.kappa), c.cut),
        Err(_) => (Interval { lower: 0, upper: g.min_degree() }, None),
    };
    InvariantReport {
        n,
        alpha,
        omega,
        chi,
        kappa,
        independent_set,
        clique,
        coloring,
        vertex_cut,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn petersen_invariants() {
        let g = named::petersen();
        let r = invariants(&g, &mut Budget::unlimited());
        assert_eq!(
            (r.alpha.value(), r.omega.value(), r.chi.value(), r.kappa.value()),
            (Some(4), Some(2), Some(3), Some(3))
        );
        assert!(r.witnesses_hold(&g));
    }

    #[test]
    fn complete_graph_has_no_cut() {
        let r = invariants(&named::complete(4), &mut Budget::unlimited());
        assert_eq!(r.kappa.value(), Some(3));
        assert!(r.vertex_cut.is_none());
    }

    #[test]
    fn exhausted_budget_gives_intervals() {
        let r = invariants(&named::paley(13).unwrap(), &mut Budget::new(2));
        assert!(!r.alpha.is_exact());
        assert!(r.alpha.lower <= 3 && r.alpha.upper >= 3);
    }
}
