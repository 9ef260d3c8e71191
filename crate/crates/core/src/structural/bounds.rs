//! Evaluation of classical inequalities between invariants on a given graph.

use serde::{Deserialize, Serialize};

use super::{hamiltonian_connected, invariants, is_proper_coloring, vertex_connectivity, InvariantReport};
use crate::budget::{Budget, SearchResult};
use crate::graph::Graph;
use crate::morphisms::{find_homomorphism, is_vertex_transitive};
use crate::graph::named;
use crate::spectral::is_one_walk_regular;

/// Graphs above this order skip the Hamiltonian-connectedness search.
const HAMILTON_CHECK_LIMIT: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckOutcome {
    Holds,
    Fails,
    NotApplicable,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub outcome: CheckOutcome,
    pub detail: String,
}

impl Check {
    fn new(outcome: CheckOutcome, detail: impl Into<String>) -> Self {
        Check {
            outcome,
            detail: detail.into(),
        }
    }

    fn verdict(ok: bool, detail: impl Into<String>) -> Self {
        Check::new(if ok { CheckOutcome::Holds } else { CheckOutcome::Fails }, detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub invariants: InvariantReport,
    pub kappa_complement: Option<usize>,
    pub min_degree: usize,
    pub min_degree_complement: usize,
    pub vertex_transitive: bool,
    pub one_walk_regular: bool,
    /// `κ(Γ) + κ(Γ̄) ≥ min{δ(Γ), δ(Γ̄)} + 1`.
    pub connectivity_sum: Check,
    /// `α < κ` implies Hamiltonian-connected.
    pub hamilton_from_connectivity: Check,
    /// `α·ω ≤ n` for vertex-transitive or 1-walk-regular graphs.
    pub clique_coclique: Check,
    /// For such graphs with a homomorphism to `K_ω`, every fibre has `α` vertices.
    pub preimage: Check,
}

pub fn bound_checks(g: &Graph, budget: &mut Budget) -> BoundReport {
    let n = g.n();
    let inv = invariants(g, budget);
    let gc = g.complement();
    let kappa_complement = vertex_connectivity(&gc).ok().map(|c| c.kappa);
    let (min_degree, min_degree_complement) = if n == 0 { (0, 0) } else { (g.min_degree(), gc.min_degree()) };
    let vertex_transitive = is_vertex_transitive(g);
    let one_walk_regular = is_one_walk_regular(g);

    let connectivity_sum = match (inv.kappa.value(), kappa_complement) {
        (Some(k), Some(kc)) if n > 0 => {
            let rhs = min_degree.min(min_degree_complement) + 1;
            Check::verdict(k + kc >= rhs, format!("{k} + {kc} >= {rhs}"))
        }
        _ => Check::new(CheckOutcome::Unknown, "connectivity not computed"),
    };

    let hamilton_from_connectivity = match (inv.alpha.value(), inv.kappa.value()) {
        (Some(a), Some(k)) if a < k => {
            if n > HAMILTON_CHECK_LIMIT {
                Check::new(CheckOutcome::Unknown, format!("alpha {a} < kappa {k}; search skipped above {HAMILTON_CHECK_LIMIT} vertices"))
            } else {
                match hamiltonian_connected(g, budget) {
                    SearchResult::Found(_) => Check::new(CheckOutcome::Holds, format!("alpha {a} < kappa {k}; Hamiltonian-connected")),
                    SearchResult::NotFound => Check::new(CheckOutcome::Fails, format!("alpha {a} < kappa {k}; some pair has no Hamiltonian path")),
                    SearchResult::Unknown(_) => Check::new(CheckOutcome::Unknown, "budget exhausted"),
                }
            }
        }
        (Some(a), Some(k)) => Check::new(CheckOutcome::NotApplicable, format!("alpha {a} >= kappa {k}")),
        _ => Check::new(CheckOutcome::Unknown, "alpha or kappa not exact"),
    };

    let symmetric = vertex_transitive || one_walk_regular;
    let clique_coclique = match (inv.alpha.value(), inv.omega.value()) {
        _ if !symmetric => Check::new(CheckOutcome::NotApplicable, "neither vertex-transitive nor 1-walk-regular"),
        (Some(a), Some(w)) => Check::verdict(a * w <= n, format!("{a} * {w} <= {n}")),
        _ => Check::new(CheckOutcome::Unknown, "alpha or omega not exact"),
    };

    let preimage = match (inv.alpha.value(), inv.omega.value()) {
        _ if !symmetric => Check::new(CheckOutcome::NotApplicable, "neither vertex-transitive nor 1-walk-regular"),
        (Some(a), Some(w)) if n > 0 => {
            let target = named::complete(w);
            match find_homomorphism(g, &target, &[], budget) {
                Ok(SearchResult::Found(phi)) => {
                    debug_assert!(is_proper_coloring(g, &phi.image));
                    let fibres = phi.fibre_sizes();
                    let ok = a * w == n && fibres.iter().all(|&f| f == a);
                    Check::verdict(ok, format!("fibre sizes {fibres:?}, alpha {a}"))
                }
                Ok(SearchResult::NotFound) => Check::new(CheckOutcome::NotApplicable, format!("no homomorphism to K{w}")),
                _ => Check::new(CheckOutcome::Unknown, "homomorphism search did not finish"),
            }
        }
        _ => Check::new(CheckOutcome::Unknown, "alpha or omega not exact"),
    };

    BoundReport {
        invariants: inv,
        kappa_complement,
        min_degree,
        min_degree_complement,
        vertex_transitive,
        one_walk_regular,
        connectivity_sum,
        hamilton_from_connectivity,
        clique_coclique,
        preimage,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn checks(g: &Graph) -> BoundReport {
        bound_checks(g, &mut Budget::unlimited())
    }

    #[test]
    fn paley9() {
        let r = checks(&named::paley(9).unwrap());
        assert_eq!(r.invariants.kappa.value(), Some(4));
        assert_eq!(r.connectivity_sum.outcome, CheckOutcome::Holds);
        assert_eq!(r.clique_coclique.outcome, CheckOutcome::Holds);
        assert_eq!(r.preimage.outcome, CheckOutcome::Holds);
    }

    #[test]
    fn pentagon_preimage_not_applicable() {
        let r = checks(&crate::graph::named::cycle(5));
        assert_eq!(r.clique_coclique.outcome, CheckOutcome::Holds);
        assert_eq!(r.preimage.outcome, CheckOutcome::NotApplicable);
    }

    #[test]
    fn path_is_not_symmetric() {
        let r = checks(&crate::graph::named::path(4));
        assert_eq!(r.clique_coclique.outcome, CheckOutcome::NotApplicable);
        assert_eq!(r.connectivity_sum.outcome, CheckOutcome::Holds);
    }
}
