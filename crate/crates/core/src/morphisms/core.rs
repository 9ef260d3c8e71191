//! Cores and retractions.

use serde::{Deserialize, Serialize};

use super::hom::hom_with_domains;
use super::iso::{find_isomorphisms_budgeted, Limit};
use super::{group, VertexMap};
use crate::bitset;
use crate::budget::{Budget, BudgetExhausted, SearchResult};
use crate::graph::Graph;
use crate::structural::max_clique;

/// Automorphisms collected for orbit pruning before giving up on completeness.
const ORBIT_SAMPLE: usize = 2000;

/// A retract of a graph together with the retraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreReport {
    /// Sorted vertices of the retract.
    pub core_vertices: Vec<usize>,
    /// Retraction of the whole graph onto `core_vertices`.
    pub retraction: VertexMap,
    /// The input graph is its own core.
    pub is_core_itself: bool,
}

/// Result of [`compute_core`]. `Unknown` carries the smallest homomorphic image reached,
/// which has not been shown to be a core; its map is a retraction when the restriction
/// to that image happens to be bijective and otherwise only a homomorphism onto it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoreOutcome {
    Core(CoreReport),
    Unknown { partial: CoreReport, exhausted: BudgetExhausted },
}

impl CoreOutcome {
    pub fn core(self) -> Option<CoreReport> {
        match self {
            CoreOutcome::Core(r) => Some(r),
            CoreOutcome::Unknown { .. } => None,
        }
    }
}

/// `psi` is a homomorphism of `g` into itself with image inside `claimed_core` that
/// fixes every vertex of `claimed_core`.
pub fn verify_retraction(g: &Graph, psi: &VertexMap, claimed_core: &[usize]) -> bool {
    if psi.source_n() != g.n() || psi.target_n != g.n() {
        return false;
    }
    let mut in_core = vec![false; g.n()];
    for &c in claimed_core {
        if c >= g.n() {
            return false;
        }
        in_core[c] = true;
    }
    claimed_core.iter().all(|&c| psi.apply(c) == c)
        && psi.image.iter().all(|&x| x < g.n() && in_core[x])
        && psi.is_homomorphism(g, g)
}

/// Vertex classes that are unions of automorphism orbits (whole orbits when the group
/// is small enough to enumerate), used to skip equivalent removal candidates.
fn orbit_representatives(h: &Graph, budget: &mut Budget) -> Result<Vec<usize>, BudgetExhausted> {
    let auts = find_isomorphisms_budgeted(h, h, Limit::AtMost(ORBIT_SAMPLE), &[], budget)?;
    let orbits = group::orbits_of_images(h.n(), auts.iter().map(|p| p.image()));
    Ok(orbits.iter().map(|o| o[0]).collect())
}

/// Looks for an endomorphism of `h` missing a vertex, returning its image array.
fn proper_endomorphism(h: &Graph, budget: &mut Budget) -> Result<Option<Vec<usize>>, BudgetExhausted> {
    let n = h.n();
    if n == 0 || h.is_complete() {
        return Ok(None);
    }
    if h.edge_count() == 0 {
        return Ok((n > 1).then(|| vec![0; n]));
    }
    // A homomorphism onto a maximum clique settles the core at once.
    let clique = max_clique(h);
    if clique.len() < n {
        let mut allowed = vec![0u64; h.stride()];
        for &c in &clique {
            bitset::set(&mut allowed, c);
        }
        match hom_with_domains(h, h, vec![allowed; n], budget) {
            SearchResult::Found(m) => return Ok(Some(m.image)),
            SearchResult::NotFound => {}
            SearchResult::Unknown(b) => return Err(b),
        }
    }
    for x in orbit_representatives(h, budget)? {
        let mut allowed = crate::bitset::VertexSet::full(n).words().to_vec();
        bitset::clear(&mut allowed, x);
        match hom_with_domains(h, h, vec![allowed; n], budget) {
            SearchResult::Found(m) => return Ok(Some(m.image)),
            SearchResult::NotFound => {}
            SearchResult::Unknown(b) => return Err(b),
        }
    }
    Ok(None)
}

/// Repeatedly replaces the graph by the image of a proper endomorphism until none
/// exists. The composed map, corrected by the inverse automorphism of the core, is a
/// retraction onto the final vertex set.
pub fn compute_core(g: &Graph, budget: &mut Budget) -> CoreOutcome {
    let n = g.n();
    let mut current: Vec<usize> = (0..n).collect();
    let mut map: Vec<usize> = (0..n).collect();
    let mut shrunk = false;
    loop {
        let h = g.induced(&current);
        match proper_endomorphism(&h, budget) {
            Ok(Some(phi)) => {
                shrunk = true;
                let mut img: Vec<usize> = phi.clone();
                img.sort_unstable();
                img.dedup();
                let next: Vec<usize> = img.iter().map(|&i| current[i]).collect();
                let pos_in_current = |v: usize| current.binary_search(&v).expect("map stays inside retract");
                map = map.iter().map(|&v| current[phi[pos_in_current(v)]]).collect();
                current = next;
            }
            Ok(None) => {
                let retraction = fix_on_core(g, &current, map);
                return CoreOutcome::Core(CoreReport {
                    core_vertices: current,
                    retraction,
                    is_core_itself: !shrunk,
                });
            }
            Err(exhausted) => {
                let retraction = fix_on_core(g, &current, map);
                return CoreOutcome::Unknown {
                    partial: CoreReport {
                        core_vertices: current,
                        retraction,
                        is_core_itself: false,
                    },
                    exhausted,
                };
            }
        }
    }
}

/// `map` sends `g` onto `core` and restricts to a permutation of `core`; precomposing
/// with the inverse of that permutation gives a map fixing `core` pointwise.
fn fix_on_core(g: &Graph, core: &[usize], map: Vec<usize>) -> VertexMap {
    let pos = |v: usize| core.binary_search(&v).expect("image lies in the core");
    let step: Vec<usize> = core.iter().map(|&c| pos(map[c])).collect();
    let mut hit = vec![false; core.len()];
    step.iter().for_each(|&i| hit[i] = true);
    if hit.contains(&false) {
        return VertexMap {
            image: map,
            target_n: g.n(),
        };
    }
    // The restriction has finite order; the power just before the identity is its inverse.
    let mut prev: Vec<usize> = (0..core.len()).collect();
    let mut cur = step.clone();
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        prev = cur.clone();
        cur = cur.iter().map(|&x| step[x]).collect();
    }
    let mut inv = vec![usize::MAX; g.n()];
    for (i, &c) in core.iter().enumerate() {
        inv[c] = core[prev[i]];
    }
    VertexMap {
        image: map.iter().map(|&x| inv[x]).collect(),
        target_n: g.n(),
    }
}

/// Whether `g` has no proper endomorphism.
pub fn is_core(g: &Graph, budget: &mut Budget) -> SearchResult<bool> {
    match proper_endomorphism(g, budget) {
        Ok(Some(_)) => SearchResult::Found(false),
        Ok(None) => SearchResult::Found(true),
        Err(b) => SearchResult::Unknown(b),
    }
}
