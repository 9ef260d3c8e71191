//! Homomorphism search with forward checking.

use super::VertexMap;
use crate::bitset::{self, Ones};
use crate::budget::{Budget, BudgetExhausted, SearchResult};
use crate::error::{Error, Result};
use crate::graph::Graph;

struct HomSearch<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    image: Vec<Option<usize>>,
}

impl HomSearch<'_> {
    fn run(&mut self, domains: &[Vec<u64>], budget: &mut Budget) -> std::result::Result<bool, BudgetExhausted> {
        // Most constrained unassigned vertex; ties go to higher degree, then lower index.
        let pick = (0..self.g1.n())
            .filter(|&v| self.image[v].is_none())
            .min_by_key(|&v| (bitset::count(&domains[v]), std::cmp::Reverse(self.g1.degree(v)), v));
        let Some(v) = pick else { return Ok(true) };
        for a in Ones::new(&domains[v]).collect::<Vec<_>>() {
            budget.tick()?;
            let mut next = domains.to_vec();
            next[v].iter_mut().for_each(|w| *w = 0);
            bitset::set(&mut next[v], a);
            let row = self.g2.row(a);
            let mut dead = false;
            for w in self.g1.neighbors(v) {
                if self.image[w].is_none() {
                    for (d, r) in next[w].iter_mut().zip(row) {
                        *d &= r;
                    }
                    if next[w].iter().all(|&x| x == 0) {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            self.image[v] = Some(a);
            if self.run(&next, budget)? {
                return Ok(true);
            }
            self.image[v] = None;
        }
        Ok(false)
    }
}

/// Homomorphism `g1 → g2` where each vertex `v` may only map into `allowed[v]`
/// (a bitset over `g2`). Exhaustive up to the budget.
pub(crate) fn hom_with_domains(
    g1: &Graph,
    g2: &Graph,
    mut domains: Vec<Vec<u64>>,
    budget: &mut Budget,
) -> SearchResult<VertexMap> {
    // Vertices with neighbours need targets with neighbours.
    for v in 0..g1.n() {
        if g1.degree(v) > 0 {
            for t in 0..g2.n() {
                if g2.degree(t) == 0 {
                    bitset::clear(&mut domains[v], t);
                }
            }
        }
        if domains[v].iter().all(|&x| x == 0) {
            return SearchResult::NotFound;
        }
    }
    let mut s = HomSearch {
        g1,
        g2,
        image: vec![None; g1.n()],
    };
    let r = s.run(&domains, budget).map(|ok| {
        ok.then(|| VertexMap {
            image: s.image.iter().map(|x| x.expect("complete assignment")).collect(),
            target_n: g2.n(),
        })
    });
    let out = SearchResult::from_search(r);
    if let SearchResult::Found(m) = &out {
        assert!(m.is_homomorphism(g1, g2), "homomorphism search returned an invalid map");
    }
    out
}

/// Homomorphism `g1 → g2` extending the partial map `constraints` (pairs `(v, image)`).
pub fn find_homomorphism(
    g1: &Graph,
    g2: &Graph,
    constraints: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<SearchResult<VertexMap>> {
    let full: Vec<u64> = crate::bitset::VertexSet::full(g2.n()).words().to_vec();
    let mut domains = vec![full; g1.n()];
    let mut fixed: Vec<Option<usize>> = vec![None; g1.n()];
    for &(v, t) in constraints {
        if v >= g1.n() || t >= g2.n() {
            return Err(Error::ContradictoryConstraint(format!("pair ({v}, {t}) out of range")));
        }
        if fixed[v].is_some_and(|s| s != t) {
            return Err(Error::ContradictoryConstraint(format!("vertex {v} mapped twice")));
        }
        fixed[v] = Some(t);
        domains[v].iter_mut().for_each(|w| *w = 0);
        bitset::set(&mut domains[v], t);
    }
    for (u, v) in g1.edges() {
        if let (Some(a), Some(b)) = (fixed[u], fixed[v]) {
            if !g2.adjacent(a, b) {
                return Err(Error::ContradictoryConstraint(format!(
                    "edge ({u}, {v}) mapped to non-edge ({a}, {b})"
                )));
            }
        }
    }
    for v in 0..g1.n() {
        if let Some(a) = fixed[v] {
            for w in g1.neighbors(v) {
                for (d, r) in domains[w].iter_mut().zip(g2.row(a)) {
                    *d &= r;
                }
            }
        }
    }
    Ok(hom_with_domains(g1, g2, domains, budget))
}

/// Homomorphism `g` → `g[targets]` (as a map into `g`'s own vertex set).
pub fn find_homomorphism_into(g: &Graph, targets: &[usize], budget: &mut Budget) -> SearchResult<VertexMap> {
    let mut allowed = vec![0u64; g.stride()];
    for &t in targets {
        bitset::set(&mut allowed, t);
    }
    hom_with_domains(g, g, vec![allowed; g.n()], budget)
}
