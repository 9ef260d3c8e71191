//! Maximum cliques and independent sets by colour-bounded branch and bound.

use crate::bitset::{self, Ones};
use crate::budget::{Budget, BudgetExhausted};
use crate::graph::Graph;

struct CliqueSearch<'a> {
    g: &'a Graph,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Greedy colouring of `p`; returns vertices in nondecreasing colour order with
    /// their colour numbers (1-based).
    fn colour_sort(&self, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.to_vec();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut k = 0;
        while uncoloured.iter().any(|&w| w != 0) {
            k += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = bitset::first_in(&q) {
                bitset::clear(&mut uncoloured, v);
                bitset::clear(&mut q, v);
                for (a, r) in q.iter_mut().zip(self.g.row(v)) {
                    *a &= !r;
                }
                order.push(v);
                colours.push(k);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut p: Vec<u64>, budget: &mut Budget) -> Result<(), BudgetExhausted> {
        let (order, colours) = self.colour_sort(&p);
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.best.len() {
                return Ok(());
            }
            budget.tick()?;
            let v = order[i];
            self.current.push(v);
            let next: Vec<u64> = p.iter().zip(self.g.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next, budget)?;
            }
            self.current.pop();
            bitset::clear(&mut p, v);
        }
        Ok(())
    }
}

/// Largest clique found (sorted) and whether the search completed within `budget`.
pub fn max_clique_partial(g: &Graph, budget: &mut Budget) -> (Vec<usize>, bool) {
    let mut s = CliqueSearch {
        g,
        current: Vec::new(),
        best: Vec::new(),
    };
    let all = crate::bitset::VertexSet::full(g.n()).words().to_vec();
    let done = s.expand(all, budget).is_ok();
    let mut best = s.best;
    best.sort_unstable();
    debug_assert!(g.is_clique(&best));
    (best, done)
}

/// A maximum clique (sorted), within `budget`.
pub fn max_clique_budgeted(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, BudgetExhausted> {
    match max_clique_partial(g, budget) {
        (best, true) => Ok(best),
        (_, false) => Err(BudgetExhausted { nodes: budget.limit() }),
    }
}

/// A maximum clique (sorted).
pub fn max_clique(g: &Graph) -> Vec<usize> {
    max_clique_budgeted(g, &mut Budget::unlimited()).expect("unlimited budget")
}

/// A maximum independent set (sorted).
pub fn max_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

pub fn max_independent_set_budgeted(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>, BudgetExhausted> {
    max_clique_budgeted(&g.complement(), budget)
}

/// Clique number by scanning every vertex subset; test oracle for tiny graphs.
pub fn clique_number_by_subsets(g: &Graph) -> usize {
    assert!(g.n() <= 20, "subset scan limited to 20 vertices");
    (0u32..1 << g.n())
        .filter(|&m| {
            let vs: Vec<usize> = Ones::new(&[m as u64]).collect();
            g.is_clique(&vs)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn known_values() {
        assert_eq!(max_clique(&named::petersen()).len(), 2);
        assert_eq!(max_independent_set(&named::petersen()).len(), 4);
        assert_eq!(max_clique(&named::complete(6)).len(), 6);
        assert_eq!(max_clique(&Graph::empty(0)).len(), 0);
        assert_eq!(max_clique(&Graph::empty(3)).len(), 1);
        assert_eq!(max_independent_set(&named::paley(13).unwrap()).len(), 3);
        assert_eq!(max_clique(&named::kneser(10, 4).unwrap()).len(), 2);
    }

    #[test]
    fn agrees_with_subset_scan() {
        for g in [named::cycle(7), named::spindle_nine(), named::path(4).complementary_prism(), named::exa1().induced(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11])] {
            assert_eq!(max_clique(&g).len(), clique_number_by_subsets(&g));
        }
    }
}
