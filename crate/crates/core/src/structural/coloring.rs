//! Chromatic number by DSATUR branch and bound with a clique lower bound.

use crate::budget::{Budget, BudgetExhausted};
use crate::graph::Graph;

use super::clique::max_clique_budgeted;

/// Greedy DSATUR colouring (colours `0..k`).
pub fn dsatur_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 1]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..=n).find(|&c| !seen[v][c]).unwrap();
        colour[v] = c;
        for w in g.neighbors(v) {
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    colour
}

pub fn is_proper_coloring(g: &Graph, colour: &[usize]) -> bool {
    colour.len() == g.n() && g.edges().all(|(u, v)| colour[u] != colour[v])
}

pub fn colours_used(colour: &[usize]) -> usize {
    colour.iter().map(|&c| c + 1).max().unwrap_or(0)
}

struct Dsatur<'a> {
    g: &'a Graph,
    colour: Vec<usize>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`.
    counts: Vec<Vec<u32>>,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.counts[v].iter().filter(|&&c| c > 0).count()
    }

    fn search(&mut self, coloured: usize, used: usize, budget: &mut Budget) -> Result<(), BudgetExhausted> {
        let n = self.g.n();
        if used >= self.best_k || self.best_k == self.lower {
            return Ok(());
        }
        if coloured == n {
            self.best = self.colour.clone();
            self.best_k = used;
            return Ok(());
        }
        let v = (0..n)
            .filter(|&v| self.colour[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if self.counts[v][c] > 0 {
                continue;
            }
            budget.tick()?;
            self.colour[v] = c;
            for w in self.g.neighbors(v) {
                self.counts[w][c] += 1;
            }
            self.search(coloured + 1, used.max(c + 1), budget)?;
            for w in self.g.neighbors(v) {
                self.counts[w][c] -= 1;
            }
            self.colour[v] = usize::MAX;
            if self.best_k == self.lower {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Chromatic number with an optimal colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub lower: usize,
    pub upper: usize,
    /// Proper colouring with `upper` colours.
    pub coloring: Vec<usize>,
    pub exact: bool,
}

/// Exact when the search finishes; otherwise the clique bound and the best colouring.
pub fn chromatic(g: &Graph, budget: &mut Budget) -> ChromaticResult {
    let n = g.n();
    let greedy = dsatur_coloring(g);
    let upper = colours_used(&greedy);
    let lower = match max_clique_budgeted(g, budget) {
        Ok(c) => c.len(),
        Err(_) => usize::from(n > 0) + usize::from(g.edge_count() > 0),
    };
    if lower == upper {
        return ChromaticResult {
            lower,
            upper,
            coloring: greedy,
            exact: true,
        };
    }
    let mut s = Dsatur {
        g,
        colour: vec![usize::MAX; n],
        counts: vec![vec![0; upper + 1]; n],
        best: greedy,
        best_k: upper,
        lower,
    };
    let finished = s.search(0, 0, budget).is_ok();
    debug_assert!(is_proper_coloring(g, &s.best));
    ChromaticResult {
        lower: if finished { s.best_k } else { lower },
        upper: s.best_k,
        coloring: s.best,
        exact: finished,
    }
}

/// Chromatic number by trying every assignment with `k` colours; test oracle.
pub fn chromatic_by_enumeration(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 8, "enumeration limited to 8 vertices");
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let colour: Vec<usize> = (0..n)
                    .map(|_| {
                        let c = (code % k as u64) as usize;
                        code /= k as u64;
                        c
                    })
                    .collect();
                is_proper_coloring(g, &colour)
            })
        })
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn chi(g: &Graph) -> usize {
        let r = chromatic(g, &mut Budget::unlimited());
        assert!(r.exact);
        assert!(is_proper_coloring(g, &r.coloring));
        assert_eq!(colours_used(&r.coloring), r.upper);
        r.upper
    }

    #[test]
    fn known_values() {
        assert_eq!(chi(&named::petersen()), 3);
        assert_eq!(chi(&named::cycle(5)), 3);
        assert_eq!(chi(&named::cycle(6)), 2);
        assert_eq!(chi(&named::complete(5)), 5);
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&named::paley(9).unwrap()), 3);
    }

    #[test]
    fn agrees_with_enumeration() {
        for g in [named::cycle(7), named::path(4).complementary_prism(), named::spindle_nine().induced(&[0, 1, 2, 3, 4, 5, 6])] {
            assert_eq!(chi(&g), chromatic_by_enumeration(&g));
        }
    }
}
