//! Deciding whether a graph is a lexicographic product of two graphs on at least two
//! vertices each.

use crate::graph::Graph;
use crate::morphisms::{graphs_up_to_isomorphism, is_isomorphic};

/// Largest order the check accepts.
pub const LEX_CHECK_LIMIT: usize = 16;

/// `set` is a module: every vertex outside it sees all of it or none of it.
fn is_module(g: &Graph, set: &[usize], inside: &[bool]) -> bool {
    (0..g.n()).filter(|&x| !inside[x]).all(|x| {
        let hits = set.iter().filter(|&&s| g.adjacent(x, s)).count();
        hits == 0 || hits == set.len()
    })
}

struct Partitioner<'a> {
    g: &'a Graph,
    size: usize,
    assigned: Vec<bool>,
    template: Option<Graph>,
}

impl Partitioner<'_> {
    /// Extends the current blocks to a partition of the remaining vertices.
    fn run(&mut self) -> bool {
        let Some(v) = (0..self.g.n()).find(|&x| !self.assigned[x]) else {
            return true;
        };
        let rest: Vec<usize> = (v + 1..self.g.n()).filter(|&x| !self.assigned[x]).collect();
        let mut pick = Vec::with_capacity(self.size - 1);
        self.choose(v, &rest, 0, &mut pick)
    }

    fn choose(&mut self, v: usize, rest: &[usize], from: usize, pick: &mut Vec<usize>) -> bool {
        if pick.len() == self.size - 1 {
            let mut block = vec![v];
            block.extend(pick.iter().copied());
            let mut inside = vec![false; self.g.n()];
            block.iter().for_each(|&x| inside[x] = true);
            if !is_module(self.g, &block, &inside) {
                return false;
            }
            let induced = self.g.induced(&block);
            let first = self.template.is_none();
            if let Some(t) = &self.template {
                if !is_isomorphic(t, &induced) {
                    return false;
                }
            } else {
                self.template = Some(induced);
            }
            block.iter().for_each(|&x| self.assigned[x] = true);
            let ok = self.run();
            block.iter().for_each(|&x| self.assigned[x] = false);
            if first && !ok {
                self.template = None;
            }
            return ok;
        }
        for i in from..rest.len() {
            if rest.len() - i < self.size - 1 - pick.len() {
                break;
            }
            pick.push(rest[i]);
            if self.choose(v, rest, i + 1, pick) {
                return true;
            }
            pick.pop();
        }
        false
    }
}

/// Some `Γ1[Γ2]` with `|Γ1| = n / inner`, `|Γ2| = inner` is isomorphic to `g`: the vertex
/// set splits into modules of size `inner` inducing pairwise isomorphic graphs.
pub fn is_lex_product_with_inner_order(g: &Graph, inner: usize) -> bool {
    let n = g.n();
    if inner < 2 || inner >= n || !n.is_multiple_of(inner) {
        return false;
    }
    let mut p = Partitioner {
        g,
        size: inner,
        assigned: vec![false; n],
        template: None,
    };
    p.run()
}

/// `Some(true)` when `g` is not a lexicographic product of two graphs with at least two
/// vertices each; `None` above [`LEX_CHECK_LIMIT`] vertices.
pub fn not_lex_product_check(g: &Graph) -> Option<bool> {
    let n = g.n();
    if n > LEX_CHECK_LIMIT {
        return None;
    }
    Some(!(2..n).any(|inner| is_lex_product_with_inner_order(g, inner)))
}

/// Same question answered by trying every pair of factor graphs up to isomorphism;
/// factor orders are limited to 6.
pub fn not_lex_product_by_enumeration(g: &Graph) -> bool {
    let n = g.n();
    for n2 in 2..n {
        if !n.is_multiple_of(n2) || n / n2 < 2 {
            continue;
        }
        let n1 = n / n2;
        assert!(n1 <= 6 && n2 <= 6, "factor orders above 6 are not enumerated");
        for a in graphs_up_to_isomorphism(n1) {
            for b in graphs_up_to_isomorphism(n2) {
                if is_isomorphic(&a.lexicographic_product(&b), g) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn controls() {
        assert_eq!(not_lex_product_check(&named::complete(4)), Some(false));
        assert_eq!(not_lex_product_check(&named::cycle(4)), Some(false));
        assert_eq!(not_lex_product_check(&named::cycle(5).lexicographic_product(&named::complete(2))), Some(false));
        assert_eq!(not_lex_product_check(&named::path(4)), Some(true));
        assert_eq!(not_lex_product_check(&Graph::empty(17)), None);
    }

    #[test]
    fn prisms_of_small_graphs() {
        for g in [named::path(4), named::cycle(4), named::star(4), named::complete(3)] {
            let p = g.complementary_prism();
            assert_eq!(not_lex_product_check(&p), Some(true));
            assert!(not_lex_product_by_enumeration(&p));
        }
    }
}
