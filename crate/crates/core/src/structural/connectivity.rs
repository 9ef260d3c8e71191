//! Vertex connectivity by unit-capacity max flow, with a subset-scan oracle.

use std::collections::VecDeque;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_FLOW_LIMIT: usize = 200;

/// Vertex connectivity with a minimum separating set. Complete graphs have
/// connectivity `n − 1` and no separating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connectivity {
    pub kappa: usize,
    pub cut: Option<Vec<usize>>,
}

/// Split network: vertex `v` becomes `2v` (in) → `2v+1` (out) with capacity 1; each
/// edge gives arcs out(u) → in(w) and out(w) → in(u) of unbounded capacity.
struct Network {
    n: usize,
    /// Residual capacities keyed by (from, to), stored densely.
    cap: Vec<i32>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(g: &Graph) -> Self {
        let m = 2 * g.n();
        let mut net = Network {
            n: m,
            cap: vec![0; m * m],
            adj: vec![Vec::new(); m],
        };
        for v in 0..g.n() {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for (u, w) in g.edges() {
            net.arc(2 * u + 1, 2 * w, g.n() as i32);
            net.arc(2 * w + 1, 2 * u, g.n() as i32);
        }
        net
    }

    fn arc(&mut self, a: usize, b: usize, c: i32) {
        if self.cap[a * self.n + b] == 0 && self.cap[b * self.n + a] == 0 {
            self.adj[a].push(b);
            self.adj[b].push(a);
        }
        self.cap[a * self.n + b] += c;
    }

    fn reachable(&self, s: usize) -> (Vec<bool>, Vec<usize>) {
        let mut seen = vec![false; self.n];
        let mut parent = vec![usize::MAX; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for &b in &self.adj[a] {
                if !seen[b] && self.cap[a * self.n + b] > 0 {
                    seen[b] = true;
                    parent[b] = a;
                    queue.push_back(b);
                }
            }
        }
        (seen, parent)
    }

    /// Augments from `s` to `t` until no path remains or the flow exceeds `cap_at`.
    fn max_flow(&mut self, s: usize, t: usize, cap_at: usize) -> usize {
        let mut flow = 0;
        while flow <= cap_at {
            let (seen, parent) = self.reachable(s);
            if !seen[t] {
                break;
            }
            let mut b = t;
            while b != s {
                let a = parent[b];
                self.cap[a * self.n + b] -= 1;
                self.cap[b * self.n + a] += 1;
                b = a;
            }
            flow += 1;
        }
        flow
    }
}

/// Minimum vertex separator between non-adjacent `s` and `t`.
fn local_cut(g: &Graph, s: usize, t: usize, cap_at: usize) -> (usize, Option<Vec<usize>>) {
    let mut net = Network::new(g);
    let flow = net.max_flow(2 * s + 1, 2 * t, cap_at);
    if flow > cap_at {
        return (flow, None);
    }
    let (seen, _) = net.reachable(2 * s + 1);
    let cut: Vec<usize> = (0..g.n()).filter(|&v| v != s && seen[2 * v] && !seen[2 * v + 1]).collect();
    debug_assert_eq!(cut.len(), flow);
    (flow, Some(cut))
}

/// Even's scheme: some minimum separator misses one of the first `κ + 1` vertices, so
/// only pairs starting there need a flow computation.
pub fn vertex_connectivity(g: &Graph) -> Result<Connectivity> {
    let n = g.n();
    if n > MAX_FLOW_LIMIT {
        return Err(Error::TooLarge {
            what: "vertex connectivity",
            got: n,
            limit: MAX_FLOW_LIMIT,
        });
    }
    if g.is_complete() {
        return Ok(Connectivity {
            kappa: n.saturating_sub(1),
            cut: None,
        });
    }
    if !g.is_connected() {
        return Ok(Connectivity { kappa: 0, cut: Some(Vec::new()) });
    }
    let mut best = g.min_degree();
    let mut best_cut: Option<Vec<usize>> = None;
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.adjacent(i, j) {
                continue;
            }
            let (k, cut) = local_cut(g, i, j, best);
            if k < best || (best_cut.is_none() && k == best) {
                best = k;
                best_cut = cut;
            }
        }
        i += 1;
    }
    if best_cut.is_none() {
        // The minimum degree is attained by a vertex neighbourhood.
        let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
        best_cut = Some(g.neighbors(v).collect());
    }
    let cut = best_cut.unwrap();
    debug_assert!(separates(g, &cut));
    Ok(Connectivity { kappa: best, cut: Some(cut) })
}

/// Removing `cut` leaves at least two vertices in more than one component.
pub fn separates(g: &Graph, cut: &[usize]) -> bool {
    let mut rest = VertexSet::full(g.n());
    for &c in cut {
        rest.remove(c);
    }
    rest.len() >= 2 && !g.is_connected_within(&rest)
}

/// Smallest separating set by trying subsets in order of size; test oracle.
pub fn connectivity_by_subsets(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "subset scan limited to 16 vertices");
    let mut best = n.saturating_sub(1);
    for mask in 0u32..1 << n {
        let k = mask.count_ones() as usize;
        if k < best {
            let cut: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if separates(g, &cut) {
                best = k;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn kappa(g: &Graph) -> usize {
        vertex_connectivity(g).unwrap().kappa
    }

    #[test]
    fn known_values() {
        assert_eq!(kappa(&named::petersen()), 3);
        assert_eq!(kappa(&named::cycle(6)), 2);
        assert_eq!(kappa(&named::path(4)), 1);
        assert_eq!(kappa(&named::complete(5)), 4);
        assert_eq!(kappa(&Graph::empty(3)), 0);
        assert_eq!(kappa(&named::paley(9).unwrap()), 4);
        assert_eq!(kappa(&named::paley(13).unwrap()), 6);
    }

    #[test]
    fn agrees_with_subset_scan_and_cut_separates() {
        for g in [named::spindle_nine(), named::star(5), named::path(4).complementary_prism(), named::self_complementary_nine(3).unwrap()] {
            let c = vertex_connectivity(&g).unwrap();
            assert_eq!(c.kappa, connectivity_by_subsets(&g));
            let cut = c.cut.unwrap();
            assert_eq!(cut.len(), c.kappa);
            assert!(separates(&g, &cut));
        }
    }
}
