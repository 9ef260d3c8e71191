//! Canonical forms for small graphs by pruned permutation search.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Lexicographically least upper-triangle string (column-major) over all relabellings
/// that list vertices by nondecreasing degree. Two graphs are isomorphic iff their
/// canonical forms agree. Intended for graphs of at most ~10 vertices.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut degs: Vec<usize> = g.degrees();
    degs.sort_unstable();
    let mut best: Option<Vec<bool>> = None;
    let mut cur = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut placed = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(g, &degs, &mut placed, &mut used, &mut cur, &mut best);
    best.unwrap_or_default()
}

fn extend(
    g: &Graph,
    degs: &[usize],
    placed: &mut Vec<usize>,
    used: &mut [bool],
    cur: &mut Vec<bool>,
    best: &mut Option<Vec<bool>>,
) {
    let i = placed.len();
    if i == g.n() {
        if best.as_ref().is_none_or(|b| *cur < *b) {
            *best = Some(cur.clone());
        }
        return;
    }
    for v in 0..g.n() {
        if used[v] || g.degree(v) != degs[i] {
            continue;
        }
        let mark = cur.len();
        for &u in placed.iter() {
            cur.push(g.adjacent(u, v));
        }
        let worse = best.as_ref().is_some_and(|b| cur[..] > b[..cur.len()]);
        if !worse {
            used[v] = true;
            placed.push(v);
            extend(g, degs, placed, used, cur, best);
            placed.pop();
            used[v] = false;
        }
        cur.truncate(mark);
    }
}

/// One representative per isomorphism class of graphs on `k ≤ 6` vertices: the labelled
/// graph with the smallest edge mask in its class.
pub fn graphs_up_to_isomorphism(k: usize) -> Vec<Graph> {
    assert!(k <= 6, "enumeration only supported up to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut classes: BTreeMap<Vec<bool>, Graph> = BTreeMap::new();
    for mask in 0u32..1 << pairs.len() {
        let g = Graph::from_edges(k, pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e))
            .expect("valid pairs");
        classes.entry(canonical_form(&g)).or_insert(g);
    }
    let mut reps: Vec<Graph> = classes.into_values().collect();
    reps.sort_by_key(|g| (g.edge_count(), crate::graph::write_graph6(g)));
    reps
}
