//! Hamiltonian paths and cycles by pruned backtracking, and the explicit prism
//! constructions built from Hamiltonian cycles and paths of a graph and its complement.

use serde::{Deserialize, Serialize};

use crate::bitset::{self, VertexSet};
use crate::budget::{Budget, BudgetExhausted, SearchResult};
use crate::graph::{Graph, PrismVertex, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamMode {
    Path,
    Cycle,
    Connected,
    PathBetween(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamWitness {
    Path(Vec<usize>),
    /// Vertex order; the last vertex is adjacent to the first.
    Cycle(Vec<usize>),
    /// One path per unordered pair `(u, v)` with `u < v`.
    Connected(Vec<(usize, usize, Vec<usize>)>),
}

/// `seq` visits every vertex once and consecutive vertices are adjacent.
pub fn is_hamiltonian_path(g: &Graph, seq: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    seq.len() == g.n()
        && seq.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
        && seq.windows(2).all(|w| g.adjacent(w[0], w[1]))
}

pub fn is_hamiltonian_cycle(g: &Graph, seq: &[usize]) -> bool {
    is_hamiltonian_path(g, seq) && (g.n() <= 1 || (g.n() >= 3 && g.adjacent(seq[0], seq[g.n() - 1])))
}

struct PathSearch<'a> {
    g: &'a Graph,
    end: Option<usize>,
    path: Vec<usize>,
    free: Vec<u64>,
}

impl PathSearch<'_> {
    /// The free vertices plus the current end can still be covered by one path.
    fn feasible(&self, cur: usize) -> bool {
        let mut avail = self.free.clone();
        bitset::set(&mut avail, cur);
        let set = VertexSet::from_iter(self.g.n(), bitset::Ones::new(&avail));
        if !self.g.is_connected_within(&set) {
            return false;
        }
        let mut dead_ends = 0;
        for w in bitset::Ones::new(&self.free) {
            let d = bitset::count_and(self.g.row(w), &avail);
            if Some(w) == self.end {
                if d == 0 {
                    return false;
                }
            } else if d == 0 {
                return false;
            } else if d == 1 {
                dead_ends += 1;
            }
        }
        match self.end {
            Some(_) => dead_ends == 0,
            None => dead_ends <= 1,
        }
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool, BudgetExhausted> {
        let cur = *self.path.last().unwrap();
        if self.free.iter().all(|&w| w == 0) {
            return Ok(self.end.is_none_or(|t| t == cur));
        }
        if Some(cur) == self.end || !self.feasible(cur) {
            return Ok(false);
        }
        let mut next: Vec<usize> = self.g.neighbors(cur).filter(|&w| bitset::test(&self.free, w)).collect();
        // Fewest onward options first; the fixed end goes last.
        next.sort_by_key(|&w| (Some(w) == self.end, bitset::count_and(self.g.row(w), &self.free), w));
        for w in next {
            budget.tick()?;
            bitset::clear(&mut self.free, w);
            self.path.push(w);
            if self.run(budget)? {
                return Ok(true);
            }
            self.path.pop();
            bitset::set(&mut self.free, w);
        }
        Ok(false)
    }
}

/// Hamiltonian path starting at `start` and, if given, ending at `end`.
pub fn hamiltonian_path_from(g: &Graph, start: usize, end: Option<usize>, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    let n = g.n();
    if n == 1 {
        return if end.is_none_or(|t| t == start) {
            SearchResult::Found(vec![start])
        } else {
            SearchResult::NotFound
        };
    }
    if end == Some(start) {
        return SearchResult::NotFound;
    }
    let mut free = VertexSet::full(n).words().to_vec();
    bitset::clear(&mut free, start);
    let mut s = PathSearch {
        g,
        end,
        path: vec![start],
        free,
    };
    let r = s.run(budget).map(|ok| ok.then(|| s.path.clone()));
    let out = SearchResult::from_search(r);
    if let SearchResult::Found(p) = &out {
        assert!(is_hamiltonian_path(g, p), "Hamiltonian search returned an invalid path");
    }
    out
}

pub fn hamiltonian_path_between(g: &Graph, u: usize, v: usize, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    hamiltonian_path_from(g, u, Some(v), budget)
}

/// Any Hamiltonian path, trying start vertices in order.
pub fn hamiltonian_path(g: &Graph, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    if g.n() == 0 {
        return SearchResult::Found(Vec::new());
    }
    if !g.is_connected() {
        return SearchResult::NotFound;
    }
    let mut starts: Vec<usize> = (0..g.n()).collect();
    starts.sort_by_key(|&v| (g.degree(v), v));
    for s in starts {
        match hamiltonian_path_from(g, s, None, budget) {
            SearchResult::NotFound => {}
            other => return other,
        }
    }
    SearchResult::NotFound
}

/// Hamiltonian cycle through vertex 0, closed by each neighbour of 0 in turn.
pub fn hamiltonian_cycle(g: &Graph, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    let n = g.n();
    if n <= 1 {
        return SearchResult::Found((0..n).collect());
    }
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return SearchResult::NotFound;
    }
    for t in g.neighbors(0).collect::<Vec<_>>() {
        match hamiltonian_path_from(g, 0, Some(t), budget) {
            SearchResult::NotFound => {}
            other => return other,
        }
    }
    SearchResult::NotFound
}

/// Hamiltonian paths between every pair of distinct vertices. `NotFound` as soon as
/// one pair is shown to have none.
pub fn hamiltonian_connected(g: &Graph, budget: &mut Budget) -> SearchResult<Vec<(usize, usize, Vec<usize>)>> {
    let n = g.n();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            match hamiltonian_path_between(g, u, v, budget) {
                SearchResult::Found(p) => out.push((u, v, p)),
                SearchResult::NotFound => return SearchResult::NotFound,
                SearchResult::Unknown(b) => return SearchResult::Unknown(b),
            }
        }
    }
    SearchResult::Found(out)
}

pub fn hamiltonian(g: &Graph, mode: HamMode, budget: &mut Budget) -> SearchResult<HamWitness> {
    match mode {
        HamMode::Path => hamiltonian_path(g, budget).map(HamWitness::Path),
        HamMode::Cycle => hamiltonian_cycle(g, budget).map(HamWitness::Cycle),
        HamMode::Connected => hamiltonian_connected(g, budget).map(HamWitness::Connected),
        HamMode::PathBetween(u, v) => {
            if u >= g.n() || v >= g.n() {
                return SearchResult::NotFound;
            }
            hamiltonian_path_between(g, u, v, budget).map(HamWitness::Path)
        }
    }
}

/// Re-checks a witness edge by edge.
pub fn witness_holds(g: &Graph, w: &HamWitness) -> bool {
    match w {
        HamWitness::Path(p) => is_hamiltonian_path(g, p),
        HamWitness::Cycle(c) => is_hamiltonian_cycle(g, c),
        HamWitness::Connected(all) => all.iter().all(|(u, v, p)| {
            is_hamiltonian_path(g, p) && p.first() == Some(u) && p.last() == Some(v)
        }),
    }
}

/// Hamiltonian path of the prism from a Hamiltonian cycle `v` of `g` and a Hamiltonian
/// cycle `w` of its complement: rotate `w` to start at the last vertex of `v`, then walk
/// `v` on side one, cross, and walk `w` on side two.
pub fn prism_path_from_cycles(g: &Graph, v: &[usize], w: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let last = *v.last()?;
    let shift = w.iter().position(|&x| x == last)?;
    let mut path: Vec<usize> = v.iter().map(|&x| PrismVertex::new(x, Side::One).index(n)).collect();
    path.extend(w[shift..].iter().chain(&w[..shift]).map(|&x| PrismVertex::new(x, Side::Two).index(n)));
    Some(path)
}

/// Hamiltonian path of the prism from the cycle construction, with cycles found by
/// search. `K1` gives the single prism edge.
pub fn prism_cycle_construction(g: &Graph, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    if g.n() == 1 {
        return SearchResult::Found(vec![0, 1]);
    }
    let v = match hamiltonian_cycle(g, budget) {
        SearchResult::Found(c) => c,
        other => return other,
    };
    let w = match hamiltonian_cycle(&g.complement(), budget) {
        SearchResult::Found(c) => c,
        other => return other,
    };
    let path = prism_path_from_cycles(g, &v, &w).expect("cycles cover every vertex");
    assert!(is_hamiltonian_path(&g.complementary_prism(), &path), "prism path construction failed");
    SearchResult::Found(path)
}

/// Hamiltonian path of the prism between prism vertices `a` and `b`, assembled from
/// Hamiltonian paths of `g` and its complement:
/// - same side: a path `u = u1, …, un = v` on that side, with a detour through the
///   other side between `u1` and `u2`;
/// - opposite sides: a path from `u` to some third vertex `z` on `u`'s side, the
///   matching edge at `z`, then a path from `z` to `v` on the other side.
pub fn prism_pair_construction(g: &Graph, a: usize, b: usize, budget: &mut Budget) -> SearchResult<Vec<usize>> {
    let n = g.n();
    let gc = g.complement();
    let pa = PrismVertex::from_index(a, n);
    let pb = PrismVertex::from_index(b, n);
    let on = |side: Side| if side == Side::One { g } else { &gc };
    let lift = |path: &[usize], side: Side| path.iter().map(|&x| PrismVertex::new(x, side).index(n)).collect::<Vec<_>>();
    let path = if pa.side == pb.side {
        if pa.base == pb.base || n < 2 {
            return SearchResult::NotFound;
        }
        let near = pa.side;
        let main = match hamiltonian_path_between(on(near), pa.base, pb.base, budget) {
            SearchResult::Found(p) => p,
            other => return other,
        };
        let detour = match hamiltonian_path_between(on(near.other()), main[0], main[1], budget) {
            SearchResult::Found(p) => p,
            other => return other,
        };
        let mut out = lift(&main[..1], near);
        out.extend(lift(&detour, near.other()));
        out.extend(lift(&main[1..], near));
        out
    } else {
        if n < 3 {
            return SearchResult::NotFound;
        }
        let z = (0..n).find(|&z| z != pa.base && z != pb.base).unwrap();
        let first = match hamiltonian_path_between(on(pa.side), pa.base, z, budget) {
            SearchResult::Found(p) => p,
            other => return other,
        };
        let second = match hamiltonian_path_between(on(pb.side), z, pb.base, budget) {
            SearchResult::Found(p) => p,
            other => return other,
        };
        let mut out = lift(&first, pa.side);
        out.extend(lift(&second, pb.side));
        out
    };
    assert!(is_hamiltonian_path(&g.complementary_prism(), &path), "prism pair construction failed");
    SearchResult::Found(path)
}
