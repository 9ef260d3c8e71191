//! Isomorphism search by colour refinement and backtracking.

use std::collections::BTreeMap;

use super::Permutation;
use crate::bitset::{self, Ones};
use crate::budget::{Budget, BudgetExhausted};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Limit {
    All,
    AtMost(usize),
}

impl Limit {
    fn reached(self, count: usize) -> bool {
        match self {
            Limit::All => false,
            Limit::AtMost(k) => count >= k,
        }
    }
}

/// Stable colour refinement run on both graphs at once so colours are comparable.
/// Returns `None` when the colour histograms differ.
fn joint_refinement(g1: &Graph, g2: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = g1.n();
    let mut c1: Vec<u32> = (0..n).map(|v| g1.degree(v) as u32).collect();
    let mut c2: Vec<u32> = (0..n).map(|v| g2.degree(v) as u32).collect();
    let mut classes = 0usize;
    loop {
        let sig = |g: &Graph, c: &[u32], v: usize| {
            let mut nb: Vec<u32> = g.neighbors(v).map(|w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let s1: Vec<_> = (0..n).map(|v| sig(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..n).map(|v| sig(g2, &c2, v)).collect();
        let mut ids = BTreeMap::new();
        for s in s1.iter().chain(&s2) {
            ids.entry(s.clone()).or_insert(0u32);
        }
        for (i, v) in ids.values_mut().enumerate() {
            *v = i as u32;
        }
        c1 = s1.iter().map(|s| ids[s]).collect();
        c2 = s2.iter().map(|s| ids[s]).collect();
        let mut h1 = vec![0usize; ids.len()];
        let mut h2 = vec![0usize; ids.len()];
        for &c in &c1 {
            h1[c as usize] += 1;
        }
        for &c in &c2 {
            h2[c as usize] += 1;
        }
        if h1 != h2 {
            return None;
        }
        if ids.len() == classes {
            return Some((c1, c2));
        }
        classes = ids.len();
    }
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    /// Target bitset per colour class.
    class_sets: Vec<Vec<u64>>,
    colour1: Vec<u32>,
    order: Vec<usize>,
    /// Forced images for the first positions of `order`.
    forced: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<u64>,
    limit: Limit,
    found: Vec<Permutation>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, budget: &mut Budget) -> Result<(), BudgetExhausted> {
        let n = self.g1.n();
        if depth == n {
            let p = Permutation::from_vec_unchecked(self.image.clone());
            debug_assert!(p.is_isomorphism(self.g1, self.g2));
            self.found.push(p);
            return Ok(());
        }
        let x = self.order[depth];
        let mut cand = self.class_sets[self.colour1[x] as usize].clone();
        for (c, u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        for &y in &self.order[..depth] {
            let row = self.g2.row(self.image[y]);
            if self.g1.adjacent(x, y) {
                for (c, r) in cand.iter_mut().zip(row) {
                    *c &= r;
                }
            } else {
                for (c, r) in cand.iter_mut().zip(row) {
                    *c &= !r;
                }
            }
        }
        if let Some(t) = self.forced[depth] {
            let keep = bitset::test(&cand, t);
            cand.iter_mut().for_each(|w| *w = 0);
            if keep {
                bitset::set(&mut cand, t);
            }
        }
        for t in Ones::new(&cand).collect::<Vec<_>>() {
            budget.tick()?;
            self.image[x] = t;
            bitset::set(&mut self.used, t);
            self.run(depth + 1, budget)?;
            bitset::clear(&mut self.used, t);
            if self.limit.reached(self.found.len()) {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Vertex order for the search: forced vertices first, then greedily the vertex with
/// the most already-ordered neighbours, breaking ties by colour-class size and index.
fn search_order(g: &Graph, colour: &[u32], class_size: &[usize], forced: &[usize]) -> Vec<usize> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let place = |v: usize, order: &mut Vec<usize>, placed: &mut Vec<bool>, links: &mut Vec<usize>| {
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            links[w] += 1;
        }
    };
    for &v in forced {
        if !placed[v] {
            place(v, &mut order, &mut placed, &mut links);
        }
    }
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[colour[v] as usize], v))
            .unwrap();
        place(v, &mut order, &mut placed, &mut links);
    }
    order
}

/// Isomorphisms `g1 → g2` extending `fixed`, within `budget`. With [`Limit::All`] the
/// list is sorted by image array.
pub fn find_isomorphisms_budgeted(
    g1: &Graph,
    g2: &Graph,
    limit: Limit,
    fixed: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<Vec<Permutation>, BudgetExhausted> {
    let n = g1.n();
    if g2.n() != n || g1.edge_count() != g2.edge_count() {
        return Ok(Vec::new());
    }
    if limit == Limit::AtMost(0) {
        return Ok(Vec::new());
    }
    let Some((c1, c2)) = joint_refinement(g1, g2) else {
        return Ok(Vec::new());
    };
    let ncol = c1.iter().chain(&c2).map(|&c| c as usize + 1).max().unwrap_or(0);
    let mut class_sets = vec![vec![0u64; g2.stride()]; ncol];
    let mut class_size = vec![0usize; ncol];
    for v in 0..n {
        bitset::set(&mut class_sets[c2[v] as usize], v);
        class_size[c1[v] as usize] += 1;
    }
    let fixed_sources: Vec<usize> = fixed.iter().map(|&(a, _)| a).collect();
    let order = search_order(g1, &c1, &class_size, &fixed_sources);
    let mut forced = vec![None; n];
    for (pos, &v) in order.iter().enumerate() {
        if let Some(&(_, t)) = fixed.iter().find(|&&(a, _)| a == v) {
            if fixed.iter().any(|&(a, s)| a == v && s != t) {
                return Ok(Vec::new());
            }
            forced[pos] = Some(t);
        }
    }
    let mut s = Search {
        g1,
        g2,
        class_sets,
        colour1: c1,
        order,
        forced,
        image: vec![0; n],
        used: vec![0; g2.stride()],
        limit,
        found: Vec::new(),
    };
    s.run(0, budget)?;
    let mut found = s.found;
    if limit == Limit::All {
        found.sort();
    }
    Ok(found)
}

/// Isomorphisms `g1 → g2` without a budget.
pub fn find_isomorphisms(g1: &Graph, g2: &Graph, limit: Limit) -> Vec<Permutation> {
    find_isomorphisms_budgeted(g1, g2, limit, &[], &mut Budget::unlimited()).expect("unlimited budget")
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    !find_isomorphisms(g1, g2, Limit::AtMost(1)).is_empty()
}

/// All automorphisms, sorted.
pub fn automorphisms(g: &Graph) -> Vec<Permutation> {
    find_isomorphisms(g, g, Limit::All)
}

/// Isomorphisms from `g` to its complement.
pub fn find_antimorphisms(g: &Graph, limit: Limit) -> Vec<Permutation> {
    find_isomorphisms(g, &g.complement(), limit)
}

pub fn is_self_complementary(g: &Graph) -> bool {
    !find_antimorphisms(g, Limit::AtMost(1)).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn brute_automorphism_count(g: &Graph) -> usize {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            if Permutation::from_vec_unchecked(perm.clone()).is_automorphism_of(g) {
                count += 1;
            }
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
                return count;
            };
            let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
            perm.swap(i, j);
            perm[i + 1..].reverse();
        }
    }

    #[test]
    fn classic_group_orders() {
        assert_eq!(automorphisms(&named::petersen()).len(), 120);
        assert_eq!(automorphisms(&named::cycle(5)).len(), 10);
        assert_eq!(automorphisms(&named::path(4)).len(), 2);
        assert_eq!(automorphisms(&named::complete(5)).len(), 120);
        assert_eq!(automorphisms(&Graph::empty(0)).len(), 1);
    }

    #[test]
    fn matches_permutation_scan() {
        for g in [named::path(5), named::star(5), named::cycle(6), named::triangle_pentagon().induced(&[0, 1, 2, 3, 4, 5])] {
            assert_eq!(automorphisms(&g).len(), brute_automorphism_count(&g));
        }
    }

    #[test]
    fn antimorphisms() {
        assert_eq!(find_antimorphisms(&named::path(4), Limit::All).len(), 2);
        assert!(find_antimorphisms(&named::complete(3), Limit::All).is_empty());
        let e = named::exa1();
        let s = Permutation::new(named::exa1_antimorphism()).unwrap();
        assert!(s.is_antimorphism_of(&e));
        assert_eq!(find_antimorphisms(&e, Limit::All).len(), automorphisms(&e).len());
    }

    #[test]
    fn petersen_is_prism_of_pentagon() {
        assert!(is_isomorphic(&named::cycle(5).complementary_prism(), &named::petersen()));
        assert!(!is_isomorphic(&named::cycle(6), &named::complete(3).disjoint_union(&named::complete(3))));
    }

    #[test]
    fn fixed_pairs_and_budget() {
        let c5 = named::cycle(5);
        let maps = find_isomorphisms_budgeted(&c5, &c5, Limit::All, &[(0, 2)], &mut Budget::unlimited()).unwrap();
        assert_eq!(maps.len(), 2);
        assert!(maps.iter().all(|p| p.apply(0) == 2));
        let r = find_isomorphisms_budgeted(&named::petersen(), &named::petersen(), Limit::All, &[], &mut Budget::new(5));
        assert!(r.is_err());
    }
}
