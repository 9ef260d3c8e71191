//! Cheeger number `min e(S, T) / |S|` over partitions with `1 ≤ |S| ≤ |T|`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, PrismVertex, Side};

pub const BRUTE_FORCE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheegerMethod {
    ClosedForm,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheegerReport {
    pub value: Ratio<u64>,
    /// Sorted.
    pub s: Vec<usize>,
    /// Sorted.
    pub t: Vec<usize>,
    pub method: CheegerMethod,
}

/// Number of edges between `s` and the rest.
pub fn edge_boundary(g: &Graph, s: &[usize]) -> usize {
    let mut inside = vec![false; g.n()];
    s.iter().for_each(|&v| inside[v] = true);
    s.iter().map(|&v| g.neighbors(v).filter(|&w| !inside[w]).count()).sum()
}

impl CheegerReport {
    /// The witness is a valid partition and realises `value`.
    pub fn witness_holds(&self, g: &Graph) -> bool {
        let mut all: Vec<usize> = self.s.iter().chain(&self.t).copied().collect();
        all.sort_unstable();
        all == (0..g.n()).collect::<Vec<_>>()
            && !self.s.is_empty()
            && self.s.len() <= self.t.len()
            && Ratio::new(edge_boundary(g, &self.s) as u64, self.s.len() as u64) == self.value
    }
}

fn report(g: &Graph, s: Vec<usize>, method: CheegerMethod) -> CheegerReport {
    let mut s = s;
    s.sort_unstable();
    let t: Vec<usize> = (0..g.n()).filter(|v| s.binary_search(v).is_err()).collect();
    CheegerReport {
        value: Ratio::new(edge_boundary(g, &s) as u64, s.len() as u64),
        s,
        t,
        method,
    }
}

/// Edge `{u, v}` with `δ(u) = 1` and `δ(v) = n − 1`, as `(u, v)`.
fn pendant_to_dominating(g: &Graph) -> Option<(usize, usize)> {
    let n = g.n();
    g.edges().find_map(|(a, b)| {
        if g.degree(a) == 1 && g.degree(b) == n - 1 {
            Some((a, b))
        } else if g.degree(b) == 1 && g.degree(a) == n - 1 {
            Some((b, a))
        } else {
            None
        }
    })
}

/// Cheeger number of the complementary prism of `g`: `(n − 1)/n` when `g` or its
/// complement has an edge joining a degree-1 vertex to a dominating vertex, else 1.
/// The witness is indexed in the prism. Panics on the empty graph.
pub fn cheeger_closed_form(g: &Graph) -> CheegerReport {
    let n = g.n();
    assert!(n > 0, "the prism of the empty graph has no Cheeger number");
    let prism = g.complementary_prism();
    let idx = |x: usize, side: Side| PrismVertex::new(x, side).index(n);
    let sided = |(u, v): (usize, usize), near: Side| {
        let mut s = vec![idx(u, near)];
        s.extend((0..n).filter(|&w| w != v).map(|w| idx(w, near.other())));
        s
    };
    let s = if let Some(e) = pendant_to_dominating(g) {
        sided(e, Side::One)
    } else if let Some(e) = pendant_to_dominating(&g.complement()) {
        sided(e, Side::Two)
    } else {
        (0..n).collect()
    };
    let r = report(&prism, s, CheegerMethod::ClosedForm);
    debug_assert!(r.witness_holds(&prism));
    r
}

/// Exact minimum over all vertex subsets with `|S| ≤ n/2`; the witness is the
/// numerically smallest subset mask attaining it.
pub fn cheeger_brute_force(g: &Graph) -> Result<CheegerReport> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            what: "Cheeger brute force",
            got: n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if n < 2 {
        return Err(Error::InvalidParameter("Cheeger number needs at least two vertices".into()));
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row(v)[0] as u32).collect();
    let mut best: Option<(Ratio<u64>, u32)> = None;
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        if 2 * size > n {
            continue;
        }
        let mut boundary = 0u64;
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            boundary += (rows[v] & !mask).count_ones() as u64;
        }
        let value = Ratio::new(boundary, size as u64);
        if best.is_none_or(|(b, _)| value < b) {
            best = Some((value, mask));
        }
    }
    let (_, mask) = best.expect("some subset has size at most n/2");
    Ok(report(g, (0..n).filter(|&v| mask >> v & 1 == 1).collect(), CheegerMethod::BruteForce))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn closed_form_values() {
        assert_eq!(cheeger_closed_form(&named::cycle(5)).value, Ratio::from_integer(1));
        assert_eq!(cheeger_closed_form(&named::star(4)).value, Ratio::new(3, 4));
        assert_eq!(cheeger_closed_form(&named::complete(3)).value, Ratio::from_integer(1));
        assert_eq!(cheeger_closed_form(&named::complete(1)).value, Ratio::from_integer(1));
        assert_eq!(cheeger_closed_form(&named::complete(2)).value, Ratio::new(1, 2));
        // The complement of a star has the pendant edge only after complementing back.
        assert_eq!(cheeger_closed_form(&named::star(4).complement()).value, Ratio::new(3, 4));
    }

    #[test]
    fn brute_force_values() {
        let p = cheeger_brute_force(&named::petersen()).unwrap();
        assert_eq!(p.value, Ratio::from_integer(1));
        assert!(p.witness_holds(&named::petersen()));
        assert_eq!(cheeger_brute_force(&named::complete(2)).unwrap().value, Ratio::from_integer(1));
        let sp = named::star(4).complementary_prism();
        assert_eq!(cheeger_brute_force(&sp).unwrap().value, Ratio::new(3, 4));
        assert!(cheeger_brute_force(&Graph::empty(21)).is_err());
    }
}
