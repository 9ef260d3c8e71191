//! Strong regularity by common-neighbour counts and 1-walk-regularity by walk counts.

use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::graph::Graph;
use crate::morphisms::is_self_complementary;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn feasible(&self) -> bool {
        self.lambda < self.k && self.k < self.n && self.k * (self.k - self.lambda - 1) == (self.n - self.k - 1) * self.mu
    }

    /// Parameters `(n, (n − 1)/2, (n − 5)/4, (n − 1)/4)`.
    pub fn has_self_complementary_form(&self) -> bool {
        let n = self.n;
        n % 4 == 1 && n >= 5 && 2 * self.k == n - 1 && 4 * self.lambda == n - 5 && 4 * self.mu == n - 1
    }
}

/// Parameters by counting common neighbours; `None` unless the graph is regular with
/// constant counts over edges and over non-adjacent pairs, and has both kinds of pair.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    let k = g.regular_degree()?;
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = bitset::count_and(g.row(u), g.row(v));
            let slot = if g.adjacent(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams {
        n,
        k,
        lambda: lambda?,
        mu: mu?,
    })
}

/// Two positions of `A^power` whose entries should agree but do not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkWitness {
    pub power: usize,
    /// Matrix positions `(row, column)` compared.
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub entries: (u128, u128),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkRegularityReport {
    /// Highest power examined.
    pub checked_up_to: usize,
    /// Powers beyond `checked_up_to` were skipped because entries overflowed.
    pub overflowed: bool,
    /// Closed-walk counts `A^i[v][v]` are not vertex-independent at this power.
    pub diagonal_witness: Option<WalkWitness>,
    /// Walk counts along edges `A^i[u][v]` are not edge-independent at this power.
    pub edge_witness: Option<WalkWitness>,
    pub one_walk_regular: bool,
}

/// Checks `A^i ∘ I = a_i I` and `A^i ∘ A = b_i A` for `1 ≤ i ≤ max_power`. Powers up to
/// `n − 1` decide the property, since higher powers are combinations of lower ones.
pub fn walk_regularity(g: &Graph, max_power: usize) -> WalkRegularityReport {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut power: Vec<u128> = (0..n * n).map(|k| u128::from(k / n == k % n)).collect();
    let mut report = WalkRegularityReport {
        checked_up_to: 0,
        overflowed: false,
        diagonal_witness: None,
        edge_witness: None,
        one_walk_regular: false,
    };
    for i in 1..=max_power {
        let mut next = vec![0u128; n * n];
        for u in 0..n {
            for v in 0..n {
                let mut s: u128 = 0;
                for w in g.neighbors(v) {
                    match s.checked_add(power[u * n + w]) {
                        Some(x) => s = x,
                        None => {
                            report.overflowed = true;
                            report.one_walk_regular = report.diagonal_witness.is_none() && report.edge_witness.is_none();
                            return report;
                        }
                    }
                }
                next[u * n + v] = s;
            }
        }
        power = next;
        report.checked_up_to = i;
        if report.diagonal_witness.is_none() {
            if let Some(v) = (1..n).find(|&v| power[v * n + v] != power[0]) {
                report.diagonal_witness = Some(WalkWitness {
                    power: i,
                    first: (0, 0),
                    second: (v, v),
                    entries: (power[0], power[v * n + v]),
                });
            }
        }
        if report.edge_witness.is_none() {
            if let Some(&(a, b)) = edges.first() {
                let base = power[a * n + b];
                if let Some(&(x, y)) = edges.iter().find(|&&(x, y)| power[x * n + y] != base) {
                    report.edge_witness = Some(WalkWitness {
                        power: i,
                        first: (a, b),
                        second: (x, y),
                        entries: (base, power[x * n + y]),
                    });
                }
            }
        }
        if report.diagonal_witness.is_some() && report.edge_witness.is_some() {
            break;
        }
    }
    report.one_walk_regular = report.diagonal_witness.is_none() && report.edge_witness.is_none();
    report
}

/// 1-walk-regularity decided through powers `1..n`.
pub fn is_one_walk_regular(g: &Graph) -> bool {
    walk_regularity(g, g.n().max(2)).one_walk_regular
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SrgReport {
    pub params: Option<SrgParams>,
    pub feasible: Option<bool>,
    /// Checked only for strongly regular graphs of valency `(n − 1)/2`.
    pub self_complementary: Option<bool>,
    pub self_complementary_form: Option<bool>,
    /// Eigenvalues `(n − 1)/2, (√n − 1)/2, (−√n − 1)/2` with multiplicities `1, (n − 1)/2, (n − 1)/2`
    /// for self-complementary strongly regular graphs.
    pub eigen_triple: Option<[(f64, usize); 3]>,
    pub walk: WalkRegularityReport,
}

pub fn srg_analysis(g: &Graph, max_power: usize) -> SrgReport {
    let n = g.n();
    let params = srg_params(g);
    let self_complementary = params.filter(|p| 2 * p.k + 1 == n).map(|_| is_self_complementary(g));
    let form = self_complementary.filter(|&sc| sc).and(params).map(|p| p.has_self_complementary_form());
    let eigen_triple = (form == Some(true)).then(|| {
        let r = (n as f64).sqrt();
        let m = (n - 1) / 2;
        [((n as f64 - 1.0) / 2.0, 1), ((r - 1.0) / 2.0, m), ((-r - 1.0) / 2.0, m)]
    });
    SrgReport {
        params,
        feasible: params.map(|p| p.feasible()),
        self_complementary,
        self_complementary_form: form,
        eigen_triple,
        walk: walk_regularity(g, max_power),
    }
}
