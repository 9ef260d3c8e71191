//! Eigenvalues of graphs and prisms, strong and walk regularity, theta bounds.

mod jacobi;
mod regularity;
mod theta;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use jacobi::{symmetric_eigenvalues, MAX_SWEEPS, OFF_DIAGONAL_TOLERANCE};
pub use regularity::{
    is_one_walk_regular, srg_analysis, srg_params, walk_regularity, SrgParams, SrgReport, WalkRegularityReport,
    WalkWitness,
};
pub use theta::{
    eigenvalue_bound_checks, interlacing_bound, open_threshold, theta_bounds, srg_eigenvalue_inequality_fails,
    EigenBoundReport, ThetaBounds,
};

/// Largest order accepted by the numeric solver.
pub const NUMERIC_LIMIT: usize = 1100;
/// Eigenvalues closer than this are reported as one value with multiplicity.
pub const BINNING_TOLERANCE: f64 = 1e-7;
/// Agreement required between closed-form and numeric spectra.
pub const COMPARISON_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumSource {
    ClosedForm,
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// Sorted descending, repeated by multiplicity.
    pub eigenvalues: Vec<f64>,
    /// `(value, multiplicity)` groups, descending.
    pub grouped: Vec<(f64, usize)>,
    pub source: SpectrumSource,
}

impl SpectrumReport {
    pub fn new(mut eigenvalues: Vec<f64>, source: SpectrumSource) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let grouped = group(&eigenvalues, BINNING_TOLERANCE);
        SpectrumReport {
            eigenvalues,
            grouped,
            source,
        }
    }

    pub fn largest(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn smallest(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// Largest entry-wise difference from `other` (both sorted), or infinity on a length mismatch.
    pub fn max_difference(&self, other: &SpectrumReport) -> f64 {
        if self.eigenvalues.len() != other.eigenvalues.len() {
            return f64::INFINITY;
        }
        self.eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// Groups a descending list into runs whose consecutive gaps are below `tol`.
fn group(sorted: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize, f64)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((sum, count, last)) if (*last - x).abs() < tol => {
                *sum += x;
                *count += 1;
                *last = x;
            }
            _ => out.push((x, 1, x)),
        }
    }
    out.into_iter().map(|(sum, count, _)| (sum / count as f64, count)).collect()
}

/// Adjacency spectrum by Jacobi iteration.
pub fn numeric_spectrum(g: &Graph) -> Result<SpectrumReport> {
    let n = g.n();
    if n > NUMERIC_LIMIT {
        return Err(Error::TooLarge {
            what: "numeric spectrum",
            got: n,
            limit: NUMERIC_LIMIT,
        });
    }
    let a: Vec<f64> = g.adjacency_f64().into_iter().flatten().collect();
    Ok(SpectrumReport::new(symmetric_eigenvalues(a, n)?, SpectrumSource::Numeric))
}

/// Degree and eigenvalues `λ2 ≥ … ≥ λn` of a connected regular graph.
fn regular_connected_spectrum(g: &Graph) -> Result<(usize, Vec<f64>)> {
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let spec = numeric_spectrum(g)?;
    Ok((k, spec.eigenvalues[1..].to_vec()))
}

/// Spectrum of the complementary prism of a connected `k`-regular graph: the two roots
/// `(n − 1 ± √((n − 1 − 2k)² + 4))/2` and, for each non-principal eigenvalue `λ` of the
/// graph, `(−1 ± √((2λ + 1)² + 4))/2`.
pub fn prism_spectrum_closed_form(g: &Graph) -> Result<SpectrumReport> {
    let n = g.n() as f64;
    let (k, rest) = regular_connected_spectrum(g)?;
    let k = k as f64;
    let r = ((n - 1.0 - 2.0 * k).powi(2) + 4.0).sqrt();
    let mut out = vec![(n - 1.0 + r) / 2.0, (n - 1.0 - r) / 2.0];
    for l in rest {
        let s = ((2.0 * l + 1.0).powi(2) + 4.0).sqrt();
        out.push((-1.0 + s) / 2.0);
        out.push((-1.0 - s) / 2.0);
    }
    Ok(SpectrumReport::new(out, SpectrumSource::ClosedForm))
}

/// Largest and smallest prism eigenvalue: `(n − 1 + √((n − 1 − 2k)² + 4))/2` and the
/// smaller of the negative roots attached to `λ2` and `λn`.
pub fn prism_extreme_eigenvalues(g: &Graph) -> Result<(f64, f64)> {
    let n = g.n() as f64;
    let (k, rest) = regular_connected_spectrum(g)?;
    let k = k as f64;
    let max = (n - 1.0 + ((n - 1.0 - 2.0 * k).powi(2) + 4.0).sqrt()) / 2.0;
    let low = |l: f64| (-1.0 - ((2.0 * l + 1.0).powi(2) + 4.0).sqrt()) / 2.0;
    let min = match (rest.first(), rest.last()) {
        (Some(&l2), Some(&ln)) => low(l2).min(low(ln)),
        _ => (n - 1.0 - ((n - 1.0 - 2.0 * k).powi(2) + 4.0).sqrt()) / 2.0,
    };
    Ok((max, min))
}

/// Hoffman ratio bound `n·(−λmin)/(k − λmin)` on the independence number of a regular
/// graph with at least one edge.
pub fn hoffman_bound(g: &Graph) -> Option<f64> {
    let k = g.regular_degree()?;
    if k == 0 {
        return None;
    }
    let spec = numeric_spectrum(g).ok()?;
    let least = spec.smallest()?;
    Some(g.n() as f64 * -least / (k as f64 - least))
}
