//! Spectral theta bounds and eigenvalue inequalities for regular self-complementary graphs.

use num_integer::Roots;
use serde::{Deserialize, Serialize};

use super::numeric_spectrum;
use crate::budget::{Budget, SearchResult};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::morphisms::is_self_complementary;
use crate::structural::hamiltonian_cycle;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaBounds {
    /// `n / (1 − k/λn)`, or `n` for an edgeless graph.
    pub upper: f64,
    /// `n / upper`, a lower bound on theta of the complement.
    pub complement_lower: f64,
}

pub fn theta_bounds(g: &Graph) -> Result<ThetaBounds> {
    let n = g.n() as f64;
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    let upper = if k == 0 {
        n
    } else {
        let least = numeric_spectrum(g)?.smallest().expect("graph with an edge");
        n / (1.0 - k as f64 / least)
    };
    Ok(ThetaBounds {
        upper,
        complement_lower: if upper > 0.0 { n / upper } else { 0.0 },
    })
}

/// `floor(√(x·s²))` and its ceiling, bracketing `√x·s`.
fn sqrt_bracket(x: u128, s: u128) -> (u128, u128) {
    let y = x * s * s;
    let lo = y.sqrt();
    (lo, if lo * lo == y { lo } else { lo + 1 })
}

/// Whether `n + 1 ≤ (√n − 1)(√(n + 4) + 1)` fails, for `n ≡ 1 (mod 4)`, `n > 1`.
/// Evaluated in floating point, falling back to integer square-root brackets when the
/// two sides are within `1e-9` relative.
pub fn srg_eigenvalue_inequality_fails(n: u64) -> Result<bool> {
    if n <= 1 || n % 4 != 1 {
        return Err(Error::InvalidParameter(format!("need n > 1 with n = 1 mod 4, got {n}")));
    }
    let nf = n as f64;
    let lhs = nf + 1.0;
    let rhs = (nf.sqrt() - 1.0) * ((nf + 4.0).sqrt() + 1.0);
    if (lhs - rhs).abs() > 1e-9 * lhs {
        return Ok(lhs > rhs);
    }
    let n = u128::from(n);
    let mut s: u128 = 1 << 20;
    while s.checked_mul(s).and_then(|x| x.checked_mul(4 * (n + 5))).is_some() {
        let (a_lo, a_hi) = sqrt_bracket(n, s);
        let (b_lo, b_hi) = sqrt_bracket(n + 4, s);
        let target = (n + 1) * s * s;
        let rhs_hi = (a_hi - s) * (b_hi + s);
        let rhs_lo = (a_lo - s) * (b_lo + s);
        if rhs_hi < target {
            return Ok(true);
        }
        if rhs_lo >= target {
            return Ok(false);
        }
        s <<= 4;
    }
    Ok(lhs > rhs)
}

/// `(n − 7)/2 − 2cos(π(n − 1)/n)`.
pub fn interlacing_bound(n: usize) -> f64 {
    let nf = n as f64;
    (nf - 7.0) / 2.0 - 2.0 * (std::f64::consts::PI * (nf - 1.0) / nf).cos()
}

/// `(√(n(n − 4)) − 1)/2`.
pub fn open_threshold(n: usize) -> f64 {
    let nf = n as f64;
    ((nf * (nf - 4.0)).sqrt() - 1.0) / 2.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenBoundReport {
    pub n: usize,
    pub lambda2: f64,
    /// Present when a Hamiltonian cycle was found.
    pub interlacing_bound: Option<f64>,
    pub lambda2_within_bound: Option<bool>,
    pub threshold: f64,
    /// `λ2` is above the threshold by more than `1e-9`.
    pub exceeds_threshold: bool,
    /// `λi = −1 − λ_{n−i+2}` for `2 ≤ i ≤ n`, to `1e-9`.
    pub pairing_holds: bool,
    pub notice: Option<String>,
}

pub fn eigenvalue_bound_checks(g: &Graph, budget: &mut Budget) -> Result<EigenBoundReport> {
    let n = g.n();
    g.regular_degree().ok_or(Error::NotRegular)?;
    if !is_self_complementary(g) {
        return Err(Error::NotAntimorphism);
    }
    let spec = numeric_spectrum(g)?.eigenvalues;
    let lambda2 = spec.get(1).copied().unwrap_or(f64::NAN);
    let pairing_holds = (2..=n).all(|i| (spec[i - 1] - (-1.0 - spec[n - i + 1])).abs() < 1e-9);
    let (bound, within, notice) = match hamiltonian_cycle(g, budget) {
        SearchResult::Found(_) => {
            let b = interlacing_bound(n);
            (Some(b), Some(lambda2 <= b + 1e-9), None)
        }
        SearchResult::NotFound => (None, None, Some("no Hamiltonian cycle; interlacing bound skipped".to_string())),
        SearchResult::Unknown(_) => (None, None, Some("Hamiltonian cycle search exhausted its budget; interlacing bound skipped".to_string())),
    };
    let threshold = open_threshold(n);
    Ok(EigenBoundReport {
        n,
        lambda2,
        interlacing_bound: bound,
        lambda2_within_bound: within,
        threshold,
        exceeds_threshold: lambda2 > threshold + 1e-9,
        pairing_holds,
        notice,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn theta_values() {
        assert!((theta_bounds(&named::cycle(5)).unwrap().upper - 5f64.sqrt()).abs() < 1e-9);
        assert!((theta_bounds(&named::complete(6)).unwrap().upper - 1.0).abs() < 1e-9);
        assert_eq!(theta_bounds(&Graph::empty(4)).unwrap().upper, 4.0);
        let p = theta_bounds(&named::petersen()).unwrap();
        assert!((p.upper - 4.0).abs() < 1e-9 && (p.complement_lower - 2.5).abs() < 1e-9);
        assert!(theta_bounds(&named::path(3)).is_err());
    }

    #[test]
    fn inequality_always_fails() {
        for n in [5, 9, 13, 17, 25, 1_000_001, 4_000_000_001] {
            assert!(srg_eigenvalue_inequality_fails(n).unwrap(), "n = {n}");
        }
        assert!(srg_eigenvalue_inequality_fails(7).is_err());
    }

    #[test]
    fn bracket_route_agrees() {
        let (lo, hi) = sqrt_bracket(2, 1000);
        assert!(lo == 1414 && hi == 1415);
        assert_eq!(sqrt_bracket(9, 10), (30, 30));
    }

    #[test]
    fn paley_checks() {
        let r = eigenvalue_bound_checks(&named::paley(9).unwrap(), &mut Budget::unlimited()).unwrap();
        assert!((r.lambda2 - 1.0).abs() < 1e-9);
        assert_eq!(r.lambda2_within_bound, Some(true));
        assert!(r.pairing_holds);
        let c5 = eigenvalue_bound_checks(&named::cycle(5), &mut Budget::unlimited()).unwrap();
        assert!((c5.interlacing_bound.unwrap() - c5.threshold).abs() < 1e-9);
        assert!(eigenvalue_bound_checks(&named::cycle(6), &mut Budget::unlimited()).is_err());
    }
}
