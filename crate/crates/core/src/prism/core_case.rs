//! Which side(s) of the prism a core occupies.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, PrismVertex, Side};
use crate::morphisms::{verify_retraction, CoreReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreCaseKind {
    /// The prism is its own core.
    WholePrism,
    /// The core lies in the first side.
    InFirstSide,
    /// The core lies in the second side.
    InSecondSide,
    /// Second-side copies of `V1 ∪ V2` and first-side copies of `V2`.
    SecondSideHeavy,
    /// First-side copies of `V1 ∪ V2` and second-side copies of `V2`.
    FirstSideHeavy,
}

/// `V1`, `V2` nonempty; `V3` the remaining base vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorePartition {
    pub v1: Vec<usize>,
    pub v2: Vec<usize>,
    pub v3: Vec<usize>,
}

/// Conditions on the partition, evaluated in the graph or its complement (whichever
/// governs the case).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionChecks {
    /// No edge between `V1` and `V2`.
    pub no_v1_v2_edge: bool,
    /// Each vertex of `V3` has at most one neighbour in `V2`.
    pub v3_sees_at_most_one_of_v2: bool,
    /// Some vertex of `V2` has no neighbour in `V3`.
    pub some_v2_vertex_misses_v3: bool,
    /// The retraction sends the `V3` copies and the far copies of `V1` into the
    /// prescribed parts of the core.
    pub retraction_inclusions: bool,
}

impl PartitionChecks {
    pub fn all(&self) -> bool {
        self.no_v1_v2_edge && self.v3_sees_at_most_one_of_v2 && self.some_v2_vertex_misses_v3 && self.retraction_inclusions
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreCase {
    pub kind: CoreCaseKind,
    pub partition: Option<CorePartition>,
    pub checks: Option<PartitionChecks>,
}

/// Partition checks for a core made of `heavy`-side copies of `V1 ∪ V2` and the other
/// side's copies of `V2`; `h` is the graph on the heavy side.
fn partition_checks(h: &Graph, heavy: Side, p: &CorePartition, report: &CoreReport) -> PartitionChecks {
    let n = h.n();
    let light = heavy.other();
    let idx = |x: usize, s: Side| PrismVertex::new(x, s).index(n);
    let no_v1_v2_edge = p.v1.iter().all(|&a| p.v2.iter().all(|&b| !h.adjacent(a, b)));
    let v3_sees_at_most_one_of_v2 = p.v3.iter().all(|&c| p.v2.iter().filter(|&&b| h.adjacent(b, c)).count() <= 1);
    let some_v2_vertex_misses_v3 = p.v2.iter().any(|&b| p.v3.iter().all(|&c| !h.adjacent(b, c)));
    let heavy_v1: Vec<usize> = p.v1.iter().map(|&x| idx(x, heavy)).collect();
    let heavy_v12: Vec<usize> = p.v1.iter().chain(&p.v2).map(|&x| idx(x, heavy)).collect();
    let psi = |x: usize, s: Side| report.retraction.apply(idx(x, s));
    let retraction_inclusions = p.v3.iter().all(|&x| heavy_v1.contains(&psi(x, heavy)))
        && p.v3.iter().all(|&x| heavy_v12.contains(&psi(x, light)))
        && p.v1.iter().all(|&x| heavy_v12.contains(&psi(x, light)));
    PartitionChecks {
        no_v1_v2_edge,
        v3_sees_at_most_one_of_v2,
        some_v2_vertex_misses_v3,
        retraction_inclusions,
    }
}

/// Sorts a computed core of the prism of `g` into one of the five possible shapes and
/// verifies the partition conditions. A core fitting none of them is an error; `K2` and
/// its complement are outside the classification and rejected.
pub fn classify_core_case(g: &Graph, report: &CoreReport) -> Result<CoreCase> {
    let n = g.n();
    if n == 2 {
        return Err(Error::InvalidParameter("graphs on two vertices are outside the classification".into()));
    }
    let prism = g.complementary_prism();
    if !verify_retraction(&prism, &report.retraction, &report.core_vertices) {
        return Err(Error::InvalidParameter("report does not carry a retraction onto its core".into()));
    }
    let mut u1 = Vec::new();
    let mut u2 = Vec::new();
    for &c in &report.core_vertices {
        let p = PrismVertex::from_index(c, n);
        match p.side {
            Side::One => u1.push(p.base),
            Side::Two => u2.push(p.base),
        }
    }
    let plain = |kind| CoreCase {
        kind,
        partition: None,
        checks: None,
    };
    if report.core_vertices.len() == 2 * n {
        return Ok(plain(CoreCaseKind::WholePrism));
    }
    if u2.is_empty() {
        return Ok(plain(CoreCaseKind::InFirstSide));
    }
    if u1.is_empty() {
        return Ok(plain(CoreCaseKind::InSecondSide));
    }
    let complement = g.complement();
    let attempts = [
        (&u1, &u2, g, Side::Two, CoreCaseKind::SecondSideHeavy),
        (&u2, &u1, &complement, Side::One, CoreCaseKind::FirstSideHeavy),
    ];
    for (light, heavy, h, heavy_side, kind) in attempts {
        if !light.iter().all(|x| heavy.contains(x)) || light.len() == heavy.len() {
            continue;
        }
        let partition = CorePartition {
            v1: heavy.iter().filter(|x| !light.contains(x)).copied().collect(),
            v2: light.clone(),
            v3: (0..n).filter(|x| !heavy.contains(x)).collect(),
        };
        let checks = partition_checks(h, heavy_side, &partition, report);
        if !checks.all() {
            return Err(Error::CoreCaseViolation(format!("{kind:?} partition fails its conditions: {checks:?}")));
        }
        return Ok(CoreCase {
            kind,
            partition: Some(partition),
            checks: Some(checks),
        });
    }
    Err(Error::CoreCaseViolation(format!("core with first-side bases {u1:?} and second-side bases {u2:?} fits no case")))
}
