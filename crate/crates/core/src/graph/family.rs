use serde::{Deserialize, Serialize};

use super::Graph;

/// Which of the two exceptional families a graph belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// Pentagon `y v u z x` with `x` blown up into Λ, so Λ is joined to `y` and `z`.
    C5Lambda,
    /// Triangle `v u x` with pendants `y` on `v` and `z` on `u`, `x` blown up into Λ,
    /// so Λ is joined to `v` and `u`.
    ALambda,
}

/// A member of one of the families. Λ occupies `0..|Λ|`; `y, v, u, z` are the last
/// four vertices in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub inner: Graph,
}

/// Indices of the outer path `y ~ v ~ u ~ z` in a family graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterLabels {
    pub y: usize,
    pub v: usize,
    pub u: usize,
    pub z: usize,
}

impl OuterLabels {
    pub fn as_array(&self) -> [usize; 4] {
        [self.y, self.v, self.u, self.z]
    }
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, inner: Graph) -> Self {
        FamilySpec { kind, inner }
    }

    pub fn outer(&self) -> OuterLabels {
        let m = self.inner.n();
        OuterLabels {
            y: m,
            v: m + 1,
            u: m + 2,
            z: m + 3,
        }
    }

    pub fn graph(&self) -> Graph {
        let m = self.inner.n();
        let OuterLabels { y, v, u, z } = self.outer();
        let mut g = Graph::empty(m + 4);
        for (a, b) in self.inner.edges() {
            g.set_edge(a, b);
        }
        g.set_edge(y, v);
        g.set_edge(v, u);
        g.set_edge(u, z);
        let (p, q) = match self.kind {
            FamilyKind::C5Lambda => (y, z),
            FamilyKind::ALambda => (v, u),
        };
        for l in 0..m {
            g.set_edge(l, p);
            g.set_edge(l, q);
        }
        let tag = match self.kind {
            FamilyKind::C5Lambda => "C5",
            FamilyKind::ALambda => "A",
        };
        g.with_name(format!("{tag}(Λ on {m})"))
    }
}
