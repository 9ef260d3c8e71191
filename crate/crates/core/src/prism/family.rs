//! Recognising the two exceptional families and their extra prism automorphisms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{FamilyKind, FamilySpec, Graph, OuterLabels, PrismVertex, Side};
use crate::morphisms::Permutation;

/// A labelling of `g` as a family graph: `lambda` lists the inner vertices in the order
/// used by the inner graph, `outer` names the path `y ~ v ~ u ~ z`, all in `g`'s labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDetection {
    pub kind: FamilyKind,
    pub outer: OuterLabels,
    pub lambda: Vec<usize>,
}

impl FamilyDetection {
    pub fn inner(&self, g: &Graph) -> Graph {
        g.induced(&self.lambda)
    }

    pub fn spec(&self, g: &Graph) -> FamilySpec {
        FamilySpec::new(self.kind, self.inner(g))
    }

    /// Vertex order `Λ, y, v, u, z`.
    fn order(&self) -> Vec<usize> {
        let mut o = self.lambda.clone();
        o.extend(self.outer.as_array());
        o
    }

    /// `g` is literally the family graph once relabelled by this detection.
    pub fn holds_for(&self, g: &Graph) -> bool {
        let order = self.order();
        let mut seen = vec![false; g.n()];
        order.len() == g.n()
            && order.iter().all(|&v| v < g.n() && !std::mem::replace(&mut seen[v], true))
            && g.induced(&order) == self.spec(g).graph()
    }
}

fn try_outer(g: &Graph, kind: FamilyKind, outer: OuterLabels) -> Option<FamilyDetection> {
    let lambda: Vec<usize> = (0..g.n()).filter(|x| !outer.as_array().contains(x)).collect();
    let d = FamilyDetection { kind, outer, lambda };
    d.holds_for(g).then_some(d)
}

fn detect_kind(g: &Graph, kind: FamilyKind) -> Option<FamilyDetection> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    let m = n - 4;
    for v in 0..n {
        for u in g.neighbors(v) {
            // Degree signatures: in C5(Λ) the middle pair has degree 2, in A(Λ) the ends
            // have degree 1.
            let plausible = match kind {
                FamilyKind::C5Lambda => g.degree(v) == 2 && g.degree(u) == 2,
                FamilyKind::ALambda => g.degree(v) == m + 2 && g.degree(u) == m + 2,
            };
            if !plausible {
                continue;
            }
            for y in g.neighbors(v) {
                if y == u || g.adjacent(y, u) {
                    continue;
                }
                for z in g.neighbors(u) {
                    if z == v || z == y || g.adjacent(z, v) || g.adjacent(y, z) {
                        continue;
                    }
                    if let Some(d) = try_outer(g, kind, OuterLabels { y, v, u, z }) {
                        return Some(d);
                    }
                }
            }
        }
    }
    None
}

/// Every family the graph belongs to (C5 first): empty, one entry, or both for `P4`.
pub fn detect_family(g: &Graph) -> Vec<FamilyDetection> {
    [FamilyKind::C5Lambda, FamilyKind::ALambda]
        .into_iter()
        .filter_map(|k| detect_kind(g, k))
        .collect()
}

/// The extra automorphism of the prism of a family graph, in the prism's labels. Inner
/// copies are fixed; the eight outer copies move as
/// - C5 family: `(y,1)↦(y,1)`, `(v,1)↦(y,2)`, `(u,1)↦(z,2)`, `(z,1)↦(z,1)`,
///   `(y,2)↦(v,1)`, `(v,2)↦(u,2)`, `(u,2)↦(v,2)`, `(z,2)↦(u,1)`;
/// - A family: `(y,1)↦(v,2)`, `(v,1)↦(v,1)`, `(u,1)↦(u,1)`, `(z,1)↦(u,2)`,
///   `(y,2)↦(z,2)`, `(v,2)↦(y,1)`, `(u,2)↦(z,1)`, `(z,2)↦(y,2)`.
pub fn special_automorphism(g: &Graph, d: &FamilyDetection) -> Result<Permutation> {
    if !d.holds_for(g) {
        return Err(Error::FamilyNotDetected);
    }
    let n = g.n();
    let OuterLabels { y, v, u, z } = d.outer;
    let (one, two) = (Side::One, Side::Two);
    let table: [((usize, Side), (usize, Side)); 8] = match d.kind {
        FamilyKind::C5Lambda => [
            ((y, one), (y, one)),
            ((v, one), (y, two)),
            ((u, one), (z, two)),
            ((z, one), (z, one)),
            ((y, two), (v, one)),
            ((v, two), (u, two)),
            ((u, two), (v, two)),
            ((z, two), (u, one)),
        ],
        FamilyKind::ALambda => [
            ((y, one), (v, two)),
            ((v, one), (v, one)),
            ((u, one), (u, one)),
            ((z, one), (u, two)),
            ((y, two), (z, two)),
            ((v, two), (y, one)),
            ((u, two), (z, one)),
            ((z, two), (y, two)),
        ],
    };
    let mut image: Vec<usize> = (0..2 * n).collect();
    for ((a, sa), (b, sb)) in table {
        image[PrismVertex::new(a, sa).index(n)] = PrismVertex::new(b, sb).index(n);
    }
    let p = Permutation::new(image)?;
    assert!(p.is_automorphism_of(&g.complementary_prism()), "family automorphism table is not an automorphism");
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::morphisms::is_isomorphic;

    #[test]
    fn path_is_in_both_families() {
        let d = detect_family(&named::path(4));
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|x| x.lambda.is_empty()));
    }

    #[test]
    fn pentagon_and_triangle() {
        let d = detect_family(&named::cycle(5));
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].kind, d[0].lambda.len()), (FamilyKind::C5Lambda, 1));
        assert!(detect_family(&named::complete(3)).is_empty());
        assert!(detect_family(&named::petersen()).is_empty());
    }

    #[test]
    fn detection_round_trips_on_relabelled_members() {
        let inner = named::path(3);
        for kind in [FamilyKind::C5Lambda, FamilyKind::ALambda] {
            let g = FamilySpec::new(kind, inner.clone()).graph().relabel(&[4, 0, 6, 2, 1, 5, 3]);
            let d = detect_family(&g);
            let hit = d.iter().find(|x| x.kind == kind).expect("detected");
            assert!(is_isomorphic(&hit.spec(&g).graph(), &g));
            assert!(is_isomorphic(&hit.inner(&g), &inner));
        }
    }

    #[test]
    fn special_maps_mix_sides() {
        let g = named::path(4);
        for d in detect_family(&g) {
            let s = special_automorphism(&g, &d).unwrap();
            let sides: Vec<bool> = (0..4).map(|x| s.apply(x) < 4).collect();
            assert!(sides.contains(&true) && sides.contains(&false));
        }
        let a = FamilySpec::new(FamilyKind::ALambda, named::complete(1)).graph();
        let d = detect_family(&a);
        assert!(special_automorphism(&a, &d[0]).is_ok());
    }
}
