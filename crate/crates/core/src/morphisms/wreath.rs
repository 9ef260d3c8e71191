//! Maps of lexicographic products built coordinatewise.

use serde::{Deserialize, Serialize};

use super::{automorphisms, VertexMap};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(φ, β)(a, b) = (φ(a), β(a)(b))` on `Γ1[Γ2]`, with `(a, b)` at index `a·|V2| + b`.
pub fn wreath_map(phi: &VertexMap, beta: &[VertexMap]) -> Result<VertexMap> {
    let n1 = phi.source_n();
    if beta.len() != n1 {
        return Err(Error::DimensionMismatch(format!("{} fibre maps for {n1} base vertices", beta.len())));
    }
    let Some(first) = beta.first() else {
        return Ok(VertexMap {
            image: Vec::new(),
            target_n: 0,
        });
    };
    let (n2, m2) = (first.source_n(), first.target_n);
    if beta.iter().any(|b| b.source_n() != n2 || b.target_n != m2) {
        return Err(Error::DimensionMismatch("fibre maps have different shapes".into()));
    }
    let mut image = Vec::with_capacity(n1 * n2);
    for a in 0..n1 {
        for b in 0..n2 {
            image.push(phi.apply(a) * m2 + beta[a].apply(b));
        }
    }
    Ok(VertexMap {
        image,
        target_n: phi.target_n * m2,
    })
}

/// The two hypotheses under which `Aut(Γ1[Γ2])` is the full wreath product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexAutoConditions {
    /// Some two vertices of Γ1 share their open neighbourhood.
    pub open_twins: bool,
    /// Some two vertices of Γ1 share their closed neighbourhood.
    pub closed_twins: bool,
    pub inner_connected: bool,
    pub inner_complement_connected: bool,
}

impl LexAutoConditions {
    pub fn hold(&self) -> bool {
        (!self.open_twins || self.inner_connected) && (!self.closed_twins || self.inner_complement_connected)
    }
}

pub fn lex_auto_conditions(g1: &Graph, g2: &Graph) -> LexAutoConditions {
    let n = g1.n();
    let mut open_twins = false;
    let mut closed_twins = false;
    for u in 0..n {
        for v in u + 1..n {
            let same_open = (0..n).all(|w| g1.adjacent(u, w) == g1.adjacent(v, w));
            let same_closed = (0..n).all(|w| w == u || w == v || g1.adjacent(u, w) == g1.adjacent(v, w))
                && g1.adjacent(u, v);
            open_twins |= same_open;
            closed_twins |= same_closed;
        }
    }
    LexAutoConditions {
        open_twins,
        closed_twins,
        inner_connected: g2.is_connected(),
        inner_complement_connected: g2.complement().is_connected(),
    }
}

/// `|Aut(Γ1)| · |Aut(Γ2)|^|V1|` when the wreath-product conditions hold.
pub fn wreath_aut_order(g1: &Graph, g2: &Graph) -> Option<u128> {
    if !lex_auto_conditions(g1, g2).hold() {
        return None;
    }
    let a1 = automorphisms(g1).len() as u128;
    let a2 = automorphisms(g2).len() as u128;
    a2.checked_pow(g1.n() as u32).and_then(|x| x.checked_mul(a1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn identity_pieces_give_identity() {
        let m = wreath_map(&VertexMap::identity(5), &vec![VertexMap::identity(2); 5]).unwrap();
        assert_eq!(m, VertexMap::identity(10));
    }

    #[test]
    fn rotation_lifts_to_product_automorphism() {
        let c5 = named::cycle(5);
        let k2 = named::complete(2);
        let prod = c5.lexicographic_product(&k2);
        let rot = VertexMap::new(vec![1, 2, 3, 4, 0], 5).unwrap();
        let mut beta = vec![VertexMap::identity(2); 5];
        beta[3] = VertexMap::new(vec![1, 0], 2).unwrap();
        let m = wreath_map(&rot, &beta).unwrap();
        assert!(m.is_bijective());
        assert!(m.is_homomorphism(&prod, &prod));
        assert!(wreath_map(&rot, &beta[..4]).is_err());
    }

    #[test]
    fn pentagon_over_edge() {
        let c = lex_auto_conditions(&named::cycle(5), &named::complete(2));
        assert!(!c.open_twins && !c.closed_twins && c.hold());
        assert_eq!(wreath_aut_order(&named::cycle(5), &named::complete(2)), Some(320));
    }

    #[test]
    fn twins_need_connectivity() {
        // Two vertices with equal open neighbourhoods in P3's ends; an edgeless inner
        // factor breaks the wreath description.
        let c = lex_auto_conditions(&named::path(3), &Graph::empty(2));
        assert!(c.open_twins);
        assert!(!c.hold());
    }
}
