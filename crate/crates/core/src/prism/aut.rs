//! Automorphism group of a complementary prism assembled from automorphisms and
//! antimorphisms of the base graph, plus the family involution when there is one.

use serde::{Deserialize, Serialize};

use super::family::{detect_family, special_automorphism, FamilyDetection};
use crate::error::Result;
use crate::graph::{FamilyKind, Graph};
use crate::morphisms::{automorphisms, find_antimorphisms, is_self_complementary, GroupDescription, Limit, Permutation, StructureLabel};

/// Largest group closed under composition when a generating set has to be closed up.
const CLOSURE_CAP: usize = 10_000;

/// `(x, i) ↦ (φ(x), i)` for an automorphism `φ`.
pub fn lift_automorphism(phi: &Permutation) -> Permutation {
    let n = phi.len();
    let image = (0..2 * n).map(|p| if p < n { phi.apply(p) } else { n + phi.apply(p - n) }).collect();
    Permutation::new(image).expect("lift of a permutation")
}

/// `(x, 1) ↦ (σ(x), 2)` and `(x, 2) ↦ (σ(x), 1)` for an antimorphism `σ`.
pub fn lift_antimorphism(sigma: &Permutation) -> Permutation {
    let n = sigma.len();
    let image = (0..2 * n).map(|p| if p < n { n + sigma.apply(p) } else { sigma.apply(p - n) }).collect();
    Permutation::new(image).expect("lift of a permutation")
}

/// How a prism automorphism acts on the two sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrismAutKind {
    /// Lift of this automorphism of the base graph.
    SidePreserving(Permutation),
    /// Lift of this antimorphism of the base graph.
    SideSwapping(Permutation),
    /// Neither: mixes the sides.
    Mixing,
}

pub fn classify_prism_automorphism(n: usize, p: &Permutation) -> PrismAutKind {
    let bases: Vec<usize> = (0..n).map(|x| p.apply(x) % n.max(1)).collect();
    let Ok(phi) = Permutation::new(bases) else {
        return PrismAutKind::Mixing;
    };
    if *p == lift_automorphism(&phi) {
        PrismAutKind::SidePreserving(phi)
    } else if *p == lift_antimorphism(&phi) {
        PrismAutKind::SideSwapping(phi)
    } else {
        PrismAutKind::Mixing
    }
}

/// All automorphisms of the prism by direct search, sorted.
pub fn brute_prism_aut(g: &Graph) -> Vec<Permutation> {
    automorphisms(&g.complementary_prism())
}

/// Lifts of automorphisms and antimorphisms.
fn plain_lifts(g: &Graph) -> (Vec<Permutation>, bool) {
    let mut out: Vec<Permutation> = automorphisms(g).iter().map(lift_automorphism).collect();
    let anti = find_antimorphisms(g, Limit::All);
    let sc = !anti.is_empty();
    out.extend(anti.iter().map(lift_antimorphism));
    (out, sc)
}

/// The family detection used for the group structure (the C5 reading first).
pub fn governing_family(g: &Graph) -> Option<FamilyDetection> {
    detect_family(g).into_iter().next()
}

/// `Aut` of the prism from its structure: lifts of automorphisms and antimorphisms,
/// doubled by the family involution for family graphs, and closed up to `S5` for the
/// pentagon.
pub fn structured_prism_aut(g: &Graph) -> Result<GroupDescription> {
    let degree = 2 * g.n();
    let (lifts, sc) = plain_lifts(g);
    match governing_family(g) {
        Some(d) => {
            let s = special_automorphism(g, &d)?;
            if d.kind == FamilyKind::C5Lambda && d.lambda.len() == 1 {
                let mut gens = lifts;
                gens.push(s);
                GroupDescription::generated_by(degree, &gens, CLOSURE_CAP, StructureLabel::S5)
            } else {
                let mut all = lifts.clone();
                all.extend(lifts.iter().map(|p| s.compose(p)));
                Ok(GroupDescription::from_elements(degree, all, StructureLabel::SemidirectZ2))
            }
        }
        None => {
            let label = if sc { StructureLabel::AutUnionAntimorphisms } else { StructureLabel::PlainAut };
            Ok(GroupDescription::from_elements(degree, lifts, label))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RatioReason {
    /// The base graph is the pentagon.
    Pentagon,
    /// Family graph whose inner graph is self-complementary (including empty).
    FamilyWithSelfComplementaryInner,
    /// Self-complementary non-family graph, or family graph with an inner graph that is
    /// not self-complementary.
    SelfComplementaryOrFamily,
    Other,
}

/// `|Aut(prism)| / |Aut(g)|` predicted from the structure of `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioClass {
    pub value: u64,
    pub reason: RatioReason,
}

pub fn ratio_class(g: &Graph) -> RatioClass {
    let (value, reason) = match governing_family(g) {
        Some(d) if d.kind == FamilyKind::C5Lambda && d.lambda.len() == 1 => (12, RatioReason::Pentagon),
        Some(d) if is_self_complementary(&d.inner(g)) => (4, RatioReason::FamilyWithSelfComplementaryInner),
        Some(_) => (2, RatioReason::SelfComplementaryOrFamily),
        None if is_self_complementary(g) => (2, RatioReason::SelfComplementaryOrFamily),
        None => (1, RatioReason::Other),
    };
    RatioClass { value, reason }
}

/// Every automorphism of the prism of a non-family graph lifts a single automorphism or
/// antimorphism. Family graphs are outside the claim and return `None`.
pub fn dichotomy_holds(g: &Graph) -> Option<bool> {
    if governing_family(g).is_some() {
        return None;
    }
    let n = g.n();
    Some(
        brute_prism_aut(g)
            .iter()
            .all(|p| !matches!(classify_prism_automorphism(n, p), PrismAutKind::Mixing)),
    )
}
