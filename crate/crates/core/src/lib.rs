//! Complementary prisms of graphs and the machinery around them.
//!
//! The crate is organised by concern:
//!
//! - [`graph`]: dense graph type, constructors, products, prisms, graph6/DOT I/O
//! - [`fields`]: arithmetic in the small finite fields used by Paley and Cayley constructions
//! - [`morphisms`]: isomorphism, homomorphism and core searches, permutation groups
//! - [`prism`]: structure of the automorphism group and core of a complementary prism
//! - [`spectral`]: eigenvalues, strong and walk regularity, theta bounds
//! - [`structural`]: independence/clique/chromatic/connectivity numbers, Cheeger numbers,
//!   Hamiltonian searches
//!
//! Searches that may blow up take a [`Budget`] and report [`SearchResult::Unknown`]
//! instead of guessing when it runs out.

pub mod bitset;
pub mod budget;
pub mod error;
pub mod fields;
pub mod graph;
pub mod morphisms;
pub mod prism;
pub mod spectral;
pub mod structural;

pub use bitset::VertexSet;
pub use budget::{Budget, BudgetExhausted, SearchResult};
pub use error::{Error, Result};
pub use graph::{FamilyKind, FamilySpec, Graph, PrismVertex, Side};
pub use morphisms::{GroupDescription, Permutation, StructureLabel, VertexMap};
