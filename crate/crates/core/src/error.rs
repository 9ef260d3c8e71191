use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed adjacency matrix: {0}")]
    Matrix(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("no field of order {0} in the supported table")]
    UnsupportedField(u64),
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("field has even order {0}; squares/nonsquare split needs odd q")]
    EvenField(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph name: {0}")]
    UnknownName(String),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not connected")]
    NotConnected,
    #[error("map is not an antimorphism of the graph")]
    NotAntimorphism,
    #[error("graph is not of the form C5(Λ) or A(Λ)")]
    FamilyNotDetected,
    #[error("partial map is contradictory: {0}")]
    ContradictoryConstraint(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("input too large: {what} is {got}, limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
    #[error("group closure exceeded cap of {0} elements")]
    GroupCapExceeded(usize),
    #[error("eigensolver did not converge (residual {0:e})")]
    NoConvergence(f64),
    #[error("core violates every case of the prism core classification: {0}")]
    CoreCaseViolation(String),
}
