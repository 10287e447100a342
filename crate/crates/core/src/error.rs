use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("structure constants are not antisymmetric at pair ({0}, {1})")]
    NotAntisymmetricTable(usize, usize),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiFailure(usize, usize, usize),
    #[error("realization commutator of basis pair ({0}, {1}) disagrees with the structure constants")]
    RealizationMismatch(usize, usize),
    #[error("subspace basis is rank deficient ({rank} < {len})")]
    RankDeficient { rank: usize, len: usize },
    #[error("Cartan basis is not abelian: bracket of {0} and {1} is nonzero")]
    NotAbelian(usize, usize),
    #[error("ad-operators are not simultaneously diagonalizable over the rationals: {0}")]
    NonDiagonalizable(String),
    #[error("element lies on the wall of root #{index} ({functional})")]
    OnWall { index: usize, functional: String },
    #[error("Pfaffian requested for odd dimension {0}")]
    OddDimension(usize),
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("form degree {degree} does not match {vectors} vectors")]
    DegreeMismatch { degree: usize, vectors: usize },
    #[error("Reeb system is singular: det[alpha_i(I_j)] = 0")]
    SingularFrame,
    #[error("reparameterization matrix is singular")]
    SingularB,
    #[error("search exhausted after {tried} candidates (bound {bound})")]
    SearchExhausted { tried: usize, bound: String },
    #[error("extension piece does not centralize: {0}")]
    NotCentralizing(String),
    #[error("algebra has no matrix realization")]
    NoRealization,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
