use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("operator is not Hermitian (max |H - H^dagger| = {residual:e})")]
    NonHermitianInput { residual: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("state is not normalized (norm = {norm})")]
    UnnormalizedState { norm: f64 },

    #[error("seed state is not normalized (norm = {norm})")]
    UnnormalizedSeed { norm: f64 },

    #[error("state vector must be nonempty with one label per amplitude")]
    InvalidStateShape,

    #[error("invalid ordered basis: {0}")]
    InvalidBasis(String),

    #[error("basis does not span the dynamics: leaked probability {amount:e} at t = {time}")]
    SupportLeak { amount: f64, time: f64 },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("unknown seed label {0:?}")]
    UnknownSeedLabel(String),

    #[error("invalid model parameters: {0}")]
    InvalidParameters(String),

    #[error("block shape mismatch: {0}")]
    BlockShapeMismatch(String),

    #[error("Krylov prefix mismatch: only {actual} leading vectors are shared")]
    PrefixMismatch { actual: usize },

    #[error("seed has weight {weight:e} outside subspace A")]
    SeedNotInA { weight: f64 },

    #[error("effective Hamiltonian acts outside subspace A (max element {max_abs:e})")]
    EffectiveNotOnA { max_abs: f64 },

    #[error("eigendecomposition failed: {0}")]
    Eigen(String),
}
