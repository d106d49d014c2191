use thiserror::Error;

/// Errors produced by the numerical kernel, the state constructors and the
/// experiment drivers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is not Hermitian (max |A_ij - conj(A_ji)| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not unitary (max |U^dag U - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("state is not normalized (squared norm {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("probability list is not normalized (sum {sum}, min entry {min})")]
    InvalidDistribution { sum: f64, min: f64 },

    #[error("generator spectrum is not integer spaced (gap {gap} from lowest eigenvalue)")]
    NonIntegerSpectrum { gap: f64 },

    #[error("Fock truncation tail too large: population {population:e} at n = {nmax}")]
    TruncationTail { population: f64, nmax: usize },

    #[error("correction hook returned {value}, below the Landauer floor {floor}")]
    HookNotDominant { value: f64, floor: f64 },

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
