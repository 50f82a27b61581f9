use thiserror::Error;

/// Error type shared by all modules in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be nonzero")]
    ZeroValue { name: &'static str },

    #[error("matrix is not Hermitian (max entrywise deviation {max_dev:.3e})")]
    NotHermitian { max_dev: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("state contains a non-finite amplitude at index {index}")]
    NonFiniteAmplitude { index: usize },

    #[error("density matrix trace is {trace:.17e}, expected 1 within {tol:.1e}")]
    InvalidTrace { trace: f64, tol: f64 },

    #[error("density matrix has eigenvalue {min_eig:.3e} below the positivity floor")]
    NotPositiveSemidefinite { min_eig: f64 },

    #[error("{name} is not normalized: sum is {sum:.17e}")]
    NotNormalized { name: &'static str, sum: f64 },

    #[error("negative weight {value:.3e} at index {index}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("time {t:.6e} s is not an integer multiple of tau {tau:.6e} s")]
    NotOnTimeGrid { t: f64, tau: f64 },

    #[error("implicit step did not converge after {iterations} iterations (residual {residual:.3e})")]
    StepNotConverged { iterations: usize, residual: f64 },

    #[error("not enough data: need at least {needed} samples, got {got}")]
    InsufficientData { needed: usize, got: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
