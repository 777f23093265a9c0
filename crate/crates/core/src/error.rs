use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not unimodular: det = {det}")]
    NotUnimodular { det: f64 },

    #[error("matrix is not Hermitian (residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("coherency matrix is not positive semidefinite (det = {det:e})")]
    NotPositiveSemidefinite { det: f64 },

    #[error("negative ensemble weight {0}")]
    NegativeWeight(f64),

    #[error("ensemble weights sum to {0}, expected 1")]
    WeightsNotNormalized(f64),

    #[error("empty ensemble")]
    EmptyEnsemble,

    #[error("Stokes intensity S0 must be positive, got {0}")]
    NonPositiveIntensity(f64),

    #[error("zero trace")]
    ZeroTrace,

    #[error("decoherence parameter alpha = {0} outside [0, 1]")]
    AlphaOutOfRange(f64),

    #[error("lens focal length must be nonzero and finite, got {0}")]
    InvalidFocalLength(f64),

    #[error("propagation distance must be finite and non-negative, got {0}")]
    InvalidDistance(f64),

    #[error("optical system has no elements")]
    EmptySystem,

    #[error("cycle count must be at least 1")]
    ZeroCycles,

    #[error("not a core matrix: diagonal entries {a} and {d} differ")]
    UnequalDiagonal { a: f64, d: f64 },

    #[error("no finite boost solves the Iwasawa constraint at theta = {theta}")]
    ConstraintUnsolvable { theta: f64 },

    #[error("conjugated matrix has imaginary residue {residue:e}; input is outside SU(1,1)")]
    NotRealizable { residue: f64 },

    #[error("lens synthesis failed, best residual {residual:e}")]
    SynthesisFailed { residual: f64 },

    #[error("resonant divergence: S-matrix entry A vanishes")]
    Resonance,

    #[error("reflectance {0} outside (-1, 1)")]
    ReflectanceOutOfRange(f64),

    #[error("rapidity must be non-negative, got {0}")]
    NegativeRapidity(f64),

    #[error("non-finite parameter `{0}`")]
    NonFinite(&'static str),

    #[error("layer spec line {line}: {message}")]
    LayerSpec { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_finite(name: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(name))
    }
}
