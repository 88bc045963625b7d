use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("the identity element has no meaningful fixed-point set here")]
    IdentityElement,

    #[error("set is not invariant under the flip")]
    NotSigmaInvariant,

    #[error("first-return iteration exceeded cap of {cap} steps")]
    IterationCap { cap: u64 },

    #[error("shrinking budget exhausted after {attempts} windows")]
    ShrinkBudget { attempts: u32 },

    #[error("no stabilization observed up to level {level}")]
    NotStabilized { level: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("image is not contained in kernel (composite map is nonzero)")]
    Containment,

    #[error("matrix is not an involution")]
    NotInvolution,

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("homomorphism is not well defined on relations")]
    IllDefinedHom,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("set is not a union of cells at this level")]
    NotMeasurable,

    #[error("witness {which} fails: overlap {overlap}, uncovered {uncovered}")]
    Witness { which: &'static str, overlap: String, uncovered: String },

    #[error("inconsistent case evidence: {0}")]
    Evidence(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
