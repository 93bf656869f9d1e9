use thiserror::Error;

/// Everything that can go wrong while building or analysing finite rings and modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid moduli: {0}")]
    InvalidModuli(String),
    #[error("modulus {0} exceeds the supported range of exact Z/N arithmetic")]
    ModulusTooLarge(String),
    #[error("invalid ring ({axiom}): {detail}")]
    InvalidRing { axiom: &'static str, detail: String },
    #[error("invalid module ({law}): {detail}")]
    InvalidModule { law: &'static str, detail: String },
    #[error("invalid homomorphism: {0}")]
    InvalidHom(String),
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("submodules live in different ambient modules")]
    AmbientMismatch,
    #[error("incidence algebras need a commutative coefficient ring")]
    NonCommutativeBase,
    #[error("invalid preorder: {0}")]
    InvalidPreorder(String),
    #[error("module is not cyclic")]
    NotCyclic,
    #[error("preorder has no bottom element")]
    NoBottomElement,
    #[error("submodule is not fully invariant")]
    NotFullyInvariant,
    #[error("{0}")]
    Exceeded(#[from] crate::verdict::Exceeded),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("schema error at {path}: {detail}")]
    Schema { path: String, detail: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
