//! Error taxonomy shared by every module.
//!
//! Each variant carries a stable machine-readable code (see [`Error::code`])
//! that the batch interface emits verbatim.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid cusp cycle: {0}")]
    InvalidCycle(String),
    #[error("monodromy trace {0} is below 3")]
    TraceTooSmall(String),
    #[error("discriminant cover of length {0} is too large to materialize")]
    CoverTooLarge(String),

    #[error("invalid plumbing graph: {0}")]
    InvalidGraph(String),
    #[error("single-vertex nodal graphs have no plumbing matrix; use the cusp monodromy")]
    LoopUnsupported,

    #[error("invalid quotient-cusp data: {0}")]
    InvalidQuotientCuspData(String),
    #[error("degenerate universal abelian cover (a = d = 1)")]
    DegenerateCover,
    #[error("exponent tuple {0} does not satisfy the cover constraints")]
    TupleNotValid(String),

    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    #[error("invalid cyclic quotient: {0}")]
    InvalidCyclicQuotient(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("1/{0}(1,{1}) is neither a rational double point nor of class T")]
    NotClassT(i64, i64),

    #[error("degree {0} is not positive")]
    InvalidDegree(i64),
    #[error("degree {0} is below 5; the surface is not of general type")]
    DegreeTooSmall(i64),
    #[error("long exact sequence is underdetermined: {0}")]
    AmbiguousRank(String),
    #[error("long exact sequence is inconsistent: {0}")]
    InconsistentSequence(String),

    #[error("ray {0} already spans a ray of the fan")]
    RayOnExistingRay(String),
    #[error("ray {0} is not in the interior of any top cone")]
    RayOutsideSupport(String),
    #[error("ray {0} is not a ray of the fan")]
    RayNotFound(String),
    #[error("removing ray {0} does not leave a strictly convex cone")]
    MergeNotConvex(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("pairing with c1(lambda_2) is zero")]
    ZeroPairing,
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::InvalidCycle(_) => "InvalidCycle",
            Error::TraceTooSmall(_) => "TraceTooSmall",
            Error::CoverTooLarge(_) => "CoverTooLarge",
            Error::InvalidGraph(_) => "InvalidGraph",
            Error::LoopUnsupported => "LoopUnsupported",
            Error::InvalidQuotientCuspData(_) => "InvalidQuotientCuspData",
            Error::DegenerateCover => "DegenerateCover",
            Error::TupleNotValid(_) => "TupleNotValid",
            Error::InvalidTriple(_) => "InvalidTriple",
            Error::InvalidCyclicQuotient(_) => "InvalidCyclicQuotient",
            Error::NotCoprime(..) => "NotCoprime",
            Error::NotClassT(..) => "NotClassT",
            Error::InvalidDegree(_) => "InvalidDegree",
            Error::DegreeTooSmall(_) => "DegreeTooSmall",
            Error::AmbiguousRank(_) => "AmbiguousRank",
            Error::InconsistentSequence(_) => "InconsistentSequence",
            Error::RayOnExistingRay(_) => "RayOnExistingRay",
            Error::RayOutsideSupport(_) => "RayOutsideSupport",
            Error::RayNotFound(_) => "RayNotFound",
            Error::MergeNotConvex(_) => "MergeNotConvex",
            Error::InvalidFan(_) => "InvalidFan",
            Error::ZeroPairing => "ZeroPairing",
        }
    }
}
