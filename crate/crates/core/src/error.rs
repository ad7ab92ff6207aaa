use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field degree {0} is even; Suzuki groups need an odd degree")]
    EvenDegree(u32),
    #[error("field degree {0} is too small (need at least 3)")]
    DegreeTooSmall(u32),
    #[error("field degree {0} exceeds the supported maximum")]
    DegreeTooLarge(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("all projective coordinates are zero")]
    AllZeroCoordinates,
    #[error("point index {0} is outside the ovoid")]
    InvalidPoint(u64),
    #[error("torus parameter must be nonzero")]
    ZeroTorusParameter,
    #[error("generator does not preserve the ovoid: {0}")]
    OvoidNotPreserved(String),
    #[error("word applies field automorphisms with unbalanced total exponent")]
    UnbalancedFieldAuto,
    #[error("full tier needs |G| = {order} <= {threshold}")]
    TierExceeded { order: u128, threshold: u128 },
    #[error("no triality: 3 does not divide the field degree {0}")]
    NoTriality(u32),
    #[error("base point is fixed by the triality")]
    BasePointFixed,
    #[error("{0} is not the order of an odd-order element of the group")]
    NotRealizable(u64),
    #[error("not a valid base involution: {0}")]
    InvalidBaseInvolution(String),
    #[error("triangle is degenerate")]
    DegenerateTriangle,
    #[error("m = {0} is not prime; results are empirical only")]
    NonPrimeM(u64),
    #[error("elements do not form a flag")]
    NotAFlag,
    #[error("subgroup closure exceeded {0} elements")]
    ClosureTooLarge(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
