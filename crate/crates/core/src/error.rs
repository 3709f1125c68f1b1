use num_bigint::BigUint;
use thiserror::Error;

/// Failures raised by the exact invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a root of {cartan_type}: {root}")]
    NotARoot { cartan_type: String, root: String },

    #[error("simple root index {index} out of range for rank {rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },

    /// The orbit (or coset space) has more elements than the enumeration cap.
    #[error("orbit too large to enumerate (cap {cap}); use orbit_index = {orbit_index}")]
    OrbitTooLarge { cap: usize, orbit_index: BigUint },

    #[error("orbit is a point, no fibration")]
    PointOrbit,

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("invalid morphism data: {0}")]
    InvalidHomData(String),

    #[error("object index {index} out of range for {count} objects")]
    ObjectOutOfRange { index: usize, count: usize },

    #[error("object order undefined, resolve collisions: {0}")]
    ObjectOrderUndefined(String),

    #[error("value exceeds 64-bit range: {0}")]
    Overflow(String),

    #[error("invalid diamond: {0}")]
    InvalidDiamond(String),
}

pub type Result<T> = std::result::Result<T, Error>;
