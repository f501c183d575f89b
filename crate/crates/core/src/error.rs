use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a numerical semigroup needs at least one generator")]
    EmptyGenerators,
    #[error("generators must be positive, got {0}")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}; the semigroup is not cofinite")]
    NonCofinite(u64),
    #[error("generator t^{0} is not an element of the ring")]
    GeneratorNotInRing(i64),
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("ideal is not m-primary (zero or unit ideal)")]
    NotMPrimary,
    #[error("degree bound {bound} is below the conductor exponent {conductor}")]
    BoundTooSmall { bound: usize, conductor: usize },
    #[error("characteristic mismatch: {0} vs {1}")]
    CharacteristicMismatch(u32, u32),
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("generator is not homogeneous")]
    InhomogeneousGenerator,
    #[error("exponent k = {k} must be below the characteristic {p}")]
    ExponentOutOfRange { k: u32, p: u32 },
    #[error("unsupported prime {0} (expected one of 3, 5, 7)")]
    UnsupportedPrime(u32),
    #[error("unknown closure operation `{0}`")]
    UnknownClosure(String),
    #[error("closure `{0}` needs an ideal T")]
    MissingTIdeal(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
