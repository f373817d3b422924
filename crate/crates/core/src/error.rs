use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition part {0} is smaller than 2")]
    PartTooSmall(u32),

    #[error("sphere factor S^{} is not allowed: factor degrees must be at least 2", 2 * .0)]
    SphereDegreeTooSmall(u32),

    #[error("sphere product with {got} factors exceeds the cap of {cap}")]
    TooManyFactors { got: usize, cap: usize },

    #[error("factor index {index} out of range for a product of {factors} spheres")]
    FactorIndexOutOfRange { index: usize, factors: usize },

    #[error("cohomology classes live on different sphere products: {left:?} vs {right:?}")]
    BaseMismatch { left: Vec<u32>, right: Vec<u32> },

    #[error("class has a nonzero degree-2 component, which an SU-class cannot have")]
    NonzeroFirstChern,

    #[error("expected a class of virtual dimension 1, found {0}")]
    NotUnitClass(String),

    #[error("expected virtual dimension {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("generator bundle needs n >= 2, got {0}")]
    GeneratorDegree(u32),

    #[error("weights differ: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },

    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(u64, u64),

    #[error("{0} is not a valid Bezout pair")]
    BadBezoutPair(String),

    #[error("reconstruction precondition fails: m * xi_k != k * xi_m")]
    IncompatibleMultiples,

    #[error("multiplicities must be positive, got {0}")]
    NonPositive(i64),

    #[error("characteristic vector keys for n = {n} are not the partitions of n: {detail}")]
    MalformedCharVector { n: u32, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}
