use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} unsupported")]
    UnsupportedCharacteristic(u64),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("target ring has no variable '{0}'")]
    MissingTargetVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error at offset {position}: {message}")]
    Parse { message: String, position: usize },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("projective scheme is not zero-dimensional")]
    PositiveDimensional,
    #[error("support is not the origin")]
    SupportNotAtOrigin,
    #[error("irrational support: eliminant in '{0}' does not split into linear factors")]
    IrrationalSupport(String),
    #[error("local algebra is not Gorenstein (socle dimension {0})")]
    NotGorenstein(usize),
    #[error("algebra of degree {0} is outside the classified range (at most 6)")]
    DegreeTooLarge(usize),
    #[error("Hilbert function {0:?} is not realizable by a Gorenstein algebra of this degree")]
    UnrealizableHilbertFunction(Vec<usize>),
    #[error("the empty scheme has no label")]
    EmptyScheme,
    #[error("generator is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("saturation did not stabilize after {0} steps")]
    SaturationLimit(usize),
    #[error("colon by the zero ideal")]
    ZeroColon,
    #[error("exact division failed: {0}")]
    InexactDivision(String),
    #[error("no regular linear form found after {0} trials")]
    NoRegularForm(usize),
    #[error("scheme is not arithmetically Gorenstein")]
    NotArithmeticallyGorenstein,
    #[error("Hilbert function did not stabilize by degree {0}")]
    NoStabilization(usize),
    #[error("point is not on the scheme")]
    PointNotOnScheme,
    #[error("point is not a reduced point of the scheme (local length {0})")]
    PointNotReduced(usize),
    #[error("span codimension {r} is not admissible for an aG scheme of degree {degree} in P^{n}")]
    InadmissibleStratum { r: usize, degree: usize, n: usize },
    #[error("index h = {h} outside 1..={max} for degree {d}")]
    BettiIndex { d: usize, h: usize, max: usize },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
