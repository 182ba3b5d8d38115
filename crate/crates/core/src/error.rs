use thiserror::Error;

/// Errors produced by the library. Every variant is a validation failure
/// on caller input except [`Error::Overflow`], which signals that an exact
/// integer computation left the 64-bit range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("normal vector entries must be positive")]
    NonPositiveEntry,
    #[error("normal vector entries are not coprime (gcd = {0})")]
    NotCoprime(i64),
    #[error("width {omega} must be positive and divide the sum {sum}")]
    WidthNotDivisor { omega: i64, sum: i64 },
    #[error("sum/width = {ratio} must satisfy 0 < sum/width < d = {dim}")]
    WidthRatioOutOfRange { ratio: i64, dim: usize },
    #[error("entry a_{index} = {value} is not smaller than the width {omega}")]
    EntryNotBelowWidth {
        index: usize,
        value: i64,
        omega: i64,
    },
    #[error("residue map is not onto Z/{omega}Z (gcd(a, omega) = {gcd})")]
    NotSurjective { omega: i64, gcd: i64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires d = {expected}, got d = {found}")]
    UnsupportedDimension { expected: usize, found: usize },
    #[error("operation requires the standard width (omega = sum)")]
    RequiresStandardWidth,
    #[error("not a permutation of 0..{0}")]
    InvalidPermutation(usize),
    #[error("direction {dir} out of range for d = {dim}")]
    InvalidDirection { dir: usize, dim: usize },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("generator matrix is rank deficient")]
    RankDeficient,
    #[error("window is empty")]
    EmptyWindow,
    #[error("window mismatch: {0}")]
    WindowMismatch(String),
    #[error("edge set is not periodic for the given lattice")]
    NotPeriodic,
    #[error("the diagonal vector (1,...,1) is not in the lattice")]
    DiagonalNotInLattice,
    #[error("translation lies in the lattice (its order in the quotient is 1)")]
    TrivialTranslation,
    #[error("quotient is not cyclic on t: no b_{dir} with e_{dir} + b t in K")]
    NotGenerator { dir: usize },
    #[error("fractional parts tie: point lies on a tile boundary")]
    TileBoundary,
    #[error("not a Christoffel-form word: {0}")]
    NotChristoffelForm(String),
    #[error("point is not in the stepped surface")]
    NotInSurface,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
