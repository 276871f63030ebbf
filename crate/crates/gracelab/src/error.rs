use thiserror::Error;

/// Errors shared by all modules.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("value {value} out of range for domain of size {n}")]
    ValueOutOfRange { value: usize, n: usize },

    #[error("domain must be nonempty")]
    EmptyDomain,

    #[error("sequence of length {len} is not a bijection on [0, {n})")]
    NotABijection { len: usize, n: usize },

    #[error("rank {rank} out of range for n = {n}")]
    RankOutOfRange { rank: u64, n: usize },

    #[error("n = {n} exceeds the supported bound {max} for {what}")]
    TooLarge {
        n: usize,
        max: usize,
        what: &'static str,
    },

    #[error("n = {n} outside the supported range [{min}, {max}] for {what}")]
    OutOfSupportedRange {
        n: usize,
        min: usize,
        max: usize,
        what: &'static str,
    },

    #[error("expected a tree function (f(0) = 0 and f(i) < i)")]
    NotATreeFunction,

    #[error("search requires a rooted tree shape (a single attractive fixed point)")]
    UnsupportedSearchInput,

    #[error("permutation is not a graceful labeling of the given function")]
    NotGraceful,

    #[error("label multiplier j = {j} out of range [0, {max}]")]
    StarCenterOutOfRange { j: usize, max: usize },

    #[error("ell = {ell} outside the valid range 1 <= ell < {bound} (empty for n <= 3)")]
    EllOutOfRange { ell: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
