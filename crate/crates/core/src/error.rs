use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("blocks overlap or fail to cover all {size} points")]
    OverlapOrGap { size: usize },

    #[error("point {point} is out of range for {size} points")]
    OutOfRange { point: usize, size: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("block `{block}` does not meet both rows")]
    NotBiequivalence { block: String },

    #[error("degree {degree} is too small (need at least {min})")]
    DegreeTooSmall { degree: usize, min: usize },

    #[error("index {index} is outside {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("element is not fixed by epsilon on both sides")]
    NotInLocalSubmonoid,

    #[error("element is not a unit")]
    NotAUnit,

    #[error("enumeration exceeded the cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
