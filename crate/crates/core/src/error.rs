use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hypersurface degree must be at least 1, got {0}")]
    InvalidDegree(i64),

    #[error("rank must be positive")]
    ZeroRank,

    #[error("rank {rank} bundle cannot have nonzero c{index}")]
    ChernAboveRank { rank: u32, index: u8 },

    #[error("not a bundle class: {0}")]
    NotBundleClass(String),

    #[error("Euler characteristic {0} is not an integer")]
    NonIntegralEuler(Rational),

    #[error("normalization unknown: descriptor carries no b")]
    NormalizationUnknown,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("Ext^1 bound not justified: h^3(F(m) x E^dual) is not known to vanish")]
    BoundNotJustified,

    #[error("case index must be in 1..=7, got {0}")]
    UnknownCase(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
