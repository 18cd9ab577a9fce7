use alloc::string::String;
use core::fmt;

use crate::gens::Gen;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the engine reports. Negative mathematical answers that are
/// part of an operation's contract (no lcm, not a conjugator, …) are values,
/// not errors, unless the operation's precondition itself fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    AsymmetricMatrix { s: String, t: String },
    BadDiagonal { s: String },
    BadOffDiagonal { s: String, t: String },
    DuplicateGenerator(String),
    RankTooLarge(usize),
    UnknownPreset(String),
    UnknownGenerator(String),
    DimensionMismatch { expected: usize, found: usize },
    NotSpherical,
    ComponentNotSpherical { letter: Gen },
    NotPiTransporter,
    NotInNormalizer,
    NotAConjugator,
    PreconditionFailed(&'static str),
    NotContained,
    NotInQuasiCentralizer,
    SupportOutsideSubset,
    NotEnumerable { order: Option<u128>, cap: usize },
    CapExceeded(&'static str),
    /// An internal consistency check failed. Seeing this is a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AsymmetricMatrix { s, t } => write!(f, "m({s},{t}) differs from m({t},{s})"),
            Error::BadDiagonal { s } => write!(f, "m({s},{s}) must be 1"),
            Error::BadOffDiagonal { s, t } => write!(f, "m({s},{t}) must be at least 2"),
            Error::DuplicateGenerator(s) => write!(f, "generator `{s}` declared twice"),
            Error::RankTooLarge(n) => write!(f, "rank {n} exceeds the supported maximum of 64"),
            Error::UnknownPreset(p) => write!(f, "unknown preset `{p}`"),
            Error::UnknownGenerator(s) => write!(f, "unknown generator `{s}`"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected a vector with {expected} coordinates, found {found}")
            }
            Error::NotSpherical => f.write_str("the subset is not of spherical type"),
            Error::ComponentNotSpherical { letter } => {
                write!(f, "the component of generator #{letter} is not of spherical type")
            }
            Error::NotPiTransporter => f.write_str("w⁻¹ does not carry Π_X onto Π_Y"),
            Error::NotInNormalizer => f.write_str("element does not normalize W_X"),
            Error::NotAConjugator => f.write_str("element is not a positive conjugator of the subset"),
            Error::PreconditionFailed(what) => write!(f, "precondition failed: {what}"),
            Error::NotContained => f.write_str("g·Δ_X²·g⁻¹ does not lie in A_Y"),
            Error::NotInQuasiCentralizer => f.write_str("element does not satisfy gX = Xg"),
            Error::SupportOutsideSubset => f.write_str("word uses letters outside the subset"),
            Error::NotEnumerable { order, cap } => match order {
                Some(o) => write!(f, "group of order {o} exceeds the enumeration cap {cap}"),
                None => write!(f, "group is infinite (enumeration cap {cap})"),
            },
            Error::CapExceeded(what) => write!(f, "enumeration cap exceeded: {what}"),
            Error::Internal(what) => write!(f, "internal consistency check failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}
