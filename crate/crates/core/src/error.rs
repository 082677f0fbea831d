use core::fmt;

use crate::lattice::{Direction, WallFamily, Weight};
use crate::weyl::AffineElement;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `ℓ` must be at least 3.
    InvalidEll(i64),
    ParallelDirection(Direction, WallFamily),
    NotSingleWall(Weight),
    NoUniqueEdge { mu: Weight, edges: usize },
    NotLeapable(Weight),
    NoCornerReached(Weight),
    /// A billiard ball was about to hit a vertex of its alcove.
    CornerHit(Weight),
    NoInteriorEdge(Weight),
    NotAlmostCorner(Weight),
    WallPropertyViolation { mu: Weight, reason: &'static str },
    NoSinks,
    NotMinimal(AffineElement),
    NotStrictlyDominant(Weight),
    NegativeExponent(i32),
    TruncationTooSmall { needed: u32, available: u32 },
    NonUniqueDescent { index: u32, descents: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidEll(ell) => write!(f, "ell must be at least 3, got {ell}"),
            Error::ParallelDirection(d, w) => {
                write!(f, "direction {d:?} is parallel to walls of family {w:?}")
            }
            Error::NotSingleWall(mu) => write!(f, "{mu} does not lie on exactly one wall"),
            Error::NoUniqueEdge { mu, edges } => {
                write!(f, "{mu} has {edges} outgoing wall edges, expected exactly one")
            }
            Error::NotLeapable(mu) => {
                write!(f, "{mu} is a corner or almost corner; no giant leap possible")
            }
            Error::NoCornerReached(mu) => {
                write!(f, "no corner reached from {mu} within ell - 2 steps")
            }
            Error::CornerHit(mu) => write!(f, "billiard trajectory hit the alcove vertex {mu}"),
            Error::NoInteriorEdge(mu) => write!(f, "no edge from {mu} enters the alcove interior"),
            Error::NotAlmostCorner(mu) => write!(f, "{mu} is not an almost corner"),
            Error::WallPropertyViolation { mu, reason } => {
                write!(f, "wall-type correspondence fails at {mu}: {reason}")
            }
            Error::NoSinks => write!(f, "tree has no sinks to glue onto"),
            Error::NotMinimal(x) => write!(f, "{x} is not a minimal coset representative"),
            Error::NotStrictlyDominant(mu) => write!(f, "{mu} is not strictly dominant"),
            Error::NegativeExponent(e) => write!(f, "negative exponent {e} not allowed here"),
            Error::TruncationTooSmall { needed, available } => write!(
                f,
                "multiset is complete only up to label {available}, need {needed}"
            ),
            Error::NonUniqueDescent { index, descents } => {
                write!(f, "x_{index} has {descents} right descents, expected one")
            }
        }
    }
}

impl core::error::Error for Error {}
