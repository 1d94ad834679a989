use thiserror::Error;

use crate::composition::Composition;
use crate::qsym::Basis;
use crate::tableau::Cell;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<u32>),

    #[error("cannot parse composition from {0:?}")]
    ParseComposition(String),

    #[error("cannot parse filling: {0}")]
    ParseFilling(String),

    #[error("compositions have different sizes ({left} vs {right})")]
    SizeMismatch { left: u32, right: u32 },

    #[error("descent set {set:?} is not a subset of 1..{n}")]
    InvalidDescentSet { set: Vec<u32>, n: u32 },

    #[error("{0} is not a partition")]
    NotPartition(Composition),

    #[error("filling entries must be positive")]
    ZeroEntry,

    #[error("filling is not standard")]
    NotStandard,

    #[error("filling is not a semistandard Young composition tableau")]
    NotSsyct,

    #[error("filling is not a dual immaculate recording tableau")]
    NotDirt,

    #[error("shapes differ: {left} vs {right}")]
    ShapeMismatch { left: Composition, right: Composition },

    #[error("cell {0} is not in the diagram")]
    EmptyCell(Cell),

    #[error("entry at {0} is not virtuous")]
    NotVirtuous(Cell),

    #[error("cannot open a new row for {0}: the leftmost column already contains it")]
    ColumnConflict(u32),

    #[error("letter {0} repeats in the word")]
    RepeatedLetter(u32),

    #[error("rapture produced an infinite output while uninserting")]
    InfiniteRaptureOutput,

    #[error("basis {0} has no monomial expansion")]
    NotQuasisymmetric(String),

    #[error("cannot expand {from} in {to}")]
    UnsupportedPair { from: Basis, to: Basis },

    #[error("unknown basis {0:?}")]
    UnknownBasis(String),

    #[error("expressions have different degrees ({left} vs {right})")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("coefficient overflow")]
    Overflow,

    #[error("change of basis is singular in degree {0}")]
    Singular(u32),

    #[error("size {requested} exceeds the limit {limit}; pass --force or raise QSC_MAX_N")]
    GuardExceeded { requested: u32, limit: u32 },

    #[error("non-integral coefficient {value} at {at}")]
    NonIntegral { at: Composition, value: String },
}
