//! Combinatorial 2-complexes and their coverings.

mod classify;
mod complex;
mod covering;
pub mod format;
mod from_table;
mod glue;
mod split;
mod triangulate;

pub use classify::{classify_reduced, classify_small_complex, fundamental_group, Classification, FreeProductWitness};
pub use complex::{cell_cost, is_proper_power, least_dart_rotation, presentation_complex, TwoComplex};
pub use covering::{ComplexCovering, ComplexVerdict, ComplexViolation};
pub use from_table::cover_from_coset_table;
pub use glue::{glue_covers, CoverPair, GluedCover, GluingInput};
pub use split::{two_dimensional_part, Split};
pub use triangulate::{fan_triangulate, TriangleOrigin, Triangulation};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),
    #[error("face {0} is empty")]
    EmptyFace(usize),
    #[error("face {0} uses a dart outside the skeleton")]
    DartOutOfRange(usize),
    #[error("boundary of face {0} is not a closed walk")]
    OpenWalk(usize),
    #[error("relator {0} is empty")]
    EmptyRelator(usize),
    #[error("cell below triangle size: face {face} has length {length}")]
    CellBelowTriangle { face: usize, length: usize },
    #[error("unsupported attaching map: face {0} is a proper power")]
    UnsupportedAttachingMap(usize),
    #[error("coset table does not fit the complex: {0}")]
    TableMismatch(String),
    #[error("invalid covering: {0}")]
    InvalidCovering(String),
    #[error("inconsistent {what}: {left} vs {right}")]
    Inconsistent { what: String, left: usize, right: usize },
    #[error("{what} = {degree} is not divisible by q = {q}")]
    Indivisible { what: String, degree: usize, q: usize },
    #[error("expected at most two faces, found {0}")]
    TooManyFaces(usize),
    #[error("face {face} has length {length}, expected a triangle")]
    NotTriangle { face: usize, length: usize },
    #[error("shape outside the case table: {0}")]
    Unclassified(String),
}
