//! Combinatorial covering-space toolkit.
//!
//! * [`graph`]: dart-based multigraphs, covering verification, degree
//!   refinement and Leighton's common finite cover (coloured variant included).
//! * [`complex2`]: combinatorial 2-complexes, presentation complexes, fan
//!   triangulation, complex coverings, covers from coset tables, gluing of
//!   common covers and the classifier for complexes with at most two triangles.
//! * [`fpgroups`]: finitely presented groups, coset enumeration, low-index
//!   subgroups, Reidemeister–Schreier rewriting and abelian invariants.
//! * [`amalgam`]: exact normal forms in `⟨a, c, d | a^c = a^ε, c^d = c²⟩`
//!   and balls in the universal covers of their presentation complexes.
//! * [`papercheck`]: the verification suite composing all of the above.

pub mod amalgam;
pub mod complex2;
pub mod fpgroups;
pub mod graph;
pub mod papercheck;

use num_bigint::BigInt;
use thiserror::Error;

/// Dyadic rationals with arbitrary-precision numerators.
pub type Dyadic = amalgam::DyadicRational<BigInt>;
/// Dyadic rationals on machine integers, for bounded computations.
pub type SmallDyadic = amalgam::DyadicRational<i64>;
/// Integer matrices over arbitrary-precision integers.
pub type BigMatrix = fpgroups::IntMatrix<BigInt>;
/// Integer matrices over machine integers.
pub type SmallMatrix = fpgroups::IntMatrix<i64>;

/// Errors from the text formats.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing entry for {0}")]
    Missing(String),
    #[error("unknown {0}")]
    Unknown(String),
    #[error("{0}")]
    Invalid(String),
}
