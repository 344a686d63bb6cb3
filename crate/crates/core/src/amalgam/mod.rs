//! The groups `H_ε = ⟨a, c, d | a^c = a^ε, c^d = c²⟩` as amalgamated
//! products `G_ε ∗_{b=c} BS(1,2)`, and balls in the universal covers of
//! their presentation complexes.

mod ball;
mod dyadic;
mod factor;
mod iso;
mod normal_form;

pub use ball::{cayley_ball, model_ball, AmalgamModel, BallComplex, GroupModel, TorusModel, DEFAULT_VERTEX_CAP};
pub use dyadic::DyadicRational;
pub use factor::{amalgam_membership, factor_mul, Factor, FactorElement};
pub use iso::{balls_isomorphic, BallIsomorphism};
pub use normal_form::{amalgam_mul, generator, normal_form, normal_form_str, AmalgamElement, GEN_A, GEN_C, GEN_D};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AmalgamError {
    #[error("ε must be +1 or -1, got {0}")]
    InvalidEpsilon(i8),
    #[error("elements of different factors")]
    MixedFactors,
    #[error("elements of different groups H_ε")]
    MixedEpsilon,
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("{0}")]
    Parse(String),
    #[error("ball exceeds the vertex cap of {cap}")]
    BallTooLarge { cap: usize },
    #[error("radius mismatch: {left} vs {right}")]
    RadiusMismatch { left: usize, right: usize },
}
