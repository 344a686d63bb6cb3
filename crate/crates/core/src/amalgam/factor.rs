use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::AmalgamError;
use crate::Dyadic;

/// An element of one of the two factors.
///
/// * `Torus { m, n }` is `aᵐbⁿ` in `⟨a, b | ab = ba⟩`.
/// * `Klein { m, n }` is `aᵐbⁿ` in `⟨a, b | ab = ba⁻¹⟩`.
/// * `Bs12 { t, k }` is `cᵗdᵏ` in `⟨c, d | c^d = c²⟩`, where `cᵗ` for
///   dyadic `t` stands for `dʲcⁿd⁻ʲ` with `t = n/2ʲ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorElement {
    Torus { m: BigInt, n: BigInt },
    Klein { m: BigInt, n: BigInt },
    Bs12 { t: Dyadic, k: i64 },
}

/// Which factor an element lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Factor {
    Torus,
    Klein,
    Bs12,
}

impl FactorElement {
    pub fn identity(f: Factor) -> Self {
        Self::core(f, BigInt::zero())
    }

    /// `bᶻ` in the first factor, `cᶻ` in the second.
    pub fn core(f: Factor, z: BigInt) -> Self {
        match f {
            Factor::Torus => FactorElement::Torus { m: BigInt::zero(), n: z },
            Factor::Klein => FactorElement::Klein { m: BigInt::zero(), n: z },
            Factor::Bs12 => FactorElement::Bs12 { t: Dyadic::from_integer(z), k: 0 },
        }
    }

    pub fn a(f: Factor) -> Self {
        match f {
            Factor::Torus => FactorElement::Torus { m: BigInt::one(), n: BigInt::zero() },
            _ => FactorElement::Klein { m: BigInt::one(), n: BigInt::zero() },
        }
    }

    pub fn d() -> Self {
        FactorElement::Bs12 { t: Dyadic::zero(), k: 1 }
    }

    pub fn factor(&self) -> Factor {
        match self {
            FactorElement::Torus { .. } => Factor::Torus,
            FactorElement::Klein { .. } => Factor::Klein,
            FactorElement::Bs12 { .. } => Factor::Bs12,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            FactorElement::Torus { m, n } | FactorElement::Klein { m, n } => m.is_zero() && n.is_zero(),
            FactorElement::Bs12 { t, k } => t.is_zero() && *k == 0,
        }
    }

    pub fn inverse(&self) -> Self {
        match self {
            FactorElement::Torus { m, n } => FactorElement::Torus { m: -m, n: -n },
            // (aᵐbⁿ)⁻¹ = b⁻ⁿa⁻ᵐ = a^{-(-1)ⁿm} b⁻ⁿ
            FactorElement::Klein { m, n } => {
                let m = if n.is_even() { -m } else { m.clone() };
                FactorElement::Klein { m, n: -n }
            }
            FactorElement::Bs12 { t, k } => FactorElement::Bs12 { t: -t.mul_pow2(*k), k: -k },
        }
    }

    /// Splits `x = bᶻ · r` with `r` the chosen representative of the right
    /// coset `⟨b⟩x`: `aᵐ` in the first factor, `cᶠdᵏ` with `0 ≤ f < 1` in
    /// the second.
    pub fn split_core(&self) -> (BigInt, FactorElement) {
        match self {
            FactorElement::Torus { m, n } => (n.clone(), FactorElement::Torus { m: m.clone(), n: BigInt::zero() }),
            // aᵐbⁿ = bⁿ · a^{(-1)ⁿm}
            FactorElement::Klein { m, n } => {
                let m = if n.is_even() { m.clone() } else { -m };
                (n.clone(), FactorElement::Klein { m, n: BigInt::zero() })
            }
            FactorElement::Bs12 { t, k } => (t.floor(), FactorElement::Bs12 { t: t.fract(), k: *k }),
        }
    }
}

/// Product in a single factor.
pub fn factor_mul(x: &FactorElement, y: &FactorElement) -> Result<FactorElement, AmalgamError> {
    use FactorElement::*;
    Ok(match (x, y) {
        (Torus { m, n }, Torus { m: p, n: q }) => Torus { m: m + p, n: n + q },
        (Klein { m, n }, Klein { m: p, n: q }) => {
            let p = if n.is_even() { p.clone() } else { -p };
            Klein { m: m + p, n: n + q }
        }
        // cᵗdᵏ · cˢdˡ = c^{t + s/2ᵏ} d^{k+l}
        (Bs12 { t, k }, Bs12 { t: s, k: l }) => Bs12 { t: t.clone() + s.mul_pow2(-k), k: k + l },
        _ => return Err(AmalgamError::MixedFactors),
    })
}

/// `Some(z)` iff `x` is `bᶻ` (first factor) or `cᶻ` (second factor).
pub fn amalgam_membership(x: &FactorElement) -> Option<BigInt> {
    match x {
        FactorElement::Torus { m, n } | FactorElement::Klein { m, n } => m.is_zero().then(|| n.clone()),
        FactorElement::Bs12 { t, k } => (*k == 0 && t.is_integer()).then(|| t.num.clone()),
    }
}

/// Whether `x` is a chosen coset representative.
pub(crate) fn is_representative(x: &FactorElement) -> bool {
    match x {
        FactorElement::Torus { n, .. } | FactorElement::Klein { n, .. } => n.is_zero(),
        FactorElement::Bs12 { t, .. } => !t.num.is_negative() && t.floor().is_zero(),
    }
}
