use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::factor::{factor_mul, is_representative, Factor, FactorElement};
use super::AmalgamError;
use crate::fpgroups::{free_reduce, Letter, Word};
use crate::Dyadic;

/// Generator indices of `⟨a, c, d⟩`.
pub const GEN_A: usize = 0;
pub const GEN_C: usize = 1;
pub const GEN_D: usize = 2;

/// An element of `H_ε` in normal form `bᶻ · r₁ ⋯ rₙ`.
///
/// Each `rᵢ` is a nontrivial representative of a right coset of the
/// amalgamated subgroup `⟨b⟩ = ⟨c⟩`, and consecutive `rᵢ` lie in different
/// factors. Equal elements have identical normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AmalgamElement {
    eps: i8,
    core: BigInt,
    syllables: Vec<FactorElement>,
}

fn check_eps(eps: i8) -> Result<(), AmalgamError> {
    if eps == 1 || eps == -1 {
        Ok(())
    } else {
        Err(AmalgamError::InvalidEpsilon(eps))
    }
}

impl AmalgamElement {
    pub fn identity(eps: i8) -> Result<Self, AmalgamError> {
        check_eps(eps)?;
        Ok(AmalgamElement { eps, core: BigInt::zero(), syllables: Vec::new() })
    }

    pub fn eps(&self) -> i8 {
        self.eps
    }

    pub fn core(&self) -> &BigInt {
        &self.core
    }

    pub fn syllables(&self) -> &[FactorElement] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.core.is_zero() && self.syllables.is_empty()
    }

    /// The vertex group factor for this `ε`.
    pub fn first_factor(&self) -> Factor {
        if self.eps > 0 {
            Factor::Torus
        } else {
            Factor::Klein
        }
    }

    /// Replaces `self` by `x · self`.
    pub fn left_mul_factor(&mut self, x: &FactorElement) -> Result<(), AmalgamError> {
        let f = x.factor();
        if f != Factor::Bs12 && f != self.first_factor() {
            return Err(AmalgamError::MixedFactors);
        }
        let mut y = factor_mul(x, &FactorElement::core(f, std::mem::take(&mut self.core)))?;
        if self.syllables.first().is_some_and(|s| s.factor() == f) {
            let first = self.syllables.remove(0);
            y = factor_mul(&y, &first)?;
        }
        let (z, r) = y.split_core();
        if !r.is_identity() {
            self.syllables.insert(0, r);
        }
        self.core = z;
        Ok(())
    }

    /// Replaces `self` by `g · self` for a generator letter over `a, c, d`.
    pub fn left_mul_letter(&mut self, l: Letter) -> Result<(), AmalgamError> {
        let x = match l.gen {
            GEN_A => FactorElement::a(self.first_factor()),
            GEN_C => {
                self.core += if l.inverse { -1 } else { 1 };
                return Ok(());
            }
            GEN_D => FactorElement::d(),
            g => return Err(AmalgamError::UnknownSymbol(format!("generator {g}"))),
        };
        self.left_mul_factor(&if l.inverse { x.inverse() } else { x })
    }

    pub fn inverse(&self) -> Self {
        let mut out = AmalgamElement { eps: self.eps, core: -&self.core, syllables: Vec::new() };
        for s in &self.syllables {
            out.left_mul_factor(&s.inverse()).expect("syllables belong to this group");
        }
        out
    }

    /// A word for the element. Its length grows with `|core|`.
    pub fn to_word(&self) -> Word {
        let mut w = power(GEN_C, &self.core);
        for s in &self.syllables {
            match s {
                FactorElement::Torus { m, .. } | FactorElement::Klein { m, .. } => w.extend(power(GEN_A, m)),
                FactorElement::Bs12 { t, k } => {
                    // c^{p/2ᵉ} = dᵉ cᵖ d⁻ᵉ
                    let e = BigInt::from(t.exp);
                    w.extend(power(GEN_D, &e));
                    w.extend(power(GEN_C, &t.num));
                    w.extend(power(GEN_D, &-e));
                    w.extend(power(GEN_D, &BigInt::from(*k)));
                }
            }
        }
        free_reduce(&w)
    }

    /// Strict alternation of nontrivial chosen representatives.
    pub fn is_canonical(&self) -> bool {
        let first = self.first_factor();
        self.syllables
            .iter()
            .all(|s| is_representative(s) && !s.is_identity() && (s.factor() == first || s.factor() == Factor::Bs12))
            && self.syllables.windows(2).all(|p| p[0].factor() != p[1].factor())
    }

    /// Space-separated tokens: the core, then `A:<m>` or `B:<num>:<exp>:<k>`
    /// per syllable.
    pub fn to_tokens(&self) -> String {
        let mut out = self.core.to_string();
        for s in &self.syllables {
            match s {
                FactorElement::Torus { m, .. } | FactorElement::Klein { m, .. } => out.push_str(&format!(" A:{m}")),
                FactorElement::Bs12 { t, k } => out.push_str(&format!(" B:{}:{}:{k}", t.num, t.exp)),
            }
        }
        out
    }

    pub fn from_tokens(eps: i8, text: &str) -> Result<Self, AmalgamError> {
        let mut x = AmalgamElement::identity(eps)?;
        let bad = |t: &str| AmalgamError::Parse(format!("bad token `{t}`"));
        let mut toks = text.split_whitespace();
        let core = toks.next().ok_or_else(|| AmalgamError::Parse("empty normal form".into()))?;
        x.core = core.parse().map_err(|_| bad(core))?;
        for t in toks {
            let parts: Vec<&str> = t.split(':').collect();
            let s = match parts.as_slice() {
                ["A", m] => {
                    let m: BigInt = m.parse().map_err(|_| bad(t))?;
                    match x.first_factor() {
                        Factor::Torus => FactorElement::Torus { m, n: BigInt::zero() },
                        _ => FactorElement::Klein { m, n: BigInt::zero() },
                    }
                }
                ["B", num, exp, k] => FactorElement::Bs12 {
                    t: Dyadic::new(num.parse().map_err(|_| bad(t))?, exp.parse().map_err(|_| bad(t))?),
                    k: k.parse().map_err(|_| bad(t))?,
                },
                _ => return Err(bad(t)),
            };
            x.syllables.push(s);
        }
        if !x.is_canonical() {
            return Err(AmalgamError::Parse(format!("`{text}` is not a normal form")));
        }
        Ok(x)
    }
}

impl fmt::Display for AmalgamElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_tokens())
    }
}

fn power(gen: usize, e: &BigInt) -> Word {
    let n = e.abs().to_usize().expect("exponent fits in memory");
    vec![Letter::new(gen, e.is_negative()); n]
}

/// Normal form of a word over `a, c, d` (generator indices 0, 1, 2) in
/// `H_ε = ⟨a, c, d | a^c = a^ε, c^d = c²⟩`.
pub fn normal_form(w: &[Letter], eps: i8) -> Result<AmalgamElement, AmalgamError> {
    let mut x = AmalgamElement::identity(eps)?;
    for &l in w.iter().rev() {
        x.left_mul_letter(l)?;
    }
    Ok(x)
}

/// [`normal_form`] of a word written as tokens `a`, `c-`, `d`, ...
pub fn normal_form_str(text: &str, eps: i8) -> Result<AmalgamElement, AmalgamError> {
    normal_form(&parse_acd(text)?, eps)
}

pub(crate) fn parse_acd(text: &str) -> Result<Word, AmalgamError> {
    text.split_whitespace()
        .map(|tok| {
            let (name, inverse) = match tok.strip_suffix('-') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let gen = match name {
                "a" => GEN_A,
                "c" => GEN_C,
                "d" => GEN_D,
                _ => return Err(AmalgamError::UnknownSymbol(tok.to_owned())),
            };
            Ok(Letter::new(gen, inverse))
        })
        .collect()
}

/// Product of normal forms.
pub fn amalgam_mul(x: &AmalgamElement, y: &AmalgamElement) -> Result<AmalgamElement, AmalgamError> {
    if x.eps != y.eps {
        return Err(AmalgamError::MixedEpsilon);
    }
    let mut out = y.clone();
    for s in x.syllables.iter().rev() {
        out.left_mul_factor(s)?;
    }
    out.core += &x.core;
    Ok(out)
}

/// The generator `g` of `H_ε` as an element.
pub fn generator(gen: usize, eps: i8) -> Result<AmalgamElement, AmalgamError> {
    normal_form(&[Letter::pos(gen)], eps)
}
