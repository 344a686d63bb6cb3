use std::fmt;

use super::GroupError;
use crate::FormatError;

/// A generator or its inverse. Columns of coset tables are indexed by
/// [`Letter::col`]: `2·gen` for the generator, `2·gen + 1` for its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

pub type Word = Vec<Letter>;

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn col(self) -> usize {
        2 * self.gen + self.inverse as usize
    }

    pub fn from_col(col: usize) -> Self {
        Letter { gen: col / 2, inverse: col % 2 == 1 }
    }

    /// `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

pub fn invert(w: &[Letter]) -> Word {
    w.iter().rev().map(|l| l.inv()).collect()
}

pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == w[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// Least rotation of a cyclic word under the derived order on letters.
pub fn least_rotation(w: &[Letter]) -> Word {
    (0..w.len().max(1))
        .map(|r| w.iter().cycle().skip(r).take(w.len()).copied().collect::<Word>())
        .min()
        .unwrap_or_default()
}

/// Canonical representative of a cyclic word up to rotation and inversion.
pub fn cyclic_class(w: &[Letter]) -> Word {
    let w = cyclic_reduce(w);
    least_rotation(&w).min(least_rotation(&invert(&w)))
}

/// Exponent sum of every generator.
pub fn exponent_sums(w: &[Letter], gens: usize) -> Vec<i64> {
    let mut sums = vec![0; gens];
    for l in w {
        sums[l.gen] += l.exponent();
    }
    sums
}

/// A finite presentation `⟨generators | relators⟩` with freely reduced,
/// nonempty relators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        let mut rels = Vec::with_capacity(relators.len());
        for (i, r) in relators.into_iter().enumerate() {
            if let Some(l) = r.iter().find(|l| l.gen >= generators.len()) {
                return Err(GroupError::UnknownGenerator(format!("index {}", l.gen)));
            }
            let r = free_reduce(&r);
            if r.is_empty() {
                return Err(GroupError::EmptyRelator(i));
            }
            rels.push(r);
        }
        Ok(Presentation { generators, relators: rels })
    }

    /// Like [`Presentation::new`] but silently drops relators that reduce
    /// to the empty word.
    pub(crate) fn new_lenient(generators: Vec<String>, relators: Vec<Word>) -> Self {
        let relators = relators.iter().map(|r| free_reduce(r)).filter(|r| !r.is_empty()).collect();
        Presentation { generators, relators }
    }

    /// Builds a presentation from generator names and relator strings in
    /// the token syntax `c- a c a-`.
    pub fn from_strs(gens: &[&str], rels: &[&str]) -> Result<Self, GroupError> {
        let generators: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        let relators = rels.iter().map(|r| parse_word(r, &generators)).collect::<Result<Vec<_>, _>>()?;
        Presentation::new(generators, relators)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, GroupError> {
        parse_word(text, &self.generators)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        format_word(w, &self.generators)
    }

    /// Parses the `.pres` format: a `gens:` line followed by `rel:` lines.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut gens: Option<Vec<String>> = None;
        let mut rels = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let syntax = |msg: String| FormatError::Syntax { line: i + 1, msg };
            if let Some(rest) = line.strip_prefix("gens:") {
                if gens.is_some() {
                    return Err(syntax("second gens line".into()));
                }
                gens = Some(rest.split_whitespace().map(str::to_owned).collect());
            } else if let Some(rest) = line.strip_prefix("rel:") {
                let g = gens.as_ref().ok_or_else(|| syntax("rel before gens".into()))?;
                let w = parse_word(rest, g).map_err(|e| syntax(e.to_string()))?;
                if w.is_empty() {
                    return Err(syntax("empty relator".into()));
                }
                rels.push(w);
            } else {
                return Err(syntax(format!("unexpected line `{line}`")));
            }
        }
        let gens = gens.ok_or_else(|| FormatError::Invalid("missing gens line".into()))?;
        Presentation::new(gens, rels).map_err(|e| FormatError::Invalid(e.to_string()))
    }

    pub fn write(&self) -> String {
        let mut out = format!("gens: {}\n", self.generators.join(" "));
        for r in &self.relators {
            out.push_str(&format!("rel: {}\n", self.format_word(r)));
        }
        out
    }

    /// Relator exponent-sum matrix: one row per relator, one column per
    /// generator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| exponent_sums(r, self.generators.len())).collect()
    }

    /// Tietze simplification: repeatedly drops trivial and duplicate
    /// relators and eliminates a generator occurring exactly once in some
    /// relator, preferring the one with the fewest occurrences elsewhere.
    /// Relator order is kept so results are deterministic.
    pub fn simplify(&self) -> Presentation {
        let mut gens: Vec<Option<String>> = self.generators.iter().cloned().map(Some).collect();
        let mut rels: Vec<Word> = self.relators.iter().map(|r| cyclic_reduce(r)).collect();
        loop {
            rels.retain(|r| !r.is_empty());
            let mut seen = std::collections::HashSet::new();
            rels.retain(|r| seen.insert(cyclic_class(r)));

            // prefer generators that occur in few other relators
            let total = |g: usize| rels.iter().flatten().filter(|l| l.gen == g).count();
            let found = rels
                .iter()
                .enumerate()
                .flat_map(|(i, r)| {
                    let mut counts = std::collections::BTreeMap::<usize, usize>::new();
                    for l in r {
                        *counts.entry(l.gen).or_default() += 1;
                    }
                    counts.into_iter().filter(|&(_, c)| c == 1).map(move |(g, _)| (i, g))
                })
                .min_by_key(|&(i, g)| (total(g), i, g));
            let Some((i, g)) = found else { break };
            let r = rels.remove(i);
            let p = r.iter().position(|l| l.gen == g).unwrap();
            // r = u x^e v  ⇒  x^e = u⁻¹ v⁻¹ and x = (v u)^{-e}
            let mut vu: Word = r[p + 1..].to_vec();
            vu.extend_from_slice(&r[..p]);
            let replacement = if r[p].inverse { vu } else { invert(&vu) };
            for rel in rels.iter_mut() {
                let mut out = Vec::with_capacity(rel.len());
                for &l in rel.iter() {
                    if l.gen == g {
                        if l.inverse {
                            out.extend(invert(&replacement));
                        } else {
                            out.extend(replacement.iter().copied());
                        }
                    } else {
                        out.push(l);
                    }
                }
                *rel = cyclic_reduce(&out);
            }
            gens[g] = None;
        }
        // renumber surviving generators
        let mut index = vec![usize::MAX; gens.len()];
        let mut names = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            if let Some(name) = g {
                index[i] = names.len();
                names.push(name.clone());
            }
        }
        let rels =
            rels.into_iter().map(|r| r.into_iter().map(|l| Letter::new(index[l.gen], l.inverse)).collect()).collect();
        Presentation::new_lenient(names, rels)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.format_word(r)).collect();
        write!(f, "⟨{} | {}⟩", self.generators.join(", "), rels.join(", "))
    }
}

pub fn parse_word(text: &str, gens: &[String]) -> Result<Word, GroupError> {
    let mut w = Vec::new();
    for tok in text.split_whitespace() {
        let (name, inverse) = match tok.strip_suffix('-') {
            Some(n) => (n, true),
            None => (tok, false),
        };
        let gen = gens.iter().position(|g| g == name).ok_or_else(|| GroupError::UnknownGenerator(name.to_owned()))?;
        w.push(Letter { gen, inverse });
    }
    Ok(w)
}

pub fn format_word(w: &[Letter], gens: &[String]) -> String {
    let toks: Vec<String> =
        w.iter().map(|l| if l.inverse { format!("{}-", gens[l.gen]) } else { gens[l.gen].clone() }).collect();
    toks.join(" ")
}

/// `⟨a, c, d | c⁻¹ a c a^{-ε}, d⁻¹ c d c⁻²⟩`.
pub fn h_epsilon(eps: i8) -> Presentation {
    let first = if eps > 0 { "c- a c a-" } else { "c- a c a" };
    Presentation::from_strs(&["a", "c", "d"], &[first, "d- c d c- c-"]).unwrap()
}

/// `⟨a, b | a b a⁻¹ b⁻¹⟩`.
pub fn torus() -> Presentation {
    Presentation::from_strs(&["a", "b"], &["a b a- b-"]).unwrap()
}

/// `⟨a, b | a b a⁻¹ b⟩`, i.e. `ab = ba⁻¹`.
pub fn klein_bottle() -> Presentation {
    Presentation::from_strs(&["a", "b"], &["a b a- b"]).unwrap()
}

/// `⟨x, y | y²⟩ ≅ ℤ ∗ ℤ₂`.
pub fn z_star_z2() -> Presentation {
    Presentation::from_strs(&["x", "y"], &["y y"]).unwrap()
}

/// Free group on `n` generators `x0, x1, ...`.
pub fn free_group(n: usize) -> Presentation {
    Presentation::new((0..n).map(|i| format!("x{i}")).collect(), Vec::new()).unwrap()
}
