use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::fpgroups::{Letter, Presentation, Word};

use super::complex::TwoComplex;
use super::ComplexError;

/// A free product `F_r ∗ Z_{n₁} ∗ … ∗ Z_{n_s}`, which is virtually free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeProductWitness {
    pub free_rank: usize,
    /// Orders of the finite cyclic factors, sorted.
    pub finite_orders: Vec<u64>,
}

impl fmt::Display for FreeProductWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 || self.finite_orders.is_empty() {
            parts.push(format!("F{}", self.free_rank));
        }
        parts.extend(self.finite_orders.iter().map(|n| format!("Z{n}")));
        write!(f, "{}", parts.join(" * "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    VirtuallyFree(FreeProductWitness),
    /// The group is that of the torus (`orientable`) or Klein bottle, up to
    /// a free factor.
    TorusOrKlein {
        orientable: bool,
        free_rank: usize,
    },
}

/// Presentation of `π₁(k)` read off by contracting a spanning forest.
///
/// Generators are the edges outside the forest, named by their first dart
/// with the sign stripped; relators are the face boundaries.
pub fn fundamental_group(k: &TwoComplex) -> Presentation {
    let g = k.skeleton();
    let mut in_tree = vec![false; g.dart_count()];
    let mut seen = vec![false; g.vertex_count()];
    for root in 0..g.vertex_count() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &d in g.star(v) {
                let w = g.terminus(d);
                if !seen[w] {
                    seen[w] = true;
                    in_tree[d] = true;
                    in_tree[g.reverse(d)] = true;
                    stack.push(w);
                }
            }
        }
    }
    let mut letter = vec![None; g.dart_count()];
    let mut names = Vec::new();
    for d in g.edge_representatives() {
        if !in_tree[d] {
            let gen = names.len();
            letter[d] = Some(Letter::pos(gen));
            letter[g.reverse(d)] = Some(Letter::neg(gen));
            names.push(crate::graph::format::edge_id(g.dart_name(d)).to_owned());
        }
    }
    let rels: Vec<Word> = k.faces().iter().map(|f| f.iter().filter_map(|&d| letter[d]).collect()).collect();
    Presentation::new_lenient(names, rels)
}

fn single_letter(r: &[Letter]) -> Option<usize> {
    let g = r.first()?.gen;
    (r.iter().all(|l| l.gen == g) && r.iter().all(|l| l.inverse == r[0].inverse)).then_some(g)
}

/// Root `u` and exponent `k` of `r = u^k` with `k` maximal.
fn root(r: &[Letter]) -> (&[Letter], usize) {
    let n = r.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (0..n).all(|i| r[i] == r[(i + p) % n]) {
            return (&r[..p], n / p);
        }
    }
    (r, 1)
}

/// Classifies a complex with at most two triangular faces.
///
/// The group is reduced by contracting a spanning forest and Tietze
/// elimination; the remaining shapes are matched against a fixed table.
pub fn classify_small_complex(k: &TwoComplex) -> Result<Classification, ComplexError> {
    if k.face_count() > 2 {
        return Err(ComplexError::TooManyFaces(k.face_count()));
    }
    if let Some((face, f)) = k.faces().iter().enumerate().find(|(_, f)| f.len() != 3) {
        return Err(ComplexError::NotTriangle { face, length: f.len() });
    }
    if !k.is_connected() {
        return Err(ComplexError::InvalidSkeleton("complex is not connected".into()));
    }
    let p = fundamental_group(k).simplify();
    classify_reduced(&p)
}

/// The decision table on a presentation already reduced by Tietze moves.
pub fn classify_reduced(p: &Presentation) -> Result<Classification, ComplexError> {
    let n = p.generator_count();
    let rels = p.relators();
    let unclassified = || ComplexError::Unclassified(p.to_string());
    if rels.is_empty() {
        return Ok(Classification::VirtuallyFree(FreeProductWitness { free_rank: n, finite_orders: vec![] }));
    }

    // relators that are powers of single generators
    if rels.iter().all(|r| single_letter(r).is_some()) {
        let mut order = vec![0u64; n];
        for r in rels {
            let g = single_letter(r).unwrap();
            order[g] = order[g].gcd(&(r.len() as u64));
        }
        let used = order.iter().filter(|&&o| o > 0).count();
        let mut finite: Vec<u64> = order.into_iter().filter(|&o| o > 1).collect();
        finite.sort_unstable();
        return Ok(Classification::VirtuallyFree(FreeProductWitness { free_rank: n - used, finite_orders: finite }));
    }

    if rels.len() != 1 {
        return Err(unclassified());
    }
    let r = &rels[0];
    let (u, e) = root(r);
    let once = |w: &[Letter], g: usize| w.iter().filter(|l| l.gen == g).count() == 1;
    if e >= 2 && u.iter().any(|l| once(u, l.gen)) {
        // u^e with a letter of u occurring once: Tietze gives ⟨x | x^e⟩ ∗ F
        return Ok(Classification::VirtuallyFree(FreeProductWitness {
            free_rank: n - 1,
            finite_orders: vec![e as u64],
        }));
    }
    if r.len() == 4 && e == 1 {
        let gens: std::collections::BTreeSet<usize> = r.iter().map(|l| l.gen).collect();
        if gens.len() == 2 && gens.iter().all(|&g| r.iter().filter(|l| l.gen == g).count() == 2) {
            let orientable = gens.iter().all(|&g| r.iter().filter(|l| l.gen == g && l.inverse).count() == 1);
            return Ok(Classification::TorusOrKlein { orientable, free_rank: n - 2 });
        }
    }
    Err(unclassified())
}
