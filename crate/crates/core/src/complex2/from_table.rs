use crate::fpgroups::{CosetTable, Letter};
use crate::graph::{MultiGraph, Sign};

use super::complex::TwoComplex;
use super::covering::ComplexCovering;
use super::ComplexError;

/// The covering of a one-vertex labeled complex determined by a coset
/// table of its presentation.
///
/// Vertex `i` is coset `i`; edge `<g>_<i>` runs from `i` to `i·g`. Every
/// face of `k` lifts once from every coset.
pub fn cover_from_coset_table(k: &TwoComplex, t: &CosetTable) -> Result<(TwoComplex, ComplexCovering), ComplexError> {
    let p = t.presentation();
    let gens = p.generators();
    let base = k.skeleton();
    if base.vertex_count() != 1 {
        return Err(ComplexError::TableMismatch("base complex must have one vertex".into()));
    }
    if t.validate().is_err() {
        return Err(ComplexError::TableMismatch("coset table is incomplete or invalid".into()));
    }
    // positive dart of k for every generator
    let mut positive = vec![None; gens.len()];
    for d in 0..base.dart_count() {
        let l = base
            .label(d)
            .ok_or_else(|| ComplexError::TableMismatch(format!("dart {} is unlabeled", base.dart_name(d))))?;
        let g = gens
            .iter()
            .position(|s| *s == l.symbol)
            .ok_or_else(|| ComplexError::TableMismatch(format!("symbol {} is not a generator", l.symbol)))?;
        if l.sign == Sign::Plus {
            if positive[g].is_some() {
                return Err(ComplexError::TableMismatch(format!("generator {} labels two edges", l.symbol)));
            }
            positive[g] = Some(d);
        }
    }
    let positive: Vec<usize> = positive
        .into_iter()
        .enumerate()
        .map(|(g, d)| d.ok_or_else(|| ComplexError::TableMismatch(format!("no edge for generator {}", gens[g]))))
        .collect::<Result<_, _>>()?;

    let n = t.index();
    let mut cover = MultiGraph::new();
    for i in 0..n {
        cover.add_vertex(format!("v{i}"), base.color(0).map(str::to_owned));
    }
    // edge (i, g) has darts 2(i·|gens| + g) and its successor
    let mut dmap = Vec::new();
    for i in 0..n {
        for (g, name) in gens.iter().enumerate() {
            cover.add_edge(&format!("{name}_{i}"), i, t.act(i, Letter::pos(g)), Some(name));
            dmap.push(positive[g]);
            dmap.push(base.reverse(positive[g]));
        }
    }
    let m = gens.len();
    let mut faces = Vec::new();
    let mut fmap = Vec::new();
    for (fi, walk) in k.faces().iter().enumerate() {
        let word = k
            .spell(walk, gens)
            .ok_or_else(|| ComplexError::TableMismatch(format!("face {fi} is not spelled by generators")))?;
        for start in 0..n {
            let mut c = start;
            let mut lift = Vec::with_capacity(word.len());
            for l in &word {
                if l.inverse {
                    let prev = t.act(c, *l);
                    lift.push(2 * (prev * m + l.gen) + 1);
                    c = prev;
                } else {
                    lift.push(2 * (c * m + l.gen));
                    c = t.act(c, *l);
                }
            }
            if c != start {
                return Err(ComplexError::TableMismatch(format!("face {fi} does not close at coset {start}")));
            }
            faces.push(lift);
            fmap.push(fi);
        }
    }
    let source = TwoComplex::new(cover, faces)?;
    let covering = ComplexCovering { source: source.clone(), target: k.clone(), vmap: vec![0; n], dmap, fmap };
    Ok((source, covering))
}
