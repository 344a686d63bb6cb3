use super::coset_table::{is_tree_edge, CosetTable};
use super::presentation::{Letter, Presentation, Word};

/// Presentation of the subgroup described by `t` on its Schreier
/// generators, before any simplification.
///
/// Generator `s_{c,g}` stands for `rep(c) g rep(c·g)⁻¹` for each non-tree
/// pair `(c, g)`; relators are the rewrites of every relator from every
/// coset.
pub fn reidemeister_schreier_raw(p: &Presentation, t: &CosetTable) -> Presentation {
    let n = t.index();
    let k = p.generator_count();
    let tree = t.schreier_tree();
    let mut gen_of = vec![vec![None; k]; n];
    let mut names = Vec::new();
    for (c, row) in gen_of.iter_mut().enumerate() {
        for (g, slot) in row.iter_mut().enumerate() {
            let d = t.act(c, Letter::pos(g));
            if !is_tree_edge(&tree, c, g, d) {
                *slot = Some(names.len());
                names.push(format!("{}_{c}", p.generators()[g]));
            }
        }
    }
    let mut relators = Vec::new();
    for r in p.relators() {
        for c in 0..n {
            let mut w: Word = Vec::new();
            let mut cur = c;
            for &l in r {
                if l.inverse {
                    let prev = t.act(cur, l);
                    if let Some(s) = gen_of[prev][l.gen] {
                        w.push(Letter::neg(s));
                    }
                    cur = prev;
                } else {
                    if let Some(s) = gen_of[cur][l.gen] {
                        w.push(Letter::pos(s));
                    }
                    cur = t.act(cur, l);
                }
            }
            relators.push(w);
        }
    }
    Presentation::new_lenient(names, relators)
}

/// Subgroup presentation from Reidemeister–Schreier rewriting followed by
/// Tietze simplification.
pub fn reidemeister_schreier(p: &Presentation, t: &CosetTable) -> Presentation {
    reidemeister_schreier_raw(p, t).simplify()
}
