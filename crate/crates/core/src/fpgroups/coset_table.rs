use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::presentation::{invert, Letter, Presentation, Word};
use super::GroupError;

/// The right action of a group on the cosets of a finite-index subgroup.
///
/// Coset `0` is the subgroup itself. `action[c][l.col()]` is the coset
/// `c · l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CosetTable {
    presentation: Presentation,
    subgroup_gens: Vec<Word>,
    action: Vec<Vec<usize>>,
}

impl CosetTable {
    /// Checks every table invariant and returns the table unchanged.
    pub fn from_action(
        presentation: Presentation,
        subgroup_gens: Vec<Word>,
        action: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let t = CosetTable { presentation, subgroup_gens, action };
        t.validate()?;
        Ok(t)
    }

    /// Builds a table from one permutation per generator (`perms[g][c] = c·g`).
    pub fn from_permutations(
        presentation: Presentation,
        subgroup_gens: Vec<Word>,
        perms: &[Vec<usize>],
    ) -> Result<Self, GroupError> {
        let n = perms.first().map_or(1, Vec::len);
        if perms.len() != presentation.generator_count() {
            return Err(GroupError::InvalidTable("one permutation per generator required".into()));
        }
        let mut action = vec![vec![usize::MAX; 2 * perms.len()]; n];
        for (g, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(GroupError::InvalidTable("permutations of unequal degree".into()));
            }
            for (c, &img) in p.iter().enumerate() {
                if img >= n {
                    return Err(GroupError::InvalidTable(format!("image {img} out of range")));
                }
                action[c][2 * g] = img;
                action[img][2 * g + 1] = c;
            }
        }
        Self::from_action(presentation, subgroup_gens, action)
    }

    pub(crate) fn from_parts_unchecked(
        presentation: Presentation,
        subgroup_gens: Vec<Word>,
        action: Vec<Vec<usize>>,
    ) -> Self {
        CosetTable { presentation, subgroup_gens, action }
    }

    pub fn index(&self) -> usize {
        self.action.len()
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn subgroup_gens(&self) -> &[Word] {
        &self.subgroup_gens
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn act(&self, coset: usize, l: Letter) -> usize {
        self.action[coset][l.col()]
    }

    pub fn trace(&self, coset: usize, w: &[Letter]) -> usize {
        w.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Permutation induced by a word.
    pub fn word_permutation(&self, w: &[Letter]) -> Vec<usize> {
        (0..self.index()).map(|c| self.trace(c, w)).collect()
    }

    pub fn generator_permutation(&self, gen: usize) -> Vec<usize> {
        (0..self.index()).map(|c| self.action[c][2 * gen]).collect()
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.action.len();
        let cols = 2 * self.presentation.generator_count();
        let bad = |m: String| Err(GroupError::InvalidTable(m));
        if n == 0 {
            return bad("no cosets".into());
        }
        for (c, row) in self.action.iter().enumerate() {
            if row.len() != cols {
                return bad(format!("row {c} has {} columns, expected {cols}", row.len()));
            }
            for (x, &d) in row.iter().enumerate() {
                if d >= n {
                    return bad(format!("entry ({c}, {x}) undefined or out of range"));
                }
                if self.action[d][x ^ 1] != c {
                    return bad(format!("column {x} is not a permutation at coset {c}"));
                }
            }
        }
        for (i, r) in self.presentation.relators().iter().enumerate() {
            for c in 0..n {
                if self.trace(c, r) != c {
                    return bad(format!("relator {i} does not close at coset {c}"));
                }
            }
        }
        for (i, w) in self.subgroup_gens.iter().enumerate() {
            if self.trace(0, w) != 0 {
                return bad(format!("subgroup generator {i} moves coset 0"));
            }
        }
        if self.bfs_order(0).len() != n {
            return bad("action is not transitive".into());
        }
        Ok(())
    }

    /// Cosets in breadth-first order from `start`, scanning columns in order.
    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let n = self.action.len();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut order = vec![start];
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            for &d in &self.action[c] {
                if !seen[d] {
                    seen[d] = true;
                    order.push(d);
                }
            }
            i += 1;
        }
        order
    }

    /// Relabels cosets in breadth-first order from `base`; with `base = 0`
    /// this is the canonical form of the table.
    pub fn relabeled_from(&self, base: usize) -> CosetTable {
        let order = self.bfs_order(base);
        let mut new_of = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let action = order.iter().map(|&old| self.action[old].iter().map(|&d| new_of[d]).collect()).collect();
        CosetTable { presentation: self.presentation.clone(), subgroup_gens: self.subgroup_gens.clone(), action }
    }

    pub fn canonical(&self) -> CosetTable {
        self.relabeled_from(0)
    }

    /// Canonical form of the conjugacy class: least relabeled table over
    /// all base points.
    pub fn conjugacy_key(&self) -> Vec<Vec<usize>> {
        (0..self.index()).map(|b| self.relabeled_from(b).action).min().unwrap()
    }

    /// Schreier tree from coset 0: for each coset other than 0, the coset
    /// and letter it is first reached from.
    pub fn schreier_tree(&self) -> Vec<Option<(usize, Letter)>> {
        let n = self.action.len();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(c) = queue.pop_front() {
            for (x, &d) in self.action[c].iter().enumerate() {
                if !seen[d] {
                    seen[d] = true;
                    parent[d] = Some((c, Letter::from_col(x)));
                    queue.push_back(d);
                }
            }
        }
        parent
    }

    /// Coset representatives read off the Schreier tree: `0 · reps[c] = c`.
    pub fn representatives(&self) -> Vec<Word> {
        let parent = self.schreier_tree();
        (0..self.index())
            .map(|c| {
                let mut w = Vec::new();
                let mut cur = c;
                while let Some((p, l)) = parent[cur] {
                    w.push(l);
                    cur = p;
                }
                w.reverse();
                w
            })
            .collect()
    }

    /// Schreier generators `rep(c) g rep(c·g)⁻¹` for the non-tree pairs
    /// `(c, g)`, in row-major order.
    pub fn schreier_generators(&self) -> Vec<Word> {
        let reps = self.representatives();
        let tree = self.schreier_tree();
        let mut out = Vec::new();
        for c in 0..self.index() {
            for g in 0..self.presentation.generator_count() {
                if is_tree_edge(&tree, c, g, self.action[c][2 * g]) {
                    continue;
                }
                let mut w = reps[c].clone();
                w.push(Letter::pos(g));
                w.extend(invert(&reps[self.action[c][2 * g]]));
                out.push(super::presentation::free_reduce(&w));
            }
        }
        out
    }

    pub fn with_subgroup_gens(mut self, gens: Vec<Word>) -> Self {
        self.subgroup_gens = gens;
        self
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            generators: self.presentation.generators().to_vec(),
            index: self.index(),
            subgroup_generators: self.subgroup_gens.iter().map(|w| self.presentation.format_word(w)).collect(),
            table: self.action.clone(),
        }
    }
}

/// Whether the positive edge `c --g--> d` belongs to the Schreier tree.
pub(crate) fn is_tree_edge(tree: &[Option<(usize, Letter)>], c: usize, g: usize, d: usize) -> bool {
    tree[d] == Some((c, Letter::pos(g))) || tree[c] == Some((d, Letter::neg(g)))
}

/// On-disk form of a coset table. Columns are `g0, g0⁻¹, g1, g1⁻¹, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub generators: Vec<String>,
    pub index: usize,
    pub subgroup_generators: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::presentation::{torus, z_star_z2};

    #[test]
    fn permutation_constructor_checks_relators() {
        // y = (0 1) satisfies y² but not y³
        let ok = CosetTable::from_permutations(z_star_z2(), vec![], &[vec![0, 1], vec![1, 0]]);
        assert!(ok.is_ok());
        let p = crate::fpgroups::Presentation::from_strs(&["x", "y"], &["y y y"]).unwrap();
        let bad = CosetTable::from_permutations(p, vec![], &[vec![0, 1], vec![1, 0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn intransitive_action_rejected() {
        let t = CosetTable::from_permutations(torus(), vec![], &[vec![0, 1], vec![0, 1]]);
        assert!(matches!(t, Err(GroupError::InvalidTable(_))));
    }

    #[test]
    fn schreier_generator_count() {
        let t = CosetTable::from_permutations(torus(), vec![], &[vec![1, 0], vec![0, 1]]).unwrap();
        // n·|gens| − (n − 1) = 2·2 − 1
        assert_eq!(t.schreier_generators().len(), 3);
        for w in t.schreier_generators() {
            assert_eq!(t.trace(0, &w), 0);
        }
    }
}
