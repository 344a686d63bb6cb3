//! Conjugacy classes of subgroups of small index by backtracking over
//! partial coset tables.

use super::coset_table::CosetTable;
use super::presentation::Presentation;

struct Search<'a> {
    p: &'a Presentation,
    cols: usize,
    max_index: usize,
    relators: Vec<Vec<usize>>,
    table: Vec<Vec<Option<usize>>>,
    found: Vec<CosetTable>,
}

enum Scan {
    Ok,
    Conflict,
}

impl<'a> Search<'a> {
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.table[c][x] = Some(d);
        self.table[d][x ^ 1] = Some(c);
    }

    /// Scans every relator from every coset, filling single gaps, until
    /// nothing changes. Returns the entries it set so they can be undone.
    fn propagate(&mut self, trail: &mut Vec<(usize, usize)>) -> Scan {
        loop {
            let mut changed = false;
            for c in 0..self.table.len() {
                for ri in 0..self.relators.len() {
                    let w = &self.relators[ri];
                    let mut f = c;
                    let mut i = 0;
                    while i < w.len() {
                        match self.table[f][w[i]] {
                            Some(n) => {
                                f = n;
                                i += 1;
                            }
                            None => break,
                        }
                    }
                    if i == w.len() {
                        if f != c {
                            return Scan::Conflict;
                        }
                        continue;
                    }
                    let mut b = c;
                    let mut j = w.len();
                    while j > i {
                        match self.table[b][w[j - 1] ^ 1] {
                            Some(n) => {
                                b = n;
                                j -= 1;
                            }
                            None => break,
                        }
                    }
                    if j == i + 1 {
                        let x = w[i];
                        if self.table[b][x ^ 1].is_some() {
                            return Scan::Conflict;
                        }
                        self.set(f, x, b);
                        trail.push((f, x));
                        changed = true;
                    }
                }
            }
            if !changed {
                return Scan::Ok;
            }
        }
    }

    fn undo(&mut self, trail: &[(usize, usize)]) {
        for &(c, x) in trail.iter().rev() {
            if let Some(d) = self.table[c][x].take() {
                self.table[d][x ^ 1] = None;
            }
        }
    }

    /// False when relabeling from some other base point gives a
    /// lexicographically smaller table on the defined prefix.
    fn is_canonical(&self) -> bool {
        let n = self.table.len();
        'base: for base in 1..n {
            let mut old_of = vec![base];
            let mut new_of = vec![usize::MAX; n];
            new_of[base] = 0;
            for new in 0..n {
                if new >= old_of.len() {
                    continue 'base;
                }
                let old = old_of[new];
                for x in 0..self.cols {
                    let (Some(mine), Some(theirs)) = (self.table[new][x], self.table[old][x]) else {
                        continue 'base;
                    };
                    if new_of[theirs] == usize::MAX {
                        new_of[theirs] = old_of.len();
                        old_of.push(theirs);
                    }
                    let relabeled = new_of[theirs];
                    if relabeled < mine {
                        return false;
                    }
                    if relabeled > mine {
                        continue 'base;
                    }
                }
            }
        }
        true
    }

    fn first_gap(&self) -> Option<(usize, usize)> {
        for (c, row) in self.table.iter().enumerate() {
            for (x, e) in row.iter().enumerate() {
                if e.is_none() {
                    return Some((c, x));
                }
            }
        }
        None
    }

    fn run(&mut self) {
        let Some((c, x)) = self.first_gap() else {
            let action = self.table.iter().map(|r| r.iter().map(|e| e.unwrap()).collect()).collect();
            let t = CosetTable::from_parts_unchecked(self.p.clone(), Vec::new(), action);
            let gens = t.schreier_generators();
            self.found.push(t.with_subgroup_gens(gens));
            return;
        };
        let n = self.table.len();
        for d in 0..=n {
            if d == n {
                if n >= self.max_index {
                    break;
                }
                self.table.push(vec![None; self.cols]);
            } else if self.table[d][x ^ 1].is_some() {
                continue;
            }
            self.set(c, x, d);
            let mut trail = vec![(c, x)];
            if let Scan::Ok = self.propagate(&mut trail) {
                if self.is_canonical() {
                    self.run();
                }
            }
            self.undo(&trail);
            if d == n {
                self.table.pop();
            }
        }
    }
}

/// One coset table per conjugacy class of subgroups of index at most
/// `max_index`, in canonical form, sorted by index and then by table.
///
/// Subgroup generators of each table are its Schreier generators.
pub fn low_index_subgroups(p: &Presentation, max_index: usize) -> Vec<CosetTable> {
    if max_index == 0 {
        return Vec::new();
    }
    let cols = 2 * p.generator_count();
    if cols == 0 {
        let t = CosetTable::from_parts_unchecked(p.clone(), Vec::new(), vec![Vec::new()]);
        return vec![t];
    }
    let relators = p.relators().iter().map(|r| r.iter().map(|l| l.col()).collect()).collect();
    let mut s = Search { p, cols, max_index, relators, table: vec![vec![None; cols]], found: Vec::new() };
    s.run();
    let mut found = s.found;
    found.sort_by(|a, b| a.index().cmp(&b.index()).then_with(|| a.rows().cmp(b.rows())));
    found
}

/// Subgroup classes of exactly the given index.
pub fn subgroups_of_index(p: &Presentation, index: usize) -> Vec<CosetTable> {
    low_index_subgroups(p, index).into_iter().filter(|t| t.index() == index).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::presentation::{free_group, h_epsilon, z_star_z2};

    fn counts(p: &Presentation, n: usize) -> Vec<usize> {
        let all = low_index_subgroups(p, n);
        (1..=n).map(|k| all.iter().filter(|t| t.index() == k).count()).collect()
    }

    #[test]
    fn whole_group_at_index_one() {
        let all = low_index_subgroups(&h_epsilon(1), 1);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].index(), 1);
    }

    #[test]
    fn free_group_class_counts() {
        // conjugacy classes of subgroups of F₂: 1, 3, 7, 26
        assert_eq!(counts(&free_group(2), 4), vec![1, 3, 7, 26]);
    }

    #[test]
    fn z_star_z2_index_two() {
        assert_eq!(subgroups_of_index(&z_star_z2(), 2).len(), 3);
    }

    #[test]
    fn tables_are_valid_and_pairwise_non_conjugate() {
        let all = low_index_subgroups(&h_epsilon(-1), 4);
        let mut keys = std::collections::HashSet::new();
        for t in &all {
            t.validate().unwrap();
            assert!(keys.insert(t.conjugacy_key()));
        }
    }
}
