//! HLT-style coset enumeration with coincidence processing.

use super::coset_table::CosetTable;
use super::presentation::{Letter, Presentation, Word};
use super::GroupError;

struct Enumerator {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
    max_live: usize,
    max_total: usize,
}

impl Enumerator {
    fn new(cols: usize, max_live: usize) -> Self {
        Enumerator {
            cols,
            table: vec![vec![None; cols]],
            parent: vec![0],
            live: 1,
            max_live,
            max_total: max_live.saturating_mul(64).max(4096),
        }
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut cur = c;
        while self.parent[cur] != r {
            let next = self.parent[cur];
            self.parent[cur] = r;
            cur = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), GroupError> {
        if self.live >= self.max_live || self.table.len() >= self.max_total {
            return Err(GroupError::BoundExceeded(self.max_live));
        }
        let k = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.parent.push(k);
        self.live += 1;
        self.table[c][x] = Some(k);
        self.table[k][x ^ 1] = Some(c);
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
            self.live -= 1;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.cols {
                let Some(d) = self.table[g][x] else { continue };
                self.table[d][x ^ 1] = None;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if let Some(e) = self.table[mu][x] {
                    self.merge(nu, e, &mut queue);
                } else if let Some(e) = self.table[nu][x ^ 1] {
                    self.merge(mu, e, &mut queue);
                } else {
                    self.table[mu][x] = Some(nu);
                    self.table[nu][x ^ 1] = Some(mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, start: usize, w: &[usize]) -> Result<(), GroupError> {
        let mut f = start;
        let mut b = start;
        let mut i = 0;
        let mut j = w.len();
        loop {
            while i < j {
                match self.table[f][w[i]] {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                match self.table[b][w[j - 1] ^ 1] {
                    Some(next) => {
                        b = next;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if i + 1 == j {
                self.table[f][w[i]] = Some(b);
                self.table[b][w[i] ^ 1] = Some(f);
                return Ok(());
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn compact(mut self) -> Vec<Vec<usize>> {
        let total = self.table.len();
        let mut new_id = vec![usize::MAX; total];
        let mut n = 0;
        for c in 0..total {
            if self.alive(c) {
                new_id[c] = n;
                n += 1;
            }
        }
        let mut out = Vec::with_capacity(n);
        for c in 0..total {
            if !self.alive(c) {
                continue;
            }
            let row = (0..self.cols)
                .map(|x| {
                    let d = self.table[c][x].expect("complete table");
                    new_id[self.rep(d)]
                })
                .collect();
            out.push(row);
        }
        out
    }
}

/// Enumerates the cosets of `⟨subgroup_gens⟩` in the group presented by `p`.
///
/// Fails with [`GroupError::BoundExceeded`] when more than `max_cosets`
/// live cosets are needed (the index may be infinite or just large). The
/// result is in canonical breadth-first form.
pub fn todd_coxeter(p: &Presentation, subgroup_gens: &[Word], max_cosets: usize) -> Result<CosetTable, GroupError> {
    if max_cosets == 0 {
        return Err(GroupError::BoundExceeded(0));
    }
    let cols = 2 * p.generator_count();
    let as_cols = |w: &Word| w.iter().map(|l: &Letter| l.col()).collect::<Vec<_>>();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(as_cols).collect();
    let subgens: Vec<Vec<usize>> = subgroup_gens.iter().map(as_cols).collect();

    let mut e = Enumerator::new(cols, max_cosets);
    for w in &subgens {
        e.scan_and_fill(0, w)?;
    }
    let mut c = 0;
    while c < e.table.len() {
        if e.alive(c) {
            for r in &relators {
                if !e.alive(c) {
                    break;
                }
                e.scan_and_fill(c, r)?;
            }
            if e.alive(c) {
                for x in 0..cols {
                    if e.table[c][x].is_none() {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }
    let action = e.compact();
    let table = CosetTable::from_parts_unchecked(p.clone(), subgroup_gens.to_vec(), action).canonical();
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::presentation::{h_epsilon, z_star_z2};

    #[test]
    fn cyclic_of_order_three() {
        let p = Presentation::from_strs(&["x"], &["x x x"]).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 10).unwrap().index(), 3);
    }

    #[test]
    fn kernel_in_z_star_z2() {
        let p = z_star_z2();
        let gens = vec![p.parse_word("x").unwrap(), p.parse_word("y- x y").unwrap()];
        assert_eq!(todd_coxeter(&p, &gens, 10).unwrap().index(), 2);
    }

    #[test]
    fn index_two_in_h_epsilon() {
        for eps in [1, -1] {
            let p = h_epsilon(eps);
            let gens: Vec<Word> = ["a", "c", "d d", "d a d-"].iter().map(|s| p.parse_word(s).unwrap()).collect();
            assert_eq!(todd_coxeter(&p, &gens, 100).unwrap().index(), 2);
        }
    }

    #[test]
    fn a_c_and_d_squared_have_infinite_index() {
        // killing c maps the group onto the free group on a, d
        let p = h_epsilon(1);
        let gens: Vec<Word> = ["a", "c", "d d"].iter().map(|s| p.parse_word(s).unwrap()).collect();
        assert!(matches!(todd_coxeter(&p, &gens, 5000), Err(GroupError::BoundExceeded(_))));
    }

    #[test]
    fn infinite_index_hits_the_bound() {
        let p = Presentation::from_strs(&["x"], &[]).unwrap();
        assert!(matches!(todd_coxeter(&p, &[], 50), Err(GroupError::BoundExceeded(50))));
    }

    #[test]
    fn symmetric_group_order_six() {
        let p = Presentation::from_strs(&["s", "t"], &["s s", "t t", "s t s t s t"]).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), 6);
    }
}
