use serde::{Deserialize, Serialize};

use super::coset_table::CosetTable;
use super::presentation::Letter;

/// Orbits of the normal closure of a word on the cosets of a table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitData {
    /// Orbit sizes in nondecreasing order.
    pub orbit_sizes: Vec<usize>,
    /// Size of the orbit of coset 0, i.e. `|C : C ∩ U|`.
    pub base_orbit_size: usize,
    pub equal_sizes: bool,
    /// Whether orbit count times orbit size is the index.
    pub product_matches: bool,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut cur = x;
    while parent[cur] != r {
        let next = parent[cur];
        parent[cur] = r;
        cur = next;
    }
    r
}

/// Orbits of `⟨⟨w⟩⟩` acting on the cosets of `t`.
///
/// The orbit partition is the least partition with `c ~ c·w` that is
/// preserved by every generator, computed by congruence closure.
pub fn normal_closure_orbit(t: &CosetTable, w: &[Letter]) -> OrbitData {
    let n = t.index();
    let gens = t.presentation().generator_count();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut pending: Vec<(usize, usize)> = (0..n).map(|c| (c, t.trace(c, w))).collect();
    while let Some((x, y)) = pending.pop() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            continue;
        }
        parent[ry] = rx;
        for g in 0..gens {
            let l = Letter::pos(g);
            pending.push((t.act(rx, l), t.act(ry, l)));
        }
    }
    let mut size = vec![0usize; n];
    for c in 0..n {
        let r = find(&mut parent, c);
        size[r] += 1;
    }
    let base_orbit_size = size[find(&mut parent, 0)];
    let mut orbit_sizes: Vec<usize> = size.into_iter().filter(|&s| s > 0).collect();
    orbit_sizes.sort_unstable();
    let equal_sizes = orbit_sizes.windows(2).all(|p| p[0] == p[1]);
    let product_matches = equal_sizes && orbit_sizes.len() * orbit_sizes[0] == n;
    OrbitData { orbit_sizes, base_orbit_size, equal_sizes, product_matches }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::low_index::low_index_subgroups;
    use crate::fpgroups::presentation::{h_epsilon, Word};
    use std::collections::{BTreeSet, HashSet};

    /// Orbits of the permutation group generated by every conjugate of `w`,
    /// found by closing the conjugate set under conjugation by generators.
    fn oracle(t: &CosetTable, w: &[Letter]) -> Vec<usize> {
        let n = t.index();
        let gens: Vec<Vec<usize>> =
            (0..t.presentation().generator_count()).map(|g| t.generator_permutation(g)).collect();
        let start = t.word_permutation(w);
        let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some(p) = stack.pop() {
            for g in &gens {
                // g⁻¹ p g in the right-action convention: c ↦ g(p(g⁻¹(c)))
                let mut ginv = vec![0; n];
                for (c, &d) in g.iter().enumerate() {
                    ginv[d] = c;
                }
                let q: Vec<usize> = (0..n).map(|c| g[p[ginv[c]]]).collect();
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        let mut orbit = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(c) = frontier.pop() {
            for p in &seen {
                if orbit.insert(p[c]) {
                    frontier.push(p[c]);
                }
            }
        }
        vec![orbit.len()]
    }

    #[test]
    fn whole_group() {
        let p = h_epsilon(1);
        let t = &low_index_subgroups(&p, 1)[0];
        let o = normal_closure_orbit(t, &p.parse_word("c").unwrap());
        assert_eq!(o.base_orbit_size, 1);
    }

    #[test]
    fn index_two_subgroup_of_h_plus() {
        let p = h_epsilon(1);
        let gens: Vec<Word> = ["a", "c", "d d", "d a d-"].iter().map(|s| p.parse_word(s).unwrap()).collect();
        let t = crate::fpgroups::todd_coxeter(&p, &gens, 10).unwrap();
        let o = normal_closure_orbit(&t, &p.parse_word("c").unwrap());
        assert_eq!(o.orbit_sizes, vec![1, 1]);
        assert_eq!(o.base_orbit_size, 1);
    }

    #[test]
    fn agrees_with_conjugate_closure() {
        for eps in [1, -1] {
            let p = h_epsilon(eps);
            let c = p.parse_word("c").unwrap();
            for t in low_index_subgroups(&p, 4) {
                let o = normal_closure_orbit(&t, &c);
                assert_eq!(vec![o.base_orbit_size], oracle(&t, &c));
                assert!(o.product_matches);
            }
        }
    }
}
