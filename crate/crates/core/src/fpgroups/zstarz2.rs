use serde::{Deserialize, Serialize};

use super::coset_table::CosetTable;
use super::presentation::{z_star_z2, Letter};
use super::schreier::reidemeister_schreier;
use super::GroupError;

/// Outcome of the torsion test for a finite-index subgroup of `ℤ ∗ ℤ₂`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZStarZ2Verdict {
    /// The subgroup is free of the given rank.
    Free { rank: usize, index_even: bool, rank_formula_holds: bool },
    /// The subgroup contains a conjugate of `y`.
    HasTorsion,
}

/// Decides whether a subgroup of `⟨x, y | y²⟩` is free and, if so, its rank.
///
/// The subgroup contains a conjugate of `y` exactly when `y` fixes some
/// coset. Otherwise the rank comes from the rewritten presentation, and the
/// verdict records whether the index is even and `rank − 1 = index / 2`.
pub fn free_rank_or_torsion_z_star_z2(t: &CosetTable) -> Result<ZStarZ2Verdict, GroupError> {
    let p = t.presentation();
    if *p != z_star_z2() {
        return Err(GroupError::WrongPresentation(p.to_string()));
    }
    let n = t.index();
    if (0..n).any(|c| t.act(c, Letter::pos(1)) == c) {
        return Ok(ZStarZ2Verdict::HasTorsion);
    }
    let q = reidemeister_schreier(p, t);
    if !q.relators().is_empty() {
        return Err(GroupError::Unsimplified(q.to_string()));
    }
    let rank = q.generator_count();
    Ok(ZStarZ2Verdict::Free {
        rank,
        index_even: n.is_multiple_of(2),
        rank_formula_holds: 2 * (rank as i64 - 1) == n as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroups::low_index::low_index_subgroups;
    use crate::fpgroups::presentation::torus;
    use crate::fpgroups::todd_coxeter::todd_coxeter;

    #[test]
    fn whole_group_has_torsion() {
        let t = &low_index_subgroups(&z_star_z2(), 1)[0];
        assert_eq!(free_rank_or_torsion_z_star_z2(t).unwrap(), ZStarZ2Verdict::HasTorsion);
    }

    #[test]
    fn kernel_is_free_of_rank_two() {
        let p = z_star_z2();
        let gens = vec![p.parse_word("x").unwrap(), p.parse_word("y- x y").unwrap()];
        let t = todd_coxeter(&p, &gens, 10).unwrap();
        assert_eq!(
            free_rank_or_torsion_z_star_z2(&t).unwrap(),
            ZStarZ2Verdict::Free { rank: 2, index_even: true, rank_formula_holds: true }
        );
    }

    #[test]
    fn wrong_presentation_rejected() {
        let t = &low_index_subgroups(&torus(), 1)[0];
        assert!(free_rank_or_torsion_z_star_z2(t).is_err());
    }
}
