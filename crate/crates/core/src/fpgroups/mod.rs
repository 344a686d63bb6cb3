//! Finitely presented groups: coset enumeration, low-index subgroups,
//! Reidemeister–Schreier rewriting, abelian invariants and orbit checks.

mod coset_table;
mod low_index;
mod orbit;
mod presentation;
mod schreier;
mod snf;
mod todd_coxeter;
mod zstarz2;

pub use coset_table::{CosetTable, TableJson};
pub use low_index::{low_index_subgroups, subgroups_of_index};
pub use orbit::{normal_closure_orbit, OrbitData};
pub use presentation::{
    cyclic_class, cyclic_reduce, exponent_sums, format_word, free_group, free_reduce, h_epsilon, invert, klein_bottle,
    least_rotation, parse_word, torus, z_star_z2, Letter, Presentation, Word,
};
pub use schreier::{reidemeister_schreier, reidemeister_schreier_raw};
pub use snf::{abelian_invariants, AbelianInvariants, IntMatrix};
pub use todd_coxeter::todd_coxeter;
pub use zstarz2::{free_rank_or_torsion_z_star_z2, ZStarZ2Verdict};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("relator {0} is empty after free reduction")]
    EmptyRelator(usize),
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("invalid coset table: {0}")]
    InvalidTable(String),
    #[error("enumeration did not close within maxCosets ({0})")]
    BoundExceeded(usize),
    #[error("expected ⟨x, y | y y⟩, got {0}")]
    WrongPresentation(String),
    #[error("rewritten presentation kept relators: {0}")]
    Unsimplified(String),
}

/// A finite-index subgroup with its computed invariants.
#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    pub table: CosetTable,
    pub abelian_invariants: AbelianInvariants,
    pub free_rank: Option<usize>,
    pub base_orbit: Option<OrbitData>,
}

/// Serializable summary of a [`SubgroupRecord`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub index: usize,
    pub subgroup_generators: Vec<String>,
    pub abelian_invariants: AbelianInvariants,
    pub free_rank: Option<usize>,
    pub base_orbit: Option<OrbitData>,
}

impl SubgroupRecord {
    /// Rewrites the subgroup presentation and records its abelian
    /// invariants; the free rank is filled in when the rewritten
    /// presentation has no relators. With `w` given, also records the
    /// orbit data of its normal closure.
    pub fn analyse(table: CosetTable, w: Option<&[Letter]>) -> Self {
        let sub = reidemeister_schreier(table.presentation(), &table);
        let abelian_invariants = abelian_invariants(&sub);
        let free_rank = sub.relators().is_empty().then(|| sub.generator_count());
        let base_orbit = w.map(|w| normal_closure_orbit(&table, w));
        SubgroupRecord { table, abelian_invariants, free_rank, base_orbit }
    }

    pub fn summary(&self) -> SubgroupSummary {
        let p = self.table.presentation();
        SubgroupSummary {
            index: self.table.index(),
            subgroup_generators: self.table.subgroup_gens().iter().map(|w| p.format_word(w)).collect(),
            abelian_invariants: self.abelian_invariants.clone(),
            free_rank: self.free_rank,
            base_orbit: self.base_orbit.clone(),
        }
    }
}
