//! A reproducible verification suite over the rest of the crate.
//!
//! [`run_suite`] runs seven stages and collects one [`CheckEntry`] per
//! finite check into a [`VerificationReport`]. Reports contain no timings
//! or other run-dependent data, so equal configurations give equal JSON.

mod demo;
mod probe;
mod report;

pub use demo::{common_cover_demo, demo_pair, DemoOutcome};
pub use probe::{fingerprint, incommensurability_probe, SubgroupProfile, FINGERPRINT_INDEX};
pub use report::{CheckEntry, Status, SuiteConfig, Summary, VerificationReport, ANCHORS};

use serde_json::json;
use thiserror::Error;

use crate::amalgam::{balls_isomorphic, cayley_ball, GEN_C};
use crate::complex2::{cell_cost, fan_triangulate, presentation_complex, TwoComplex};
use crate::fpgroups::{
    free_group, free_rank_or_torsion_z_star_z2, h_epsilon, low_index_subgroups, normal_closure_orbit,
    subgroups_of_index, z_star_z2, CosetTable, Letter, SubgroupRecord, ZStarZ2Verdict,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PapercheckError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{stage}: {message}")]
    Stage { stage: String, message: String },
}

fn fail(stage: &str, e: impl std::fmt::Display) -> PapercheckError {
    PapercheckError::Stage { stage: stage.to_owned(), message: e.to_string() }
}

pub(crate) fn eps_tag(eps: i8) -> &'static str {
    if eps > 0 {
        "+1"
    } else {
        "-1"
    }
}

/// The presentation complex of `H_ε`.
pub fn build_k(eps: i8) -> Result<TwoComplex, PapercheckError> {
    if eps != 1 && eps != -1 {
        return Err(PapercheckError::InvalidConfig(format!("ε must be ±1, got {eps}")));
    }
    presentation_complex(&h_epsilon(eps)).map_err(|e| fail("complex", e))
}

fn stage_complexes(report: &mut VerificationReport) -> Result<(), PapercheckError> {
    for eps in [1, -1] {
        let k = build_k(eps)?;
        let mut lengths = k.face_lengths();
        lengths.sort_unstable();
        let cost = cell_cost(&k).map_err(|e| fail("complex", e))?;
        let tri = fan_triangulate(&k).map_err(|e| fail("complex", e))?;
        let tri_cost = cell_cost(&tri.complex).map_err(|e| fail("complex", e))?;
        let ok = k.vertex_count() == 1
            && k.edge_count() == 3
            && lengths == [4, 5]
            && cost == 5
            && tri.triangle_count() == 5
            && tri.is_valid()
            && tri_cost == cost;
        report.push(
            format!("complex/eps={}", eps_tag(eps)),
            "two-cell-complexity",
            Status::from_bool(ok),
            json!({
                "vertices": k.vertex_count(),
                "edges": k.edge_count(),
                "faceLengths": lengths,
                "cellCost": cost,
                "triangles": tri.triangle_count(),
                "triangulationValid": tri.is_valid(),
                "triangulatedCost": tri_cost,
                "eulerCharacteristic": k.euler_characteristic(),
            }),
        );
    }
    Ok(())
}

fn stage_balls(cfg: &SuiteConfig, report: &mut VerificationReport) -> Result<(), PapercheckError> {
    for r in 0..=cfg.ball_radius {
        let plus = cayley_ball(1, r).map_err(|e| fail("balls", e))?;
        let minus = cayley_ball(-1, r).map_err(|e| fail("balls", e))?;
        let counts = |k: &TwoComplex| [k.vertex_count(), k.edge_count(), k.face_count()];
        let (cp, cm) = (counts(&plus.complex), counts(&minus.complex));
        let iso = balls_isomorphic(&plus, &minus).map_err(|e| fail("balls", e))?;
        report.push(
            format!("ball/r={r}"),
            "universal-cover-balls",
            Status::from_bool(cp == cm && iso.is_some()),
            json!({ "radius": r, "plus": cp, "minus": cm, "isomorphic": iso.is_some() }),
        );
    }
    Ok(())
}

fn stage_orbits(cfg: &SuiteConfig, report: &mut VerificationReport) {
    let c = [Letter::pos(GEN_C)];
    for eps in [1, -1] {
        let p = h_epsilon(eps);
        for n in 1..=cfg.max_index {
            for (i, t) in subgroups_of_index(&p, n).iter().enumerate() {
                let o = normal_closure_orbit(t, &c);
                let ok = o.base_orbit_size % 2 == 1 && o.equal_sizes && o.product_matches;
                report.push(
                    format!("orbit/eps={}/index={n}/class={i}", eps_tag(eps)),
                    "normal-closure-orbit-parity",
                    Status::from_bool(ok),
                    json!({
                        "index": n,
                        "subgroupGenerators": generator_strings(t),
                        "orbitSizes": o.orbit_sizes,
                        "baseOrbitSize": o.base_orbit_size,
                        "equalSizes": o.equal_sizes,
                        "productMatches": o.product_matches,
                    }),
                );
            }
        }
    }
}

fn generator_strings(t: &CosetTable) -> Vec<String> {
    let p = t.presentation();
    t.subgroup_gens().iter().map(|w| p.format_word(w)).collect()
}

fn stage_torsion_free(cfg: &SuiteConfig, report: &mut VerificationReport) -> Result<(), PapercheckError> {
    let p = z_star_z2();
    for n in 1..=cfg.lemma1_max_index {
        let (mut free, mut torsion, mut bad) = (0usize, 0usize, Vec::new());
        for t in subgroups_of_index(&p, n) {
            match free_rank_or_torsion_z_star_z2(&t).map_err(|e| fail("torsion-free", e))? {
                ZStarZ2Verdict::HasTorsion => torsion += 1,
                ZStarZ2Verdict::Free { rank, index_even, rank_formula_holds } => {
                    free += 1;
                    if !(index_even && rank_formula_holds) {
                        bad.push(json!({ "generators": generator_strings(&t), "rank": rank }));
                    }
                }
            }
        }
        report.push(
            format!("torsion-free/index={n}"),
            "torsion-free-index-parity",
            Status::from_bool(bad.is_empty()),
            json!({ "index": n, "torsionFree": free, "withTorsion": torsion, "violations": bad }),
        );
    }
    // x acts trivially and y swaps the two cosets
    let kernel =
        CosetTable::from_permutations(p, Vec::new(), &[vec![0, 1], vec![1, 0]]).map_err(|e| fail("torsion-free", e))?;
    let gens = kernel.schreier_generators();
    let kernel = kernel.with_subgroup_gens(gens);
    let verdict = free_rank_or_torsion_z_star_z2(&kernel).map_err(|e| fail("torsion-free", e))?;
    let rank = match verdict {
        ZStarZ2Verdict::Free { rank, .. } => Some(rank),
        ZStarZ2Verdict::HasTorsion => None,
    };
    report.push(
        "torsion-free/kernel",
        "torsion-free-index-parity",
        Status::from_bool(rank == Some(2)),
        json!({ "index": kernel.index(), "generators": generator_strings(&kernel), "rank": rank }),
    );
    Ok(())
}

fn stage_schreier(cfg: &SuiteConfig, report: &mut VerificationReport) {
    let f2 = free_group(2);
    let tables = low_index_subgroups(&f2, cfg.schreier_max_index);
    for n in 1..=cfg.schreier_max_index {
        let ranks: Vec<Option<usize>> = tables
            .iter()
            .filter(|t| t.index() == n)
            .map(|t| SubgroupRecord::analyse(t.clone(), None).free_rank)
            .collect();
        let ok = ranks.iter().all(|&r| r == Some(n + 1));
        report.push(
            format!("schreier/index={n}"),
            "schreier-rank",
            Status::from_bool(ok),
            json!({ "index": n, "classes": ranks.len(), "ranks": ranks }),
        );
    }
}

fn stage_gluing(report: &mut VerificationReport) -> Result<(), PapercheckError> {
    let (o, g) = common_cover_demo()?;
    let full_k = g.full_to_k.verify().map_err(|e| fail("gluing", e))?.degree;
    let full_l = g.full_to_l.verify().map_err(|e| fail("gluing", e))?.degree;
    let product = o.k_first * o.k_second;
    let ok = o.legs_valid
        && o.connected
        && o.reassembled
        && full_k == Some(product)
        && full_l == Some(product / o.q)
        && o.identified_per_w == product / o.q
        && o.degree_over_k.zip(o.degree_over_l).is_some_and(|(k, l)| k == o.q * l);
    let mut evidence = serde_json::to_value(&o).expect("outcome serializes");
    evidence["fullDegreeOverK"] = json!(full_k);
    evidence["fullDegreeOverL"] = json!(full_l);
    report.push("gluing/common-cover", "coloured-leighton-gluing", Status::from_bool(ok), evidence);
    Ok(())
}

/// Runs every stage under `cfg`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, PapercheckError> {
    cfg.validate()?;
    let mut report = VerificationReport::new(cfg.clone());
    stage_complexes(&mut report)?;
    stage_balls(cfg, &mut report)?;
    stage_orbits(cfg, &mut report);
    stage_torsion_free(cfg, &mut report)?;
    stage_schreier(cfg, &mut report);
    report.extend(incommensurability_probe(cfg)?);
    stage_gluing(&mut report)?;
    Ok(report)
}
