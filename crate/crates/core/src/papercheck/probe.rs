use serde::Serialize;
use serde_json::json;

use super::report::{CheckEntry, Status};
use super::{PapercheckError, SuiteConfig};
use crate::fpgroups::{
    abelian_invariants, h_epsilon, reidemeister_schreier, subgroups_of_index, AbelianInvariants, CosetTable,
    Presentation,
};

/// Largest index counted by [`fingerprint`].
pub const FINGERPRINT_INDEX: usize = 3;

/// Isomorphism invariants of one subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SubgroupProfile {
    pub generators: Vec<String>,
    pub rewritten_generators: usize,
    pub rewritten_relators: usize,
    pub abelian_invariants: AbelianInvariants,
    pub fingerprint: Vec<usize>,
}

/// Numbers of conjugacy classes of subgroups of index `1..=FINGERPRINT_INDEX`
/// in the group presented by the rewritten subgroup presentation.
pub fn fingerprint(t: &CosetTable) -> Vec<usize> {
    class_counts(&reidemeister_schreier(t.presentation(), t))
}

fn class_counts(p: &Presentation) -> Vec<usize> {
    (1..=FINGERPRINT_INDEX).map(|n| subgroups_of_index(p, n).len()).collect()
}

fn profile(t: &CosetTable) -> SubgroupProfile {
    let p = t.presentation();
    let sub = reidemeister_schreier(p, t);
    SubgroupProfile {
        generators: t.subgroup_gens().iter().map(|w| p.format_word(w)).collect(),
        rewritten_generators: sub.generator_count(),
        rewritten_relators: sub.relators().len(),
        abelian_invariants: abelian_invariants(&sub),
        fingerprint: class_counts(&sub),
    }
}

/// Compares every subgroup class of `H₊₁` with every class of the same
/// index in `H₋₁`, for indices up to `cfg.max_index`.
///
/// A pair differing in abelian invariants or in fingerprint is reported as
/// separated (`pass`). Otherwise no conclusion is drawn and the entry is
/// `inconclusive`; the probe never fails.
pub fn incommensurability_probe(cfg: &SuiteConfig) -> Result<Vec<CheckEntry>, PapercheckError> {
    cfg.validate()?;
    let (hp, hm) = (h_epsilon(1), h_epsilon(-1));
    let mut out = Vec::new();
    for n in 1..=cfg.max_index {
        let plus: Vec<SubgroupProfile> = subgroups_of_index(&hp, n).iter().map(profile).collect();
        let minus: Vec<SubgroupProfile> = subgroups_of_index(&hm, n).iter().map(profile).collect();
        for (i, p) in plus.iter().enumerate() {
            for (j, m) in minus.iter().enumerate() {
                let by_invariants = p.abelian_invariants != m.abelian_invariants;
                let by_fingerprint = p.fingerprint != m.fingerprint;
                let separated = by_invariants || by_fingerprint;
                out.push(CheckEntry {
                    check_id: format!("probe/index={n}/plus={i}/minus={j}"),
                    anchor: "weak-incommensurability".to_owned(),
                    status: if separated { Status::Pass } else { Status::Inconclusive },
                    evidence: json!({
                        "index": n,
                        "verdict": if separated { "separated" } else { "inconclusive" },
                        "separatedByInvariants": by_invariants,
                        "separatedByFingerprint": by_fingerprint,
                        "+1": p,
                        "-1": m,
                    }),
                });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn index_one_separated_by_invariants() {
        let cfg = SuiteConfig { max_index: 1, ..SuiteConfig::default() };
        let e = incommensurability_probe(&cfg).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].status, Status::Pass);
        let plus = &e[0].evidence["+1"]["abelianInvariants"];
        let minus = &e[0].evidence["-1"]["abelianInvariants"];
        assert_eq!(plus["free_rank"], 2);
        assert_eq!(plus["torsion"].as_array().unwrap().len(), 0);
        assert_eq!(minus["free_rank"], 1);
        assert_eq!(minus["torsion"], serde_json::to_value(vec![BigInt::from(2)]).unwrap());
    }

    #[test]
    fn fingerprint_of_whole_group() {
        let t = &subgroups_of_index(&h_epsilon(-1), 1)[0];
        assert_eq!(fingerprint(t)[0], 1);
    }
}
