mod common;

use common::{all_words, britton_trivial, random_word, rng, word};
use covkit::amalgam::{normal_form, GEN_A, GEN_C, GEN_D};
use covkit::fpgroups::{h_epsilon, invert, Letter, Word};
use rand::Rng;

fn concat(u: &[Letter], v: &[Letter]) -> Word {
    u.iter().chain(v).copied().collect()
}

#[test]
fn oracle_knows_the_relations() {
    for eps in [1, -1] {
        for r in h_epsilon(eps).relators() {
            assert!(britton_trivial(r, eps));
        }
        assert!(!britton_trivial(&word(&[(GEN_D, false)]), eps));
        // d c d⁻¹ is not in the base group
        assert!(!britton_trivial(&word(&[(GEN_D, false), (GEN_C, false), (GEN_D, true), (GEN_A, false)]), eps));
    }
    // a c a c⁻¹ is trivial only when ε = −1
    let w = word(&[(GEN_A, false), (GEN_C, false), (GEN_A, false), (GEN_C, true)]);
    assert!(britton_trivial(&w, -1));
    assert!(!britton_trivial(&w, 1));
}

#[test]
fn every_short_word_agrees_with_the_oracle() {
    for eps in [1, -1] {
        let mut checked = 0;
        for n in 0..=6 {
            for w in all_words(n) {
                let nf = normal_form(&w, eps).unwrap();
                assert_eq!(nf.is_identity(), britton_trivial(&w, eps), "ε = {eps}, word {w:?}");
                checked += 1;
            }
        }
        assert_eq!(checked, (0..=6).map(|n| 6usize.pow(n)).sum::<usize>());
    }
}

#[test]
fn sampled_pairs_agree_with_the_oracle() {
    let mut r = rng(2024);
    let mut equal_pairs = 0;
    for i in 0..20_000 {
        let eps = if i % 2 == 0 { 1 } else { -1 };
        let u = random_word(&mut r, 6);
        let v = if r.gen_bool(0.5) {
            random_word(&mut r, 6)
        } else {
            // u with a relator, its inverse or a cancelling pair spliced in
            let rels = h_epsilon(eps).relators().to_vec();
            let rel = &rels[r.gen_range(0..rels.len())];
            let k = r.gen_range(0..rel.len());
            let mut ins: Word = rel[k..].iter().chain(&rel[..k]).copied().collect();
            if r.gen_bool(0.5) {
                ins = invert(&ins);
            }
            if r.gen_bool(0.3) {
                let l = Letter::new(r.gen_range(0..3), r.gen_bool(0.5));
                ins = vec![l, l.inv()];
            }
            let at = r.gen_range(0..=u.len());
            concat(&concat(&u[..at], &ins), &u[at..])
        };
        let same = normal_form(&u, eps).unwrap() == normal_form(&v, eps).unwrap();
        let oracle = britton_trivial(&concat(&u, &invert(&v)), eps);
        assert_eq!(same, oracle, "ε = {eps}: {u:?} vs {v:?}");
        equal_pairs += same as usize;
    }
    assert!(equal_pairs > 5_000);
}

#[test]
fn relators_and_rotations_vanish() {
    for eps in [1, -1] {
        for r in h_epsilon(eps).relators() {
            for k in 0..r.len() {
                let rot: Word = r[k..].iter().chain(&r[..k]).copied().collect();
                assert!(normal_form(&rot, eps).unwrap().is_identity());
                assert!(normal_form(&invert(&rot), eps).unwrap().is_identity());
            }
        }
    }
}

#[test]
fn normal_forms_spell_their_element() {
    let mut r = rng(5);
    for _ in 0..2_000 {
        let eps = if r.gen_bool(0.5) { 1 } else { -1 };
        let w = random_word(&mut r, 10);
        let nf = normal_form(&w, eps).unwrap();
        assert!(nf.is_canonical());
        assert!(britton_trivial(&concat(&nf.to_word(), &invert(&w)), eps));
    }
}
