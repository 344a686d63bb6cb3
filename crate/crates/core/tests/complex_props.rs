use covkit::complex2::format::{covering_from_maps, covering_to_maps, parse_complex, write_complex};
use covkit::complex2::{cell_cost, cover_from_coset_table, fan_triangulate, presentation_complex, ComplexCovering};
use covkit::fpgroups::{
    cyclic_reduce, free_group, h_epsilon, klein_bottle, low_index_subgroups, torus, Letter, Presentation, Word,
};
use proptest::prelude::*;

fn relator(gens: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, any::<bool>()), 3..9)
        .prop_map(|v| v.into_iter().map(|(g, i)| Letter::new(g, i)).collect())
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec(relator(n), 1..4).prop_map(move |rels| {
            let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
            let kept = rels.iter().map(|r| cyclic_reduce(r)).filter(|r| r.len() >= 3 && !is_power(r)).collect();
            Presentation::new(names, kept).unwrap()
        })
    })
}

/// Whether `r` is a proper power as a cyclic word.
fn is_power(r: &[Letter]) -> bool {
    let n = r.len();
    (1..n).any(|p| n.is_multiple_of(p) && (0..n).all(|i| r[i] == r[(i + p) % n]))
}

#[test]
fn euler_characteristic_is_multiplicative() {
    for p in [h_epsilon(1), h_epsilon(-1), torus(), klein_bottle(), free_group(2)] {
        let k = presentation_complex(&p).unwrap();
        for t in low_index_subgroups(&p, 4) {
            let (cover, map) = cover_from_coset_table(&k, &t).unwrap();
            assert!(map.verify().unwrap().is_valid());
            assert_eq!(cover.euler_characteristic(), t.index() as i64 * k.euler_characteristic(), "{p}");
        }
    }
}

#[test]
fn coverings_round_trip_through_text() {
    let k = presentation_complex(&h_epsilon(-1)).unwrap();
    for t in low_index_subgroups(&h_epsilon(-1), 3) {
        let (cover, map) = cover_from_coset_table(&k, &t).unwrap();
        let cover2 = parse_complex(&write_complex(&cover)).unwrap();
        let back = covering_from_maps(&cover2, &k, &covering_to_maps(&map)).unwrap();
        assert_eq!(back.verify().unwrap().degree, Some(t.index()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fan_triangulation_keeps_the_cost(p in presentation()) {
        let k = presentation_complex(&p).unwrap();
        let t = fan_triangulate(&k).unwrap();
        prop_assert!(t.is_valid());
        prop_assert_eq!(cell_cost(&t.complex).unwrap(), cell_cost(&k).unwrap());
        prop_assert_eq!(t.triangle_count(), cell_cost(&k).unwrap());
        prop_assert_eq!(t.complex.euler_characteristic(), k.euler_characteristic());
    }

    #[test]
    fn identity_is_a_covering(p in presentation()) {
        let k = presentation_complex(&p).unwrap();
        let t = fan_triangulate(&k).unwrap().complex;
        for c in [&k, &t] {
            let v = ComplexCovering::identity(c).verify().unwrap();
            prop_assert!(v.is_valid(), "{p}: {:?}", v.violations);
            prop_assert_eq!(v.degree, Some(1));
        }
    }
}
