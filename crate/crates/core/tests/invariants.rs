mod common;

use common::{family, graphs};
use myc_sym::invariants::{
    code_length, cost_of_2_distinguishing_with, determining_number_with,
    distinguishing_number_with, minimum_determining_superset,
};
use myc_sym::{
    automorphism_group, binary_level_coloring, cost_of_2_distinguishing, determining_number,
    diagonal_coloring, distinguishing_number, is_determining_set, is_distinguishing_coloring,
    mycielskian_t, Coloring, Error, Graph, InvariantValue, DEFAULT_GROUP_CAP,
    DEFAULT_SUBSET_BUDGET,
};
use proptest::prelude::*;

fn on(spec: &str, t: usize) -> Graph {
    let g = family(spec);
    if t == 0 {
        g
    } else {
        mycielskian_t(&g, t).unwrap().into_graph()
    }
}

fn det(spec: &str, t: usize) -> usize {
    determining_number(&on(spec, t))
        .unwrap()
        .value
        .exact()
        .unwrap()
}

fn rho(spec: &str, t: usize) -> InvariantValue {
    cost_of_2_distinguishing(&on(spec, t)).unwrap().value
}

fn dist(spec: &str, t: usize) -> InvariantValue {
    let g = on(spec, t);
    distinguishing_number(&g, g.vertex_count()).unwrap().value
}

#[test]
fn determining_numbers() {
    // values from the brute-force scan in tests/common
    let cases = [
        ("k2", 0, 1),
        ("c5", 0, 2),
        ("c6", 0, 2),
        ("k4", 0, 3),
        ("k5", 0, 4),
        ("q3", 0, 3),
        ("petersen", 0, 3),
        ("fig3", 0, 1),
        ("fig4:2", 0, 2),
        ("fig4:3", 0, 3),
        ("k23", 0, 3),
        ("k13", 0, 2),
        ("m4", 0, 2),
        ("k2", 1, 2),
        ("k2", 2, 2),
        ("p4", 2, 1),
        ("c6", 1, 2),
        ("k4", 2, 3),
        ("k5", 1, 4),
        ("fig3", 1, 2),
        ("fig3", 2, 3),
        ("fig4:2", 1, 3),
        ("fig4:3", 1, 5),
        ("k23", 1, 6),
        ("k23", 2, 9),
        ("k13", 1, 4),
        ("k13", 2, 6),
        ("k12", 2, 3),
    ];
    for (spec, t, expected) in cases {
        assert_eq!(det(spec, t), expected, "{spec} t={t}");
    }
}

#[test]
fn determining_witnesses() {
    let r = determining_number(&family("c5")).unwrap();
    assert_eq!(r.witness.as_set(), Some(&[0, 1][..]));
    let r = determining_number(&family("fig3")).unwrap();
    assert_eq!(r.witness.as_set(), Some(&[4][..]));
    let g = family("petersen");
    let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
    let r = determining_number(&g).unwrap();
    assert!(is_determining_set(&g, r.witness.as_set().unwrap(), &group).unwrap());
    assert_eq!(r.stats.group_order, 120);
}

#[test]
fn determining_superset() {
    let g = family("c6");
    let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
    let r = minimum_determining_superset(&g, &group, &[3], DEFAULT_SUBSET_BUDGET).unwrap();
    assert_eq!(r.value, InvariantValue::Exact(2));
    // {0, 3} is fixed by the reflection through 0 and 3
    assert_eq!(r.witness.as_set(), Some(&[1, 3][..]));
    assert!(minimum_determining_superset(&g, &group, &[9], 10).is_err());
}

#[test]
fn costs_of_2_distinguishing() {
    use InvariantValue::*;
    let cases = [
        ("k2", 0, Exact(1)),
        ("c5", 0, Undefined),
        ("c6", 0, Exact(3)),
        ("k4", 0, Undefined),
        ("fig3", 0, Exact(1)),
        ("k2", 1, Undefined),
        ("k2", 2, Exact(3)),
        ("c5", 1, Exact(2)),
        ("c6", 1, Exact(2)),
        ("k4", 1, Exact(4)),
        ("k4", 2, Exact(3)),
        ("k5", 1, Undefined),
        ("k12", 1, Exact(3)),
        ("k12", 2, Exact(4)),
        ("fig4:2", 1, Exact(3)),
        ("m4", 0, Exact(2)),
    ];
    for (spec, t, expected) in cases {
        assert_eq!(rho(spec, t), expected, "{spec} t={t}");
    }
    // asymmetric graphs have no meaningful cost
    let asym = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 5)]).unwrap();
    assert_eq!(common::automorphisms(&asym).len(), 1);
    assert_eq!(cost_of_2_distinguishing(&asym).unwrap().value, Undefined);
}

#[test]
fn distinguishing_numbers() {
    use InvariantValue::*;
    let cases = [
        ("k2", 0, Exact(2)),
        ("c5", 0, Exact(3)),
        ("c6", 0, Exact(2)),
        ("k4", 0, Exact(4)),
        ("k5", 0, Exact(5)),
        ("q3", 0, Exact(3)),
        ("petersen", 0, Exact(3)),
        ("fig4:3", 0, Exact(3)),
        ("k23", 0, Exact(3)),
        ("k13", 0, Exact(3)),
        ("k5", 1, Exact(3)),
        ("c5", 1, Exact(2)),
        ("m4", 0, Exact(2)),
    ];
    for (spec, t, expected) in cases {
        assert_eq!(dist(spec, t), expected, "{spec} t={t}");
    }
    let g = family("k5");
    assert_eq!(distinguishing_number(&g, 3).unwrap().value, ExceedsCap(3));
}

#[test]
fn distinguishing_witness_is_valid() {
    for spec in ["c5", "petersen", "q3", "k23"] {
        let g = family(spec);
        let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        let r = distinguishing_number_with(&g, &group, g.vertex_count(), DEFAULT_SUBSET_BUDGET)
            .unwrap();
        let c = r.witness.as_coloring().expect("colouring witness");
        assert!(is_distinguishing_coloring(&g, c, &group).unwrap(), "{spec}");
        assert_eq!(Some(c.num_colors()), r.value.exact());
    }
}

#[test]
fn constructive_colourings() {
    // Petersen: k = 3, code length 2, so t = 1 suffices for the binary colouring
    let g = family("petersen");
    let detset = determining_number(&g)
        .unwrap()
        .witness
        .as_set()
        .unwrap()
        .to_vec();
    assert_eq!(detset.len(), 3);
    assert_eq!(code_length(3), 2);
    for t in 1..=2 {
        let lg = mycielskian_t(&g, t).unwrap();
        let group = automorphism_group(lg.graph(), DEFAULT_GROUP_CAP).unwrap();
        let bin = binary_level_coloring(&lg, &detset).unwrap();
        assert!(is_distinguishing_coloring(lg.graph(), &bin, &group).unwrap());
        // popcounts of 01, 10, 11
        assert_eq!(bin.class(1).len(), 4);
        if t >= 2 {
            let diag = diagonal_coloring(&lg, &detset).unwrap();
            assert!(is_distinguishing_coloring(lg.graph(), &diag, &group).unwrap());
            assert_eq!(diag.class(1).len(), 3);
        } else {
            assert!(matches!(
                diagonal_coloring(&lg, &detset),
                Err(Error::Input(_))
            ));
        }
    }
    assert_eq!(code_length(1), 1);
    assert_eq!(code_length(4), 3);
    assert_eq!(code_length(7), 3);
    assert_eq!(code_length(8), 4);
}

#[test]
fn colouring_validation() {
    assert!(Coloring::new(vec![0, 2], 2).is_err());
    assert!(Coloring::two_coloring(3, &[3]).is_err());
    let g = family("c5");
    let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
    let c = Coloring::two_coloring(4, &[0]).unwrap();
    assert!(is_distinguishing_coloring(&g, &c, &group).is_err());
}

#[test]
fn budget_exhaustion_is_an_error() {
    let g = family("petersen");
    let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
    let err = determining_number_with(&g, &group, false, 20).unwrap_err();
    assert!(matches!(err, Error::Resource { .. }));
    let err = cost_of_2_distinguishing_with(&g, &group, 20).unwrap_err();
    assert!(matches!(err, Error::Resource { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn det_matches_brute_force(g in graphs(1, 8)) {
        let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        let seeded = determining_number_with(&g, &group, true, DEFAULT_SUBSET_BUDGET).unwrap();
        let full = determining_number_with(&g, &group, false, DEFAULT_SUBSET_BUDGET).unwrap();
        let expected = common::det(&g);
        prop_assert_eq!(seeded.value.exact(), Some(expected));
        prop_assert_eq!(full.value.exact(), Some(expected));
        let auts = common::automorphisms(&g);
        prop_assert!(common::is_determining(&auts, seeded.witness.as_set().unwrap()));
    }

    #[test]
    fn rho_matches_brute_force(g in graphs(1, 8)) {
        let r = cost_of_2_distinguishing(&g).unwrap();
        match common::rho(&g) {
            Some(x) => prop_assert_eq!(r.value, InvariantValue::Exact(x)),
            None => prop_assert_eq!(r.value, InvariantValue::Undefined),
        }
    }

    #[test]
    fn dist_matches_brute_force(g in graphs(1, 6)) {
        let r = distinguishing_number(&g, 4).unwrap();
        match common::dist(&g, 4) {
            Some(d) => prop_assert_eq!(r.value, InvariantValue::Exact(d)),
            None => prop_assert_eq!(r.value, InvariantValue::ExceedsCap(4)),
        }
    }

    #[test]
    fn general_inequalities(g in graphs(2, 8)) {
        let group = automorphism_group(&g, DEFAULT_GROUP_CAP).unwrap();
        let det = determining_number_with(&g, &group, true, DEFAULT_SUBSET_BUDGET)
            .unwrap().value.exact().unwrap();
        let dist = distinguishing_number_with(&g, &group, det + 1, DEFAULT_SUBSET_BUDGET).unwrap();
        // a determining set coloured with distinct colours plus one colour for the rest
        prop_assert!(matches!(dist.value, InvariantValue::Exact(d) if d <= det + 1));
        if dist.value == InvariantValue::Exact(2) {
            let rho = cost_of_2_distinguishing_with(&g, &group, DEFAULT_SUBSET_BUDGET).unwrap();
            prop_assert!(matches!(rho.value, InvariantValue::Exact(r) if det <= r));
        }
    }
}
