use num_bigint::BigUint;
use proptest::prelude::*;
use theta_det::families::{parse_table, pretzel_theta, PretzelParams};
use theta_det::graph_text::{parse_graph, write_graph};
use theta_det::pd::knot_determinant;
use theta_det::random::{
    random_knot_symmetric, random_signed_graph, random_symmetric_graph, seeded,
};
use theta_det::symmetric::theta_determinant_with;
use theta_det::{parse_pd, parse_symmetric, Dyadic};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laplacian_minor_counts_trees(seed in any::<u64>()) {
        let g = random_signed_graph(&mut seeded(seed), 7, 14);
        let brute = g.tree_weight_oracle().unwrap().0;
        for v in 0..g.vertex_count() {
            prop_assert_eq!(g.tree_weight_at(v).unwrap().0, brute.clone());
        }
    }

    #[test]
    fn unit_weights_count_trees(seed in any::<u64>()) {
        let g = random_signed_graph(&mut seeded(seed), 7, 14);
        let mut unit = theta_det::SignedGraph::new(g.vertex_count());
        for e in g.edges() {
            unit.add_edge(e.u, e.v, Dyadic::one()).unwrap();
        }
        let count = unit.spanning_tree_count();
        prop_assert_eq!(unit.tree_weight_oracle().unwrap().0, Dyadic::from_integer(count));
    }

    #[test]
    fn factorization_through_halves(seed in any::<u64>()) {
        let s = random_symmetric_graph(&mut seeded(seed), 5, 3, 18);
        let r = theta_determinant_with(&s, true).unwrap();
        let o = r.oracle.clone().unwrap();
        prop_assert_eq!(&o.tau_full, &r.tau_full);
        prop_assert_eq!(&o.tau_left, &r.tau_left);
        prop_assert_eq!(&o.tau_right, &r.tau_right);
        prop_assert_eq!(&r.tau_bc, &r.tau_left);
        if r.axis_path_like {
            prop_assert!(r.product_holds);
            prop_assert_eq!(&r.det_full, &(&r.det_ab * &r.det_bc));
        }
    }

    #[test]
    fn mirrored_expansion_has_same_tau(seed in any::<u64>()) {
        let s = random_symmetric_graph(&mut seeded(seed), 5, 3, 18);
        let a = s.expand().unwrap().tree_weight().0;
        let b = s.mirrored_expansion().tree_weight().0;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn pretzel_closed_form(p in (0u32..10).prop_map(|i| 2 * i + 1), q in (1u32..10).prop_map(|i| 2 * i)) {
        let r = theta_determinant_with(&pretzel_theta(PretzelParams::new(p, q).unwrap()), false).unwrap();
        prop_assert_eq!(&r.det_full, &BigUint::from(p * p + p * q));
        prop_assert_eq!(r.factors(), [BigUint::from(p), BigUint::from(p + q)]);
        prop_assert!(r.is_odd());
    }

    #[test]
    fn random_knots_factor(seed in any::<u64>()) {
        let k = random_knot_symmetric(&mut seeded(seed), 2, 3, 20);
        let r = theta_determinant_with(&k.symmetric, false).unwrap();
        prop_assert!(r.is_odd());
        prop_assert_eq!(&r.det_full, &(&r.det_ab * &r.det_bc));
        let pd = k.expanded_plane().medial_pd().unwrap();
        prop_assert_eq!(knot_determinant(&pd).unwrap(), r.det_full.clone());
        let again = parse_pd(&pd.to_pd_text()).unwrap();
        prop_assert_eq!(again, pd);
    }

    #[test]
    fn graph_text_round_trip(seed in any::<u64>()) {
        let g = random_signed_graph(&mut seeded(seed), 8, 16);
        let back = parse_graph(&write_graph(&g)).unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges(), g.edges());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parsers_reject_without_panicking(text in "\\PC{0,80}") {
        let _ = parse_pd(&text);
        let _ = parse_graph(&text);
        let _ = parse_symmetric(&text);
        let _ = parse_table(&text);
    }

    #[test]
    fn pd_like_text_never_panics(tuples in prop::collection::vec(prop::array::uniform4(0u64..12), 0..6)) {
        let text: Vec<String> = tuples
            .iter()
            .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
            .collect();
        if let Ok(d) = parse_pd(&text.join(",")) {
            let _ = knot_determinant(&d);
        }
    }
}
