use proptest::prelude::*;

use rdspectra::{
    all_pairs_distances, general_eigenvalues, is_equitable, joined_union_quotient, joined_union_spectrum,
    rd_alpha_matrix, reciprocal_transmission, spectra_equal, sym_eigenvalues_default, Graph, JoinedUnionPlan,
};

fn regular_component() -> impl Strategy<Value = Graph> {
    (1usize..=6, 0u8..4).prop_map(|(q, kind)| match (kind, q >= 3) {
        (0, _) => Graph::complete(q),
        (1, _) => Graph::empty(q),
        (2, true) => Graph::cycle(q),
        (3, true) => Graph::cycle(q).complement(),
        _ => Graph::complete(q),
    })
}

fn connected_parent() -> impl Strategy<Value = Graph> {
    (2usize..=6)
        .prop_flat_map(|n| {
            let tree = (1..n).map(|v| 0..v).collect::<Vec<_>>();
            let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut edges: Vec<(usize, usize)> = tree.into_iter().enumerate().map(|(i, u)| (u, i + 1)).collect();
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            edges.extend(pairs.zip(extra).filter(|&(_, keep)| keep).map(|(e, _)| e));
            Graph::new(n, edges).unwrap()
        })
}

fn plan() -> impl Strategy<Value = JoinedUnionPlan> {
    connected_parent()
        .prop_flat_map(|parent| {
            let k = parent.vertex_count();
            (Just(parent), proptest::collection::vec(regular_component(), k))
        })
        .prop_map(|(parent, comps)| JoinedUnionPlan::new(parent, comps).unwrap())
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.25), Just(0.5), Just(0.75), Just(1.0), 0.0..=1.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_matches_brute_force(plan in plan(), alpha in alpha()) {
        let oracle = sym_eigenvalues_default(&rd_alpha_matrix(&plan.compose(), alpha).unwrap()).unwrap();
        let r = spectra_equal(&joined_union_spectrum(&plan, alpha).unwrap(), &oracle, 1e-8);
        prop_assert!(r.equal, "max deviation {:e}", r.max_deviation);
    }

    #[test]
    fn composed_distances_follow_block_law(plan in plan()) {
        let g = plan.compose();
        let d = all_pairs_distances(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let (bu, bv) = (plan.block_of(u), plan.block_of(v));
                let expected = if u == v {
                    0
                } else if bu != bv {
                    plan.parent_distance(bu, bv)
                } else if g.has_edge(u, v) {
                    1
                } else {
                    2
                };
                prop_assert_eq!(d.get(u, v), Some(expected), "u={} v={}", u, v);
            }
        }
    }

    #[test]
    fn block_transmissions_match_graph(plan in plan()) {
        let g = plan.compose();
        for (i, data) in plan.block_data().iter().enumerate() {
            let first = plan.block_offsets()[i];
            for v in first..first + data.order {
                let rt = reciprocal_transmission(&g, v).unwrap();
                prop_assert!((rt - data.rtr).abs() < 1e-12, "block {}: {} vs {}", i, rt, data.rtr);
            }
        }
    }

    #[test]
    fn block_partition_is_equitable(plan in plan(), alpha in alpha()) {
        let m = rd_alpha_matrix(&plan.compose(), alpha).unwrap();
        prop_assert!(is_equitable(&m, &plan.block_partition(), 1e-12));
    }

    #[test]
    fn quotient_eigenvalues_are_eigenvalues(plan in plan(), alpha in alpha()) {
        let oracle = sym_eigenvalues_default(&rd_alpha_matrix(&plan.compose(), alpha).unwrap()).unwrap();
        let q = general_eigenvalues(&joined_union_quotient(&plan, alpha).unwrap(), 1e-8).unwrap();
        for v in q.values() {
            prop_assert!(oracle.multiplicity_near(v, 1e-7) > 0, "{} missing", v);
        }
    }

    #[test]
    fn multiplicities_add_up(plan in plan(), alpha in alpha()) {
        prop_assert_eq!(joined_union_spectrum(&plan, alpha).unwrap().len(), plan.order());
    }
}

#[test]
fn single_block_parent_is_rejected() {
    let plan = JoinedUnionPlan::new(Graph::complete(1), vec![Graph::cycle(5)]).unwrap();
    assert_eq!(plan.compose(), Graph::cycle(5));
    assert!(joined_union_spectrum(&plan, 0.5).is_err());
}

#[test]
fn complete_bipartite_is_a_join_of_empties() {
    let plan = JoinedUnionPlan::join(Graph::empty(2), Graph::empty(3)).unwrap();
    let expected = JoinedUnionPlan::complete_multipartite(&[2, 3]).unwrap().compose();
    assert_eq!(plan.compose(), expected);
}
