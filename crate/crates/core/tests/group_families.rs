use proptest::prelude::*;

use rdspectra::families::expand_param_grid;
use rdspectra::{cayley_power_graph, registry, verify_decomposition, GroupSpec};

fn valid_spec() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        (3usize..40).prop_map(|n| GroupSpec::Cyclic { n }),
        (3usize..25).prop_map(|n| GroupSpec::Dihedral { n }),
        (2usize..12).prop_map(|n| GroupSpec::Quaternion { n }),
        prop::sample::select(vec![(2usize, 1u32), (2, 4), (3, 2), (5, 2), (7, 1)])
            .prop_map(|(p, k)| GroupSpec::ElementaryAbelian { p, k }),
        prop::sample::select(vec![(2usize, 3usize), (2, 11), (3, 7), (3, 13), (5, 11)])
            .prop_map(|(p, q)| GroupSpec::nonabelian_pq(p, q).unwrap()),
    ]
}

fn law(spec: &GroupSpec) -> impl Fn(usize, usize) -> usize + '_ {
    let family = registry().get(spec.family_name()).unwrap();
    move |a, b| family.multiply(spec, a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spec_text_round_trips(spec in valid_spec()) {
        let back: GroupSpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn group_axioms_hold(spec in valid_spec()) {
        let mul = law(&spec);
        let n = spec.order();
        for a in 0..n {
            prop_assert_eq!(mul(0, a), a);
            prop_assert_eq!(mul(a, 0), a);
            prop_assert!((0..n).any(|b| mul(a, b) == 0), "{} has no inverse", a);
            for b in (0..n).step_by(3) {
                for c in (0..n).step_by(5) {
                    prop_assert_eq!(mul(mul(a, b), c), mul(a, mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn power_graphs_are_connected_with_universal_identity(spec in valid_spec()) {
        let (g, _) = cayley_power_graph(&spec).unwrap();
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.degree(0), spec.order() - 1);
    }

    #[test]
    fn decompositions_are_isomorphic(spec in valid_spec()) {
        let r = verify_decomposition(&spec).unwrap();
        prop_assert!(r.isomorphic, "{:?}", r.first_mismatch);
    }
}

#[test]
fn invalid_specs_are_rejected() {
    for bad in ["cyclic:2", "dihedral:1", "quaternion:1", "elemab:4,2", "pq:3,5", "pq:2,3,1", "klein:4", "cyclic:x"] {
        assert!(bad.parse::<GroupSpec>().is_err(), "{bad}");
    }
}

#[test]
fn registry_lists_builtin_families_in_order() {
    assert_eq!(registry().names(), ["cyclic", "dihedral", "quaternion", "elemab", "pq"]);
}

#[test]
fn parameter_grids_expand_inclusively() {
    let grid = expand_param_grid("2,1..3; 5,1..=2").unwrap();
    assert_eq!(grid, vec![vec![2, 1], vec![2, 2], vec![2, 3], vec![5, 1], vec![5, 2]]);
    assert!(expand_param_grid(" ; ").is_err());
    assert!(expand_param_grid("3..x").is_err());
}
