use rdspectra::{verify_closed_form, Graph, JoinedUnionPlan, PrintedCheck};

fn checks(spec: &str, alpha: f64) -> Vec<PrintedCheck> {
    let report = verify_closed_form(&spec.parse().unwrap(), alpha, 1e-8).unwrap();
    assert!(report.matches, "{spec}: closed form must still match, {:e}", report.max_dev);
    report.printed_formula_deviations
}

fn find<'a>(checks: &'a [PrintedCheck], label: &str) -> &'a PrintedCheck {
    checks.iter().find(|c| c.label() == label).unwrap_or_else(|| panic!("no {label}"))
}

#[test]
fn elementary_abelian_printed_forms_are_flagged() {
    let c = checks("elemab:3,2", 0.5);
    assert!(find(&c, "elemab.subgroup-blocks").agrees());
    match find(&c, "elemab.subgroup-blocks.twins") {
        PrintedCheck::Eigenvalue { printed_value, derived_value, agrees, .. } => {
            assert!(!agrees);
            assert!((printed_value - 6.0).abs() < 1e-12);
            assert!((derived_value - 2.5).abs() < 1e-12);
        }
        other => panic!("{other:?}"),
    }
    match find(&c, "elemab.quotient") {
        PrintedCheck::Quotient { max_entry_deviation, agrees, .. } => {
            assert!(!agrees);
            assert!(*max_entry_deviation > 1e-3);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn nonabelian_pq_printed_forms_are_flagged() {
    for spec in ["pq:2,3", "pq:3,7", "pq:5,11"] {
        let c = checks(spec, 0.5);
        // q(p − 2) copies: vacuous when p = 2
        assert_eq!(find(&c, "pq.sylow-p-blocks").agrees(), spec == "pq:2,3", "{spec}");
        assert!(!find(&c, "pq.sylow-p-blocks.twins").agrees(), "{spec}");
        assert!(find(&c, "pq.sylow-q-block").agrees(), "{spec}");
        assert!(!find(&c, "pq.quotient").agrees(), "{spec}");
    }
}

#[test]
fn dihedral_reflection_value_is_adjudicated() {
    let c = checks("dihedral:6", 0.5);
    match find(&c, "dihedral.reflections") {
        PrintedCheck::Eigenvalue { printed_value, derived_value, printed_in_oracle, derived_in_oracle, .. } => {
            assert_eq!(*printed_value, 2.5);
            assert_eq!(*derived_value, 2.75);
            assert_eq!(*printed_in_oracle, Some(false));
            assert_eq!(*derived_in_oracle, Some(true));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn cyclic_divisor_block_text_is_unparseable() {
    let c = checks("cyclic:12", 0.25);
    assert!(c.iter().any(|c| matches!(c, PrintedCheck::Unparseable { agrees: false, .. })));
}

#[test]
fn every_family_reports_printed_forms() {
    for spec in ["cyclic:15", "dihedral:9", "quaternion:4", "elemab:2,3", "pq:2,5"] {
        assert!(!checks(spec, 1.0).is_empty(), "{spec}");
    }
}

#[test]
fn joined_union_printed_quotient_sign() {
    // C_5 has r = 2, so the printed diagonal's sign on r_i shows up
    let plan = JoinedUnionPlan::join(Graph::cycle(5), Graph::complete(2)).unwrap();
    let formulas = plan.printed_formulas(0.5).unwrap();
    let quotient = formulas.iter().find(|f| f.label() == "joined-union.quotient").unwrap();
    assert!(!quotient.check(None, 1e-10).agrees());
}
