use rayon::prelude::*;

use rdspectra::families::expand_param_grid;
use rdspectra::groups::{factorize, prime_power};
use rdspectra::joined_union::{complete_multipartite_closed_form, join_three_complete_closed_form};
use rdspectra::spectral::{jacobi_eigenvalues, JACOBI_MAX_SWEEPS, JACOBI_TOL};
use rdspectra::{
    cayley_power_graph, closed_form, general_eigenvalues, rd_alpha_matrix, registry, spectra_equal,
    structural_power_graph, union, verify_closed_form, Error, ExplicitEigenvalue, Graph, GroupSpec, JoinedUnionPlan,
    PrintedCheck, PrintedFormula, Spectrum, StructuralDecomposition,
};

use crate::args::{Common, Format, InputArgs, SweepArgs};
use crate::input::{load, CliError, CliResult, Input, EXIT_MISMATCH};
use crate::report::{
    AlphaQuotient, AlphaReport, AlphaSpectrum, BlockSummary, DecomposeOutput, FormulaCheck, PrintedQuotient,
    QuotientOutput, Skipped, SpectrumOutput, SweepOutput, SweepResult, VerifyOutput,
};

/// Rendered output and the exit code it implies.
pub struct Rendered {
    pub text: String,
    pub code: u8,
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn oracle(g: &Graph, alpha: f64, coalesce: f64) -> CliResult<Spectrum> {
    let m = rd_alpha_matrix(g, alpha)?;
    Ok(Spectrum::from_values_tol(jacobi_eigenvalues(&m, JACOBI_TOL, JACOBI_MAX_SWEEPS)?, coalesce))
}

pub fn spectrum(args: &InputArgs) -> CliResult<Rendered> {
    let c = &args.common;
    let input = load(args)?;
    let graph = match &input {
        Input::Graph { graph, .. } => graph.clone(),
        Input::Group(spec) => cayley_power_graph(spec)?.0,
        Input::Plan { plan, .. } => plan.compose(),
    };
    let spectra = c
        .alpha
        .0
        .iter()
        .map(|&alpha| Ok(AlphaSpectrum { alpha, source: "oracle", spectrum: oracle(&graph, alpha, c.coalesce)? }))
        .collect::<CliResult<Vec<_>>>()?;
    let out = SpectrumOutput { command: "spectrum", input: input.label(), order: graph.vertex_count(), spectra };
    let text = match c.format {
        Format::Json => json(&out),
        Format::Csv => out.csv()?,
        Format::Human => out.human(),
    };
    Ok(Rendered { text, code: 0 })
}

/// Which closed-form route the family takes for this spec, when it is a special one.
fn closed_form_route(spec: &GroupSpec) -> Option<String> {
    match *spec {
        GroupSpec::Cyclic { n } => match (prime_power(n), factorize(n).as_slice()) {
            (Some((p, m)), _) => Some(format!("n = {p}^{m}: the power graph is complete, spectrum of K_{n}")),
            (None, [(p, 1), (q, 1)]) => Some(format!("n = {p}*{q}: two-prime closed form with a 3x3 quotient")),
            _ => None,
        },
        GroupSpec::Dihedral { n } => {
            prime_power(n).map(|(p, m)| format!("n = {p}^{m}: collapsed plan K_(1,2)[K1, K_{}, empty({n})]", n - 1))
        }
        GroupSpec::Quaternion { n } => prime_power(n)
            .filter(|&(p, _)| p == 2)
            .map(|(_, k)| format!("n = 2^{k}: collapsed star plan with {n} coset pairs")),
        _ => None,
    }
}

fn group_report(spec: &GroupSpec, alpha: f64, tol: f64) -> CliResult<AlphaReport> {
    let r = verify_closed_form(spec, alpha, tol)?;
    Ok(AlphaReport {
        alpha,
        matches: r.matches,
        max_dev: r.max_dev,
        closed_form: r.closed_form,
        oracle: r.oracle,
        explicit: r.explicit,
        quotient: r.quotient,
        quotient_eigenvalues: r.quotient_eigenvalues,
        formula_checks: Vec::new(),
        printed_formula_deviations: r.printed_formula_deviations,
    })
}

/// Equal-part complete multipartite and `K_a ∨ (K_b ∪ K_c)` plans also
/// have closed forms of their own.
fn plan_formula_checks(
    plan: &JoinedUnionPlan,
    alpha: f64,
    oracle: &Spectrum,
    tol: f64,
) -> CliResult<Vec<FormulaCheck>> {
    let mut checks = Vec::new();
    let comps = plan.components();
    let q = comps.len();
    let n = comps[0].vertex_count();
    if plan.parent().is_complete() && comps.iter().all(|g| g.edge_count() == 0 && g.vertex_count() == n) {
        let r = spectra_equal(&complete_multipartite_closed_form(n, q, alpha)?, oracle, tol);
        checks.push(FormulaCheck {
            label: format!("complete-multipartite({q}x{n})"),
            matches: r.equal,
            max_dev: r.max_deviation,
        });
    }
    if *plan.parent() == Graph::star(2) && comps.iter().all(Graph::is_complete) {
        let orders = [comps[0].vertex_count(), comps[1].vertex_count(), comps[2].vertex_count()];
        let (families, quotient) = join_three_complete_closed_form(orders, alpha)?;
        let assembled = union(&[Spectrum::from_pairs(families, 1e-7), general_eigenvalues(&quotient, tol)?]);
        let r = spectra_equal(&assembled, oracle, tol);
        checks.push(FormulaCheck {
            label: format!("join-of-three-completes{orders:?}"),
            matches: r.equal,
            max_dev: r.max_deviation,
        });
    }
    Ok(checks)
}

fn plan_report(plan: &JoinedUnionPlan, alpha: f64, c: &Common) -> CliResult<AlphaReport> {
    let spectrum = plan.spectrum(alpha)?;
    let oracle = oracle(&plan.compose(), alpha, c.coalesce)?;
    let r = spectra_equal(&spectrum, &oracle, c.tol);
    let explicit = plan
        .block_eigenvalues(alpha)?
        .iter()
        .enumerate()
        .flat_map(|(i, s)| {
            s.entries().iter().map(move |&(v, m)| ExplicitEigenvalue::new(v, m, format!("joined-union.block[{i}]")))
        })
        .collect();
    let quotient = plan.quotient(alpha)?;
    let printed = plan.printed_formulas(alpha)?.iter().map(|f| f.check(Some(&oracle), c.tol)).collect();
    Ok(AlphaReport {
        alpha,
        matches: r.equal,
        max_dev: r.max_deviation,
        closed_form: spectrum,
        formula_checks: plan_formula_checks(plan, alpha, &oracle, c.tol)?,
        oracle,
        explicit,
        quotient_eigenvalues: general_eigenvalues(&quotient, c.tol)?,
        quotient,
        printed_formula_deviations: printed,
    })
}

pub fn verify(args: &InputArgs) -> CliResult<Rendered> {
    let c = &args.common;
    let input = load(args)?;
    let (order, note, reports) = match &input {
        Input::Group(spec) => {
            let reports = c.alpha.0.iter().map(|&a| group_report(spec, a, c.tol)).collect::<CliResult<Vec<_>>>()?;
            (spec.order(), closed_form_route(spec), reports)
        }
        Input::Plan { plan, .. } => {
            let reports = c.alpha.0.iter().map(|&a| plan_report(plan, a, c)).collect::<CliResult<Vec<_>>>()?;
            (plan.order(), None, reports)
        }
        Input::Graph { .. } => {
            return Err(CliError::usage("verify needs --group or --plan; a bare graph has no closed form"))
        }
    };
    let pass = reports.iter().all(AlphaReport::passed);
    let out = VerifyOutput { command: "verify", input: input.label(), order, tolerance: c.tol, pass, note, reports };
    let text = match c.format {
        Format::Json => json(&out),
        Format::Csv => out.csv()?,
        Format::Human => out.human(c.compare_printed),
    };
    Ok(Rendered { text, code: if pass { 0 } else { EXIT_MISMATCH } })
}

fn printed_quotients(formulas: &[PrintedFormula]) -> Vec<PrintedQuotient> {
    formulas
        .iter()
        .filter_map(|f| match f.check(None, 0.0) {
            PrintedCheck::Quotient { label, printed, max_entry_deviation, .. } => {
                Some(PrintedQuotient { label, rows: printed, max_entry_deviation })
            }
            _ => None,
        })
        .collect()
}

pub fn quotient(args: &InputArgs) -> CliResult<Rendered> {
    let c = &args.common;
    let input = load(args)?;
    let partition = match &input {
        Input::Group(_) => "the reduced block partition of the structural decomposition",
        Input::Plan { .. } => "the block partition",
        Input::Graph { .. } => return Err(CliError::usage("quotient needs --group or --plan to define the partition")),
    };
    let mut quotients = Vec::new();
    for &alpha in &c.alpha.0 {
        let (q, printed) = match &input {
            Input::Group(spec) => {
                let cf = closed_form(spec, alpha)?;
                (cf.quotient.clone(), printed_quotients(&cf.printed))
            }
            Input::Plan { plan, .. } => (plan.quotient(alpha)?, printed_quotients(&plan.printed_formulas(alpha)?)),
            Input::Graph { .. } => unreachable!(),
        };
        quotients.push(AlphaQuotient {
            alpha,
            order: q.order(),
            equitable: q.equitable,
            rows: q.rows(),
            eigenvalues: general_eigenvalues(&q, c.tol)?,
            printed: if c.compare_printed { printed } else { Vec::new() },
        });
    }
    let out = QuotientOutput { command: "quotient", input: input.label(), partition: partition.into(), quotients };
    let text = match c.format {
        Format::Json => json(&out),
        Format::Csv => out.csv()?,
        Format::Human => out.human(),
    };
    Ok(Rendered { text, code: 0 })
}

pub fn decompose(args: &InputArgs) -> CliResult<Rendered> {
    let c = &args.common;
    let spec = match load(args)? {
        Input::Group(spec) => spec,
        _ => return Err(CliError::usage("decompose needs --group")),
    };
    let n = spec.order();
    let (d, degenerate) = match structural_power_graph(&spec) {
        Ok(d) => (d, false),
        Err(Error::DegenerateDecomposition { .. }) => {
            let plan = JoinedUnionPlan::new(Graph::complete(1), vec![Graph::complete(n)])?;
            (StructuralDecomposition::new(plan, vec![(0..n).collect()]), true)
        }
        Err(e) => return Err(e.into()),
    };
    let family = registry().get(spec.family_name()).expect("parsed specs have a family");
    let blocks = d
        .blocks
        .iter()
        .enumerate()
        .map(|(index, elems)| BlockSummary {
            index,
            order: elems.len(),
            degree: d.plan.degrees()[index],
            elements: elems.iter().map(|&x| family.element_label(&spec, x)).collect(),
        })
        .collect();
    let out = DecomposeOutput {
        command: "decompose",
        spec: spec.to_string(),
        order: n,
        degenerate,
        plan: serde_json::to_value(&d.plan).expect("plans serialize"),
        parent_edges: d.plan.parent().edges().collect(),
        blocks,
        quotient_groups: d.quotient_groups.clone(),
    };
    let text = match c.format {
        Format::Json => json(&out),
        Format::Csv => return Err(CliError::usage("decompose has no CSV form; use --format json or human")),
        Format::Human => out.human(),
    };
    Ok(Rendered { text, code: 0 })
}

fn sweep_one(spec: &GroupSpec, alpha: f64, tol: f64) -> SweepResult {
    match verify_closed_form(spec, alpha, tol) {
        Ok(r) => SweepResult {
            spec: spec.to_string(),
            alpha,
            matches: r.matches,
            max_dev: r.max_dev,
            printed_deviations: r.printed_formula_deviations.iter().filter(|c| !c.agrees()).count(),
            error: None,
            printed: r.printed_formula_deviations,
        },
        Err(e) => SweepResult {
            spec: spec.to_string(),
            alpha,
            matches: false,
            max_dev: f64::INFINITY,
            printed_deviations: 0,
            error: Some(e.to_string()),
            printed: Vec::new(),
        },
    }
}

pub fn sweep(args: &SweepArgs) -> CliResult<Rendered> {
    let c = &args.common;
    let family = registry().get(&args.family).ok_or_else(|| {
        CliError::usage(format!("unknown family {:?}; known: {}", args.family, registry().names().join(", ")))
    })?;
    let grid_text = args.range.as_deref().or(args.params.as_deref()).unwrap_or_default();
    let tuples = expand_param_grid(grid_text)?;

    let mut specs = Vec::new();
    let mut skipped = Vec::new();
    for params in tuples {
        match family.spec_from_values(&params).and_then(|s| s.validate().map(|_| s)) {
            Ok(spec) => specs.push(spec),
            Err(e) => skipped.push(Skipped { params, reason: e.to_string() }),
        }
    }
    if specs.is_empty() {
        return Err(CliError::usage(format!("no valid {} groups in {grid_text:?}", family.name())));
    }

    let pairs: Vec<(GroupSpec, f64)> = specs.iter().flat_map(|s| c.alpha.0.iter().map(move |&a| (*s, a))).collect();
    let results: Vec<SweepResult> = pairs.par_iter().map(|(s, a)| sweep_one(s, *a, c.tol)).collect();
    let failed = results.iter().filter(|r| !r.matches).count();
    let out = SweepOutput {
        command: "sweep",
        family: family.name().into(),
        tolerance: c.tol,
        alphas: c.alpha.0.clone(),
        pass: failed == 0,
        checked: results.len(),
        failed,
        skipped,
        results,
    };
    let text = match c.format {
        Format::Json => json(&out),
        Format::Csv => out.csv()?,
        Format::Human => out.human(c.compare_printed),
    };
    Ok(Rendered { text, code: if out.pass { 0 } else { EXIT_MISMATCH } })
}
