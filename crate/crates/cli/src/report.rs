//! Output records and their JSON, CSV and human renderings.

use std::fmt::Write as _;

use serde::Serialize;

use rdspectra::{ExplicitEigenvalue, PrintedCheck, QuotientMatrix, Spectrum};

use crate::input::{CliError, CliResult};

/// Trims a float to at most ten decimals without trailing zeros.
pub fn num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn yes_no(x: Option<bool>) -> &'static str {
    match x {
        Some(true) => "yes",
        Some(false) => "no",
        None => "n/a",
    }
}

/// One CSV row: `alpha,value,multiplicity,source`.
#[derive(Debug, Serialize)]
pub struct CsvRow {
    pub alpha: f64,
    pub value: f64,
    pub multiplicity: usize,
    pub source: String,
}

pub fn csv_rows(rows: impl IntoIterator<Item = impl Serialize>) -> CliResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| CliError::usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn spectrum_rows<'a>(alpha: f64, s: &'a Spectrum, source: &'a str) -> impl Iterator<Item = CsvRow> + 'a {
    s.entries().iter().map(move |&(value, multiplicity)| CsvRow { alpha, value, multiplicity, source: source.into() })
}

fn write_spectrum(out: &mut String, s: &Spectrum) {
    for &(v, m) in s.entries() {
        let _ = writeln!(out, "    {:>18}  x{m}", num(v));
    }
}

fn write_matrix(out: &mut String, rows: &[Vec<f64>]) {
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&x| format!("{:>12}", num(x))).collect();
        let _ = writeln!(out, "    [{} ]", cells.join(""));
    }
}

#[derive(Debug, Serialize)]
pub struct AlphaSpectrum {
    pub alpha: f64,
    pub source: &'static str,
    #[serde(flatten)]
    pub spectrum: Spectrum,
}

#[derive(Debug, Serialize)]
pub struct SpectrumOutput {
    pub command: &'static str,
    pub input: String,
    pub order: usize,
    pub spectra: Vec<AlphaSpectrum>,
}

impl SpectrumOutput {
    pub fn csv(&self) -> CliResult<String> {
        csv_rows(self.spectra.iter().flat_map(|s| spectrum_rows(s.alpha, &s.spectrum, "oracle")))
    }

    pub fn human(&self) -> String {
        let mut out = format!("RD_alpha spectrum of {} (order {})\n", self.input, self.order);
        for s in &self.spectra {
            let _ = writeln!(out, "\n  alpha = {}   trace = {}", num(s.alpha), num(s.spectrum.trace()));
            write_spectrum(&mut out, &s.spectrum);
        }
        out
    }
}

/// A named closed-form identity checked against the oracle.
#[derive(Debug, Clone, Serialize)]
pub struct FormulaCheck {
    pub label: String,
    #[serde(rename = "match")]
    pub matches: bool,
    pub max_dev: f64,
}

/// Closed form against oracle at one `α`.
#[derive(Debug, Clone, Serialize)]
pub struct AlphaReport {
    pub alpha: f64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub max_dev: f64,
    pub closed_form: Spectrum,
    pub oracle: Spectrum,
    pub explicit: Vec<ExplicitEigenvalue>,
    pub quotient: QuotientMatrix,
    pub quotient_eigenvalues: Spectrum,
    pub formula_checks: Vec<FormulaCheck>,
    pub printed_formula_deviations: Vec<PrintedCheck>,
}

impl AlphaReport {
    pub fn passed(&self) -> bool {
        self.matches && self.formula_checks.iter().all(|c| c.matches)
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyOutput {
    pub command: &'static str,
    pub input: String,
    pub order: usize,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub reports: Vec<AlphaReport>,
}

fn printed_line(out: &mut String, alpha: f64, c: &PrintedCheck) {
    let status = if c.agrees() { "agrees" } else { "DEVIATES" };
    let _ = writeln!(out, "  alpha {:<6} {:<40} {status}", num(alpha), c.label());
    match c {
        PrintedCheck::Eigenvalue {
            printed_value,
            printed_multiplicity,
            derived_value,
            derived_multiplicity,
            printed_in_oracle,
            derived_in_oracle,
            ..
        } => {
            let _ = writeln!(
                out,
                "      printed {:>16} x{printed_multiplicity:<4} in spectrum: {}",
                num(*printed_value),
                yes_no(*printed_in_oracle)
            );
            let _ = writeln!(
                out,
                "      derived {:>16} x{derived_multiplicity:<4} in spectrum: {}",
                num(*derived_value),
                yes_no(*derived_in_oracle)
            );
        }
        PrintedCheck::Quotient { printed, derived, max_entry_deviation, printed_eigenvalues_in_oracle, .. } => {
            let _ = writeln!(
                out,
                "      largest entry deviation {:e}; printed eigenvalues in spectrum: {}",
                max_entry_deviation,
                yes_no(*printed_eigenvalues_in_oracle)
            );
            out.push_str("      printed:\n");
            write_matrix(out, printed);
            out.push_str("      derived:\n");
            write_matrix(out, derived);
        }
        PrintedCheck::Unparseable { text, .. } => {
            let _ = writeln!(out, "      cannot be evaluated as printed: {text:?}");
        }
    }
}

/// The discrepancy banner shared by `verify` and `sweep`.
fn printed_section<'a>(out: &mut String, checks: impl Iterator<Item = (f64, &'a PrintedCheck)>, all: bool) {
    let checks: Vec<_> = checks.collect();
    let deviating = checks.iter().filter(|(_, c)| !c.agrees()).count();
    let rule = "=".repeat(72);
    let _ = writeln!(
        out,
        "\n{rule}\n PUBLISHED FORMULA DISCREPANCIES: {deviating} of {} evaluations deviate\n{rule}",
        checks.len()
    );
    for (alpha, c) in checks.iter().filter(|(_, c)| all || !c.agrees()) {
        printed_line(out, *alpha, c);
    }
    if deviating == 0 && !all {
        out.push_str("  none\n");
    }
    let _ = writeln!(out, "{rule}");
}

impl VerifyOutput {
    pub fn csv(&self) -> CliResult<String> {
        let rows = self.reports.iter().flat_map(|r| {
            let explicit = r.explicit.iter().map(move |e| CsvRow {
                alpha: r.alpha,
                value: e.value,
                multiplicity: e.multiplicity,
                source: format!("explicit:{}", e.provenance),
            });
            explicit
                .chain(spectrum_rows(r.alpha, &r.quotient_eigenvalues, "quotient"))
                .chain(spectrum_rows(r.alpha, &r.oracle, "oracle"))
        });
        csv_rows(rows)
    }

    pub fn human(&self, compare_printed: bool) -> String {
        let mut out = format!("verify {} (order {}), tolerance {:e}\n", self.input, self.order, self.tolerance);
        if let Some(note) = &self.note {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(
            out,
            "\n  {:<8} {:<6} {:>14}  {:>9}  {:>8}",
            "alpha", "result", "max deviation", "explicit", "quotient"
        );
        for r in &self.reports {
            let _ = writeln!(
                out,
                "  {:<8} {:<6} {:>14.3e}  {:>9}  {:>8}",
                num(r.alpha),
                if r.passed() { "PASS" } else { "FAIL" },
                r.max_dev,
                r.explicit.len(),
                format!("{0}x{0}", r.quotient.order()),
            );
            for c in r.formula_checks.iter() {
                let _ = writeln!(
                    out,
                    "           {:<6} {:>14.3e}  formula: {}",
                    if c.matches { "PASS" } else { "FAIL" },
                    c.max_dev,
                    c.label
                );
            }
        }
        printed_section(
            &mut out,
            self.reports.iter().flat_map(|r| r.printed_formula_deviations.iter().map(move |c| (r.alpha, c))),
            compare_printed,
        );
        for r in self.reports.iter().filter(|r| !r.matches) {
            let _ = writeln!(out, "\nmismatch at alpha = {}", num(r.alpha));
            out.push_str("  closed form:\n");
            write_spectrum(&mut out, &r.closed_form);
            out.push_str("  oracle:\n");
            write_spectrum(&mut out, &r.oracle);
        }
        let passed = self.reports.iter().filter(|r| r.passed()).count();
        let _ = writeln!(
            out,
            "\nresult: {} ({passed}/{} alpha values match)",
            if self.pass { "PASS" } else { "FAIL" },
            self.reports.len()
        );
        out
    }
}

#[derive(Debug, Serialize)]
pub struct PrintedQuotient {
    pub label: String,
    pub rows: Vec<Vec<f64>>,
    pub max_entry_deviation: f64,
}

#[derive(Debug, Serialize)]
pub struct AlphaQuotient {
    pub alpha: f64,
    pub order: usize,
    pub equitable: bool,
    pub rows: Vec<Vec<f64>>,
    pub eigenvalues: Spectrum,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub printed: Vec<PrintedQuotient>,
}

#[derive(Debug, Serialize)]
pub struct QuotientOutput {
    pub command: &'static str,
    pub input: String,
    /// What the rows and columns index.
    pub partition: String,
    pub quotients: Vec<AlphaQuotient>,
}

impl QuotientOutput {
    pub fn csv(&self) -> CliResult<String> {
        csv_rows(self.quotients.iter().flat_map(|q| spectrum_rows(q.alpha, &q.eigenvalues, "quotient")))
    }

    pub fn human(&self) -> String {
        let mut out = format!("quotient of {} over {}\n", self.input, self.partition);
        for q in &self.quotients {
            let _ = writeln!(
                out,
                "\n  alpha = {}   {}x{} {}",
                num(q.alpha),
                q.order,
                q.order,
                if q.equitable { "equitable" } else { "not equitable" }
            );
            write_matrix(&mut out, &q.rows);
            out.push_str("  eigenvalues:\n");
            write_spectrum(&mut out, &q.eigenvalues);
            for p in &q.printed {
                let _ = writeln!(out, "  published {} (largest entry deviation {:e}):", p.label, p.max_entry_deviation);
                write_matrix(&mut out, &p.rows);
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct BlockSummary {
    pub index: usize,
    pub order: usize,
    pub degree: usize,
    pub elements: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct DecomposeOutput {
    pub command: &'static str,
    pub spec: String,
    pub order: usize,
    /// The power graph is complete and the plan is the single block `K₁[K_n]`.
    pub degenerate: bool,
    pub plan: serde_json::Value,
    pub parent_edges: Vec<(usize, usize)>,
    pub blocks: Vec<BlockSummary>,
    pub quotient_groups: Vec<Vec<usize>>,
}

impl DecomposeOutput {
    pub fn human(&self) -> String {
        let mut out = format!("joined-union plan of the power graph of {} (order {})\n", self.spec, self.order);
        if self.degenerate {
            out.push_str("degenerate: the power graph is complete, plan is K1[K_n]\n");
        }
        let edges: Vec<String> = self.parent_edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
        let _ = writeln!(out, "parent on {} vertices, edges: {}", self.blocks.len(), edges.join(" "));
        for b in &self.blocks {
            let kind = if b.degree + 1 == b.order {
                format!("K_{}", b.order)
            } else if b.degree == 0 {
                format!("empty_{}", b.order)
            } else {
                format!("{}-regular on {}", b.degree, b.order)
            };
            let _ = writeln!(out, "  block {:<3} {kind:<14} {}", b.index, b.elements.join(", "));
        }
        let groups: Vec<String> = self.quotient_groups.iter().map(|g| format!("{g:?}")).collect();
        let _ = writeln!(out, "reduced quotient merges blocks {}", groups.join(" "));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepResult {
    pub spec: String,
    pub alpha: f64,
    #[serde(rename = "match")]
    pub matches: bool,
    pub max_dev: f64,
    pub printed_deviations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub printed: Vec<PrintedCheck>,
}

#[derive(Debug, Serialize)]
pub struct Skipped {
    pub params: Vec<usize>,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct SweepOutput {
    pub command: &'static str,
    pub family: String,
    pub tolerance: f64,
    pub alphas: Vec<f64>,
    pub pass: bool,
    pub checked: usize,
    pub failed: usize,
    pub skipped: Vec<Skipped>,
    pub results: Vec<SweepResult>,
}

impl SweepOutput {
    /// `spec,alpha,match,max_dev,printed_deviations`: one row per (group, α).
    pub fn csv(&self) -> CliResult<String> {
        #[derive(Serialize)]
        struct Row<'a> {
            spec: &'a str,
            alpha: f64,
            #[serde(rename = "match")]
            matches: bool,
            max_dev: f64,
            printed_deviations: usize,
        }
        csv_rows(self.results.iter().map(|r| Row {
            spec: &r.spec,
            alpha: r.alpha,
            matches: r.matches,
            max_dev: r.max_dev,
            printed_deviations: r.printed_deviations,
        }))
    }

    pub fn human(&self, compare_printed: bool) -> String {
        let mut out = format!(
            "sweep {}: {} groups x {} alpha values, tolerance {:e}\n\n",
            self.family,
            self.results.len() / self.alphas.len().max(1),
            self.alphas.len(),
            self.tolerance
        );
        let _ = writeln!(
            out,
            "  {:<16} {:<8} {:<6} {:>14}  printed deviations",
            "group", "alpha", "result", "max deviation"
        );
        for r in &self.results {
            let _ = writeln!(
                out,
                "  {:<16} {:<8} {:<6} {:>14.3e}  {}",
                r.spec,
                num(r.alpha),
                if r.matches { "PASS" } else { "FAIL" },
                r.max_dev,
                r.printed_deviations
            );
            if let Some(e) = &r.error {
                let _ = writeln!(out, "      error: {e}");
            }
        }
        for s in &self.skipped {
            let _ = writeln!(out, "  skipped {:?}: {}", s.params, s.reason);
        }
        if compare_printed {
            for r in &self.results {
                let _ = writeln!(out, "\n{}:", r.spec);
                printed_section(&mut out, r.printed.iter().map(|c| (r.alpha, c)), true);
            }
        } else {
            let rule = "=".repeat(72);
            let deviating: Vec<_> = self.results.iter().filter(|r| r.printed_deviations > 0).collect();
            let _ = writeln!(
                out,
                "\n{rule}\n PUBLISHED FORMULA DISCREPANCIES: {} of {} (group, alpha) pairs\n{rule}",
                deviating.len(),
                self.results.len()
            );
            for r in deviating {
                let labels: Vec<&str> = r.printed.iter().filter(|c| !c.agrees()).map(|c| c.label()).collect();
                let _ = writeln!(out, "  {:<16} alpha {:<6} {}", r.spec, num(r.alpha), labels.join(", "));
            }
            let _ = writeln!(out, "{rule}");
        }
        let _ = writeln!(
            out,
            "\nresult: {} ({} checked, {} failed, {} skipped)",
            if self.pass { "PASS" } else { "FAIL" },
            self.checked,
            self.failed,
            self.skipped.len()
        );
        out
    }
}
