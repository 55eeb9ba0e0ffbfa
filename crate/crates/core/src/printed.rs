//! Published closed forms evaluated numerically, kept next to the values the
//! structure actually produces so disagreements can be reported.

use serde::{Deserialize, Serialize};

use crate::spectral::{general_eigenvalues, QuotientMatrix, Spectrum};

/// A formula as published, paired with the structurally derived counterpart.
#[derive(Debug, Clone, PartialEq)]
pub enum PrintedFormula {
    /// An eigenvalue family `value` with `multiplicity`. A zero printed
    /// multiplicity makes no claim about membership in the spectrum.
    Eigenvalue {
        label: String,
        printed_value: f64,
        printed_multiplicity: usize,
        derived_value: f64,
        derived_multiplicity: usize,
    },
    Quotient {
        label: String,
        printed: QuotientMatrix,
        derived: QuotientMatrix,
    },
    /// Text that cannot be evaluated as written.
    Unparseable {
        label: String,
        text: String,
    },
}

/// Result of checking a [`PrintedFormula`] against the derivation and an oracle spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PrintedCheck {
    Eigenvalue {
        label: String,
        printed_value: f64,
        printed_multiplicity: usize,
        derived_value: f64,
        derived_multiplicity: usize,
        deviation: f64,
        agrees: bool,
        printed_in_oracle: Option<bool>,
        derived_in_oracle: Option<bool>,
    },
    Quotient {
        label: String,
        printed: Vec<Vec<f64>>,
        derived: Vec<Vec<f64>>,
        max_entry_deviation: f64,
        agrees: bool,
        printed_eigenvalues_in_oracle: Option<bool>,
    },
    Unparseable {
        label: String,
        text: String,
        agrees: bool,
    },
}

impl PrintedFormula {
    pub fn label(&self) -> &str {
        match self {
            PrintedFormula::Eigenvalue { label, .. }
            | PrintedFormula::Quotient { label, .. }
            | PrintedFormula::Unparseable { label, .. } => label,
        }
    }

    /// Compares against the derivation at `tol`; membership is checked
    /// against `oracle` when one is given.
    pub fn check(&self, oracle: Option<&Spectrum>, tol: f64) -> PrintedCheck {
        match self {
            PrintedFormula::Eigenvalue {
                label,
                printed_value,
                printed_multiplicity,
                derived_value,
                derived_multiplicity,
            } => {
                let deviation = (printed_value - derived_value).abs();
                let present = |value: f64, mult: usize| {
                    oracle.filter(|_| mult > 0).map(|o| o.multiplicity_near(value, tol) >= mult)
                };
                PrintedCheck::Eigenvalue {
                    label: label.clone(),
                    printed_value: *printed_value,
                    printed_multiplicity: *printed_multiplicity,
                    derived_value: *derived_value,
                    derived_multiplicity: *derived_multiplicity,
                    deviation,
                    agrees: printed_multiplicity == derived_multiplicity
                        && (*printed_multiplicity == 0 || deviation <= tol),
                    printed_in_oracle: present(*printed_value, *printed_multiplicity),
                    derived_in_oracle: present(*derived_value, *derived_multiplicity),
                }
            }
            PrintedFormula::Quotient { label, printed, derived } => {
                let dev = printed.max_abs_diff(derived);
                let in_oracle = oracle.map(|o| {
                    // a printed matrix may be non-equitable garbage; take real parts
                    let mut p = printed.clone();
                    p.equitable = false;
                    general_eigenvalues(&p, tol)
                        .map(|s| s.entries().iter().all(|&(v, m)| o.multiplicity_near(v, tol) >= m))
                        .unwrap_or(false)
                });
                PrintedCheck::Quotient {
                    label: label.clone(),
                    printed: printed.rows(),
                    derived: derived.rows(),
                    max_entry_deviation: dev,
                    agrees: dev <= tol,
                    printed_eigenvalues_in_oracle: in_oracle,
                }
            }
            PrintedFormula::Unparseable { label, text } => {
                PrintedCheck::Unparseable { label: label.clone(), text: text.clone(), agrees: false }
            }
        }
    }
}

impl PrintedCheck {
    pub fn label(&self) -> &str {
        match self {
            PrintedCheck::Eigenvalue { label, .. }
            | PrintedCheck::Quotient { label, .. }
            | PrintedCheck::Unparseable { label, .. } => label,
        }
    }

    pub fn agrees(&self) -> bool {
        match self {
            PrintedCheck::Eigenvalue { agrees, .. }
            | PrintedCheck::Quotient { agrees, .. }
            | PrintedCheck::Unparseable { agrees, .. } => *agrees,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_check() {
        let oracle = Spectrum::from_pairs([(2.75, 5), (1.0, 1)], 1e-7);
        let good = PrintedFormula::Eigenvalue {
            label: "x".into(),
            printed_value: 2.75,
            printed_multiplicity: 5,
            derived_value: 2.75,
            derived_multiplicity: 5,
        };
        let c = good.check(Some(&oracle), 1e-8);
        assert!(c.agrees());
        assert!(matches!(c, PrintedCheck::Eigenvalue { printed_in_oracle: Some(true), .. }));

        let bad = PrintedFormula::Eigenvalue {
            label: "y".into(),
            printed_value: 2.5,
            printed_multiplicity: 5,
            derived_value: 2.75,
            derived_multiplicity: 5,
        };
        let c = bad.check(Some(&oracle), 1e-8);
        assert!(!c.agrees());
        assert!(matches!(
            c,
            PrintedCheck::Eigenvalue { printed_in_oracle: Some(false), derived_in_oracle: Some(true), .. }
        ));
    }

    #[test]
    fn multiplicity_mismatch_disagrees() {
        let f = PrintedFormula::Eigenvalue {
            label: "z".into(),
            printed_value: 1.0,
            printed_multiplicity: 3,
            derived_value: 1.0,
            derived_multiplicity: 2,
        };
        assert!(!f.check(None, 1e-8).agrees());
    }

    #[test]
    fn quotient_check_serializes_with_kind_tag() {
        let q = QuotientMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]], true);
        let f = PrintedFormula::Quotient { label: "q".into(), printed: q.clone(), derived: q };
        let c = f.check(Some(&Spectrum::from_values([3.0, -1.0])), 1e-8);
        assert!(c.agrees());
        let j = serde_json::to_value(&c).unwrap();
        assert_eq!(j["kind"], "quotient");
        assert_eq!(j["printed_eigenvalues_in_oracle"], true);
    }
}
