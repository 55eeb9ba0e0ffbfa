//! Closed-form `RD_α` spectra of power graphs: explicit eigenvalue families
//! plus a small quotient matrix whose roots complete the multiset.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::family_of;
use crate::groups::{cayley_power_graph, GroupSpec, StructuralDecomposition};
use crate::matrices::{check_alpha, rd_alpha_matrix};
use crate::partition::quotient_matrix;
use crate::printed::{PrintedCheck, PrintedFormula};
use crate::spectral::{
    general_eigenvalues, spectra_equal, sym_eigenvalues_default, union, QuotientMatrix, Spectrum, COALESCE_TOL,
    MATCH_TOL,
};

/// One eigenvalue family evaluated at a fixed `α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplicitEigenvalue {
    pub value: f64,
    pub multiplicity: usize,
    /// Which structural feature produces the family, e.g. `dihedral.reflections`.
    pub provenance: String,
}

impl ExplicitEigenvalue {
    pub fn new(value: f64, multiplicity: usize, provenance: impl Into<String>) -> Self {
        ExplicitEigenvalue { value, multiplicity, provenance: provenance.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSpectrum {
    pub spec: GroupSpec,
    pub alpha: f64,
    pub explicit: Vec<ExplicitEigenvalue>,
    pub quotient: QuotientMatrix,
    /// Published formulas for the same spectrum, for the deviation report.
    pub printed: Vec<PrintedFormula>,
}

impl ClosedFormSpectrum {
    /// `Σ explicit multiplicities + quotient order`.
    pub fn total_multiplicity(&self) -> usize {
        self.explicit.iter().map(|e| e.multiplicity).sum::<usize>() + self.quotient.order()
    }

    pub fn is_complete(&self) -> bool {
        self.total_multiplicity() == self.spec.order()
    }

    pub fn explicit_spectrum(&self) -> Spectrum {
        Spectrum::from_pairs(self.explicit.iter().map(|e| (e.value, e.multiplicity)), COALESCE_TOL)
    }

    pub fn quotient_spectrum(&self) -> Result<Spectrum> {
        general_eigenvalues(&self.quotient, MATCH_TOL)
    }

    /// Explicit families together with the quotient roots.
    pub fn assembled(&self) -> Result<Spectrum> {
        if !self.is_complete() {
            return Err(Error::InvalidSpec(format!(
                "{}: closed form accounts for {} of {} eigenvalues",
                self.spec,
                self.total_multiplicity(),
                self.spec.order()
            )));
        }
        Ok(union(&[self.explicit_spectrum(), self.quotient_spectrum()?]))
    }

    pub fn printed_checks(&self, oracle: Option<&Spectrum>, tol: f64) -> Vec<PrintedCheck> {
        self.printed.iter().map(|f| f.check(oracle, tol)).collect()
    }
}

/// The closed form of any supported group.
pub fn closed_form(spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum> {
    check_alpha(alpha)?;
    spec.validate()?;
    family_of(spec).closed_form(spec, alpha)
}

fn family_closed_form(spec: Result<GroupSpec>, alpha: f64) -> Result<ClosedFormSpectrum> {
    let spec = spec.map_err(|e| Error::InvalidParameter(e.to_string()))?;
    spec.validate().map_err(|e| Error::InvalidParameter(e.to_string()))?;
    closed_form(&spec, alpha)
}

pub fn cyclic_spectrum(n: usize, alpha: f64) -> Result<ClosedFormSpectrum> {
    family_closed_form(Ok(GroupSpec::Cyclic { n }), alpha)
}

pub fn dihedral_spectrum(n: usize, alpha: f64) -> Result<ClosedFormSpectrum> {
    family_closed_form(Ok(GroupSpec::Dihedral { n }), alpha)
}

pub fn quaternion_spectrum(n: usize, alpha: f64) -> Result<ClosedFormSpectrum> {
    family_closed_form(Ok(GroupSpec::Quaternion { n }), alpha)
}

pub fn elementary_abelian_spectrum(p: usize, k: u32, alpha: f64) -> Result<ClosedFormSpectrum> {
    family_closed_form(Ok(GroupSpec::ElementaryAbelian { p, k }), alpha)
}

pub fn nonabelian_pq_spectrum(p: usize, q: usize, alpha: f64) -> Result<ClosedFormSpectrum> {
    family_closed_form(GroupSpec::nonabelian_pq(p, q), alpha)
}

/// Quotient of `RD_α(compose(plan))` over the decomposition's reduced partition.
pub(crate) fn reduced_quotient(d: &StructuralDecomposition, alpha: f64) -> Result<QuotientMatrix> {
    let m = rd_alpha_matrix(&d.plan.compose(), alpha)?;
    let partition = d.plan.block_partition().merge(&d.quotient_groups)?;
    Ok(quotient_matrix(&m, &partition))
}

/// `RD_α` spectrum of the power graph built from subgroup membership.
pub fn oracle_spectrum(spec: &GroupSpec, alpha: f64) -> Result<Spectrum> {
    let (g, _) = cayley_power_graph(spec)?;
    sym_eigenvalues_default(&rd_alpha_matrix(&g, alpha)?)
}

/// Closed form against the brute-force oracle at one `α`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub spec: String,
    pub alpha: f64,
    pub closed_form: Spectrum,
    pub oracle: Spectrum,
    #[serde(rename = "match")]
    pub matches: bool,
    pub max_dev: f64,
    pub explicit: Vec<ExplicitEigenvalue>,
    pub quotient: QuotientMatrix,
    pub quotient_eigenvalues: Spectrum,
    pub printed_formula_deviations: Vec<PrintedCheck>,
}

pub fn verify_closed_form(spec: &GroupSpec, alpha: f64, tol: f64) -> Result<VerificationReport> {
    let cf = closed_form(spec, alpha)?;
    let assembled = cf.assembled()?;
    let oracle = oracle_spectrum(spec, alpha)?;
    let m = spectra_equal(&assembled, &oracle, tol);
    Ok(VerificationReport {
        spec: spec.to_string(),
        alpha,
        printed_formula_deviations: cf.printed_checks(Some(&oracle), tol),
        quotient_eigenvalues: cf.quotient_spectrum()?,
        closed_form: assembled,
        oracle,
        matches: m.equal,
        max_dev: m.max_deviation,
        explicit: cf.explicit,
        quotient: cf.quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::structural_power_graph;
    use crate::matrices::reciprocal_transmissions;

    fn assert_matches_oracle(spec: &GroupSpec, alpha: f64) -> ClosedFormSpectrum {
        let cf = closed_form(spec, alpha).unwrap();
        assert!(cf.is_complete(), "{spec}");
        let r = spectra_equal(&cf.assembled().unwrap(), &oracle_spectrum(spec, alpha).unwrap(), 1e-8);
        assert!(r.equal, "{spec} at alpha={alpha}: {r:?}");
        cf
    }

    #[test]
    fn cyclic_prime_power() {
        let s = cyclic_spectrum(9, 0.5).unwrap().assembled().unwrap();
        assert_eq!(s.entries().len(), 2);
        assert!(s.multiplicity_near(8.0, 1e-12) == 1 && s.multiplicity_near(3.5, 1e-12) == 8);
    }

    #[test]
    fn cyclic_examples() {
        let cf = assert_matches_oracle(&GroupSpec::Cyclic { n: 6 }, 0.0);
        assert_eq!(cf.explicit[0], ExplicitEigenvalue::new(-1.0, 2, "cyclic.generators"));
        assert_eq!(cf.quotient.order(), 3);
        assert_matches_oracle(&GroupSpec::Cyclic { n: 12 }, 0.75);
    }

    #[test]
    fn cyclic_two_primes_families() {
        let cf = cyclic_spectrum(15, 0.4).unwrap();
        let (p, q, a) = (3.0, 5.0, 0.4);
        let want =
            [(15.0 * a - 1.0, 8), ((p * q - (q - 1.0) / 2.0) * a - 1.0, 1), ((p * q - (p - 1.0) / 2.0) * a - 1.0, 3)];
        for (e, (v, m)) in cf.explicit.iter().zip(want) {
            assert!((e.value - v).abs() < 1e-12 && e.multiplicity == m, "{e:?}");
        }
    }

    #[test]
    fn dihedral_examples() {
        let cf = assert_matches_oracle(&GroupSpec::Dihedral { n: 4 }, 0.5);
        let explicit = cf.explicit_spectrum();
        assert_eq!(explicit.multiplicity_near(1.75, 1e-12), 3);
        assert_eq!(explicit.multiplicity_near(2.0, 1e-12), 2);
        assert_matches_oracle(&GroupSpec::Dihedral { n: 6 }, 0.0);

        let s = dihedral_spectrum(3, 1.0).unwrap().assembled().unwrap();
        let (g, _) = cayley_power_graph(&GroupSpec::Dihedral { n: 3 }).unwrap();
        let rt = Spectrum::from_values(reciprocal_transmissions(&g).unwrap());
        assert!(spectra_equal(&s, &rt, 1e-10).equal);
    }

    #[test]
    fn quaternion_examples() {
        assert_matches_oracle(&GroupSpec::Quaternion { n: 2 }, 0.5);
        assert_matches_oracle(&GroupSpec::Quaternion { n: 3 }, 0.25);
        let cf = assert_matches_oracle(&GroupSpec::Quaternion { n: 4 }, 0.0);
        assert_eq!(cf.explicit[0], ExplicitEigenvalue::new(-1.0, 1, "quaternion.center-pair"));
    }

    #[test]
    fn elementary_abelian_examples() {
        assert_matches_oracle(&GroupSpec::ElementaryAbelian { p: 3, k: 2 }, 0.5);
        let cf = assert_matches_oracle(&GroupSpec::ElementaryAbelian { p: 2, k: 3 }, 0.3);
        assert_eq!(cf.explicit[0].multiplicity, 0);
        let s = elementary_abelian_spectrum(5, 1, 0.3).unwrap().assembled().unwrap();
        assert_eq!(s.multiplicity_near(4.0, 1e-10), 1);
        assert_eq!(s.multiplicity_near(0.5, 1e-10), 4);
    }

    #[test]
    fn pq_examples() {
        assert_matches_oracle(&GroupSpec::nonabelian_pq(2, 3).unwrap(), 0.5);
        assert_matches_oracle(&GroupSpec::nonabelian_pq(3, 7).unwrap(), 0.0);
        let cf = nonabelian_pq_spectrum(2, 3, 0.5).unwrap();
        assert_eq!(cf.explicit[0].multiplicity, 0);
        assert!(matches!(nonabelian_pq_spectrum(3, 5, 0.5), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(cyclic_spectrum(2, 0.5), Err(Error::InvalidParameter(_))));
        assert!(matches!(dihedral_spectrum(1, 0.5), Err(Error::InvalidParameter(_))));
        assert!(matches!(quaternion_spectrum(1, 0.5), Err(Error::InvalidParameter(_))));
        assert!(matches!(elementary_abelian_spectrum(6, 2, 0.5), Err(Error::InvalidParameter(_))));
        assert!(matches!(cyclic_spectrum(6, 1.5), Err(Error::AlphaOutOfRange(_))));
    }

    #[test]
    fn reduced_quotient_is_equitable() {
        for s in ["quaternion:6", "elemab:3,2", "pq:2,7", "dihedral:12", "cyclic:30"] {
            let d = structural_power_graph(&s.parse().unwrap()).unwrap();
            assert!(reduced_quotient(&d, 0.35).unwrap().equitable, "{s}");
        }
    }

    #[test]
    fn report_json_shape() {
        let r = verify_closed_form(&GroupSpec::Dihedral { n: 6 }, 0.5, 1e-8).unwrap();
        assert!(r.matches);
        let j = serde_json::to_value(&r).unwrap();
        for key in ["spec", "alpha", "closed_form", "oracle", "match", "max_dev", "printed_formula_deviations"] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["spec"], "dihedral:6");
    }
}
