use crate::closed_form::{reduced_quotient, ClosedFormSpectrum, ExplicitEigenvalue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{is_prime, GroupSpec, StructuralDecomposition};
use crate::joined_union::JoinedUnionPlan;
use crate::printed::PrintedFormula;
use crate::spectral::QuotientMatrix;

use super::{cyclic_subgroup_blocks, expect_arity, PowerGraphFamily};

/// `(ℤ_p)^k`; element indices are base-`p` digit vectors, least significant first.
pub struct ElementaryAbelianFamily;

fn params(spec: &GroupSpec) -> (usize, u32) {
    match *spec {
        GroupSpec::ElementaryAbelian { p, k } => (p, k),
        _ => unreachable!("elemab family handed a {} spec", spec.family_name()),
    }
}

fn digits(p: usize, k: u32, mut x: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

/// Number of subgroups of order `p`: `(p^k − 1)/(p − 1)`.
pub fn subgroup_count(p: usize, k: u32) -> usize {
    (p.pow(k) - 1) / (p - 1)
}

impl ElementaryAbelianFamily {
    fn add(p: usize, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += (a % p + b % p) % p * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }
}

impl PowerGraphFamily for ElementaryAbelianFamily {
    fn name(&self) -> &'static str {
        "elemab"
    }

    fn parameter_names(&self) -> &'static [&'static str] {
        &["p", "k"]
    }

    fn spec_from_values(&self, values: &[usize]) -> Result<GroupSpec> {
        expect_arity(self.name(), values, 2)?;
        let k = u32::try_from(values[1]).map_err(|_| Error::InvalidSpec("elemab: k too large".into()))?;
        Ok(GroupSpec::ElementaryAbelian { p: values[0], k })
    }

    fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let (p, k) = params(spec);
        if !is_prime(p) {
            return Err(Error::InvalidSpec(format!("elemab:{p},{k}: {p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidSpec(format!("elemab:{p},{k}: need k >= 1")));
        }
        if p.checked_pow(k).is_none_or(|order| order > 1 << 16) {
            return Err(Error::InvalidSpec(format!("elemab:{p},{k}: group too large")));
        }
        Ok(())
    }

    fn multiply(&self, spec: &GroupSpec, a: usize, b: usize) -> usize {
        Self::add(params(spec).0, a, b)
    }

    fn element_label(&self, spec: &GroupSpec, x: usize) -> String {
        let (p, k) = params(spec);
        let parts: Vec<String> = digits(p, k, x).iter().map(usize::to_string).collect();
        format!("({})", parts.join(","))
    }

    /// `K_{1,ℓ}[K₁, K_{p−1}, …, K_{p−1}]`, subgroups ordered by smallest element.
    fn decomposition(&self, spec: &GroupSpec) -> Result<StructuralDecomposition> {
        let (p, k) = params(spec);
        let size = p.pow(k);
        let l = subgroup_count(p, k);
        let mut blocks = vec![vec![0]];
        blocks.extend(cyclic_subgroup_blocks(1..size, |a, b| Self::add(p, a, b), size));
        debug_assert_eq!(blocks.len(), l + 1);
        let mut components = vec![Graph::complete(1)];
        components.extend((0..l).map(|_| Graph::complete(p - 1)));
        let plan = JoinedUnionPlan::new(Graph::star(l), components).expect("star plan is valid");
        Ok(StructuralDecomposition::new(plan, blocks).with_quotient_groups(vec![vec![0], (1..=l).collect()]))
    }

    fn closed_form(&self, spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum> {
        let (p, k) = params(spec);
        let l = subgroup_count(p, k);
        let (pf, lf) = (p as f64, l as f64);
        let beta = 1.0 - alpha;
        let rt = (pf - 1.0) * (lf + 1.0) / 2.0;
        let block = ((rt + 1.0) * alpha - 1.0, l * (p - 2));
        let twins = (alpha * rt + beta * (pf - 3.0) / 2.0, l - 1);
        let quotient = reduced_quotient(&self.decomposition(spec)?, alpha)?;

        let printed = vec![
            PrintedFormula::Eigenvalue {
                label: "elemab.subgroup-blocks".into(),
                printed_value: block.0,
                printed_multiplicity: block.1,
                derived_value: block.0,
                derived_multiplicity: block.1,
            },
            PrintedFormula::Eigenvalue {
                label: "elemab.subgroup-blocks.twins".into(),
                printed_value: (2.0 * pf * lf + pf - 2.0 * lf + 1.0) / 2.0 * alpha + (pf - 1.0) / 2.0,
                printed_multiplicity: l - 1,
                derived_value: twins.0,
                derived_multiplicity: twins.1,
            },
            PrintedFormula::Quotient {
                label: "elemab.quotient".into(),
                printed: QuotientMatrix::from_rows(
                    &[
                        vec![lf * (pf - 1.0) * alpha, beta * (pf - 1.0) * (lf - 1.0)],
                        vec![beta, (pf * lf + pf - lf + 1.0) * alpha / 2.0 + (pf - 1.0) * (lf - 1.0) / 2.0],
                    ],
                    true,
                ),
                derived: quotient.clone(),
            },
        ];
        Ok(ClosedFormSpectrum {
            spec: *spec,
            alpha,
            explicit: vec![
                ExplicitEigenvalue::new(block.0, block.1, "elemab.subgroup-blocks"),
                ExplicitEigenvalue::new(twins.0, twins.1, "elemab.subgroup-blocks.twins"),
            ],
            quotient,
            printed,
        })
    }
}
