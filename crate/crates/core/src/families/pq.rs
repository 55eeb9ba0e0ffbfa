use crate::closed_form::{reduced_quotient, ClosedFormSpectrum, ExplicitEigenvalue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{is_prime, multiplicative_order, smallest_unit_of_order, GroupSpec, StructuralDecomposition};
use crate::joined_union::JoinedUnionPlan;
use crate::printed::PrintedFormula;
use crate::spectral::QuotientMatrix;

use super::{cyclic_subgroup_blocks, expect_arity, PowerGraphFamily};

/// `ℤ_q ⋊ ℤ_p`: index `a + q·b` is `(a mod q, b mod p)` and
/// `(a₁, b₁)(a₂, b₂) = (a₁ + u^{b₁}·a₂, b₁ + b₂)`.
pub struct NonabelianPqFamily;

fn params(spec: &GroupSpec) -> (usize, usize, usize) {
    match *spec {
        GroupSpec::NonabelianPq { p, q, unit } => (p, q, unit),
        _ => unreachable!("pq family handed a {} spec", spec.family_name()),
    }
}

fn mul(p: usize, q: usize, unit: usize, x: usize, y: usize) -> usize {
    let (a1, b1) = (x % q, x / q);
    let (a2, b2) = (y % q, y / q);
    let mut twist = 1;
    for _ in 0..b1 {
        twist = twist * unit % q;
    }
    (a1 + twist * a2) % q + q * ((b1 + b2) % p)
}

impl PowerGraphFamily for NonabelianPqFamily {
    fn name(&self) -> &'static str {
        "pq"
    }

    fn parameter_names(&self) -> &'static [&'static str] {
        &["p", "q"]
    }

    /// `p,q` picks the smallest admissible unit; `p,q,u` fixes it.
    fn spec_from_values(&self, values: &[usize]) -> Result<GroupSpec> {
        if values.len() == 3 {
            return Ok(GroupSpec::NonabelianPq { p: values[0], q: values[1], unit: values[2] });
        }
        expect_arity(self.name(), values, 2)?;
        let (p, q) = (values[0], values[1]);
        let unit = smallest_unit_of_order(p, q).unwrap_or(0);
        Ok(GroupSpec::NonabelianPq { p, q, unit })
    }

    fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let (p, q, unit) = params(spec);
        let fail = |why: String| Err(Error::InvalidSpec(format!("pq:{p},{q}: {why}")));
        if !is_prime(p) || !is_prime(q) {
            return fail("p and q must be prime".into());
        }
        if p >= q {
            return fail("need p < q".into());
        }
        if q % p != 1 {
            return fail(format!("{q} is not 1 mod {p}, so no non-abelian group exists"));
        }
        if multiplicative_order(unit, q) != Some(p) {
            return fail(format!("{unit} does not have order {p} modulo {q}"));
        }
        Ok(())
    }

    fn multiply(&self, spec: &GroupSpec, a: usize, b: usize) -> usize {
        let (p, q, unit) = params(spec);
        mul(p, q, unit, a, b)
    }

    fn element_label(&self, spec: &GroupSpec, x: usize) -> String {
        let (_, q, _) = params(spec);
        format!("({},{})", x % q, x / q)
    }

    /// `K_{1,q+1}[K₁, K_{p−1} × q, K_{q−1}]`: identity, Sylow `p`-subgroups by
    /// smallest element, then the Sylow `q`-subgroup.
    fn decomposition(&self, spec: &GroupSpec) -> Result<StructuralDecomposition> {
        let (p, q, unit) = params(spec);
        let size = p * q;
        let mut blocks = vec![vec![0]];
        blocks.extend(cyclic_subgroup_blocks(q..size, |a, b| mul(p, q, unit, a, b), size));
        blocks.push((1..q).collect());
        debug_assert_eq!(blocks.len(), q + 2);
        let mut components = vec![Graph::complete(1)];
        components.extend((0..q).map(|_| Graph::complete(p - 1)));
        components.push(Graph::complete(q - 1));
        let plan = JoinedUnionPlan::new(Graph::star(q + 1), components).expect("star plan is valid");
        Ok(StructuralDecomposition::new(plan, blocks).with_quotient_groups(vec![
            vec![0],
            (1..=q).collect(),
            vec![q + 1],
        ]))
    }

    fn closed_form(&self, spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum> {
        let (p, q, _) = params(spec);
        let (pf, qf) = (p as f64, q as f64);
        let beta = 1.0 - alpha;
        let sylow_p = ((pf * qf + pf) / 2.0 * alpha - 1.0, q * (p - 2));
        let sylow_q = ((pf + 1.0) * qf / 2.0 * alpha - 1.0, q - 2);
        let twins = ((pf * qf + 1.0) / 2.0 * alpha + (pf - 3.0) / 2.0, q - 1);
        let quotient = reduced_quotient(&self.decomposition(spec)?, alpha)?;

        let eigen = |label: &str, printed: f64, derived: (f64, usize)| PrintedFormula::Eigenvalue {
            label: label.into(),
            printed_value: printed,
            printed_multiplicity: derived.1,
            derived_value: derived.0,
            derived_multiplicity: derived.1,
        };
        let printed = vec![
            eigen("pq.sylow-p-blocks", (pf * qf + pf + 1.0) / 2.0 * alpha - 1.0, sylow_p),
            eigen("pq.sylow-q-block", sylow_q.0, sylow_q),
            eigen("pq.sylow-p-blocks.twins", (pf * qf + 2.0) / 2.0 * alpha + (pf - 3.0) / 2.0, twins),
            PrintedFormula::Quotient {
                label: "pq.quotient".into(),
                printed: QuotientMatrix::from_rows(
                    &[
                        vec![(pf * qf - 1.0) * alpha, beta * (pf - 1.0) * (qf - 1.0), beta * (qf - 1.0)],
                        vec![beta, (qf + 2.0) * alpha / 2.0 + (pf - 1.0) * (qf - 1.0) / 2.0, beta * (qf - 1.0) / 2.0],
                        vec![beta, qf * beta * (pf - 1.0) / 2.0, (pf * qf - qf + 2.0) * alpha / 2.0 + qf - 2.0],
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
                ExplicitEigenvalue::new(sylow_p.0, sylow_p.1, "pq.sylow-p-blocks"),
                ExplicitEigenvalue::new(sylow_q.0, sylow_q.1, "pq.sylow-q-block"),
                ExplicitEigenvalue::new(twins.0, twins.1, "pq.sylow-p-blocks.twins"),
            ],
            quotient,
            printed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_law_is_associative_and_non_abelian() {
        let (p, q, u) = (3, 7, 2);
        let n = p * q;
        for x in 0..n {
            for y in 0..n {
                for z in (0..n).step_by(5) {
                    assert_eq!(mul(p, q, u, mul(p, q, u, x, y), z), mul(p, q, u, x, mul(p, q, u, y, z)));
                }
            }
        }
        assert_ne!(mul(p, q, u, 1, q), mul(p, q, u, q, 1));
    }
}
