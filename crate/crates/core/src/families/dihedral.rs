use crate::closed_form::{reduced_quotient, ClosedFormSpectrum, ExplicitEigenvalue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{divisor_graph, euler_phi, gcd, prime_power, GroupSpec, StructuralDecomposition};
use crate::joined_union::JoinedUnionPlan;
use crate::printed::PrintedFormula;
use crate::spectral::QuotientMatrix;

use super::cyclic::rotation_label;
use super::{expect_arity, PowerGraphFamily};

/// `D_{2n} = ⟨r, s | rⁿ = s² = 1, rs = sr⁻¹⟩`. Index `i` is `r^i`, index
/// `n + i` is `r^i s`.
pub struct DihedralFamily;

fn n_of(spec: &GroupSpec) -> usize {
    match *spec {
        GroupSpec::Dihedral { n } => n,
        _ => unreachable!("dihedral family handed a {} spec", spec.family_name()),
    }
}

fn rotation_order(n: usize, i: usize) -> usize {
    n / gcd(i, n)
}

fn reflections(n: usize) -> Vec<usize> {
    (n..2 * n).collect()
}

/// Identity, generators of `⟨r⟩`, one block per proper divisor of `n`,
/// then the reflections as an independent set hanging off the identity.
fn general_decomposition(n: usize) -> StructuralDecomposition {
    let t = divisor_graph(n);
    let last = t.divisors.len() + 2;
    let mut edges: Vec<(usize, usize)> = (1..=last).map(|v| (0, v)).collect();
    edges.extend((0..t.divisors.len()).map(|i| (1, i + 2)));
    edges.extend(t.graph.edges().map(|(i, j)| (i + 2, j + 2)));
    let parent = Graph::new(last + 1, edges).expect("parent indices are in range");

    let mut blocks = vec![vec![0], (1..n).filter(|&i| rotation_order(n, i) == n).collect()];
    blocks.extend(t.divisors.iter().map(|&d| (1..n).filter(|&i| rotation_order(n, i) == d).collect()));
    blocks.push(reflections(n));
    let mut components: Vec<Graph> = blocks[..last].iter().map(|b| Graph::complete(b.len())).collect();
    components.push(Graph::empty(n));
    let plan = JoinedUnionPlan::new(parent, components).expect("dihedral plan is valid");
    StructuralDecomposition::new(plan, blocks)
}

/// `K_{1,2}[K₁, K_{n−1}, K̄_n]` for prime-power `n`.
fn prime_power_decomposition(n: usize) -> StructuralDecomposition {
    let plan = JoinedUnionPlan::new(Graph::star(2), vec![Graph::complete(1), Graph::complete(n - 1), Graph::empty(n)])
        .expect("collapsed dihedral plan is valid");
    StructuralDecomposition::new(plan, vec![vec![0], (1..n).collect(), reflections(n)])
}

fn eigen(label: String, printed: (f64, usize), derived: (f64, usize)) -> PrintedFormula {
    PrintedFormula::Eigenvalue {
        label,
        printed_value: printed.0,
        printed_multiplicity: printed.1,
        derived_value: derived.0,
        derived_multiplicity: derived.1,
    }
}

impl PowerGraphFamily for DihedralFamily {
    fn name(&self) -> &'static str {
        "dihedral"
    }

    fn parameter_names(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn spec_from_values(&self, values: &[usize]) -> Result<GroupSpec> {
        expect_arity(self.name(), values, 1)?;
        Ok(GroupSpec::Dihedral { n: values[0] })
    }

    fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let n = n_of(spec);
        if n < 2 {
            return Err(Error::InvalidSpec(format!("dihedral:{n}: need n >= 2")));
        }
        Ok(())
    }

    fn multiply(&self, spec: &GroupSpec, a: usize, b: usize) -> usize {
        let n = n_of(spec);
        let (i, f) = (a % n, a / n);
        let (j, g) = (b % n, b / n);
        if f == 0 {
            (i + j) % n + n * g
        } else {
            (i + n - j) % n + n * (1 - g)
        }
    }

    fn element_label(&self, spec: &GroupSpec, x: usize) -> String {
        let n = n_of(spec);
        match (x % n, x / n) {
            (i, 0) => rotation_label(i),
            (0, _) => "s".into(),
            (i, _) => format!("{} s", rotation_label(i)),
        }
    }

    fn decomposition(&self, spec: &GroupSpec) -> Result<StructuralDecomposition> {
        let n = n_of(spec);
        Ok(if prime_power(n).is_some() { prime_power_decomposition(n) } else { general_decomposition(n) })
    }

    fn verification_decompositions(&self, spec: &GroupSpec) -> Result<Vec<StructuralDecomposition>> {
        let n = n_of(spec);
        Ok(match prime_power(n) {
            Some((_, m)) if m >= 2 => vec![prime_power_decomposition(n), general_decomposition(n)],
            _ => vec![self.decomposition(spec)?],
        })
    }

    fn closed_form(&self, spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum> {
        let n = n_of(spec);
        let nf = n as f64;
        let beta = 1.0 - alpha;
        let generators = (1.5 * nf * alpha - 1.0, euler_phi(n) - 1);
        let reflection = ((nf + 0.5) * alpha - 0.5, n - 1);
        // the general statement's value for the reflection block
        let reflection_printed = eigen("dihedral.reflections".into(), ((nf + 1.0) * alpha - 1.0, n - 1), reflection);

        if prime_power(n).is_some() {
            let d = prime_power_decomposition(n);
            let quotient = reduced_quotient(&d, alpha)?;
            let printed = vec![
                eigen("dihedral.prime-power.reflections".into(), reflection, reflection),
                eigen(
                    "dihedral.prime-power.rotations".into(),
                    (1.5 * nf * alpha - 1.0, n - 2),
                    (1.5 * nf * alpha - 1.0, n - 2),
                ),
                reflection_printed,
                PrintedFormula::Quotient {
                    label: "dihedral.prime-power.quotient".into(),
                    printed: QuotientMatrix::from_rows(
                        &[
                            vec![(2.0 * nf - 1.0) * alpha, beta * (nf - 1.0), beta * nf],
                            vec![beta, (nf / 2.0 + 1.0) * alpha + nf - 2.0, beta * nf / 2.0],
                            vec![beta, beta * (nf - 1.0) / 2.0, alpha + nf - 1.0],
                        ],
                        true,
                    ),
                    derived: quotient.clone(),
                },
            ];
            return Ok(ClosedFormSpectrum {
                spec: *spec,
                alpha,
                explicit: vec![
                    ExplicitEigenvalue::new(reflection.0, reflection.1, "dihedral.reflections"),
                    ExplicitEigenvalue::new(1.5 * nf * alpha - 1.0, n - 2, "dihedral.rotations"),
                ],
                quotient,
                printed,
            });
        }

        let d = general_decomposition(n);
        let t = divisor_graph(n);
        let phi_n = euler_phi(n) as f64;
        let phis: Vec<f64> = t.divisors.iter().map(|&d| euler_phi(d) as f64).collect();
        let cross = |i: usize, weight: &dyn Fn(usize) -> f64| -> f64 {
            (0..phis.len()).filter(|&k| k != i).map(|k| weight(k) / f64::from(t.distance(i, k))).sum()
        };

        let mut explicit = vec![
            ExplicitEigenvalue::new(generators.0, generators.1, "dihedral.generators"),
            ExplicitEigenvalue::new(reflection.0, reflection.1, "dihedral.reflections"),
        ];
        let mut printed = vec![eigen("dihedral.generators".into(), generators, generators), reflection_printed];
        for (i, &div) in t.divisors.iter().enumerate() {
            let base = phi_n + phis[i] + nf / 2.0 + 1.0;
            let derived = ((base + cross(i, &|k| phis[k])) * alpha - 1.0, euler_phi(div) - 1);
            let label = format!("dihedral.divisor-block(d={div})");
            printed.push(eigen(label.clone(), ((base + cross(i, &|_| 1.0)) * alpha - 1.0, derived.1), derived));
            explicit.push(ExplicitEigenvalue::new(derived.0, derived.1, label));
        }
        let quotient = reduced_quotient(&d, alpha)?;

        // order: identity, generators, divisor blocks, reflections
        let t_len = phis.len();
        let k = t_len + 3;
        let last = k - 1;
        let mut q = vec![vec![0.0; k]; k];
        q[0][0] = (2.0 * nf - 1.0) * alpha;
        q[0][1] = beta * phi_n;
        q[0][last] = beta * nf;
        q[1][1] = (1.5 * nf - phi_n) * alpha + phi_n - 1.0;
        q[1][last] = beta * nf / 2.0;
        q[last][1] = beta * phi_n / 2.0;
        q[last][last] = (nf + 1.0) * alpha / 2.0 + (nf - 1.0) / 2.0;
        for row in q.iter_mut().skip(1) {
            row[0] = beta;
        }
        for i in 0..t_len {
            let r = i + 2;
            q[0][r] = beta * phis[i];
            q[1][r] = beta * phis[i];
            q[r][1] = beta * phi_n;
            q[r][last] = beta * nf / 2.0;
            q[last][r] = beta * phis[i] / 2.0;
            for j in 0..t_len {
                q[r][j + 2] = if i == j {
                    (phi_n + cross(i, &|_| 1.0) + nf / 2.0 + 1.0) * alpha + phis[i] - 1.0
                } else {
                    beta * phis[j] / f64::from(t.distance(i, j))
                };
            }
        }
        printed.push(PrintedFormula::Quotient {
            label: "dihedral.quotient".into(),
            printed: QuotientMatrix::from_rows(&q, true),
            derived: quotient.clone(),
        });
        Ok(ClosedFormSpectrum { spec: *spec, alpha, explicit, quotient, printed })
    }
}
