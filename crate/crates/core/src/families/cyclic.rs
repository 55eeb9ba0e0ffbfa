use crate::closed_form::{reduced_quotient, ClosedFormSpectrum, ExplicitEigenvalue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{divisor_graph, euler_phi, gcd, prime_power, GroupSpec, StructuralDecomposition};
use crate::joined_union::JoinedUnionPlan;
use crate::matrices::rd_alpha_matrix;
use crate::partition::{quotient_matrix, VertexPartition};
use crate::printed::PrintedFormula;
use crate::spectral::QuotientMatrix;

use super::{expect_arity, single_clique_decomposition, PowerGraphFamily};

/// `ℤ_n` under addition; element `k` is `r^k`.
pub struct CyclicFamily;

fn n_of(spec: &GroupSpec) -> usize {
    match *spec {
        GroupSpec::Cyclic { n } => n,
        _ => unreachable!("cyclic family handed a {} spec", spec.family_name()),
    }
}

pub(crate) fn rotation_label(k: usize) -> String {
    match k {
        0 => "e".into(),
        1 => "r".into(),
        _ => format!("r^{k}"),
    }
}

/// `S[K_{φ(n)+1}, K_{φ(d₁)}, …]` where `S` is the divisor graph plus a
/// universal vertex `v′` carrying the identity and the generators.
fn divisor_decomposition(n: usize) -> StructuralDecomposition {
    let t = divisor_graph(n);
    let mut edges: Vec<(usize, usize)> = (1..=t.divisors.len()).map(|i| (0, i)).collect();
    edges.extend(t.graph.edges().map(|(i, j)| (i + 1, j + 1)));
    let parent = Graph::new(t.divisors.len() + 1, edges).expect("parent indices are in range");

    let order = |k: usize| n / gcd(k, n);
    let mut blocks = vec![(0..n).filter(|&k| k == 0 || order(k) == n).collect::<Vec<_>>()];
    blocks.extend(t.divisors.iter().map(|&d| (0..n).filter(|&k| order(k) == d).collect()));
    let components = blocks.iter().map(|b| Graph::complete(b.len())).collect();
    let plan = JoinedUnionPlan::new(parent, components).expect("divisor plan is valid");
    StructuralDecomposition::new(plan, blocks)
}

impl PowerGraphFamily for CyclicFamily {
    fn name(&self) -> &'static str {
        "cyclic"
    }

    fn parameter_names(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn spec_from_values(&self, values: &[usize]) -> Result<GroupSpec> {
        expect_arity(self.name(), values, 1)?;
        Ok(GroupSpec::Cyclic { n: values[0] })
    }

    fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let n = n_of(spec);
        if n < 3 {
            return Err(Error::InvalidSpec(format!("cyclic:{n}: need n >= 3")));
        }
        Ok(())
    }

    fn multiply(&self, spec: &GroupSpec, a: usize, b: usize) -> usize {
        (a + b) % n_of(spec)
    }

    fn element_label(&self, _spec: &GroupSpec, x: usize) -> String {
        rotation_label(x)
    }

    /// Prime powers have a complete power graph and no useful plan.
    fn decomposition(&self, spec: &GroupSpec) -> Result<StructuralDecomposition> {
        let n = n_of(spec);
        if prime_power(n).is_some() {
            return Err(Error::DegenerateDecomposition { n: n as u64 });
        }
        Ok(divisor_decomposition(n))
    }

    fn verification_decompositions(&self, spec: &GroupSpec) -> Result<Vec<StructuralDecomposition>> {
        let n = n_of(spec);
        Ok(match prime_power(n) {
            Some((_, 1)) => vec![single_clique_decomposition(n)],
            Some(_) => vec![single_clique_decomposition(n), divisor_decomposition(n)],
            None => vec![divisor_decomposition(n)],
        })
    }

    fn closed_form(&self, spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum> {
        let n = n_of(spec);
        let nf = n as f64;
        if prime_power(n).is_some() {
            let quotient = quotient_matrix(&rd_alpha_matrix(&Graph::complete(n), alpha)?, &VertexPartition::whole(n));
            let printed = vec![
                PrintedFormula::Eigenvalue {
                    label: "cyclic.prime-power.perron".into(),
                    printed_value: nf - 1.0,
                    printed_multiplicity: 1,
                    derived_value: quotient.get(0, 0),
                    derived_multiplicity: 1,
                },
                PrintedFormula::Eigenvalue {
                    label: "cyclic.prime-power".into(),
                    printed_value: nf * alpha - 1.0,
                    printed_multiplicity: n - 1,
                    derived_value: nf * alpha - 1.0,
                    derived_multiplicity: n - 1,
                },
            ];
            return Ok(ClosedFormSpectrum {
                spec: *spec,
                alpha,
                explicit: vec![ExplicitEigenvalue::new(nf * alpha - 1.0, n - 1, "cyclic.prime-power")],
                quotient,
                printed,
            });
        }

        let d = divisor_decomposition(n);
        let t = divisor_graph(n);
        let phi_n = euler_phi(n) as f64;
        let phis: Vec<f64> = t.divisors.iter().map(|&d| euler_phi(d) as f64).collect();
        let cross = |i: usize, sum_weight: &dyn Fn(usize) -> f64| -> f64 {
            (0..phis.len()).filter(|&k| k != i).map(|k| sum_weight(k) / f64::from(t.distance(i, k))).sum()
        };

        let mut explicit = vec![ExplicitEigenvalue::new(nf * alpha - 1.0, euler_phi(n), "cyclic.generators")];
        for (i, &div) in t.divisors.iter().enumerate() {
            let rt = phi_n + 1.0 + phis[i] + cross(i, &|k| phis[k]);
            explicit.push(ExplicitEigenvalue::new(
                rt * alpha - 1.0,
                euler_phi(div) - 1,
                format!("cyclic.divisor-block(d={div})"),
            ));
        }
        let quotient = reduced_quotient(&d, alpha)?;

        let beta = 1.0 - alpha;
        let k = phis.len() + 1;
        let mut printed_q = vec![vec![0.0; k]; k];
        printed_q[0][0] = alpha * (nf - 1.0 - phi_n) + phi_n;
        for j in 1..k {
            printed_q[0][j] = beta * phis[j - 1];
            printed_q[j][0] = beta * (phi_n + 1.0);
        }
        for i in 1..k {
            for j in 1..k {
                printed_q[i][j] = if i == j {
                    alpha * (phi_n + cross(i - 1, &|k| phis[k]) + 1.0) + phis[i - 1] - 1.0
                } else {
                    beta * phis[j - 1] / f64::from(t.distance(i - 1, j - 1))
                };
            }
        }
        let mut printed = vec![
            PrintedFormula::Eigenvalue {
                label: "cyclic.generators".into(),
                printed_value: nf * alpha - 1.0,
                printed_multiplicity: euler_phi(n),
                derived_value: explicit[0].value,
                derived_multiplicity: explicit[0].multiplicity,
            },
            PrintedFormula::Unparseable {
                label: "cyclic.divisor-block".into(),
                text: "(φ(n) + φ(d_i) + Σ_{k=2, k≠i}^t φ(d_k)/d(v_i, v_k))α −1 1".into(),
            },
            PrintedFormula::Quotient {
                label: "cyclic.quotient".into(),
                printed: QuotientMatrix::from_rows(&printed_q, true),
                derived: quotient.clone(),
            },
        ];
        if let [p, q] = t.divisors[..] {
            if p * q == n {
                printed.extend(two_primes_printed(p, q, alpha, &explicit, &quotient));
            }
        }
        Ok(ClosedFormSpectrum { spec: *spec, alpha, explicit, quotient, printed })
    }
}

/// The `n = pq` special case as published.
fn two_primes_printed(
    p: usize,
    q: usize,
    alpha: f64,
    explicit: &[ExplicitEigenvalue],
    derived: &QuotientMatrix,
) -> Vec<PrintedFormula> {
    let (pf, qf) = (p as f64, q as f64);
    let n = pf * qf;
    let phi = (pf - 1.0) * (qf - 1.0);
    let beta = 1.0 - alpha;
    let family = |label: &str, value: f64, mult: usize, derived: &ExplicitEigenvalue| PrintedFormula::Eigenvalue {
        label: label.into(),
        printed_value: value,
        printed_multiplicity: mult,
        derived_value: derived.value,
        derived_multiplicity: derived.multiplicity,
    };
    vec![
        family("cyclic.two-primes.generators", n * alpha - 1.0, (p - 1) * (q - 1), &explicit[0]),
        family("cyclic.two-primes.smaller-prime-block", (n - (qf - 1.0) / 2.0) * alpha - 1.0, p - 2, &explicit[1]),
        family("cyclic.two-primes.larger-prime-block", (n - (pf - 1.0) / 2.0) * alpha - 1.0, q - 2, &explicit[2]),
        PrintedFormula::Quotient {
            label: "cyclic.two-primes.quotient".into(),
            printed: QuotientMatrix::from_rows(
                &[
                    vec![(n - 1.0 - phi) * alpha + phi, beta * (pf - 1.0), beta * (qf - 1.0)],
                    vec![beta * (pf - 1.0), (n - pf - (qf - 3.0) / 2.0) * alpha + pf - 2.0, beta * (qf - 2.0) / 2.0],
                    vec![beta * (qf - 1.0), beta * (pf - 2.0) / 2.0, (n - qf - (pf - 3.0) / 2.0) * alpha + qf - 2.0],
                ],
                true,
            ),
            derived: derived.clone(),
        },
    ]
}
