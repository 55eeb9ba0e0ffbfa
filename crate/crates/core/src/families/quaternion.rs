use crate::closed_form::{reduced_quotient, ClosedFormSpectrum, ExplicitEigenvalue};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{euler_phi, gcd, proper_divisors, GroupSpec, StructuralDecomposition};
use crate::joined_union::JoinedUnionPlan;
use crate::printed::PrintedFormula;
use crate::spectral::QuotientMatrix;

use super::cyclic::rotation_label;
use super::{expect_arity, PowerGraphFamily};

/// `Q_{4n} = ⟨r, s | r^{2n} = 1, s² = rⁿ, s⁻¹rs = r⁻¹⟩`. Index `i < 2n` is
/// `r^i`, index `2n + i` is `r^i s`.
pub struct QuaternionFamily;

fn n_of(spec: &GroupSpec) -> usize {
    match *spec {
        GroupSpec::Quaternion { n } => n,
        _ => unreachable!("quaternion family handed a {} spec", spec.family_name()),
    }
}

fn rotation_order(n: usize, i: usize) -> usize {
    2 * n / gcd(i, 2 * n)
}

fn coset_pairs(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|k| vec![2 * n + k, 2 * n + k + n]).collect()
}

/// Divisors of `2n` strictly between 2 and `2n`.
fn middle_divisors(n: usize) -> Vec<usize> {
    proper_divisors(2 * n).into_iter().filter(|&d| d != 2).collect()
}

/// Parent on `{v₁, v₂, v₃} ∪ {w_i} ∪ {y_k}`: `v₁` is the identity, `v₂` the
/// involution `rⁿ`, `v₃` the generators of `⟨r⟩`, `w_i` the elements of order
/// `d_i`, and `y_k = {r^k s, r^{k+n} s}`.
fn general_decomposition(n: usize) -> StructuralDecomposition {
    let ds = middle_divisors(n);
    let t = ds.len();
    let w = |i: usize| 3 + i;
    let y = |k: usize| 3 + t + k;
    let order = 3 + t + n;
    let mut edges: Vec<(usize, usize)> = (1..order).map(|v| (0, v)).collect();
    edges.push((1, 2));
    edges.extend((0..n).map(|k| (1, y(k))));
    for (i, &di) in ds.iter().enumerate() {
        if di % 2 == 0 {
            edges.push((1, w(i)));
        }
        edges.push((2, w(i)));
        for (j, &dj) in ds.iter().enumerate().skip(i + 1) {
            if dj % di == 0 {
                edges.push((w(i), w(j)));
            }
        }
    }
    let parent = Graph::new(order, edges).expect("parent indices are in range");

    let mut blocks = vec![vec![0], vec![n], (1..2 * n).filter(|&i| rotation_order(n, i) == 2 * n).collect()];
    blocks.extend(ds.iter().map(|&d| (1..2 * n).filter(|&i| rotation_order(n, i) == d).collect()));
    blocks.extend(coset_pairs(n));
    let components = blocks.iter().map(|b| Graph::complete(b.len())).collect();
    let plan = JoinedUnionPlan::new(parent, components).expect("quaternion plan is valid");
    let mut groups: Vec<Vec<usize>> = (0..3 + t).map(|i| vec![i]).collect();
    groups.push((3 + t..order).collect());
    StructuralDecomposition::new(plan, blocks).with_quotient_groups(groups)
}

/// `K_{1,n+1}[K₂, K_{2n−2}, K₂, …, K₂]` for `n` a power of two.
fn two_power_decomposition(n: usize) -> StructuralDecomposition {
    let mut components = vec![Graph::complete(2), Graph::complete(2 * n - 2)];
    components.extend((0..n).map(|_| Graph::complete(2)));
    let plan = JoinedUnionPlan::new(Graph::star(n + 1), components).expect("collapsed quaternion plan is valid");
    let mut blocks = vec![vec![0, n], (1..2 * n).filter(|&i| i != n).collect()];
    blocks.extend(coset_pairs(n));
    StructuralDecomposition::new(plan, blocks).with_quotient_groups(vec![vec![0], vec![1], (2..n + 2).collect()])
}

fn eigen(label: impl Into<String>, printed: (f64, usize), derived: (f64, usize)) -> PrintedFormula {
    PrintedFormula::Eigenvalue {
        label: label.into(),
        printed_value: printed.0,
        printed_multiplicity: printed.1,
        derived_value: derived.0,
        derived_multiplicity: derived.1,
    }
}

impl PowerGraphFamily for QuaternionFamily {
    fn name(&self) -> &'static str {
        "quaternion"
    }

    fn parameter_names(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn spec_from_values(&self, values: &[usize]) -> Result<GroupSpec> {
        expect_arity(self.name(), values, 1)?;
        Ok(GroupSpec::Quaternion { n: values[0] })
    }

    fn validate(&self, spec: &GroupSpec) -> Result<()> {
        let n = n_of(spec);
        if n < 2 {
            return Err(Error::InvalidSpec(format!("quaternion:{n}: need n >= 2")));
        }
        Ok(())
    }

    fn multiply(&self, spec: &GroupSpec, a: usize, b: usize) -> usize {
        let m = 2 * n_of(spec);
        let (i, f) = (a % m, a / m);
        let (j, g) = (b % m, b / m);
        match (f, g) {
            (0, _) => (i + j) % m + m * g,
            (_, 0) => (i + m - j) % m + m,
            _ => (i + m - j + m / 2) % m,
        }
    }

    fn element_label(&self, spec: &GroupSpec, x: usize) -> String {
        let m = 2 * n_of(spec);
        match (x % m, x / m) {
            (i, 0) => rotation_label(i),
            (0, _) => "s".into(),
            (i, _) => format!("{} s", rotation_label(i)),
        }
    }

    fn decomposition(&self, spec: &GroupSpec) -> Result<StructuralDecomposition> {
        let n = n_of(spec);
        Ok(if n.is_power_of_two() { two_power_decomposition(n) } else { general_decomposition(n) })
    }

    fn verification_decompositions(&self, spec: &GroupSpec) -> Result<Vec<StructuralDecomposition>> {
        let n = n_of(spec);
        let mut out = vec![general_decomposition(n)];
        if n.is_power_of_two() {
            out.insert(0, two_power_decomposition(n));
        }
        Ok(out)
    }

    fn closed_form(&self, spec: &GroupSpec, alpha: f64) -> Result<ClosedFormSpectrum> {
        let n = n_of(spec);
        let nf = n as f64;
        let beta = 1.0 - alpha;
        let pair = (2.0 * (nf + 1.0) * alpha - 1.0, n);
        let twins = ((2.0 * nf + 1.0) * alpha, n - 1);

        if n.is_power_of_two() {
            let d = two_power_decomposition(n);
            let quotient = reduced_quotient(&d, alpha)?;
            let center = (4.0 * nf * alpha - 1.0, 1);
            let rotations = (3.0 * nf * alpha - 1.0, 2 * n - 3);
            let printed = vec![
                eigen("quaternion.two-power.center-pair", center, center),
                eigen("quaternion.two-power.rotations", rotations, rotations),
                eigen("quaternion.two-power.coset-pairs", pair, pair),
                eigen("quaternion.two-power.coset-pairs.twins", twins, twins),
                PrintedFormula::Quotient {
                    label: "quaternion.two-power.quotient".into(),
                    printed: QuotientMatrix::from_rows(
                        &[
                            vec![(4.0 * nf - 2.0) * alpha + 1.0, 2.0 * (nf - 1.0) * beta, 2.0 * nf * beta],
                            vec![2.0 * beta, (nf + 2.0) * alpha + 2.0 * nf - 3.0, nf * beta],
                            vec![2.0 * beta, (nf - 1.0) * beta, (nf + 1.0) * alpha + nf],
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
                    ExplicitEigenvalue::new(center.0, center.1, "quaternion.center-pair"),
                    ExplicitEigenvalue::new(rotations.0, rotations.1, "quaternion.rotations"),
                    ExplicitEigenvalue::new(pair.0, pair.1, "quaternion.coset-pairs"),
                    ExplicitEigenvalue::new(twins.0, twins.1, "quaternion.coset-pairs.twins"),
                ],
                quotient,
                printed,
            });
        }

        let d = general_decomposition(n);
        let ds = middle_divisors(n);
        let t = ds.len();
        let phi2n = euler_phi(2 * n) as f64;
        let phis: Vec<f64> = ds.iter().map(|&d| euler_phi(d) as f64).collect();
        // parent distances: v₂ to w_i, and w_i to w_j
        let dv2 = |i: usize| if ds[i].is_multiple_of(2) { 1.0 } else { 2.0 };
        let dww =
            |i: usize, j: usize| if ds[i].is_multiple_of(ds[j]) || ds[j].is_multiple_of(ds[i]) { 1.0 } else { 2.0 };
        let cross = |i: usize, weight: &dyn Fn(usize) -> f64| -> f64 {
            (0..t).filter(|&j| j != i).map(|j| weight(j) / dww(i, j)).sum()
        };

        let generators = (3.0 * nf * alpha - 1.0, euler_phi(2 * n) - 1);
        let mut explicit = vec![
            ExplicitEigenvalue::new(generators.0, generators.1, "quaternion.generators"),
            ExplicitEigenvalue::new(pair.0, pair.1, "quaternion.coset-pairs"),
            ExplicitEigenvalue::new(twins.0, twins.1, "quaternion.coset-pairs.twins"),
        ];
        let mut printed = vec![
            eigen("quaternion.generators", generators, generators),
            eigen("quaternion.coset-pairs.twins", (twins.0, n), twins),
            eigen("quaternion.coset-pairs", (pair.0, n - 1), pair),
        ];
        for i in 0..t {
            let base = phi2n + phis[i] + nf + 1.0 / dv2(i);
            let derived = ((base + 1.0 + cross(i, &|j| phis[j])) * alpha - 1.0, euler_phi(ds[i]) - 1);
            let label = format!("quaternion.divisor-block(d={})", ds[i]);
            printed.push(eigen(label.clone(), ((base + cross(i, &|_| 1.0) + 1.0) * alpha + 1.0, derived.1), derived));
            explicit.push(ExplicitEigenvalue::new(derived.0, derived.1, label));
        }
        let quotient = reduced_quotient(&d, alpha)?;

        // order: v₁, v₂, v₃, w_1..w_t, merged coset pairs
        let k = t + 4;
        let last = k - 1;
        let mut q = vec![vec![0.0; k]; k];
        q[0][0] = (4.0 * nf - 1.0) * alpha;
        q[0][1] = beta;
        q[0][2] = beta * phi2n;
        q[0][last] = 2.0 * nf * beta;
        q[1][1] = (2.0 * nf + phi2n + 1.0 + (0..t).map(|i| 1.0 / dv2(i)).sum::<f64>()) * alpha;
        q[1][2] = beta * phi2n;
        q[1][last] = 2.0 * nf * beta;
        q[2][1] = beta;
        q[2][2] = (3.0 * nf - phi2n) * alpha + phi2n - 1.0;
        q[2][last] = nf * beta;
        q[last][1] = beta;
        q[last][2] = beta * phi2n / 2.0;
        q[last][last] = (nf + 1.0) * alpha + nf;
        for row in q.iter_mut().skip(1) {
            row[0] = beta;
        }
        for i in 0..t {
            let r = i + 3;
            q[0][r] = beta * phis[i];
            q[1][r] = beta * phis[i] / dv2(i);
            q[2][r] = beta * phis[i];
            q[last][r] = beta * phis[i] / 2.0;
            q[r][1] = beta / dv2(i);
            q[r][2] = beta * phi2n;
            q[r][last] = nf * beta;
            for j in 0..t {
                q[r][j + 3] = if i == j {
                    (phi2n + nf + 1.0 / dv2(i) + cross(i, &|_| 1.0) + 1.0) * alpha + phis[i] - 1.0
                } else {
                    beta * phis[j] / dww(i, j)
                };
            }
        }
        printed.push(PrintedFormula::Quotient {
            label: "quaternion.quotient".into(),
            printed: QuotientMatrix::from_rows(&q, true),
            derived: quotient.clone(),
        });
        Ok(ClosedFormSpectrum { spec: *spec, alpha, explicit, quotient, printed })
    }
}
