//! Joined unions `G[G₁, …, G_n]` of regular graphs and their `RD_α` spectra.
//!
//! Vertex `v_i` of the parent `G` is replaced by the whole component `G_i`,
//! and every vertex of `G_i` is joined to every vertex of `G_j` whenever
//! `v_i ∼ v_j`. For a connected parent of order at least two, distances in
//! the composed graph are simple: across blocks they equal the parent
//! distance, inside a block they are 1 (adjacent in `G_i`) or 2. With every
//! `G_i` being `r_i`-regular the block partition is equitable, and the
//! diagonal block of `RD_α` on `G_i` is
//!
//! ```text
//! α·rtr_i·I + (1 − α)·(A_i + (J − I − A_i)/2),   rtr_i = (n_i + r_i − 1)/2 + m_i
//! ```
//!
//! so each adjacency eigenvalue `μ` of `G_i` other than the Perron value
//! `r_i` yields the `RD_α` eigenvalue `α·rtr_i + (1 − α)(μ − 1)/2`. The
//! remaining `n` eigenvalues come from the block quotient matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::matrices::{adjacency_matrix, check_alpha, rd_alpha_matrix};
use crate::partition::{quotient_matrix, VertexPartition};
use crate::printed::PrintedFormula;
use crate::spectral::{
    general_eigenvalues, sym_eigenvalues_default, union, QuotientMatrix, Spectrum, COALESCE_TOL, MATCH_TOL,
};

/// Parent graph plus one regular component per parent vertex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PlanJson", into = "PlanJson")]
pub struct JoinedUnionPlan {
    parent: Graph,
    components: Vec<Graph>,
    degrees: Vec<usize>,
    offsets: Vec<usize>,
    parent_dist: DistanceMatrix,
}

/// Plan file shape: `{"parent": <edge-list object>, "components": [...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlanJson {
    pub parent: Graph,
    pub components: Vec<Graph>,
}

impl TryFrom<PlanJson> for JoinedUnionPlan {
    type Error = Error;

    fn try_from(p: PlanJson) -> Result<Self> {
        JoinedUnionPlan::new(p.parent, p.components)
    }
}

impl From<JoinedUnionPlan> for PlanJson {
    fn from(p: JoinedUnionPlan) -> Self {
        PlanJson { parent: p.parent, components: p.components }
    }
}

/// Per-block quantities of a joined union.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlockData {
    pub order: usize,
    pub degree: usize,
    /// `m_i = Σ_{t ≠ i} n_t / d_G(v_i, v_t)`.
    pub m: f64,
    /// Reciprocal transmission shared by every vertex of the block.
    pub rtr: f64,
}

impl BlockData {
    /// Reciprocal distance row sum inside the block: `r_i + (n_i − 1 − r_i)/2`.
    pub fn within_block_sum(&self) -> f64 {
        self.degree as f64 + (self.order - 1 - self.degree) as f64 / 2.0
    }
}

impl JoinedUnionPlan {
    /// Validates the parent (connected, order = number of components) and
    /// that every component is non-empty and regular.
    pub fn new(parent: Graph, components: Vec<Graph>) -> Result<Self> {
        if parent.vertex_count() == 0 {
            return Err(Error::InvalidPlan("parent graph is empty".into()));
        }
        if !parent.is_connected() {
            return Err(Error::InvalidPlan("parent graph is disconnected".into()));
        }
        if components.len() != parent.vertex_count() {
            return Err(Error::InvalidPlan(format!(
                "{} components for a parent of order {}",
                components.len(),
                parent.vertex_count()
            )));
        }
        let mut degrees = Vec::with_capacity(components.len());
        let mut offsets = vec![0];
        for (index, g) in components.iter().enumerate() {
            if g.vertex_count() == 0 {
                return Err(Error::InvalidPlan(format!("component {index} is empty")));
            }
            degrees.push(g.regular_degree().ok_or(Error::NotRegular { index })?);
            offsets.push(offsets[index] + g.vertex_count());
        }
        let parent_dist = all_pairs_distances(&parent);
        Ok(JoinedUnionPlan { parent, components, degrees, offsets, parent_dist })
    }

    /// `K_q[K̄_{n_1}, …, K̄_{n_q}]`, the complete multipartite graph.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Self> {
        JoinedUnionPlan::new(Graph::complete(parts.len()), parts.iter().map(|&n| Graph::empty(n)).collect())
    }

    /// `G[K_{q_1}, …, K_{q_n}]`.
    pub fn with_complete_components(parent: Graph, sizes: &[usize]) -> Result<Self> {
        JoinedUnionPlan::new(parent, sizes.iter().map(|&q| Graph::complete(q)).collect())
    }

    /// `G₁ ∨ G₂ = K₂[G₁, G₂]`.
    pub fn join(g1: Graph, g2: Graph) -> Result<Self> {
        JoinedUnionPlan::new(Graph::complete(2), vec![g1, g2])
    }

    /// `G₁ ∨ (G₂ ∪ G₃) = K_{1,2}[G₁, G₂, G₃]` with `G₁` on the center.
    pub fn join_three(g1: Graph, g2: Graph, g3: Graph) -> Result<Self> {
        JoinedUnionPlan::new(Graph::star(2), vec![g1, g2, g3])
    }

    pub fn parent(&self) -> &Graph {
        &self.parent
    }

    pub fn components(&self) -> &[Graph] {
        &self.components
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn block_count(&self) -> usize {
        self.components.len()
    }

    /// Prefix sums: block `i` occupies `offsets[i]..offsets[i + 1]`.
    pub fn block_offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn order(&self) -> usize {
        *self.offsets.last().expect("offsets start with 0")
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.components.iter().map(Graph::vertex_count).collect()
    }

    pub fn parent_distance(&self, i: usize, j: usize) -> u32 {
        self.parent_dist.raw(i, j)
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.offsets.partition_point(|&o| o <= v) - 1
    }

    /// Disjoint union of the components plus complete bipartite joins along
    /// every parent edge.
    pub fn compose(&self) -> Graph {
        let mut edges = Vec::new();
        for (i, g) in self.components.iter().enumerate() {
            let off = self.offsets[i];
            edges.extend(g.edges().map(|(u, v)| (u + off, v + off)));
        }
        for (i, j) in self.parent.edges() {
            for u in self.offsets[i]..self.offsets[i + 1] {
                for w in self.offsets[j]..self.offsets[j + 1] {
                    edges.push((u, w));
                }
            }
        }
        Graph::new(self.order(), edges).expect("composed edges are in range")
    }

    pub fn block_partition(&self) -> VertexPartition {
        VertexPartition::from_sizes(&self.block_sizes()).expect("blocks are non-empty")
    }

    pub fn block_data(&self) -> Vec<BlockData> {
        let sizes = self.block_sizes();
        (0..self.block_count())
            .map(|i| {
                let m: f64 = (0..self.block_count())
                    .filter(|&t| t != i)
                    .map(|t| sizes[t] as f64 / f64::from(self.parent_distance(i, t)))
                    .sum();
                let (n_i, r_i) = (sizes[i], self.degrees[i]);
                BlockData { order: n_i, degree: r_i, m, rtr: (n_i + r_i) as f64 / 2.0 - 0.5 + m }
            })
            .collect()
    }

    fn require_nontrivial_parent(&self) -> Result<()> {
        if self.parent.vertex_count() < 2 {
            return Err(Error::InvalidPlan("spectral decomposition needs a parent of order at least 2".into()));
        }
        Ok(())
    }

    /// The block-average quotient of `RD_α(compose(plan))`.
    pub fn quotient(&self, alpha: f64) -> Result<QuotientMatrix> {
        let m = rd_alpha_matrix(&self.compose(), alpha)?;
        Ok(quotient_matrix(&m, &self.block_partition()))
    }

    /// Non-Perron contributions of every block:
    /// `α·rtr_i + (1 − α)(μ − 1)/2` for each adjacency eigenvalue `μ ≠ r_i`.
    pub fn block_eigenvalues(&self, alpha: f64) -> Result<Vec<Spectrum>> {
        check_alpha(alpha)?;
        self.require_nontrivial_parent()?;
        self.block_data()
            .iter()
            .zip(&self.components)
            .map(|(b, g)| {
                let mut adj = component_adjacency_spectrum(g)?;
                adj.remove_nearest(b.degree as f64);
                Ok(adj.affine((1.0 - alpha) / 2.0, alpha * b.rtr - (1.0 - alpha) / 2.0))
            })
            .collect()
    }

    /// Block eigenvalues together with the quotient eigenvalues.
    pub fn spectrum(&self, alpha: f64) -> Result<Spectrum> {
        let mut parts = self.block_eigenvalues(alpha)?;
        parts.push(general_eigenvalues(&self.quotient(alpha)?, MATCH_TOL)?);
        Ok(union(&parts))
    }

    /// The published quotient entries and eliminated block eigenvalue,
    /// evaluated as printed, next to the values derived from the structure.
    pub fn printed_formulas(&self, alpha: f64) -> Result<Vec<PrintedFormula>> {
        self.require_nontrivial_parent()?;
        let derived = self.quotient(alpha)?;
        let blocks = self.block_data();
        let beta = 1.0 - alpha;
        let k = self.block_count();
        let mut printed = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                printed.push(if i == j {
                    let b = &blocks[i];
                    alpha * ((b.order as f64 - b.degree as f64 - 1.0) / 2.0 + b.m) + beta * b.within_block_sum()
                } else {
                    beta * blocks[j].order as f64 / f64::from(self.parent_distance(i, j))
                });
            }
        }
        let mut out = vec![PrintedFormula::Quotient {
            label: "joined-union.quotient".into(),
            printed: QuotientMatrix::new(k, printed, derived.equitable),
            derived,
        }];
        for (i, b) in blocks.iter().enumerate() {
            out.push(PrintedFormula::Eigenvalue {
                label: format!("joined-union.eliminated-perron[{i}]"),
                printed_value: alpha * b.rtr - beta * b.within_block_sum(),
                printed_multiplicity: 0,
                derived_value: alpha * b.rtr + beta * b.within_block_sum(),
                derived_multiplicity: 0,
            });
        }
        Ok(out)
    }
}

/// Adjacency spectrum of a component; complete and edgeless graphs use
/// their known spectra.
pub fn component_adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return Ok(Spectrum::from_pairs([(0.0, n)], COALESCE_TOL));
    }
    if g.is_complete() {
        return Ok(Spectrum::from_pairs([((n - 1) as f64, 1), (-1.0, n - 1)], COALESCE_TOL));
    }
    sym_eigenvalues_default(&adjacency_matrix(g))
}

/// Closed-form spectrum of `RD_α` of a joined union.
pub fn joined_union_spectrum(plan: &JoinedUnionPlan, alpha: f64) -> Result<Spectrum> {
    plan.spectrum(alpha)
}

/// Quotient of `RD_α(compose(plan))` over the block partition.
pub fn joined_union_quotient(plan: &JoinedUnionPlan, alpha: f64) -> Result<QuotientMatrix> {
    plan.quotient(alpha)
}

/// Spectrum of `G₁ ∨ (G₂ ∪ G₃)`.
pub fn join_three_spectrum(g1: &Graph, g2: &Graph, g3: &Graph, alpha: f64) -> Result<Spectrum> {
    JoinedUnionPlan::join_three(g1.clone(), g2.clone(), g3.clone())?.spectrum(alpha)
}

/// Quotient of `G₁ ∨ (G₂ ∪ G₃)` in terms of orders `n_i`, degrees `r_i`:
///
/// ```text
/// f₁ = (N − (n₁ − r₁ + 1)/2)·α + (1 − α)·s₁
/// f_i = (N − (n₂ + n₃ − r_i + 1)/2)·α + (1 − α)·s_i,  i = 2, 3
/// ```
///
/// with `s_i = r_i + (n_i − 1 − r_i)/2` and `N = n₁ + n₂ + n₃`.
pub fn join_three_formula_quotient(orders: [usize; 3], degrees: [usize; 3], alpha: f64) -> QuotientMatrix {
    let [n1, n2, n3] = orders.map(|x| x as f64);
    let [r1, r2, r3] = degrees.map(|x| x as f64);
    let total = n1 + n2 + n3;
    let beta = 1.0 - alpha;
    let s = |n: f64, r: f64| r + (n - 1.0 - r) / 2.0;
    let f1 = (total - (n1 - r1 + 1.0) / 2.0) * alpha + beta * s(n1, r1);
    let f2 = (total - (n2 + n3 - r2 + 1.0) / 2.0) * alpha + beta * s(n2, r2);
    let f3 = (total - (n2 + n3 - r3 + 1.0) / 2.0) * alpha + beta * s(n3, r3);
    QuotientMatrix::from_rows(
        &[vec![f1, beta * n2, beta * n3], vec![beta * n1, f2, beta * n3 / 2.0], vec![beta * n1, beta * n2 / 2.0, f3]],
        true,
    )
}

/// Closed form for `K_{n₁} ∨ (K_{n₂} ∪ K_{n₃})`: the three block families
/// `Nα − 1`, `(N − n₃/2)α − 1`, `(N − n₂/2)α − 1` with multiplicities
/// `n_i − 1`, plus the 3×3 quotient.
pub fn join_three_complete_closed_form(orders: [usize; 3], alpha: f64) -> Result<(Vec<(f64, usize)>, QuotientMatrix)> {
    check_alpha(alpha)?;
    if orders.contains(&0) {
        return Err(Error::InvalidParameter("component orders must be positive".into()));
    }
    let [n1, n2, n3] = orders;
    let [a, b, c] = orders.map(|x| x as f64);
    let total = a + b + c;
    let beta = 1.0 - alpha;
    let families = vec![
        (total * alpha - 1.0, n1 - 1),
        ((total - c / 2.0) * alpha - 1.0, n2 - 1),
        ((total - b / 2.0) * alpha - 1.0, n3 - 1),
    ];
    let q = QuotientMatrix::from_rows(
        &[
            vec![(total - a) * alpha + a - 1.0, beta * b, beta * c],
            vec![beta * a, (a + c / 2.0) * alpha + b - 1.0, beta * c / 2.0],
            vec![beta * a, beta * b / 2.0, (a + b / 2.0) * alpha + c - 1.0],
        ],
        true,
    );
    Ok((families, q))
}

/// Spectrum of the complete `q`-partite graph with all parts of size `n`:
/// `nq − (n+1)/2` once, `αqn − (n+1)/2` with multiplicity `q − 1`, and
/// `nα(q − ½) − ½` with multiplicity `q(n − 1)`.
pub fn complete_multipartite_closed_form(n: usize, q: usize, alpha: f64) -> Result<Spectrum> {
    check_alpha(alpha)?;
    if n == 0 || q < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 1 and q >= 2, got n={n}, q={q}")));
    }
    let (nf, qf) = (n as f64, q as f64);
    Ok(Spectrum::from_pairs(
        [
            (nf * qf - (nf + 1.0) / 2.0, 1),
            (alpha * qf * nf - (nf + 1.0) / 2.0, q - 1),
            (nf * alpha * (qf - 0.5) - 0.5, q * (n - 1)),
        ],
        COALESCE_TOL,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::{reciprocal_distance_matrix, reciprocal_transmission};
    use crate::partition::is_equitable;
    use crate::spectral::spectra_equal;

    fn oracle(plan: &JoinedUnionPlan, alpha: f64) -> Spectrum {
        sym_eigenvalues_default(&rd_alpha_matrix(&plan.compose(), alpha).unwrap()).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(matches!(
            JoinedUnionPlan::new(Graph::complete(2), vec![Graph::path(3), Graph::complete(1)]),
            Err(Error::NotRegular { index: 0 })
        ));
        assert!(JoinedUnionPlan::new(Graph::empty(2), vec![Graph::complete(1); 2]).is_err());
        assert!(JoinedUnionPlan::new(Graph::complete(2), vec![Graph::complete(1)]).is_err());
        assert!(JoinedUnionPlan::new(Graph::complete(2), vec![Graph::complete(1), Graph::empty(0)]).is_err());
    }

    #[test]
    fn compose_examples() {
        let k2 = JoinedUnionPlan::join(Graph::complete(1), Graph::complete(1)).unwrap();
        assert_eq!(k2.compose(), Graph::complete(2));

        // join of C4 and K1 is the wheel W4
        let w = JoinedUnionPlan::join(Graph::cycle(4), Graph::complete(1)).unwrap().compose();
        assert_eq!(w.edge_count(), 8);
        assert_eq!(w.degree(4), 4);

        // K_3[K̄_2, K̄_2, K̄_2] is the octahedron K_{2,2,2}
        let oct = JoinedUnionPlan::complete_multipartite(&[2, 2, 2]).unwrap().compose();
        assert_eq!(oct.edge_count(), 12);
        assert_eq!(oct.regular_degree(), Some(4));
        assert!(!oct.has_edge(0, 1));
    }

    #[test]
    fn parent_of_order_one_composes_to_the_component() {
        let p = JoinedUnionPlan::new(Graph::complete(1), vec![Graph::cycle(5)]).unwrap();
        assert_eq!(p.compose(), Graph::cycle(5));
        assert!(p.spectrum(0.5).is_err());
    }

    #[test]
    fn block_data_examples() {
        let k2 = JoinedUnionPlan::join(Graph::complete(1), Graph::complete(1)).unwrap();
        let b = k2.block_data();
        assert_eq!((b[0].m, b[0].rtr), (1.0, 1.0));

        for q in 2..5 {
            for n in 1..5 {
                let plan = JoinedUnionPlan::complete_multipartite(&vec![n; q]).unwrap();
                let composed = plan.compose();
                for (i, b) in plan.block_data().iter().enumerate() {
                    assert_eq!(b.m, ((q - 1) * n) as f64);
                    assert_eq!(b.rtr, (n as f64 - 1.0) / 2.0 + ((q - 1) * n) as f64);
                    let v = plan.block_offsets()[i];
                    assert_eq!(b.rtr, reciprocal_transmission(&composed, v).unwrap());
                }
            }
        }

        let star = JoinedUnionPlan::with_complete_components(Graph::star(2), &[1, 2, 2]).unwrap();
        let b = star.block_data();
        assert_eq!(b[0].m, 4.0);
        assert_eq!(b[1].m, 2.0);
        assert_eq!(b[2].m, 2.0);
    }

    #[test]
    fn block_distance_law() {
        let plan = JoinedUnionPlan::new(
            Graph::path(4),
            vec![Graph::cycle(4), Graph::complete(2), Graph::empty(3), Graph::cycle(5)],
        )
        .unwrap();
        let g = plan.compose();
        let d = all_pairs_distances(&g);
        for u in 0..g.vertex_count() {
            for w in 0..g.vertex_count() {
                let (bu, bw) = (plan.block_of(u), plan.block_of(w));
                let expected = if u == w {
                    0
                } else if bu != bw {
                    plan.parent_distance(bu, bw)
                } else {
                    let off = plan.block_offsets()[bu];
                    if plan.components()[bu].has_edge(u - off, w - off) {
                        1
                    } else {
                        2
                    }
                };
                assert_eq!(d.get(u, w), Some(expected), "u={u} w={w}");
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let k2 = JoinedUnionPlan::join(Graph::complete(1), Graph::complete(1)).unwrap();
        assert_eq!(k2.quotient(0.0).unwrap().entries(), &[0.0, 1.0, 1.0, 0.0]);

        for (n, q, alpha) in [(2usize, 3usize, 0.25), (3, 4, 0.6), (4, 2, 1.0)] {
            let plan = JoinedUnionPlan::complete_multipartite(&vec![n; q]).unwrap();
            let quo = plan.quotient(alpha).unwrap();
            let (nf, qf) = (n as f64, q as f64);
            for i in 0..q {
                for j in 0..q {
                    let expected = if i == j { nf * (qf - 1.0) * alpha + (nf - 1.0) / 2.0 } else { (1.0 - alpha) * nf };
                    assert!((quo.get(i, j) - expected).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn k2_of_singletons_spectrum() {
        let plan = JoinedUnionPlan::join(Graph::complete(1), Graph::complete(1)).unwrap();
        for alpha in [0.0, 0.3, 0.5, 1.0] {
            let s = plan.spectrum(alpha).unwrap();
            let expected = Spectrum::from_values([1.0, 2.0 * alpha - 1.0]);
            assert!(spectra_equal(&s, &expected, 1e-12).equal, "alpha={alpha}");
        }
    }

    #[test]
    fn spectrum_matches_brute_force_on_mixed_components() {
        let plan =
            JoinedUnionPlan::new(Graph::path(3), vec![Graph::cycle(5), Graph::cycle(6).complement(), Graph::empty(2)])
                .unwrap();
        for alpha in [0.0, 0.25, 0.5, 0.75, 1.0] {
            let r = spectra_equal(&plan.spectrum(alpha).unwrap(), &oracle(&plan, alpha), 1e-8);
            assert!(r.equal, "alpha={alpha}: {r:?}");
        }
    }

    #[test]
    fn block_partition_is_equitable() {
        let plan = JoinedUnionPlan::new(
            Graph::cycle(4),
            vec![Graph::complete(3), Graph::cycle(4), Graph::empty(1), Graph::cycle(5)],
        )
        .unwrap();
        let m = rd_alpha_matrix(&plan.compose(), 0.37).unwrap();
        assert!(is_equitable(&m, &plan.block_partition(), 1e-12));
    }

    #[test]
    fn join_three_examples() {
        let k1 = Graph::complete(1);
        let s = join_three_spectrum(&k1, &k1, &k1, 0.0).unwrap();
        let p3 = sym_eigenvalues_default(&reciprocal_distance_matrix(&Graph::path(3)).unwrap()).unwrap();
        assert!(spectra_equal(&s, &p3, 1e-10).equal);

        assert!(matches!(join_three_spectrum(&Graph::path(3), &k1, &k1, 0.5), Err(Error::NotRegular { index: 0 })));

        let (g, h) = (Graph::cycle(5), Graph::complete(2));
        let a = join_three_spectrum(&g, &h, &h, 0.4).unwrap();
        let b = JoinedUnionPlan::new(Graph::star(2), vec![g, h.clone(), h]).unwrap().spectrum(0.4).unwrap();
        assert!(spectra_equal(&a, &b, 1e-12).equal);
    }

    #[test]
    fn join_three_formula_matches_operational_quotient() {
        let comps = [Graph::cycle(5), Graph::complete(3), Graph::cycle(6).complement()];
        let plan = JoinedUnionPlan::join_three(comps[0].clone(), comps[1].clone(), comps[2].clone()).unwrap();
        for alpha in [0.0, 0.5, 0.8] {
            let q = join_three_formula_quotient([5, 3, 6], [2, 2, 3], alpha);
            assert!(q.max_abs_diff(&plan.quotient(alpha).unwrap()) < 1e-12);
        }
    }

    #[test]
    fn printed_quotient_sign_shows_up_only_with_alpha_and_degree() {
        let plan = JoinedUnionPlan::join(Graph::cycle(5), Graph::complete(1)).unwrap();
        let at_zero = plan.printed_formulas(0.0).unwrap();
        let checks: Vec<_> = at_zero.iter().map(|f| f.check(None, 1e-10)).collect();
        assert!(checks[0].agrees());
        let at_half = plan.printed_formulas(0.5).unwrap();
        assert!(!at_half[0].check(None, 1e-10).agrees());
    }

    #[test]
    fn multipartite_closed_form_rejects_degenerate_parameters() {
        assert!(complete_multipartite_closed_form(0, 3, 0.5).is_err());
        assert!(complete_multipartite_closed_form(2, 1, 0.5).is_err());
        assert!(complete_multipartite_closed_form(2, 2, 1.5).is_err());
    }
}
