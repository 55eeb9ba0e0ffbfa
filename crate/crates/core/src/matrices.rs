//! Dense symmetric matrices and the reciprocal-distance family built on them.
//!
//! For a connected graph with hop distance `d`:
//!
//! * `RD(G)[u][v] = 1 / d(u, v)` off the diagonal, zero on it;
//! * `RT_r(v)` is row `v`'s sum of `RD(G)`;
//! * `RD_α(G) = α·diag(RT_r) + (1 − α)·RD(G)` for `α ∈ [0, 1]`.

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};

/// Row-major `n × n` real matrix, symmetric by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![0.0; n * n] }
    }

    /// Evaluates `f(i, j)` for `i <= j` and mirrors it, so the result is
    /// exactly symmetric regardless of `f`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                m.data[i * n + j] = x;
                m.data[j * n + i] = x;
            }
        }
        m
    }

    pub fn diagonal(values: &[f64]) -> Self {
        SymMatrix::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    /// Accepts row data only if it is square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::NotSymmetric(i, rows[i].len()));
        }
        let asym = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| rows[i][j] != rows[j][i]);
        if let Some((i, j)) = asym {
            return Err(Error::NotSymmetric(i, j));
        }
        Ok(SymMatrix { n, data: rows.concat() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sum(&self, i: usize) -> f64 {
        self.row(i).iter().sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i)).collect()
    }

    pub(crate) fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// `P M Pᵀ` where vertex `v` moves to position `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut inv = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        SymMatrix::from_fn(self.n, |i, j| self.get(inv[i], inv[j]))
    }

    /// `a·self + b·other`, entrywise.
    pub fn combine(&self, a: f64, other: &SymMatrix, b: f64) -> Self {
        assert_eq!(self.n, other.n);
        SymMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(x, y)| a * x + b * y).collect() }
    }
}

fn connected_distances(g: &Graph) -> Result<DistanceMatrix> {
    let d = all_pairs_distances(g);
    match d.first_unreachable() {
        Some((u, v)) => Err(Error::DisconnectedGraph(u, v)),
        None => Ok(d),
    }
}

fn reciprocal_from_distances(d: &DistanceMatrix) -> SymMatrix {
    SymMatrix::from_fn(d.order(), |i, j| if i == j { 0.0 } else { 1.0 / f64::from(d.raw(i, j)) })
}

/// The Harary matrix `RD(G)`.
pub fn reciprocal_distance_matrix(g: &Graph) -> Result<SymMatrix> {
    Ok(reciprocal_from_distances(&connected_distances(g)?))
}

/// `RT_r(v) = Σ_{u ≠ v} 1 / d(v, u)`.
pub fn reciprocal_transmission(g: &Graph, v: usize) -> Result<f64> {
    Ok(reciprocal_transmissions(g)?[v])
}

/// Reciprocal transmissions of all vertices.
pub fn reciprocal_transmissions(g: &Graph) -> Result<Vec<f64>> {
    let rd = reciprocal_distance_matrix(g)?;
    Ok((0..rd.order()).map(|v| rd.row_sum(v)).collect())
}

pub fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// `RD_α(G) = α·RT_r(G) + (1 − α)·RD(G)`.
///
/// The endpoints are exact: at `α = 0` the off-diagonal entries are the
/// untouched reciprocals and the diagonal is zero, at `α = 1` everything off
/// the diagonal is zero.
pub fn rd_alpha_matrix(g: &Graph, alpha: f64) -> Result<SymMatrix> {
    check_alpha(alpha)?;
    let rd = reciprocal_distance_matrix(g)?;
    Ok(rd_alpha_from_rd(&rd, alpha))
}

/// Builds `RD_α` from an already assembled Harary matrix.
pub fn rd_alpha_from_rd(rd: &SymMatrix, alpha: f64) -> SymMatrix {
    let rt: Vec<f64> = (0..rd.order()).map(|v| rd.row_sum(v)).collect();
    let beta = 1.0 - alpha;
    SymMatrix::from_fn(rd.order(), |i, j| if i == j { alpha * rt[i] } else { beta * rd.get(i, j) })
}

/// The 0/1 adjacency matrix.
pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    SymMatrix::from_fn(g.vertex_count(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn harary_of_k2_and_p3() {
        let rd = reciprocal_distance_matrix(&Graph::complete(2)).unwrap();
        assert_eq!(rd, SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap());

        let rd = reciprocal_distance_matrix(&Graph::path(3)).unwrap();
        assert_eq!(rd.get(0, 1), 1.0);
        assert_eq!(rd.get(1, 2), 1.0);
        assert_eq!(rd.get(0, 2), 0.5);
    }

    #[test]
    fn disconnected_is_an_error() {
        let e = reciprocal_distance_matrix(&Graph::empty(2)).unwrap_err();
        assert_eq!(e, Error::DisconnectedGraph(0, 1));
        assert!(rd_alpha_matrix(&Graph::empty(2), 0.5).is_err());
        assert!(reciprocal_transmission(&Graph::empty(3), 0).is_err());
    }

    #[test]
    fn transmissions() {
        for n in 2..7 {
            for v in 0..n {
                let rt = reciprocal_transmission(&Graph::complete(n), v).unwrap();
                assert_eq!(rt, (n - 1) as f64);
            }
        }
        let p3 = Graph::path(3);
        assert_eq!(reciprocal_transmission(&p3, 1).unwrap(), 2.0);
        assert_eq!(reciprocal_transmission(&p3, 0).unwrap(), 1.5);
        // C5: two neighbours at distance 1, two at distance 2
        for v in 0..5 {
            assert_eq!(reciprocal_transmission(&Graph::cycle(5), v).unwrap(), 3.0);
        }
    }

    #[test]
    fn rd_alpha_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(rd_alpha_matrix(&k2, 1.0).unwrap(), SymMatrix::diagonal(&[1.0, 1.0]));
        assert_eq!(rd_alpha_matrix(&k2, 0.0).unwrap(), reciprocal_distance_matrix(&k2).unwrap());
        let m = rd_alpha_matrix(&Graph::complete(3), 0.5).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), if i == j { 1.0 } else { 0.5 });
            }
        }
    }

    #[test]
    fn alpha_range_checked() {
        let g = Graph::complete(3);
        assert_eq!(rd_alpha_matrix(&g, -0.1).unwrap_err(), Error::AlphaOutOfRange(-0.1));
        assert!(rd_alpha_matrix(&g, 1.5).is_err());
        assert!(rd_alpha_matrix(&g, f64::NAN).is_err());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert_eq!(SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).unwrap_err(), Error::NotSymmetric(0, 1));
        assert!(SymMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0]]).is_err());
    }

    #[test]
    fn permutation_moves_entries() {
        let m = reciprocal_distance_matrix(&Graph::path(3)).unwrap();
        let p = m.permuted(&[2, 0, 1]);
        assert_eq!(p.get(2, 1), m.get(0, 2));
        assert_eq!(p.get(0, 1), m.get(1, 2));
    }
}
