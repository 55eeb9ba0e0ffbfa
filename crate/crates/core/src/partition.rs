//! Vertex partitions, equitability, and block-average quotient matrices.

use crate::error::{Error, Result};
use crate::matrices::SymMatrix;
use crate::spectral::QuotientMatrix;

/// Default absolute tolerance on row-sum differences.
pub const EQUITABLE_TOL: f64 = 1e-9;

/// Ordered list of disjoint, non-empty blocks covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl VertexPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range 0..{n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
        }
        Ok(VertexPartition { blocks, n })
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition { blocks: (0..n).map(|v| vec![v]).collect(), n }
    }

    /// A single block holding every vertex; `n` must be positive.
    pub fn whole(n: usize) -> Self {
        assert!(n > 0);
        VertexPartition { blocks: vec![(0..n).collect()], n }
    }

    /// Consecutive index ranges of the given sizes.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self> {
        let mut start = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b: Vec<usize> = (start..start + s).collect();
                start += s;
                b
            })
            .collect();
        VertexPartition::new(start, blocks)
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// Replaces groups of blocks by their unions. `groups` lists block
    /// indices and must itself partition `0..self.len()`.
    pub fn merge(&self, groups: &[Vec<usize>]) -> Result<Self> {
        let meta = VertexPartition::new(self.blocks.len(), groups.to_vec())?;
        let blocks = meta
            .blocks
            .iter()
            .map(|g| {
                let mut b: Vec<usize> = g.iter().flat_map(|&i| self.blocks[i].iter().copied()).collect();
                b.sort_unstable();
                b
            })
            .collect();
        Ok(VertexPartition { blocks, n: self.n })
    }
}

fn block_row_sums<'a>(m: &'a SymMatrix, rows: &'a [usize], cols: &'a [usize]) -> impl Iterator<Item = f64> + 'a {
    rows.iter().map(move |&i| cols.iter().map(|&j| m.get(i, j)).sum())
}

/// True iff every block pair `(I, J)` has row sums over `J` that agree
/// within `tol` for all rows in `I`.
pub fn is_equitable(m: &SymMatrix, p: &VertexPartition, tol: f64) -> bool {
    assert_eq!(m.order(), p.order(), "partition must cover the matrix index set");
    p.blocks.iter().all(|rows| {
        p.blocks.iter().all(|cols| {
            let mut it = block_row_sums(m, rows, cols);
            let first = it.next().unwrap_or(0.0);
            it.all(|s| (s - first).abs() <= tol)
        })
    })
}

/// Entry `(i, j)` is the average row sum of block `(i, j)`; the `equitable`
/// flag is set with [`EQUITABLE_TOL`].
pub fn quotient_matrix(m: &SymMatrix, p: &VertexPartition) -> QuotientMatrix {
    let k = p.len();
    let mut entries = Vec::with_capacity(k * k);
    for rows in &p.blocks {
        for cols in &p.blocks {
            let total: f64 = block_row_sums(m, rows, cols).sum();
            entries.push(total / rows.len() as f64);
        }
    }
    QuotientMatrix::new(k, entries, is_equitable(m, p, EQUITABLE_TOL))
}
