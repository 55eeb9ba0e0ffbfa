//! Symmetric eigenvalues by cyclic Jacobi rotations, eigenvalues of small
//! non-symmetric quotient matrices, and tolerance-aware spectrum multisets.
//!
//! The Jacobi routine is the reference every closed form in this crate is
//! checked against. It deliberately stays simple: rotate each off-diagonal
//! pair in row order, sweep until the largest off-diagonal magnitude falls
//! below `tol · ‖M‖_F`, and read the eigenvalues off the diagonal.

use nalgebra::linalg::balancing::balance_parlett_reinsch;
use nalgebra::linalg::Schur;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrices::SymMatrix;

/// Relative off-diagonal threshold used by [`sym_eigenvalues_default`].
pub const JACOBI_TOL: f64 = 1e-14;
/// Sweep budget before [`Error::NoConvergence`].
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Eigenvalues closer than this are merged into one entry with multiplicity.
pub const COALESCE_TOL: f64 = 1e-7;
/// Default tolerance for [`spectra_equal`].
pub const MATCH_TOL: f64 = 1e-8;

/// Multiset of real eigenvalues, sorted strictly descending after coalescing.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(into = "SpectrumJson", from = "SpectrumJson")]
pub struct Spectrum {
    entries: Vec<(f64, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Wire shape: `{"eigenvalues":[{"value":x,"multiplicity":m},...],"trace":t}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub eigenvalues: Vec<Eigenvalue>,
    pub trace: f64,
}

impl From<Spectrum> for SpectrumJson {
    fn from(s: Spectrum) -> Self {
        SpectrumJson {
            trace: s.trace(),
            eigenvalues: s.entries.iter().map(|&(value, multiplicity)| Eigenvalue { value, multiplicity }).collect(),
        }
    }
}

impl From<SpectrumJson> for Spectrum {
    fn from(j: SpectrumJson) -> Self {
        Spectrum::from_pairs(j.eigenvalues.iter().map(|e| (e.value, e.multiplicity)), COALESCE_TOL)
    }
}

impl Spectrum {
    /// Coalesces `values` at [`COALESCE_TOL`].
    pub fn from_values(values: impl IntoIterator<Item = f64>) -> Self {
        Spectrum::from_values_tol(values, COALESCE_TOL)
    }

    pub fn from_values_tol(values: impl IntoIterator<Item = f64>, tol: f64) -> Self {
        Spectrum::from_pairs(values.into_iter().map(|v| (v, 1)), tol)
    }

    /// Builds from `(value, multiplicity)` pairs; zero multiplicities are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (f64, usize)>, tol: f64) -> Self {
        let mut raw: Vec<(f64, usize)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        raw.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut entries: Vec<(f64, usize)> = Vec::with_capacity(raw.len());
        // running (sum of value*mult, total mult) for the open cluster
        let mut acc = (0.0, 0usize);
        for (v, m) in raw {
            if acc.1 > 0 {
                let mean = acc.0 / acc.1 as f64;
                if (mean - v).abs() <= tol {
                    acc = (acc.0 + v * m as f64, acc.1 + m);
                    continue;
                }
                entries.push((mean, acc.1));
            }
            acc = (v * m as f64, m);
        }
        if acc.1 > 0 {
            entries.push((acc.0 / acc.1 as f64, acc.1));
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[(f64, usize)] {
        &self.entries
    }

    /// Expanded values, descending.
    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().flat_map(|&(v, m)| std::iter::repeat_n(v, m)).collect()
    }

    /// Total multiplicity.
    pub fn len(&self) -> usize {
        self.entries.iter().map(|e| e.1).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|&(v, m)| v * m as f64).sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.entries.iter().map(|&(v, m)| v * v * m as f64).sum()
    }

    pub fn max(&self) -> Option<f64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn min(&self) -> Option<f64> {
        self.entries.last().map(|e| e.0)
    }

    /// Total multiplicity of eigenvalues within `tol` of `value`.
    pub fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.entries.iter().filter(|e| (e.0 - value).abs() <= tol).map(|e| e.1).sum()
    }

    /// Removes one copy of the eigenvalue nearest `value`; returns how far
    /// that eigenvalue was from `value`.
    pub fn remove_nearest(&mut self, value: f64) -> Option<f64> {
        let (idx, dist) = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| (i, (e.0 - value).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1))?;
        self.entries[idx].1 -= 1;
        if self.entries[idx].1 == 0 {
            self.entries.remove(idx);
        }
        Some(dist)
    }

    /// Applies `v ↦ scale·v + shift` to every eigenvalue.
    pub fn affine(&self, scale: f64, shift: f64) -> Spectrum {
        Spectrum::from_pairs(self.entries.iter().map(|&(v, m)| (scale * v + shift, m)), COALESCE_TOL)
    }
}

/// Multiset union, re-coalesced at [`COALESCE_TOL`].
pub fn union(spectra: &[Spectrum]) -> Spectrum {
    Spectrum::from_pairs(spectra.iter().flat_map(|s| s.entries.iter().copied()), COALESCE_TOL)
}

/// Outcome of comparing two spectra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchReport {
    pub equal: bool,
    /// Largest `|a_i − b_i|` over the two sorted expansions; infinite when the
    /// total multiplicities differ.
    pub max_deviation: f64,
    pub unmatched_left: Vec<f64>,
    pub unmatched_right: Vec<f64>,
}

/// Greedy matching of eigenvalues within `tol`, respecting multiplicities.
/// On the real line the greedy two-pointer walk over sorted lists finds a
/// perfect matching whenever one exists.
pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> MatchReport {
    let (xs, ys) = (a.values(), b.values());
    let max_deviation = if xs.len() == ys.len() {
        xs.iter().zip(&ys).fold(0.0, |m, (x, y)| f64::max(m, (x - y).abs()))
    } else {
        f64::INFINITY
    };
    let (mut i, mut j) = (0, 0);
    let (mut left, mut right) = (Vec::new(), Vec::new());
    while i < xs.len() && j < ys.len() {
        if (xs[i] - ys[j]).abs() <= tol {
            i += 1;
            j += 1;
        } else if xs[i] > ys[j] {
            left.push(xs[i]);
            i += 1;
        } else {
            right.push(ys[j]);
            j += 1;
        }
    }
    left.extend_from_slice(&xs[i..]);
    right.extend_from_slice(&ys[j..]);
    MatchReport {
        equal: left.is_empty() && right.is_empty(),
        max_deviation,
        unmatched_left: left,
        unmatched_right: right,
    }
}

/// Cyclic Jacobi eigenvalues with the default tolerance and sweep budget.
pub fn sym_eigenvalues_default(m: &SymMatrix) -> Result<Spectrum> {
    sym_eigenvalues(m, JACOBI_TOL)
}

pub fn sym_eigenvalues(m: &SymMatrix, tol: f64) -> Result<Spectrum> {
    jacobi_eigenvalues(m, tol, JACOBI_MAX_SWEEPS).map(Spectrum::from_values)
}

/// Raw (unsorted, uncoalesced) Jacobi eigenvalues.
pub fn jacobi_eigenvalues(m: &SymMatrix, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let threshold = tol * m.frobenius_norm();
    let max_off = |a: &[f64]| {
        let mut best = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                best = best.max(a[p * n + q].abs());
            }
        }
        best
    };

    let mut off = max_off(&a);
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for r in 0..n {
                    if r == p || r == q {
                        continue;
                    }
                    let g = a[r * n + p];
                    let h = a[r * n + q];
                    let rp = g - s * (h + g * tau);
                    let rq = h + s * (g - h * tau);
                    a[r * n + p] = rp;
                    a[p * n + r] = rp;
                    a[r * n + q] = rq;
                    a[q * n + r] = rq;
                }
            }
        }
        sweeps += 1;
        off = max_off(&a);
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

/// Small dense quotient matrix; generally not symmetric.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    k: usize,
    entries: Vec<f64>,
    pub equitable: bool,
}

impl QuotientMatrix {
    pub fn new(k: usize, entries: Vec<f64>, equitable: bool) -> Self {
        assert_eq!(entries.len(), k * k, "quotient entries must be k*k");
        QuotientMatrix { k, entries, equitable }
    }

    pub fn from_rows(rows: &[Vec<f64>], equitable: bool) -> Self {
        let k = rows.len();
        assert!(rows.iter().all(|r| r.len() == k), "quotient must be square");
        QuotientMatrix::new(k, rows.concat(), equitable)
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.k + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.k.max(1)).map(<[f64]>::to_vec).collect()
    }

    /// Largest absolute entrywise difference; infinite on an order mismatch.
    pub fn max_abs_diff(&self, other: &QuotientMatrix) -> f64 {
        if self.k != other.k {
            return f64::INFINITY;
        }
        self.entries.iter().zip(&other.entries).fold(0.0, |m, (a, b)| f64::max(m, (a - b).abs()))
    }
}

/// Eigenvalues of a quotient matrix via balancing and real Schur (shifted QR).
///
/// When the matrix is flagged equitable it is similar to a symmetric matrix,
/// so any imaginary part above `tol · max(1, max|q_ij|)` is reported as
/// [`Error::ComplexSpectrum`]. Otherwise real parts are returned.
pub fn general_eigenvalues(q: &QuotientMatrix, tol: f64) -> Result<Spectrum> {
    let k = q.order();
    if k == 0 {
        return Ok(Spectrum::default());
    }
    if q.equitable {
        if let Some(sym) = symmetrized(q, tol) {
            return Ok(Spectrum::from_values(sym.symmetric_eigenvalues().iter().copied()));
        }
    }
    let mut m = DMatrix::from_row_slice(k, k, q.entries());
    balance_parlett_reinsch(&mut m);
    let schur = [f64::EPSILON, 64.0 * f64::EPSILON]
        .iter()
        .find_map(|&eps| Schur::try_new(m.clone(), eps, 10_000))
        .ok_or(Error::NoConvergence { sweeps: 10_000, off_norm: f64::NAN })?;
    let eig = schur.complex_eigenvalues();
    let scale = q.entries().iter().fold(1.0f64, |s, x| s.max(x.abs()));
    let worst = eig.iter().fold(0.0f64, |w, z| w.max(z.im.abs()));
    if q.equitable && worst > tol * scale {
        return Err(Error::ComplexSpectrum { imag: worst });
    }
    Ok(Spectrum::from_values(eig.iter().map(|z| z.re)))
}

/// `D Q D⁻¹` for the positive diagonal `D` that makes it symmetric, if one
/// exists. Equitable quotients always admit one: `n_i q_ij = n_j q_ji`.
fn symmetrized(q: &QuotientMatrix, tol: f64) -> Option<DMatrix<f64>> {
    let k = q.order();
    let scale = q.entries().iter().fold(1.0f64, |s, x| s.max(x.abs()));
    let mut log_d: Vec<Option<f64>> = vec![None; k];
    for root in 0..k {
        if log_d[root].is_some() {
            continue;
        }
        log_d[root] = Some(0.0);
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            for j in 0..k {
                let (a, b) = (q.get(i, j), q.get(j, i));
                if i == j || log_d[j].is_some() || a == 0.0 && b == 0.0 {
                    continue;
                }
                if a * b <= 0.0 {
                    return None;
                }
                // d_j / d_i = sqrt(q_ij / q_ji)
                log_d[j] = Some(log_d[i]? + 0.5 * (a / b).ln());
                stack.push(j);
            }
        }
    }
    let d: Vec<f64> = log_d.into_iter().map(|x| x.map(f64::exp)).collect::<Option<_>>()?;
    let s = DMatrix::from_fn(k, k, |i, j| d[i] * q.get(i, j) / d[j]);
    let asym =
        (0..k).flat_map(|i| (0..i).map(move |j| (i, j))).fold(0.0f64, |w, (i, j)| w.max((s[(i, j)] - s[(j, i)]).abs()));
    (asym <= tol * scale).then(|| (&s + s.transpose()) * 0.5)
}
