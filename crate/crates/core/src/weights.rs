//! Symmetric zero-diagonal weight matrices built from a graph and a tilt
//! parameter, plus the conversion between the two parametrizations.
//!
//! `from_gamma` holds `w_ij = e^{±gamma/(m-1)} - 1`; `from_alpha` holds
//! `w_ij = ±alpha`. The complex mode carries log-coordinates
//! `z_ij = ln(1 + w_ij)`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    FromGamma,
    FromAlpha,
    Raw,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<T: Scalar> {
    n: usize,
    /// Row-major `n x n`; symmetric with zero diagonal by construction.
    entries: Vec<T>,
    provenance: Provenance,
}

impl<T: Scalar> WeightMatrix<T> {
    /// Validates symmetry and the zero diagonal of an explicit matrix.
    pub fn raw(n: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "weight matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for i in 0..n {
            if entries[i * n + i] != T::zero() {
                return Err(Error::InvalidArgument(format!(
                    "nonzero diagonal entry at ({i}, {i})"
                )));
            }
            for j in i + 1..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(Error::InvalidArgument(format!(
                        "asymmetric entries at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(WeightMatrix {
            n,
            entries,
            provenance: Provenance::Raw,
        })
    }

    /// Builds from a value per unordered pair; `f(i, j)` is called with `i < j`.
    pub fn from_pair_fn(
        n: usize,
        provenance: Provenance,
        mut f: impl FnMut(usize, usize) -> T,
    ) -> Self {
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let w = f(i, j);
                entries[i * n + j] = w;
                entries[j * n + i] = w;
            }
        }
        WeightMatrix {
            n,
            entries,
            provenance,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.entries[i * self.n + j]
    }

    /// Unordered pairs `(i, j, w_ij)` with `i < j`, row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, T)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j, self.get(i, j))))
    }

    /// Entrywise map preserving symmetry (the result is tagged `Raw`).
    pub fn map<U: Scalar>(&self, mut f: impl FnMut(T) -> U) -> WeightMatrix<U> {
        WeightMatrix {
            n: self.n,
            entries: self.entries.iter().map(|&w| f(w)).collect(),
            provenance: Provenance::Raw,
        }
    }

    /// Log-coordinates `z_ij = ln(1 + w_ij)` on the principal branch.
    pub fn log1p_complex(&self) -> WeightMatrix<Complex64> {
        let mut z = self.map(|w| (w.to_complex() + Complex64::new(1.0, 0.0)).ln());
        for i in 0..z.n {
            z.entries[i * z.n + i] = Complex64::new(0.0, 0.0);
        }
        z
    }

    /// Simultaneous row/column permutation (`i -> perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut entries = vec![T::zero(); self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[perm[i] * self.n + perm[j]] = self.get(i, j);
            }
        }
        WeightMatrix {
            n: self.n,
            entries,
            provenance: self.provenance,
        }
    }
}

/// Weights `w_ij = e^{gamma/(m-1)} - 1` on edges, `e^{-gamma/(m-1)} - 1` on
/// non-edges.
///
/// `gamma = 0` (all-zero matrix) is accepted so degenerate identities can be
/// tested; pipeline entry points reject it.
pub fn weights_from_gamma(g: &Graph, m: usize, gamma: f64) -> Result<WeightMatrix<f64>> {
    let n = g.n();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "gamma = {gamma} must be a finite nonnegative real"
        )));
    }
    let t = gamma / (m as f64 - 1.0);
    let on_edge = t.exp_m1();
    let off_edge = (-t).exp_m1();
    Ok(WeightMatrix::from_pair_fn(
        n,
        Provenance::FromGamma,
        |i, j| {
            if g.has_edge(i, j) {
                on_edge
            } else {
                off_edge
            }
        },
    ))
}

/// Log-coordinate matrix `z_ij = ±gamma/(m-1)` of the same tilt, i.e. the
/// exact `ln(1 + w_ij)` of [`weights_from_gamma`].
pub fn z_matrix_from_gamma(g: &Graph, m: usize, gamma: f64) -> Result<WeightMatrix<Complex64>> {
    let n = g.n();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if !gamma.is_finite() || gamma < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "gamma = {gamma} must be a finite nonnegative real"
        )));
    }
    let t = gamma / (m as f64 - 1.0);
    Ok(WeightMatrix::from_pair_fn(
        n,
        Provenance::FromGamma,
        |i, j| Complex64::new(if g.has_edge(i, j) { t } else { -t }, 0.0),
    ))
}

/// Weights `+alpha` on edges, `-alpha` on non-edges, `0 < alpha < 1`.
pub fn weights_from_alpha(g: &Graph, alpha: f64) -> Result<WeightMatrix<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {alpha} outside (0, 1)"
        )));
    }
    Ok(WeightMatrix::from_pair_fn(
        g.n(),
        Provenance::FromAlpha,
        |i, j| {
            if g.has_edge(i, j) {
                alpha
            } else {
                -alpha
            }
        },
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvertDirection {
    AlphaToGamma,
    GammaToAlpha,
}

/// Converts between the two tilt parametrizations:
/// `gamma = (m-1)/2 * ln((1+alpha)/(1-alpha))` and its inverse
/// `alpha = tanh(gamma/(m-1))`.
pub fn gamma_alpha_convert(value: f64, m: usize, direction: ConvertDirection) -> Result<f64> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m = {m} must be >= 2")));
    }
    let half_span = (m as f64 - 1.0) / 2.0;
    match direction {
        ConvertDirection::AlphaToGamma => {
            if !(value > 0.0 && value < 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "alpha = {value} outside (0, 1)"
                )));
            }
            Ok(half_span * ((1.0 + value) / (1.0 - value)).ln())
        }
        ConvertDirection::GammaToAlpha => {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "gamma = {value} must be positive"
                )));
            }
            Ok((value / (m as f64 - 1.0)).tanh())
        }
    }
}
