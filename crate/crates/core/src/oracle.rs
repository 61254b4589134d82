//! Exact brute-force references: the density partition function, the
//! multivariate sum over restricted subsets, and the coefficients of the
//! univariate polynomial `h(z)`.
//!
//! All three enumerate m-subsets depth-first in lexicographic order with
//! incremental updates per added vertex, so the per-subset work is `O(m)`
//! (or `O(m deg)` for polynomial products) rather than `O(m^2)` from
//! scratch. The contract is the subset budget, not the scheme.

use crate::combin::{choose, ln_choose, log_sum_exp_weighted};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::weights::WeightMatrix;
use num_complex::Complex64;

/// Cap on enumerated subsets for `den_exact` and `pm_exact`.
pub const SUBSET_BUDGET: u64 = 10_000_000;

/// Cap on enumerated subsets for `h_coeffs_exact`.
pub const COEFF_SUBSET_BUDGET: u64 = 1_000_000;

/// Cap on the degree `C(m, 2)` of `h` in `h_coeffs_exact`.
pub const MAX_H_DEGREE: u64 = 64;

/// A sorted set of at most `m` vertices fixed into every enumerated subset.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RestrictedIndex {
    omega: Vec<usize>,
}

impl RestrictedIndex {
    pub fn empty() -> Self {
        RestrictedIndex { omega: Vec::new() }
    }

    pub fn new(mut omega: Vec<usize>) -> Result<Self> {
        omega.sort_unstable();
        if omega.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(
                "restriction set has duplicate vertices".into(),
            ));
        }
        Ok(RestrictedIndex { omega })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.omega
    }

    pub fn len(&self) -> usize {
        self.omega.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omega.is_empty()
    }
}

fn check_subset_budget(n: usize, m: usize, budget: u64) -> Result<()> {
    let count = choose(n as u64, m as u64);
    if count > budget as f64 {
        return Err(Error::BudgetExceeded {
            needed: count,
            budget: budget as f64,
        });
    }
    Ok(())
}

/// `ln den_m(G; gamma)`: log of the average over all m-subsets of
/// `exp(gamma m sigma(S))`.
///
/// Subsets are binned by spanned-edge count (an integer in `0..=C(m,2)`), so
/// the sum collapses to one log-sum-exp over at most `C(m,2)+1` terms.
pub fn den_exact(g: &Graph, m: usize, gamma: f64) -> Result<f64> {
    den_exact_with_budget(g, m, gamma, SUBSET_BUDGET)
}

pub fn den_exact_with_budget(g: &Graph, m: usize, gamma: f64, budget: u64) -> Result<f64> {
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
    check_subset_budget(n, m, budget)?;

    let pair_count = choose(m as u64, 2);
    let mut counts = vec![0u64; pair_count as usize + 1];
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    count_by_edges(g, m, 0, 0, &mut chosen, &mut counts);

    let scale = gamma * m as f64 / pair_count;
    let terms: Vec<(f64, f64)> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(e, &c)| (scale * e as f64, c as f64))
        .collect();
    Ok(log_sum_exp_weighted(&terms) - ln_choose(n as u64, m as u64))
}

fn count_by_edges(
    g: &Graph,
    m: usize,
    start: usize,
    edges: usize,
    chosen: &mut Vec<usize>,
    counts: &mut [u64],
) {
    if chosen.len() == m {
        counts[edges] += 1;
        return;
    }
    let remaining = m - chosen.len();
    for v in start..=g.n() - remaining {
        let gained = chosen.iter().filter(|&&u| g.has_edge(u, v)).count();
        chosen.push(v);
        count_by_edges(g, m, v + 1, edges + gained, chosen, counts);
        chosen.pop();
    }
}

/// `P_Omega(Z)`: sum over m-subsets `S ⊇ Omega` of `exp(sum_{pairs in S} z_ij)`.
///
/// `Omega = ∅` gives the full sum; `|Omega| > m` returns 0 by convention.
pub fn pm_exact(
    z: &WeightMatrix<Complex64>,
    m: usize,
    omega: &RestrictedIndex,
) -> Result<Complex64> {
    pm_exact_with_budget(z, m, omega, SUBSET_BUDGET)
}

pub fn pm_exact_with_budget(
    z: &WeightMatrix<Complex64>,
    m: usize,
    omega: &RestrictedIndex,
    budget: u64,
) -> Result<Complex64> {
    let n = z.n();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if let Some(&v) = omega.vertices().last() {
        if v >= n {
            return Err(Error::InvalidArgument(format!(
                "restriction vertex {v} out of range for n = {n}"
            )));
        }
    }
    let q = omega.len();
    if q > m {
        return Ok(Complex64::new(0.0, 0.0));
    }
    check_subset_budget(n - q, m - q, budget)?;

    let mut base = Complex64::new(0.0, 0.0);
    let fixed = omega.vertices();
    for (a, &u) in fixed.iter().enumerate() {
        for &v in &fixed[a + 1..] {
            base += z.get(u, v);
        }
    }
    let free: Vec<usize> = (0..n).filter(|v| !fixed.contains(v)).collect();
    let mut members: Vec<usize> = fixed.to_vec();
    let mut sum = Complex64::new(0.0, 0.0);
    sum_exp_rec(z, &free, m - q, 0, base, &mut members, &mut sum);
    Ok(sum)
}

fn sum_exp_rec(
    z: &WeightMatrix<Complex64>,
    free: &[usize],
    need: usize,
    start: usize,
    acc: Complex64,
    members: &mut Vec<usize>,
    sum: &mut Complex64,
) {
    if need == 0 {
        *sum += acc.exp();
        return;
    }
    for idx in start..=free.len() - need {
        let v = free[idx];
        let mut next = acc;
        for &u in members.iter() {
            next += z.get(u, v);
        }
        members.push(v);
        sum_exp_rec(z, free, need - 1, idx + 1, next, members, sum);
        members.pop();
    }
}

/// Coefficients of a univariate polynomial; for the normalized partition
/// polynomials handled here `c_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoeffs {
    coeffs: Vec<Complex64>,
}

impl PolyCoeffs {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(!coeffs.is_empty());
        PolyCoeffs { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        PolyCoeffs::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }
}

/// Coefficients of `h(z) = C(n,m)^{-1} sum_S prod_{pairs in S} (1 + z w_ij)`,
/// by expanding each subset product and averaging.
pub fn h_coeffs_exact<T: Scalar>(w: &WeightMatrix<T>, m: usize) -> Result<PolyCoeffs> {
    let n = w.n();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    let degree = choose(m as u64, 2) as u64;
    if degree > MAX_H_DEGREE {
        return Err(Error::BudgetExceeded {
            needed: degree as f64,
            budget: MAX_H_DEGREE as f64,
        });
    }
    check_subset_budget(n, m, COEFF_SUBSET_BUDGET)?;

    let zc: Vec<Complex64> = (0..n * n)
        .map(|t| w.get(t / n, t % n).to_complex())
        .collect();

    // per-depth product polynomials; level d holds the product over pairs of
    // the first d chosen vertices
    let mut stack: Vec<Vec<Complex64>> = (0..=m)
        .map(|d| Vec::with_capacity(d * (d.max(1) - 1) / 2 + 1))
        .collect();
    stack[0].push(Complex64::new(1.0, 0.0));
    let mut acc = vec![Complex64::new(0.0, 0.0); degree as usize + 1];
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    product_rec(&zc, n, m, 0, &mut chosen, &mut stack, &mut acc);

    let total = choose(n as u64, m as u64);
    for c in acc.iter_mut() {
        *c /= total;
    }
    Ok(PolyCoeffs::new(acc))
}

fn product_rec(
    z: &[Complex64],
    n: usize,
    m: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    stack: &mut [Vec<Complex64>],
    acc: &mut [Complex64],
) {
    let depth = chosen.len();
    if depth == m {
        for (a, &c) in acc.iter_mut().zip(stack[m].iter()) {
            *a += c;
        }
        return;
    }
    let remaining = m - depth;
    for v in start..=n - remaining {
        // next = stack[depth] * prod_{u in chosen} (1 + z w_uv)
        let (lower, upper) = stack.split_at_mut(depth + 1);
        let cur = &lower[depth];
        let next = &mut upper[0];
        next.clear();
        next.extend_from_slice(cur);
        for &u in chosen.iter() {
            let wuv = z[u * n + v];
            next.push(Complex64::new(0.0, 0.0));
            for d in (1..next.len()).rev() {
                let carry = next[d - 1] * wuv;
                next[d] += carry;
            }
        }
        chosen.push(v);
        product_rec(z, n, m, v + 1, chosen, stack, acc);
        chosen.pop();
    }
}
