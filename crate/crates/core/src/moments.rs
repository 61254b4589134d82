//! Derivatives at 0 of the univariate partition polynomial `h(z)`.
//!
//! Orders 1..3 come from closed forms in the connected-subgraph sums
//! `A1, B1, B2, C1..C5`; general order comes from enumerating collections of
//! distinct weighted pairs, grouped by the number of covered vertices.

use crate::combin::{choose, ln_falling_ratio};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weights::WeightMatrix;

/// Weighted counts of edges, paths, triangles, stars and 3-paths.
///
/// Conventions follow the defining loops exactly: `C2` and `C4` range over
/// ordered tuples, `C3` and `C5` over unordered sets (multiplicities are
/// noted next to each loop below).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectedSums<T: Scalar> {
    /// Sum of `w_ij` over unordered pairs.
    pub a1: T,
    /// Sum of `w_ij^2` over unordered pairs.
    pub b1: T,
    /// Sum of `w_ij w_jk` over (center j, unordered pair {i, k}), all distinct.
    pub b2: T,
    /// Sum of `w_ij^3` over unordered pairs.
    pub c1: T,
    /// Sum of `w_ij^2 w_jk` over ordered distinct triples (i, j, k).
    pub c2: T,
    /// Sum of `w_ij w_jk w_ki` over unordered distinct triples.
    pub c3: T,
    /// Sum of `w_ij w_jk w_kl` over ordered distinct 4-tuples.
    pub c4: T,
    /// Sum of `w_il w_ij w_ik` over (apex i, unordered triple {j, k, l}).
    pub c5: T,
}

/// Computes all eight sums in `O(n^3)` using per-row power sums.
pub fn connected_sums<T: Scalar>(w: &WeightMatrix<T>) -> ConnectedSums<T> {
    let n = w.n();
    let mut row_p1 = vec![T::zero(); n]; // sum_i w_ij
    let mut row_p2 = vec![T::zero(); n]; // sum_i w_ij^2
    let mut row_p3 = vec![T::zero(); n]; // sum_i w_ij^3
    for j in 0..n {
        for i in 0..n {
            let v = w.get(i, j);
            row_p1[j] += v;
            row_p2[j] += v * v;
            row_p3[j] += v * v * v;
        }
    }

    let half = 0.5f64;
    let mut a1 = T::zero();
    let mut b1 = T::zero();
    let mut c1 = T::zero();
    for j in 0..n {
        a1 += row_p1[j];
        b1 += row_p2[j];
        c1 += row_p3[j];
    }
    // each unordered pair was visited twice
    let a1 = a1.scale(half);
    let b1 = b1.scale(half);
    let c1 = c1.scale(half);

    // B2: unordered cherries {i, k} around center j: (p1^2 - p2) / 2 per row.
    let mut b2 = T::zero();
    // C2: ordered (i, j, k): sum_i w_ij^2 (p1_j - w_ij) = p2_j p1_j - p3_j per row.
    let mut c2 = T::zero();
    // C5: unordered leaf triples around apex i: e3 of the row.
    let mut c5 = T::zero();
    for j in 0..n {
        b2 += (row_p1[j] * row_p1[j] - row_p2[j]).scale(half);
        c2 += row_p2[j] * row_p1[j] - row_p3[j];
        let e3 = (row_p1[j] * row_p1[j] * row_p1[j] - (row_p1[j] * row_p2[j]).scale(3.0)
            + row_p3[j].scale(2.0))
        .scale(1.0 / 6.0);
        c5 += e3;
    }

    // C3: unordered triangles, one triple loop visit per set.
    let mut c3 = T::zero();
    for i in 0..n {
        for j in i + 1..n {
            let wij = w.get(i, j);
            if wij == T::zero() {
                continue;
            }
            for k in j + 1..n {
                c3 += wij * w.get(j, k) * w.get(k, i);
            }
        }
    }

    // C4: ordered 4-tuples; middle edge (j, k) ordered, end vertices summed
    // with the coincidence l = i removed.
    let mut c4 = T::zero();
    for j in 0..n {
        for k in 0..n {
            if j == k {
                continue;
            }
            let wjk = w.get(j, k);
            if wjk == T::zero() {
                continue;
            }
            // sum_{i != j,k} w_ij w_ik = (W^2)_jk (zero diagonal removes i = j, k)
            let mut w2jk = T::zero();
            for i in 0..n {
                w2jk += w.get(j, i) * w.get(i, k);
            }
            c4 += wjk * ((row_p1[j] - wjk) * (row_p1[k] - wjk) - w2jk);
        }
    }

    ConnectedSums {
        a1,
        b1,
        b2,
        c1,
        c2,
        c3,
        c4,
        c5,
    }
}

/// Derivatives `h^(0)(0) .. h^(r)(0)`; `values[0] = 1` always.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentVector<T: Scalar> {
    values: Vec<T>,
}

impl<T: Scalar> MomentVector<T> {
    pub fn new(values: Vec<T>) -> Self {
        assert!(!values.is_empty());
        MomentVector { values }
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, k: usize) -> T {
        self.values[k]
    }
}

/// Closed-form `h^(k)(0)` for `k <= 3`.
///
/// Falling-factorial ratios with too-small `m` vanish exactly, so small
/// subset sizes degrade to the correct lower-degree polynomial.
pub fn h_derivatives_closed<T: Scalar>(
    w: &WeightMatrix<T>,
    m: usize,
    order: usize,
) -> Result<MomentVector<T>> {
    let n = w.n();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if !(1..=3).contains(&order) {
        return Err(Error::InvalidArgument(format!(
            "closed forms cover orders 1..3, got {order} (use h_derivatives_enumerated)"
        )));
    }
    let s = connected_sums(w);
    let fr = |k: u64| crate::combin::falling_ratio(m as u64, n as u64, k);

    let mut values = vec![T::one()];
    values.push(s.a1.scale(fr(2)));
    if order >= 2 {
        let h2 = s.b2.scale(2.0 * fr(3)) + (s.a1 * s.a1 - s.b2.scale(2.0) - s.b1).scale(fr(4));
        values.push(h2);
    }
    if order >= 3 {
        let h3 = s.c3.scale(6.0 * fr(3))
            + (s.c5.scale(6.0) + s.c4.scale(3.0)).scale(fr(4))
            + (s.a1 * s.b2 - s.c5.scale(3.0) - s.c3.scale(3.0) - s.c4 - s.c2).scale(6.0 * fr(5))
            + (s.a1 * s.a1 * s.a1 + s.c3.scale(12.0) - (s.a1 * s.b2).scale(6.0)
                + s.c5.scale(12.0)
                + s.c4.scale(3.0)
                + s.c2.scale(6.0)
                - (s.a1 * s.b1).scale(3.0)
                + s.c1.scale(2.0))
            .scale(fr(6));
        values.push(h3);
    }
    Ok(MomentVector::new(values))
}

/// Default cap on the number of weighted-product evaluations.
pub const DEFAULT_ENUM_BUDGET: u64 = 100_000_000;

/// `h^(k)(0)` for `k = 1..k_max` by enumerating unordered k-subsets of
/// nonzero-weight pairs (the product is order-independent, so one visit per
/// subset times `k!` covers the ordered collections).
pub fn h_derivatives_enumerated<T: Scalar>(
    w: &WeightMatrix<T>,
    m: usize,
    k_max: usize,
    budget: u64,
) -> Result<MomentVector<T>> {
    restricted_derivatives_enumerated(w, m, &[], k_max, budget)
}

/// Generalization of the derivative enumeration to sums restricted to
/// subsets containing `omega`: the binomial weight of a pair collection `I`
/// counts only vertices outside `omega`, i.e. uses `|omega ∪ V(I)|`.
///
/// `values[0] = 1` corresponds to normalizing by `C(n - |omega|, m - |omega|)`.
pub(crate) fn restricted_derivatives_enumerated<T: Scalar>(
    w: &WeightMatrix<T>,
    m: usize,
    omega: &[usize],
    k_max: usize,
    budget: u64,
) -> Result<MomentVector<T>> {
    let n = w.n();
    let q = omega.len();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if q > m {
        return Err(Error::InvalidArgument(format!(
            "restriction size {q} exceeds m = {m}"
        )));
    }
    if k_max < 1 {
        return Err(Error::InvalidArgument("k_max must be >= 1".into()));
    }

    let pairs: Vec<(u32, u32, T)> = w
        .pairs()
        .filter(|&(_, _, v)| v != T::zero())
        .map(|(i, j, v)| (i as u32, j as u32, v))
        .collect();

    let mut needed = 0.0f64;
    for k in 1..=k_max {
        needed += choose(pairs.len() as u64, k as u64);
    }
    if needed > budget as f64 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: budget as f64,
        });
    }

    let mut values = vec![T::one()];
    let mut verts: Vec<u32> = omega.iter().map(|&v| v as u32).collect();
    let mut factorial = 1.0f64;
    for k in 1..=k_max {
        factorial *= k as f64;
        // per-class sums indexed by the number of vertices beyond omega
        let mut class_sums = vec![T::zero(); 2 * k + 1];
        subset_sums(&pairs, k, 0, T::one(), &mut verts, q, m, &mut class_sums);
        let mut hk = T::zero();
        for (extra, &s) in class_sums.iter().enumerate() {
            if s == T::zero() {
                continue;
            }
            // C(n - q - extra, m - q - extra) / C(n - q, m - q), one exp per
            // class; None means m - |omega ∪ V(I)| < 0, contributing 0
            if let Some(ln_ratio) = ln_falling_ratio((m - q) as u64, (n - q) as u64, extra as u64) {
                hk += s.scale(ln_ratio.exp());
            }
        }
        values.push(hk.scale(factorial));
    }
    Ok(MomentVector::new(values))
}

/// Depth-first enumeration of k-subsets of `pairs`, accumulating the product
/// of weights into the class of `|verts| - base` covered vertices.
#[allow(clippy::too_many_arguments)]
fn subset_sums<T: Scalar>(
    pairs: &[(u32, u32, T)],
    k: usize,
    start: usize,
    product: T,
    verts: &mut Vec<u32>,
    base: usize,
    m: usize,
    class_sums: &mut [T],
) {
    if k == 0 {
        class_sums[verts.len() - base] += product;
        return;
    }
    if start + k > pairs.len() {
        return;
    }
    for idx in start..=pairs.len() - k {
        let (i, j, v) = pairs[idx];
        let mut added = 0usize;
        if !verts.contains(&i) {
            verts.push(i);
            added += 1;
        }
        if !verts.contains(&j) {
            verts.push(j);
            added += 1;
        }
        // once more than m vertices are covered every completion contributes 0
        if verts.len() <= m {
            subset_sums(
                pairs,
                k - 1,
                idx + 1,
                product * v,
                verts,
                base,
                m,
                class_sums,
            );
        }
        for _ in 0..added {
            verts.pop();
        }
    }
}
