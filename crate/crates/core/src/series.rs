//! Truncated univariate power series: Horner evaluation, the log transform
//! of a derivative vector, truncation-degree selection, and truncated
//! composition.

use crate::combin::choose;
use crate::error::{Error, Result};
use crate::moments::MomentVector;
use crate::scalar::Scalar;
use num_complex::Complex64;

/// Coefficients `c_0 .. c_r` of a polynomial truncated at order `r`.
///
/// Arithmetic never consults discarded orders: every operation takes an
/// explicit truncation order and drops higher monomials as it goes.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        TruncatedSeries { coeffs }
    }

    /// Truncation order `r` (the series stores `r + 1` coefficients).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).copied().unwrap_or_else(T::zero)
    }

    /// Horner evaluation of the stored polynomial.
    pub fn eval(&self, at: T) -> T {
        let mut acc = T::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Copy truncated (or zero-padded) to order `r`.
    pub fn to_order(&self, r: usize) -> Self {
        let mut coeffs: Vec<T> = self.coeffs.iter().take(r + 1).copied().collect();
        coeffs.resize(r + 1, T::zero());
        TruncatedSeries { coeffs }
    }

    /// Product with all monomials above order `r` discarded.
    pub fn mul_trunc(&self, other: &Self, r: usize) -> Self {
        let mut coeffs = vec![T::zero(); r + 1];
        for (a, &ca) in self.coeffs.iter().enumerate().take(r + 1) {
            if ca == T::zero() {
                continue;
            }
            for (b, &cb) in other.coeffs.iter().enumerate().take(r + 1 - a) {
                coeffs[a + b] += ca * cb;
            }
        }
        TruncatedSeries { coeffs }
    }

    /// Taylor coefficients of a derivative vector: `c_k = g^(k)(0) / k!`.
    pub fn from_derivatives(derivs: &MomentVector<T>) -> Self {
        let mut factorial = 1.0f64;
        let coeffs = derivs
            .values()
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                if k > 0 {
                    factorial *= k as f64;
                }
                v.scale(1.0 / factorial)
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Derivative vector of the stored Taylor coefficients: `g^(k)(0) = k! c_k`.
    pub fn to_derivatives(&self) -> MomentVector<T> {
        let mut factorial = 1.0f64;
        let values = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| {
                if k > 0 {
                    factorial *= k as f64;
                }
                c.scale(factorial)
            })
            .collect();
        MomentVector::new(values)
    }
}

impl TruncatedSeries<f64> {
    /// Horner evaluation of a real series at a complex point.
    pub fn eval_complex(&self, at: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }
}

/// Horner evaluation of `sum c_k at^k`.
pub fn taylor_eval<T: Scalar>(f: &TruncatedSeries<T>, at: T) -> T {
    f.eval(at)
}

/// Taylor coefficients of `f = ln g` from the derivatives of `g`.
///
/// Solves the triangular system
/// `g^(k)(0) = sum_{j=0}^{k-1} C(k-1, j) f^(k-j)(0) g^(j)(0)`
/// by forward substitution in `O(r^2)`; `f(0) = ln g(0)` on the principal
/// branch (exactly 0 when `g(0) = 1`).
pub fn log_from_derivatives<T: Scalar>(g_derivs: &MomentVector<T>) -> Result<TruncatedSeries<T>> {
    let g = g_derivs.values();
    let g0 = g[0];
    if g0 == T::zero() {
        return Err(Error::InvalidArgument(
            "log transform needs g(0) != 0".into(),
        ));
    }
    let r = g_derivs.order();
    let mut f = vec![T::zero(); r + 1];
    f[0] = if g0 == T::one() { T::zero() } else { g0.ln() };
    for k in 1..=r {
        let mut s = g[k];
        for j in 1..k {
            s -= (f[k - j] * g[j]).scale(choose((k - 1) as u64, j as u64));
        }
        f[k] = s / g0;
    }
    let mut factorial = 1.0f64;
    let coeffs = f
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            if k > 0 {
                factorial *= k as f64;
            }
            v.scale(1.0 / factorial)
        })
        .collect();
    Ok(TruncatedSeries::new(coeffs))
}

/// Truncation error bound `deg / (beta^r (beta - 1) (r + 1))` for the Taylor
/// polynomial of degree `r` of the log of a polynomial that is zero-free on
/// the disc of radius `beta > 1`.
pub fn taylor_remainder_bound(poly_degree: u64, beta: f64, r: u64) -> f64 {
    let denom = beta.powf(r as f64) * (beta - 1.0) * (r as f64 + 1.0);
    poly_degree as f64 / denom
}

/// Smallest `r` with `taylor_remainder_bound(poly_degree, beta, r) <= eps`.
///
/// The bound decreases strictly in `r`, so exponential search followed by a
/// binary search finds the minimum without scanning (relevant when `beta` is
/// barely above 1 and `r` runs to millions).
pub fn choose_r(poly_degree: u64, beta: f64, eps: f64) -> u64 {
    assert!(beta > 1.0, "choose_r needs beta > 1, got {beta}");
    assert!(eps > 0.0, "choose_r needs eps > 0, got {eps}");
    let ok = |r: u64| taylor_remainder_bound(poly_degree, beta, r) <= eps;
    if ok(0) {
        return 0;
    }
    let mut hi = 1u64;
    while !ok(hi) {
        hi = hi.saturating_mul(2);
        if hi == u64::MAX {
            break;
        }
    }
    let mut lo = hi / 2; // ok(lo) is false
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Coefficients `0..r` of `outer(inner(z))` by Horner's recurrence,
/// discarding monomials above `r` after every step (`O(r^3)` scalar ops).
///
/// `inner` must have zero constant term so that the composition of
/// truncations equals the truncation of the composition.
pub fn truncated_compose<T: Scalar>(
    outer: &TruncatedSeries<T>,
    inner: &TruncatedSeries<T>,
    r: usize,
) -> Result<TruncatedSeries<T>> {
    if inner.coeff(0) != T::zero() {
        return Err(Error::InvalidArgument(
            "composition needs inner series with zero constant term".into(),
        ));
    }
    let inner_r = inner.to_order(r);
    let top = outer.order().min(r);
    let mut acc = TruncatedSeries::new(vec![outer.coeff(top)]).to_order(r);
    for k in (0..top).rev() {
        acc = acc.mul_trunc(&inner_r, r);
        let mut coeffs = acc.coeffs;
        coeffs[0] += outer.coeff(k);
        acc = TruncatedSeries { coeffs };
    }
    Ok(acc)
}
