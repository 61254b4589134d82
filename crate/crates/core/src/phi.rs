//! The disc-to-strip polynomial: an explicit degree-N polynomial with
//! `phi(0) = 0`, `phi(1) = 1` that maps the disc `|z| <= beta`, `beta > 1`,
//! into the strip `[-rho, 1 + 2 rho] x [-2 rho, 2 rho]i`.

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use num_complex::Complex64;

/// Smallest supported strip parameter; below this the polynomial degree
/// `N ~ (1/rho) e^{1/rho}` passes 1e9 and the construction is out of reach.
pub const MIN_RHO: f64 = 0.05;

/// Cap on materialized coefficients, a memory guard tighter than `MIN_RHO`
/// alone (N crosses this near rho = 0.08).
pub const MAX_DEGREE: u64 = 10_000_000;

#[derive(Debug, Clone)]
pub struct PhiPolynomial {
    rho: f64,
    alpha: f64,
    beta: f64,
    sigma: f64,
    /// Coefficients `0, alpha/sigma, alpha^2/(2 sigma), ..` up to degree N.
    series: TruncatedSeries<f64>,
}

/// Builds the polynomial for a strip parameter `rho` in `(0, 1)`
/// (`rho = 1` is additionally allowed for testing):
///
/// `alpha = 1 - e^{-1/rho}`, `beta = (1 - e^{-1-1/rho}) / (1 - e^{-1/rho})`,
/// `N = floor((1 + 1/rho) e^{1 + 1/rho})`, `sigma = sum_{k=1}^N alpha^k / k`,
/// `phi(z) = (1/sigma) sum_{k=1}^N (alpha z)^k / k`.
pub fn build_phi(rho: f64) -> Result<PhiPolynomial> {
    if !(rho > 0.0 && rho <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "rho = {rho} outside (0, 1]"
        )));
    }
    let inv = 1.0 / rho;
    let degree_estimate = (1.0 + inv) * (1.0 + inv).exp();
    if rho < MIN_RHO || degree_estimate > MAX_DEGREE as f64 {
        return Err(Error::PhiDegreeOverflow {
            rho,
            degree_estimate,
            max_degree: MAX_DEGREE,
        });
    }
    let n = degree_estimate.floor() as usize;
    let alpha = -(-inv).exp_m1(); // 1 - e^{-1/rho}
    let beta = -(-1.0 - inv).exp_m1() / alpha;

    // sigma and the coefficients share one pass; compensated summation keeps
    // phi(1) = 1 at the 1e-12 level even for large N.
    let mut coeffs = vec![0.0f64; n + 1];
    let mut power = 1.0f64;
    let mut sigma = 0.0f64;
    let mut comp = 0.0f64;
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        power *= alpha;
        let term = power / k as f64;
        *c = term;
        let y = term - comp;
        let t = sigma + y;
        comp = (t - sigma) - y;
        sigma = t;
    }
    for c in coeffs.iter_mut() {
        *c /= sigma;
    }

    Ok(PhiPolynomial {
        rho,
        alpha,
        beta,
        sigma,
        series: TruncatedSeries::new(coeffs),
    })
}

impl PhiPolynomial {
    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `alpha(rho) = 1 - e^{-1/rho}`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Zero-free disc radius `beta(rho) > 1`.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Normalizer `sigma(rho) = sum_{k=1}^N alpha^k / k`.
    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn degree(&self) -> usize {
        self.series.order()
    }

    /// Full coefficient list (constant term exactly 0).
    pub fn series(&self) -> &TruncatedSeries<f64> {
        &self.series
    }

    /// Truncation to order `r` for composition.
    pub fn truncated(&self, r: usize) -> TruncatedSeries<f64> {
        self.series.to_order(r)
    }

    pub fn eval(&self, z: f64) -> f64 {
        self.series.eval(z)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.series.eval_complex(z)
    }

    /// Samples the closed disc `|z| <= beta` and counts points where the
    /// image leaves `[-rho, 1 + 2 rho] x [-2 rho, 2 rho]i`.
    ///
    /// The maximum modulus principle makes the boundary circle dominant;
    /// interior points are sampled as well.
    pub fn strip_violations(&self, boundary_samples: usize, interior_samples: usize) -> usize {
        let mut violations = 0usize;
        let check = |z: Complex64| {
            let v = self.eval_complex(z);
            let re_ok = -self.rho <= v.re && v.re <= 1.0 + 2.0 * self.rho;
            let im_ok = v.im.abs() <= 2.0 * self.rho;
            !(re_ok && im_ok)
        };
        for t in 0..boundary_samples {
            let angle = 2.0 * std::f64::consts::PI * t as f64 / boundary_samples as f64;
            let z = Complex64::from_polar(self.beta, angle);
            if check(z) {
                violations += 1;
            }
        }
        // low-discrepancy interior sweep: golden-angle spiral
        let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
        for t in 0..interior_samples {
            let radius = self.beta * ((t as f64 + 0.5) / interior_samples as f64).sqrt();
            let z = Complex64::from_polar(radius, golden * t as f64);
            if check(z) {
                violations += 1;
            }
        }
        violations
    }
}
