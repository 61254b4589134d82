//! Constructive selection of the zero-free-region parameters
//! `(delta, theta, eta, lambda, omega)` and of the strip half-width `rho`,
//! plus the membership test for the box domain of log-coordinate matrices.
//!
//! The selection rules allocate slack deterministically: `theta` sits at the
//! midpoint of the feasible interval of `2 delta tan(theta/2) < theta`,
//! `eta` takes a tenth of the remaining gap, `lambda = 2 e^{6 delta}`, and
//! `omega` solves both size inequalities with a 10% margin.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weights::WeightMatrix;
use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ZeroFreeParams {
    pub delta: f64,
    pub theta: f64,
    pub eta: f64,
    pub lambda: f64,
    pub omega: f64,
    /// Gamma-free default strip half-width `min(delta/10, eta/10, 0.9)`;
    /// [`rho_for`] refines it once a concrete `gamma < delta` is known.
    pub rho: f64,
}

/// Feasibility boundary of `2 delta tan(theta/2) < theta` on `(0, pi/2)`:
/// the whole interval when the inequality holds up to `pi/2`, otherwise the
/// root of `theta - 2 delta tan(theta/2)` located by bisection.
fn feasible_theta_sup(delta: f64) -> f64 {
    let gap = |theta: f64| theta - 2.0 * delta * (theta / 2.0).tan();
    let hi = FRAC_PI_2 - 1e-12;
    if gap(hi) > 0.0 {
        return FRAC_PI_2;
    }
    // gap > 0 near 0 (slope 1 - delta > 0), gap(hi) <= 0
    let (mut lo, mut hi) = (1e-9, hi);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gap(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn solve_params(delta: f64, m: usize) -> Result<ZeroFreeParams> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "delta = {delta} outside (0, 1)"
        )));
    }
    if m < 4 {
        return Err(Error::InvalidArgument(format!("m = {m} must be >= 4")));
    }
    let theta = feasible_theta_sup(delta) / 2.0;
    let eta = (theta - 2.0 * delta * (theta / 2.0).tan()) / 10.0;
    let lambda = 2.0 * (6.0 * delta).exp();

    // smallest n with 10 delta lambda m / (n-1) <= 5 eta, resp. <= ln 2
    // (the second uses lambda = 2 e^{6 delta}, so ln lambda - 6 delta = ln 2)
    let m_f = m as f64;
    let n_angle = 1.0 + 2.0 * delta * lambda * m_f / eta;
    let n_ratio = 1.0 + 10.0 * delta * lambda * m_f / std::f64::consts::LN_2;
    let omega = (1.1 * n_angle.max(n_ratio) / m_f).max(1.01);

    let rho = (delta / 10.0).min(eta / 10.0).min(0.9);
    let params = ZeroFreeParams {
        delta,
        theta,
        eta,
        lambda,
        omega,
        rho,
    };
    debug_assert!(check_inequalities(
        &params,
        m,
        (omega * m_f).ceil() as usize
    ));
    Ok(params)
}

/// The four selection inequalities, the last two at a concrete `n`:
/// `2 delta tan(theta/2) + 5 eta < theta`; `lambda > e^{6 delta}`;
/// `2 delta tan(theta/2) + 5 eta + 10 delta lambda m/(n-1) <= theta`;
/// `exp(6 delta + 10 delta lambda m/(n-1)) <= lambda`.
pub fn check_inequalities(p: &ZeroFreeParams, m: usize, n: usize) -> bool {
    let angle_base = 2.0 * p.delta * (p.theta / 2.0).tan() + 5.0 * p.eta;
    let drift = 10.0 * p.delta * p.lambda * m as f64 / (n as f64 - 1.0);
    angle_base < p.theta
        && p.lambda > (6.0 * p.delta).exp()
        && angle_base + drift <= p.theta
        && (6.0 * p.delta + drift).exp() <= p.lambda
}

/// Strip half-width `rho = min((delta - gamma)/10, eta/10, 0.9)` for a tilt
/// `0 < gamma < delta`, verified on a sampled strip boundary: every `z` in
/// `[-rho, 1 + rho] x [-rho, rho]i` must keep `ln(1 + z w)` inside the box
/// `|Re| <= delta/(m-1)`, `|Im| <= eta/(m-1)` for both edge weights
/// `w = e^{±gamma/(m-1)} - 1`.
pub fn rho_for(params: &ZeroFreeParams, gamma: f64, m: usize) -> Result<f64> {
    if m < 4 {
        return Err(Error::InvalidArgument(format!("m = {m} must be >= 4")));
    }
    if !(gamma > 0.0 && gamma < params.delta) {
        return Err(Error::InvalidArgument(format!(
            "gamma = {gamma} outside (0, delta = {})",
            params.delta
        )));
    }
    let rho = ((params.delta - gamma) / 10.0)
        .min(params.eta / 10.0)
        .min(0.9);

    let span = m as f64 - 1.0;
    let re_limit = params.delta / span + 1e-12;
    let im_limit = params.eta / span + 1e-12;
    let weights = [(gamma / span).exp_m1(), (-gamma / span).exp_m1()];
    // rectangle boundary of the strip, 2500 points per horizontal side,
    // the rest on the short vertical sides: 10^4 samples in total
    let horizontal = 2500usize;
    let vertical = 2500usize;
    let sample = |z: Complex64| -> Result<()> {
        for &w in &weights {
            let v = (Complex64::new(1.0, 0.0) + z.scale(w)).ln();
            if v.re.abs() > re_limit {
                return Err(Error::StripViolation {
                    rho,
                    part: "Re",
                    value: v.re.abs(),
                    limit: re_limit,
                });
            }
            if v.im.abs() > im_limit {
                return Err(Error::StripViolation {
                    rho,
                    part: "Im",
                    value: v.im.abs(),
                    limit: im_limit,
                });
            }
        }
        Ok(())
    };
    for t in 0..horizontal {
        let x = -rho + (1.0 + 2.0 * rho) * t as f64 / (horizontal - 1) as f64;
        sample(Complex64::new(x, rho))?;
        sample(Complex64::new(x, -rho))?;
    }
    for t in 0..vertical {
        let y = -rho + 2.0 * rho * t as f64 / (vertical - 1) as f64;
        sample(Complex64::new(-rho, y))?;
        sample(Complex64::new(1.0 + rho, y))?;
    }
    Ok(rho)
}

/// True iff every off-diagonal entry satisfies `|Re z_ij| <= delta/(m-1)`
/// and `|Im z_ij| <= eta/(m-1)` (closed domain, boundary included).
pub fn in_domain(z: &WeightMatrix<Complex64>, delta: f64, eta: f64, m: usize) -> bool {
    let span = m as f64 - 1.0;
    z.pairs()
        .all(|(_, _, v)| v.re().abs() <= delta / span && v.im().abs() <= eta / span)
}
