//! Complex polynomial roots by simultaneous Aberth–Ehrlich iteration.
//!
//! The contract is the residual: every returned root satisfies
//! `|p(root)| <= 1e-8 * max|c_k|`, otherwise the call fails loudly.

use crate::error::{Error, Result};
use crate::oracle::PolyCoeffs;
use num_complex::Complex64;

/// Residual acceptance threshold relative to the largest coefficient.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Coefficients smaller than this times the largest are trimmed from the
/// leading end before the degree is decided.
pub const TRIM_TOL: f64 = 1e-14;

const MAX_ITERATIONS: usize = 300;

/// All complex roots of `p`, in no particular order beyond determinism.
pub fn poly_roots(p: &PolyCoeffs) -> Result<Vec<Complex64>> {
    let raw = p.coeffs();
    let max_coeff = raw.iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    if max_coeff == 0.0 {
        return Err(Error::InvalidArgument(
            "zero polynomial has no defined roots".into(),
        ));
    }
    // trim negligible leading coefficients
    let mut top = raw.len() - 1;
    while top > 0 && raw[top].norm() <= TRIM_TOL * max_coeff {
        top -= 1;
    }
    if top == 0 {
        return Err(Error::InvalidArgument(
            "polynomial is constant after trimming".into(),
        ));
    }
    let mut coeffs: Vec<Complex64> = raw[..=top].to_vec();

    // factor out roots at the origin
    let mut roots = Vec::with_capacity(top);
    let mut low = 0usize;
    while low < coeffs.len() - 1 && coeffs[low].norm() == 0.0 {
        roots.push(Complex64::new(0.0, 0.0));
        low += 1;
    }
    coeffs.drain(..low);

    let degree = coeffs.len() - 1;
    if degree == 0 {
        return Ok(roots);
    }

    let allowed = RESIDUAL_TOL * max_coeff;
    let mut worst = f64::INFINITY;
    // deterministic restarts at shifted start angles
    for &offset in &[0.45f64, 1.17, 2.39] {
        let mut guesses = initial_guesses(&coeffs, offset);
        aberth_sweeps(&coeffs, &mut guesses);
        worst = guesses
            .iter()
            .map(|&z| eval_poly(&coeffs, z).norm())
            .fold(0.0f64, f64::max);
        if worst <= allowed {
            roots.extend(guesses);
            return Ok(roots);
        }
    }
    Err(Error::RootsNotConverged {
        iterations: MAX_ITERATIONS,
        residual: worst,
        allowed,
    })
}

fn eval_poly(cs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in cs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Starting points from the Newton polygon: radii come from the slopes of
/// the upper convex hull of `(k, ln |c_k|)`, which track the magnitudes of
/// the root groups far better than a single circle.
fn initial_guesses(coeffs: &[Complex64], offset: f64) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    let logs: Vec<f64> = coeffs
        .iter()
        .map(|c| {
            if c.norm() > 0.0 {
                c.norm().ln()
            } else {
                f64::NEG_INFINITY
            }
        })
        .collect();
    // upper convex hull over k = 0..=degree (both endpoints finite: the
    // constant and leading coefficients are nonzero here)
    let mut hull: Vec<usize> = Vec::new();
    for k in 0..=degree {
        if logs[k] == f64::NEG_INFINITY {
            continue;
        }
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let turn = (b - a) as f64 * (logs[k] - logs[a]) - (k - a) as f64 * (logs[b] - logs[a]);
            if turn >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(k);
    }

    let mut guesses = Vec::with_capacity(degree);
    let golden = 2.0 * std::f64::consts::PI * 0.381_966_011_250_105;
    for seg in hull.windows(2) {
        let (i, j) = (seg[0], seg[1]);
        let span = j - i;
        let radius = ((logs[i] - logs[j]) / span as f64).exp();
        for t in 0..span {
            let angle =
                2.0 * std::f64::consts::PI * t as f64 / span as f64 + offset + golden * i as f64;
            guesses.push(Complex64::from_polar(radius, angle));
        }
    }
    debug_assert_eq!(guesses.len(), degree);
    guesses
}

/// In-place Aberth–Ehrlich sweeps until the corrections stall.
fn aberth_sweeps(coeffs: &[Complex64], guesses: &mut [Complex64]) {
    let degree = coeffs.len() - 1;
    let deriv: Vec<Complex64> = (1..=degree).map(|k| coeffs[k] * k as f64).collect();
    for _ in 0..MAX_ITERATIONS {
        let mut max_step = 0.0f64;
        for i in 0..degree {
            let z = guesses[i];
            let pz = eval_poly(coeffs, z);
            let dz = eval_poly(&deriv, z);
            let newton = if dz.norm() > 0.0 {
                pz / dz
            } else {
                // nudge off a critical point
                Complex64::new(1e-8, 1e-8)
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for (j, &other) in guesses.iter().enumerate() {
                if j != i {
                    let diff = z - other;
                    if diff.norm() > 0.0 {
                        repulsion += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            guesses[i] = z - step;
            max_step = max_step.max(step.norm() / (1.0 + guesses[i].norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
}

/// Smallest modulus among the roots, `None` for (sub-)constant polynomials
/// after trimming.
pub fn min_root_modulus(p: &PolyCoeffs) -> Result<Option<f64>> {
    match poly_roots(p) {
        Ok(roots) => Ok(roots
            .iter()
            .map(|r| r.norm())
            .min_by(|a, b| a.partial_cmp(b).unwrap())),
        Err(Error::InvalidArgument(_)) => Ok(None),
        Err(e) => Err(e),
    }
}
