//! End-to-end approximation of `ln den_m(G; gamma)`: the simplified direct
//! method (low-order Taylor of `ln h` at 0), the disc-interpolation method
//! (compose `h` with the strip polynomial, expand the log on a disc), the
//! certified density bound, and greedy subset extraction by successive
//! conditioning.

use crate::combin::{choose, ln_choose};
use crate::error::{Error, Result};
use crate::graph::{density, Graph, SubsetDensity};
use crate::moments::{
    h_derivatives_closed, h_derivatives_enumerated, restricted_derivatives_enumerated,
    DEFAULT_ENUM_BUDGET,
};
use crate::oracle::{pm_exact, RestrictedIndex};
use crate::phi::build_phi;
use crate::series::{choose_r, log_from_derivatives, taylor_remainder_bound, TruncatedSeries};
use crate::weights::{
    gamma_alpha_convert, weights_from_alpha, z_matrix_from_gamma, ConvertDirection,
};
use crate::zero_free::{rho_for, solve_params};
use serde::Serialize;

/// Strip parameter used for the composition when the guaranteed value is
/// below the representable range (it always is at desk scale; the choice
/// maximizes the disc radius among buildable polynomials).
pub const DEFAULT_RUN_RHO: f64 = 0.9;

/// Guaranteed strip parameters below this bound fall back to
/// [`DEFAULT_RUN_RHO`]; at and above it the polynomial is cheap to build.
pub const RHO_RUN_MIN: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Direct,
    Rigorous,
    Exact,
    Extract,
}

/// Inputs of one approximation call. Exactly one of `gamma`/`alpha` must be
/// set; the other is derived by the tilt conversion.
#[derive(Debug, Clone)]
pub struct ApproxConfig {
    pub m: usize,
    pub gamma: Option<f64>,
    pub alpha: Option<f64>,
    /// Taylor order for the direct method (1..=3 closed forms, 4..=6
    /// enumeration).
    pub order: usize,
    /// Target additive error on `ln den` for the interpolation method.
    pub eps: f64,
    /// Cap on the Taylor order of the interpolation method.
    pub max_order: usize,
    /// Cap on weighted-product evaluations in derivative enumeration.
    pub enum_budget: u64,
    /// Proceed when the zero-free guarantee does not apply (`n < omega m`);
    /// the result is then flagged `budget_limited`.
    pub allow_unguaranteed: bool,
    /// Explicit strip parameter for the composition polynomial.
    pub rho_override: Option<f64>,
}

impl ApproxConfig {
    pub fn direct_alpha(m: usize, alpha: f64, order: usize) -> Self {
        ApproxConfig {
            m,
            gamma: None,
            alpha: Some(alpha),
            order,
            eps: 0.1,
            max_order: 6,
            enum_budget: DEFAULT_ENUM_BUDGET,
            allow_unguaranteed: false,
            rho_override: None,
        }
    }

    pub fn direct_gamma(m: usize, gamma: f64, order: usize) -> Self {
        ApproxConfig {
            gamma: Some(gamma),
            alpha: None,
            ..Self::direct_alpha(m, 0.5, order)
        }
    }

    pub fn rigorous(m: usize, gamma: f64, eps: f64) -> Self {
        ApproxConfig {
            m,
            gamma: Some(gamma),
            alpha: None,
            order: 3,
            eps,
            max_order: 6,
            enum_budget: DEFAULT_ENUM_BUDGET,
            allow_unguaranteed: false,
            rho_override: None,
        }
    }

    fn resolve_tilts(&self) -> Result<(f64, f64)> {
        match (self.gamma, self.alpha) {
            (Some(_), Some(_)) => Err(Error::InvalidArgument(
                "set exactly one of gamma and alpha, got both".into(),
            )),
            (None, None) => Err(Error::InvalidArgument(
                "set exactly one of gamma and alpha, got neither".into(),
            )),
            (Some(g), None) => {
                let a = gamma_alpha_convert(g, self.m, ConvertDirection::GammaToAlpha)?;
                Ok((g, a))
            }
            (None, Some(a)) => {
                let g = gamma_alpha_convert(a, self.m, ConvertDirection::AlphaToGamma)?;
                Ok((g, a))
            }
        }
    }
}

/// One approximation (or exact/extraction) outcome.
///
/// Serializes to the fixed JSON shape
/// `{mode, n, m, gamma, alpha, order_used, ln_den, certified_density,
///   error_bound, budget_limited, subset?}`.
#[derive(Debug, Clone, Serialize)]
pub struct ApproxResult {
    pub mode: Mode,
    pub n: usize,
    pub m: usize,
    pub gamma: Option<f64>,
    pub alpha: Option<f64>,
    pub order_used: Option<usize>,
    pub ln_den: f64,
    /// `ln_den / (gamma m)`, the certified lower bound on the maximum
    /// m-subset density when `ln_den` is exact or error-bounded.
    pub certified_density: f64,
    pub error_bound: Option<f64>,
    pub budget_limited: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    /// Estimate of `ln h(1)` behind `ln_den` (not serialized).
    #[serde(skip)]
    pub ln_h1: f64,
}

impl ApproxResult {
    pub fn from_exact(g: &Graph, m: usize, gamma: f64, ln_den: f64) -> Self {
        ApproxResult {
            mode: Mode::Exact,
            n: g.n(),
            m,
            gamma: Some(gamma),
            alpha: None,
            order_used: None,
            ln_den,
            certified_density: ln_den / (gamma * m as f64),
            error_bound: Some(0.0),
            budget_limited: false,
            subset: None,
            ln_h1: f64::NAN,
        }
    }
}

/// Direct simplified method: Taylor of `ln h` at 0 under the `±alpha`
/// weighting, orders 1..3 by closed forms and 4..6 by enumeration, with
/// `ln den = T_r(1) - C(m,2) ln(1 - alpha)`.
pub fn approx_direct(g: &Graph, cfg: &ApproxConfig) -> Result<ApproxResult> {
    let n = g.n();
    let m = cfg.m;
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if !(1..=6).contains(&cfg.order) {
        return Err(Error::InvalidArgument(format!(
            "direct method supports orders 1..6, got {}",
            cfg.order
        )));
    }
    let (gamma, alpha) = cfg.resolve_tilts()?;
    let w = weights_from_alpha(g, alpha)?;
    let moments = if cfg.order <= 3 {
        h_derivatives_closed(&w, m, cfg.order)?
    } else {
        h_derivatives_enumerated(&w, m, cfg.order, cfg.enum_budget)?
    };
    let f = log_from_derivatives(&moments)?;
    let ln_h1 = f.eval(1.0);
    let ln_den = ln_h1 - choose(m as u64, 2) * (1.0 - alpha).ln();
    Ok(ApproxResult {
        mode: Mode::Direct,
        n,
        m,
        gamma: Some(gamma),
        alpha: Some(alpha),
        order_used: Some(cfg.order),
        ln_den,
        certified_density: ln_den / (gamma * m as f64),
        error_bound: None,
        budget_limited: false,
        subset: None,
        ln_h1,
    })
}

/// Interpolation method on the disc: pick `delta = (1 + gamma)/2`, derive
/// the zero-free parameters and the strip half-width, compose `h` with the
/// disc-to-strip polynomial, expand the log, and evaluate at 1;
/// `ln den = gamma m / 2 + T_r(1)`.
///
/// The Taylor order demanded by the remainder bound is far beyond the
/// enumeration budget whenever the guaranteed strip parameter is tiny (the
/// practical regime); the call then runs at the capped order and reports the
/// honest remainder bound with `budget_limited` set.
pub fn approx_rigorous(g: &Graph, cfg: &ApproxConfig) -> Result<ApproxResult> {
    let n = g.n();
    let m = cfg.m;
    let (gamma, _alpha) = cfg.resolve_tilts()?;
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "interpolation method needs 0 < gamma < 1, got {gamma}"
        )));
    }
    if m < 4 {
        return Err(Error::InvalidArgument(format!(
            "interpolation method needs m >= 4, got {m}"
        )));
    }
    if m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} exceeds n = {n}"
        )));
    }
    if !(cfg.eps > 0.0 && cfg.eps < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "eps = {} outside (0, 1)",
            cfg.eps
        )));
    }

    let delta = (1.0 + gamma) / 2.0;
    let params = solve_params(delta, m)?;
    let rho_strip = rho_for(&params, gamma, m)?;
    let guaranteed_size = n as f64 >= params.omega * m as f64;
    if !guaranteed_size && !cfg.allow_unguaranteed {
        return Err(Error::ZeroFreeUnavailable {
            n,
            required: params.omega * m as f64,
        });
    }

    // the image strip of the composition polynomial is [-r, 1+2r] x [±2r],
    // so staying inside a strip of half-width rho needs parameter rho/2
    let rho_guaranteed = rho_strip / 2.0;
    let (rho_phi, rho_is_guaranteed) = match cfg.rho_override {
        Some(r) => (r, r <= rho_guaranteed),
        None if rho_guaranteed >= RHO_RUN_MIN => (rho_guaranteed, true),
        None => (DEFAULT_RUN_RHO, false),
    };
    let phi = build_phi(rho_phi)?;

    let deg_g = phi.degree() as u64 * choose(m as u64, 2) as u64;
    let r_target = choose_r(deg_g, phi.beta(), cfg.eps) as usize;

    // largest order whose cumulative enumeration cost fits the budget
    let w = crate::weights::weights_from_gamma(g, m, gamma)?;
    let pair_count = w.pairs().filter(|&(_, _, v)| v != 0.0).count() as u64;
    let r_cap = r_target.max(1).min(cfg.max_order);
    let mut r_used = 0usize;
    let mut cumulative = 0.0f64;
    for k in 1..=r_cap {
        cumulative += choose(pair_count, k as u64);
        if cumulative > cfg.enum_budget as f64 {
            break;
        }
        r_used = k;
    }
    if r_used == 0 {
        return Err(Error::BudgetExceeded {
            needed: cumulative,
            budget: cfg.enum_budget as f64,
        });
    }

    let h_moments = h_derivatives_enumerated(&w, m, r_used, cfg.enum_budget)?;
    let h_series = TruncatedSeries::from_derivatives(&h_moments);
    let phi_r = phi.truncated(r_used);
    let g_series = crate::series::truncated_compose(&h_series, &phi_r, r_used)?;
    let f = log_from_derivatives(&g_series.to_derivatives())?;
    let ln_h1 = f.eval(1.0);

    let error_bound = taylor_remainder_bound(deg_g, phi.beta(), r_used as u64);
    let budget_limited = r_used < r_target || !guaranteed_size || !rho_is_guaranteed;
    let ln_den = gamma * m as f64 / 2.0 + ln_h1;
    Ok(ApproxResult {
        mode: Mode::Rigorous,
        n,
        m,
        gamma: Some(gamma),
        alpha: None,
        order_used: Some(r_used),
        ln_den,
        certified_density: ln_den / (gamma * m as f64),
        error_bound: Some(error_bound),
        budget_limited,
        subset: None,
        ln_h1,
    })
}

/// Certified lower bound `(ln_den - eps) / (gamma m)` on the maximum
/// m-subset density, valid when `ln_den` carries additive error at most
/// `eps`.
pub fn certified_density(res: &ApproxResult, eps: f64) -> Result<f64> {
    let gamma = match res.gamma {
        Some(g) if g > 0.0 => g,
        _ => {
            return Err(Error::InvalidArgument(
                "certified density needs gamma > 0".into(),
            ))
        }
    };
    Ok((res.ln_den - eps) / (gamma * res.m as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractEngine {
    /// Scores candidates by the exact restricted sums; the returned subset
    /// satisfies `sigma(S) >= ln den / (gamma m) - 1e-9`.
    Exact,
    /// Scores candidates by order-3 direct estimates of the restricted
    /// sums. Experimental; no guarantee claimed.
    Approximate,
}

/// Greedy extraction by successive conditioning: grow `Omega` one vertex at
/// a time, always taking the candidate maximizing the restricted partition
/// sum (ties to the lowest index).
pub fn extract_subset(
    g: &Graph,
    m: usize,
    gamma: f64,
    engine: ExtractEngine,
) -> Result<SubsetDensity> {
    let n = g.n();
    if m < 2 || m > n {
        return Err(Error::InvalidArgument(format!(
            "subset size m = {m} outside [2, {n}]"
        )));
    }
    if gamma <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "extraction needs gamma > 0, got {gamma}"
        )));
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    match engine {
        ExtractEngine::Exact => {
            let z0 = z_matrix_from_gamma(g, m, gamma)?;
            for _ in 0..m {
                let mut best: Option<(usize, f64)> = None;
                for j in 0..n {
                    if chosen.contains(&j) {
                        continue;
                    }
                    let mut omega = chosen.clone();
                    omega.push(j);
                    let val = pm_exact(&z0, m, &RestrictedIndex::new(omega)?)?.re;
                    if best.is_none_or(|(_, b)| val > b) {
                        best = Some((j, val));
                    }
                }
                chosen.push(best.expect("candidate list nonempty").0);
            }
        }
        ExtractEngine::Approximate => {
            let alpha = gamma_alpha_convert(gamma, m, ConvertDirection::GammaToAlpha)?;
            let w = weights_from_alpha(g, alpha)?;
            for step in 0..m {
                let mut best: Option<(usize, f64)> = None;
                for j in 0..n {
                    if chosen.contains(&j) {
                        continue;
                    }
                    let mut omega = chosen.clone();
                    omega.push(j);
                    omega.sort_unstable();
                    let mv =
                        restricted_derivatives_enumerated(&w, m, &omega, 3, DEFAULT_ENUM_BUDGET)?;
                    let f = log_from_derivatives(&mv)?;
                    let score =
                        ln_choose((n - step - 1) as u64, (m - step - 1) as u64) + f.eval(1.0);
                    if best.is_none_or(|(_, b)| score > b) {
                        best = Some((j, score));
                    }
                }
                chosen.push(best.expect("candidate list nonempty").0);
            }
        }
    }
    density(g, &chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::den_exact;

    fn ln_h1_oracle(g: &Graph, m: usize, alpha: f64) -> f64 {
        // ln h(1) = ln den + C(m,2) ln(1 - alpha) with gamma matched to alpha
        let gamma = gamma_alpha_convert(alpha, m, ConvertDirection::AlphaToGamma).unwrap();
        den_exact(g, m, gamma).unwrap() + choose(m as u64, 2) * (1.0 - alpha).ln()
    }

    #[test]
    fn direct_complete_graph_truncated_log() {
        // K_n: h(z) = (1 + alpha z)^{C(m,2)}, so T_r(1) is the truncated
        // alternating series times C(m,2)
        for (m, alpha) in [(3usize, 0.1f64), (5, 0.3), (8, 0.2)] {
            let g = Graph::complete(10);
            for order in 1..=3usize {
                let cfg = ApproxConfig::direct_alpha(m, alpha, order);
                let res = approx_direct(&g, &cfg).unwrap();
                let expect: f64 = choose(m as u64, 2)
                    * (1..=order)
                        .map(|k| {
                            (if k % 2 == 1 { 1.0 } else { -1.0 }) * alpha.powi(k as i32) / k as f64
                        })
                        .sum::<f64>();
                assert!(
                    (res.ln_h1 - expect).abs() <= 1e-9,
                    "m={m} alpha={alpha} r={order}: {} vs {expect}",
                    res.ln_h1
                );
            }
        }
    }

    #[test]
    fn direct_edgeless_graph_sign_flip() {
        let g = Graph::edgeless(9);
        let (m, alpha) = (4usize, 0.25f64);
        let cfg = ApproxConfig::direct_alpha(m, alpha, 3);
        let res = approx_direct(&g, &cfg).unwrap();
        let expect = choose(m as u64, 2) * (-alpha - alpha * alpha / 2.0 - alpha.powi(3) / 3.0);
        assert!((res.ln_h1 - expect).abs() <= 1e-9);
    }

    #[test]
    fn direct_single_edge_near_exact() {
        // small graph, large alpha: order-3 estimate within 0.15 of truth
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let gamma = 1.0;
        let cfg = ApproxConfig::direct_gamma(2, gamma, 3);
        let res = approx_direct(&g, &cfg).unwrap();
        let exact = den_exact(&g, 2, gamma).unwrap();
        assert!((exact - 1.140_934).abs() < 1e-5);
        assert!(
            (res.ln_den - exact).abs() <= 0.15,
            "estimate {} vs exact {exact}",
            res.ln_den
        );
        let alpha = res.alpha.unwrap();
        assert!((alpha - 1.0f64.tanh()).abs() < 1e-12);
    }

    #[test]
    fn direct_bookkeeping_identity() {
        let g = Graph::random_gnp(12, 0.5, 4).unwrap();
        let cfg = ApproxConfig::direct_alpha(4, 0.2, 3);
        let res = approx_direct(&g, &cfg).unwrap();
        let alpha = res.alpha.unwrap();
        let expect = res.ln_h1 - choose(4, 2) * (1.0 - alpha).ln();
        assert!((res.ln_den - expect).abs() < 1e-12);
        assert!((res.certified_density - res.ln_den / (res.gamma.unwrap() * 4.0)).abs() < 1e-12);
    }

    #[test]
    fn direct_rejects_bad_configs() {
        let g = Graph::complete(6);
        let mut cfg = ApproxConfig::direct_alpha(3, 0.2, 3);
        cfg.gamma = Some(0.5);
        assert!(approx_direct(&g, &cfg).is_err());
        let cfg = ApproxConfig::direct_alpha(3, 0.2, 7);
        assert!(approx_direct(&g, &cfg).is_err());
        let cfg = ApproxConfig::direct_alpha(3, 0.2, 0);
        assert!(approx_direct(&g, &cfg).is_err());
    }

    #[test]
    fn direct_enumerated_orders_improve_on_closed() {
        let g = Graph::random_gnp(10, 0.5, 21).unwrap();
        let (m, alpha) = (4usize, 0.2f64);
        let oracle = ln_h1_oracle(&g, m, alpha);
        let err3 = {
            let res = approx_direct(&g, &ApproxConfig::direct_alpha(m, alpha, 3)).unwrap();
            (res.ln_h1 - oracle).abs()
        };
        let err5 = {
            let res = approx_direct(&g, &ApproxConfig::direct_alpha(m, alpha, 5)).unwrap();
            (res.ln_h1 - oracle).abs()
        };
        assert!(err5 <= err3 + 1e-12, "order 5 {err5} vs order 3 {err3}");
    }

    #[test]
    fn direct_relabeling_invariance() {
        let g = Graph::random_gnp(11, 0.5, 9).unwrap();
        let perm: Vec<usize> = vec![10, 3, 7, 0, 8, 2, 9, 1, 6, 4, 5];
        let gp = g.relabel(&perm).unwrap();
        let cfg = ApproxConfig::direct_alpha(4, 0.3, 3);
        let a = approx_direct(&g, &cfg).unwrap();
        let b = approx_direct(&gp, &cfg).unwrap();
        assert!((a.ln_den - b.ln_den).abs() <= 1e-12);
    }

    #[test]
    fn rigorous_bookkeeping_identity() {
        let g = Graph::complete(12);
        let mut cfg = ApproxConfig::rigorous(4, 0.3, 0.1);
        cfg.allow_unguaranteed = true;
        cfg.max_order = 5;
        let res = approx_rigorous(&g, &cfg).unwrap();
        let gamma = res.gamma.unwrap();
        assert!((res.ln_den - res.ln_h1 - gamma * 2.0).abs() < 1e-12);
        assert!(res.budget_limited);
    }

    #[test]
    fn rigorous_k12_close_to_oracle() {
        let g = Graph::complete(12);
        let mut cfg = ApproxConfig::rigorous(4, 0.3, 0.1);
        cfg.allow_unguaranteed = true;
        cfg.max_order = 5;
        let res = approx_rigorous(&g, &cfg).unwrap();
        let exact = den_exact(&g, 4, 0.3).unwrap();
        assert!((exact - 1.2).abs() < 1e-12);
        assert!(
            (res.ln_den - exact).abs() <= 0.2,
            "estimate {} vs exact {exact}",
            res.ln_den
        );
    }

    #[test]
    fn rigorous_reports_remainder_bound_formula() {
        let g = Graph::complete(12);
        let mut cfg = ApproxConfig::rigorous(4, 0.3, 0.1);
        cfg.allow_unguaranteed = true;
        cfg.max_order = 5;
        let res = approx_rigorous(&g, &cfg).unwrap();
        let phi = build_phi(DEFAULT_RUN_RHO).unwrap();
        let deg = phi.degree() as u64 * 6;
        let r = res.order_used.unwrap() as u64;
        let expect = taylor_remainder_bound(deg, phi.beta(), r);
        assert!((res.error_bound.unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn rigorous_refuses_small_n_by_default() {
        let g = Graph::complete(12);
        let cfg = ApproxConfig::rigorous(4, 0.3, 0.1);
        assert!(matches!(
            approx_rigorous(&g, &cfg),
            Err(Error::ZeroFreeUnavailable { .. })
        ));
    }

    #[test]
    fn rigorous_rejects_bad_tilts() {
        let g = Graph::complete(12);
        let mut cfg = ApproxConfig::rigorous(4, 1.0, 0.1);
        cfg.allow_unguaranteed = true;
        assert!(approx_rigorous(&g, &cfg).is_err());
        let mut cfg = ApproxConfig::rigorous(3, 0.5, 0.1);
        cfg.allow_unguaranteed = true;
        assert!(approx_rigorous(&g, &cfg).is_err());
    }

    #[test]
    fn certified_bounds() {
        // complete graph: den = e^{gamma m} exactly, certified = 1 - eps/(gamma m)
        let g = Graph::complete(8);
        let (m, gamma) = (4usize, 0.9f64);
        let res = ApproxResult::from_exact(&g, m, gamma, den_exact(&g, m, gamma).unwrap());
        assert!((res.certified_density - 1.0).abs() < 1e-10);
        let eps = 0.05;
        let c = certified_density(&res, eps).unwrap();
        assert!((c - (1.0 - eps / (gamma * m as f64))).abs() < 1e-10);

        let degenerate = Graph::edgeless(8);
        let res = ApproxResult::from_exact(
            &degenerate,
            m,
            gamma,
            den_exact(&degenerate, m, gamma).unwrap(),
        );
        assert!(certified_density(&res, 0.0).unwrap() <= 1e-12);

        let single = Graph::new(3, [(0, 1)]).unwrap();
        let res = ApproxResult::from_exact(&single, 2, 1.0, den_exact(&single, 2, 1.0).unwrap());
        let c = certified_density(&res, 0.0).unwrap();
        assert!((c - 0.570_466_8).abs() < 1e-6);
        assert!(c <= 1.0);
    }

    #[test]
    fn extract_planted_clique() {
        // K_4 plus 4 isolated vertices: the clique dominates every
        // conditional sum
        let g = Graph::new(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = extract_subset(&g, 4, 1.0, ExtractEngine::Exact).unwrap();
        assert_eq!(d.subset(), &[0, 1, 2, 3]);
        assert_eq!(d.sigma(), 1.0);
    }

    #[test]
    fn extract_edgeless_guarantee_trivial() {
        let g = Graph::edgeless(7);
        let d = extract_subset(&g, 3, 0.8, ExtractEngine::Exact).unwrap();
        assert_eq!(d.sigma(), 0.0);
        let ln_den = den_exact(&g, 3, 0.8).unwrap();
        assert!(d.sigma() >= ln_den / (0.8 * 3.0) - 1e-9);
    }

    #[test]
    fn extract_exact_meets_certified_bound() {
        for seed in 0..10u64 {
            let g = Graph::random_gnp(12, 0.5, 300 + seed).unwrap();
            let (m, gamma) = (4usize, 1.0f64);
            let d = extract_subset(&g, m, gamma, ExtractEngine::Exact).unwrap();
            let bound = den_exact(&g, m, gamma).unwrap() / (gamma * m as f64);
            assert!(
                d.sigma() >= bound - 1e-9,
                "seed={seed}: sigma {} below bound {bound}",
                d.sigma()
            );
        }
    }

    #[test]
    fn extract_approximate_finds_planted_clique() {
        let g = Graph::new(8, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let d = extract_subset(&g, 4, 1.0, ExtractEngine::Approximate).unwrap();
        assert_eq!(d.subset(), &[0, 1, 2, 3]);
    }

    #[test]
    fn extract_rejects_oversized_m() {
        let g = Graph::complete(4);
        assert!(extract_subset(&g, 5, 1.0, ExtractEngine::Exact).is_err());
    }

    #[test]
    fn den_estimates_monotone_in_gamma() {
        let g = Graph::random_gnp(10, 0.5, 77).unwrap();
        let m = 4usize;
        let mut last_exact = f64::NEG_INFINITY;
        let mut last_direct = f64::NEG_INFINITY;
        for k in 1..=8 {
            let gamma = 0.25 * k as f64;
            let exact = den_exact(&g, m, gamma).unwrap();
            assert!(exact >= last_exact - 1e-12);
            last_exact = exact;
            let res = approx_direct(&g, &ApproxConfig::direct_gamma(m, gamma, 3)).unwrap();
            assert!(res.ln_den >= last_direct - 1e-6);
            last_direct = res.ln_den;
        }
    }
}
