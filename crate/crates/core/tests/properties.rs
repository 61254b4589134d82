#![allow(clippy::needless_range_loop)] // index-aligned oracle comparisons

//! Property tests for the structural invariants: symmetry, permutation
//! invariance, conversion round trips, series identities, parity.

use densepart_core::combin::choose;
use densepart_core::moments::h_derivatives_closed;
use densepart_core::oracle::{den_exact, h_coeffs_exact, pm_exact, RestrictedIndex};
use densepart_core::series::{
    choose_r, log_from_derivatives, taylor_remainder_bound, truncated_compose, TruncatedSeries,
};
use densepart_core::weights::{
    gamma_alpha_convert, weights_from_alpha, weights_from_gamma, z_matrix_from_gamma,
    ConvertDirection, Provenance, WeightMatrix,
};
use densepart_core::{density, Graph};
use proptest::prelude::*;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn shuffled(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        perm.swap(i, j);
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weight_matrices_symmetric_zero_diagonal(
        n in 3usize..12,
        seed in any::<u64>(),
        alpha in 0.01f64..0.99,
        gamma in 0.01f64..2.0,
        m in 2usize..6,
    ) {
        prop_assume!(m <= n);
        let g = Graph::random_gnp(n, 0.5, seed).unwrap();
        for w in [weights_from_alpha(&g, alpha).unwrap(), weights_from_gamma(&g, m, gamma).unwrap()] {
            for i in 0..n {
                prop_assert_eq!(w.get(i, i), 0.0);
                for j in 0..n {
                    prop_assert_eq!(w.get(i, j), w.get(j, i));
                }
            }
        }
    }

    #[test]
    fn density_invariant_under_relabeling(
        n in 4usize..12,
        seed in any::<u64>(),
        perm_seed in any::<u64>(),
    ) {
        let g = Graph::random_gnp(n, 0.5, seed).unwrap();
        let perm = shuffled(n, perm_seed);
        let gp = g.relabel(&perm).unwrap();
        let subset: Vec<usize> = (0..4).collect();
        let mapped: Vec<usize> = subset.iter().map(|&v| perm[v]).collect();
        let d1 = density(&g, &subset).unwrap();
        let d2 = density(&gp, &mapped).unwrap();
        prop_assert_eq!(d1.spanned_edges(), d2.spanned_edges());

        // permutation of the subset itself changes nothing
        let reversed: Vec<usize> = subset.iter().rev().copied().collect();
        prop_assert_eq!(d1, density(&g, &reversed).unwrap());
    }

    #[test]
    fn tilt_conversion_round_trip(
        alpha in 0.01f64..0.99,
        m in 2usize..40,
    ) {
        let gamma = gamma_alpha_convert(alpha, m, ConvertDirection::AlphaToGamma).unwrap();
        let back = gamma_alpha_convert(gamma, m, ConvertDirection::GammaToAlpha).unwrap();
        prop_assert!((alpha - back).abs() <= 1e-12);
    }

    #[test]
    fn complement_negates_alpha_weights(
        n in 3usize..10,
        seed in any::<u64>(),
        alpha in 0.01f64..0.99,
    ) {
        let g = Graph::random_gnp(n, 0.4, seed).unwrap();
        let w = weights_from_alpha(&g, alpha).unwrap();
        let wc = weights_from_alpha(&g.complement(), alpha).unwrap();
        for (i, j, v) in w.pairs() {
            prop_assert_eq!(wc.get(i, j), -v);
        }
    }

    #[test]
    fn log_exp_series_round_trip(coeffs in prop::collection::vec(-1.0f64..1.0, 10)) {
        let mut g = vec![1.0f64];
        g.extend(coeffs);
        let series = TruncatedSeries::new(g.clone());
        let f = log_from_derivatives(&series.to_derivatives()).unwrap();
        let r = series.order();
        let mut e = vec![0.0f64; r + 1];
        e[0] = 1.0;
        for k in 1..=r {
            let mut s = 0.0;
            for j in 1..=k {
                s += j as f64 * f.coeff(j) * e[k - j];
            }
            e[k] = s / k as f64;
        }
        for k in 0..=r {
            prop_assert!((e[k] - g[k]).abs() <= 1e-10, "k={} {} vs {}", k, e[k], g[k]);
        }
    }

    #[test]
    fn composition_matches_full_expansion(
        outer in prop::collection::vec(-1.0f64..1.0, 9),
        mut inner in prop::collection::vec(-1.0f64..1.0, 9),
    ) {
        inner[0] = 0.0;
        let r = 8usize;
        let mut full = vec![outer[r]];
        for k in (0..r).rev() {
            let mut prod = vec![0.0f64; full.len() + inner.len() - 1];
            for (a, &ca) in full.iter().enumerate() {
                for (b, &cb) in inner.iter().enumerate() {
                    prod[a + b] += ca * cb;
                }
            }
            prod[0] += outer[k];
            full = prod;
        }
        let got = truncated_compose(
            &TruncatedSeries::new(outer),
            &TruncatedSeries::new(inner),
            r,
        ).unwrap();
        for k in 0..=r {
            prop_assert!((got.coeff(k) - full[k]).abs() <= 1e-12 * full[k].abs().max(1.0));
        }
    }

    #[test]
    fn choose_r_is_minimal(
        degree in 1u64..100_000,
        beta_gap in 0.01f64..3.0,
        eps_exp in -8.0f64..-0.1,
    ) {
        let beta = 1.0 + beta_gap;
        let eps = 10.0f64.powf(eps_exp);
        let r = choose_r(degree, beta, eps);
        prop_assert!(taylor_remainder_bound(degree, beta, r) <= eps);
        if r > 0 {
            prop_assert!(taylor_remainder_bound(degree, beta, r - 1) > eps);
        }
    }

    #[test]
    fn derivative_sign_flip_parity(
        n in 4usize..9,
        seed in any::<u64>(),
        m in 3usize..6,
    ) {
        prop_assume!(m <= n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = WeightMatrix::from_pair_fn(n, Provenance::Raw, |_, _| {
            (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        });
        let neg = w.map(|v| -v);
        let a = h_derivatives_closed(&w, m, 3).unwrap();
        let b = h_derivatives_closed(&neg, m, 3).unwrap();
        for k in 0..=3usize {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let diff = (a.get(k) * sign - b.get(k)).abs();
            prop_assert!(diff <= 1e-12 * a.get(k).abs().max(1.0));
        }
    }

    #[test]
    fn h_coefficients_sign_parity(
        n in 4usize..8,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = WeightMatrix::from_pair_fn(n, Provenance::Raw, |_, _| {
            (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        });
        let neg = w.map(|v| -v);
        let a = h_coeffs_exact(&w, 4.min(n)).unwrap();
        let b = h_coeffs_exact(&neg, 4.min(n)).unwrap();
        for k in 0..=a.degree() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert!((a.coeffs()[k] * sign - b.coeffs()[k]).norm() <= 1e-12);
        }
    }

    #[test]
    fn ln_den_between_zero_and_gamma_m(
        n in 4usize..11,
        seed in any::<u64>(),
        m in 2usize..5,
        gamma in 0.1f64..3.0,
    ) {
        prop_assume!(m <= n);
        let g = Graph::random_gnp(n, 0.5, seed).unwrap();
        let ln_den = den_exact(&g, m, gamma).unwrap();
        prop_assert!(ln_den >= -1e-12);
        prop_assert!(ln_den <= gamma * m as f64 + 1e-12);
    }

    #[test]
    fn restricted_sum_real_positive_for_real_matrices(
        n in 4usize..9,
        seed in any::<u64>(),
        gamma in 0.1f64..1.5,
    ) {
        let g = Graph::random_gnp(n, 0.5, seed).unwrap();
        let m = 4usize;
        let z = z_matrix_from_gamma(&g, m, gamma).unwrap();
        let omega = RestrictedIndex::new(vec![seed as usize % n]).unwrap();
        let v = pm_exact(&z, m, &omega).unwrap();
        prop_assert!(v.re > 0.0);
        prop_assert!(v.im.abs() <= 1e-10 * v.re);
    }

    #[test]
    fn moment_invariance_under_conjugation_by_permutation(
        n in 4usize..9,
        seed in any::<u64>(),
        perm_seed in any::<u64>(),
        m in 3usize..6,
    ) {
        prop_assume!(m <= n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = WeightMatrix::from_pair_fn(n, Provenance::Raw, |_, _| {
            (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        });
        let wp = w.permuted(&shuffled(n, perm_seed));
        let a = h_derivatives_closed(&w, m, 3).unwrap();
        let b = h_derivatives_closed(&wp, m, 3).unwrap();
        for k in 0..=3usize {
            prop_assert!((a.get(k) - b.get(k)).abs() <= 1e-11 * a.get(k).abs().max(1.0));
        }
    }

    #[test]
    fn sigma_times_pairs_is_integral(
        n in 4usize..12,
        seed in any::<u64>(),
        m in 2usize..6,
    ) {
        prop_assume!(m <= n);
        let g = Graph::random_gnp(n, 0.5, seed).unwrap();
        let subset: Vec<usize> = (0..m).collect();
        let d = density(&g, &subset).unwrap();
        let product = d.sigma() * choose(m as u64, 2);
        prop_assert!((product - d.spanned_edges() as f64).abs() < 1e-9);
        prop_assert!(d.sigma() >= 0.0 && d.sigma() <= 1.0);
    }
}
