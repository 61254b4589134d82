//! Density partition functions of graphs.
//!
//! For a graph `G` and subset size `m`, the partition function
//! `den_m(G; gamma)` averages `exp(gamma m sigma(S))` over all m-subsets
//! `S`, where `sigma(S)` is the fraction of vertex pairs of `S` spanning an
//! edge. Its logarithm over `gamma m` lower-bounds the maximum m-subset
//! density, so approximating the partition function certifies dense subsets.
//!
//! The crate provides:
//!
//! - exact brute-force oracles ([`oracle`]) for the partition function, its
//!   restricted sums, and the univariate polynomial `h(z)` behind it;
//! - the direct low-order approximation and the disc-interpolation method
//!   ([`pipeline`]), with certified density bounds and greedy dense-subset
//!   extraction;
//! - derivative computations by closed forms and enumeration ([`moments`]),
//!   truncated series arithmetic ([`series`]), the disc-to-strip polynomial
//!   ([`phi`]), and the zero-free parameter recipe ([`zero_free`]);
//! - experiment harnesses ([`experiments`]) for root locations of random
//!   sign polynomials, an exact second-moment identity, and convergence
//!   sweeps.

pub mod combin;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod moments;
pub mod oracle;
pub mod phi;
pub mod pipeline;
pub mod roots;
pub mod scalar;
pub mod series;
pub mod weights;
pub mod zero_free;

pub use error::{Error, ParseError, Result};
pub use graph::{density, Graph, SubsetDensity};
pub use moments::{
    connected_sums, h_derivatives_closed, h_derivatives_enumerated, ConnectedSums, MomentVector,
};
pub use oracle::{den_exact, h_coeffs_exact, pm_exact, PolyCoeffs, RestrictedIndex};
pub use phi::{build_phi, PhiPolynomial};
pub use pipeline::{
    approx_direct, approx_rigorous, certified_density, extract_subset, ApproxConfig, ApproxResult,
    ExtractEngine, Mode,
};
pub use roots::poly_roots;
pub use scalar::Scalar;
pub use series::{choose_r, log_from_derivatives, taylor_eval, truncated_compose, TruncatedSeries};
pub use weights::{
    gamma_alpha_convert, weights_from_alpha, weights_from_gamma, z_matrix_from_gamma,
    ConvertDirection, Provenance, WeightMatrix,
};
pub use zero_free::{in_domain, rho_for, solve_params, ZeroFreeParams};
