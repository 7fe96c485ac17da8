//! Kernel density estimation with complexity-based bandwidth selection.
//!
//! The crate estimates univariate densities with a Gaussian kernel and
//! selects the bandwidth by maximizing a scaled statistical complexity: the
//! product-form tradeoff between closeness to the empirical distribution and
//! distance from a fitted Gaussian equilibrium. Classic selectors (AMISE
//! plug-in, validation likelihood, PIT uniformity) are included for
//! comparison, along with simulation datasets, price-series ingestion, and
//! market-efficiency statistics (sign information, null bands, Hurst
//! exponents).

pub mod bandwidth;
pub mod complexity;
pub mod datasets;
pub mod divergence;
pub mod efficiency;
mod error;
pub mod kde;
pub mod kernel;
pub mod quad;
pub mod sample;
pub mod search;
#[cfg(test)]
mod testutil;

pub use bandwidth::{
    amise_bandwidth_for_curvature, k_tau, select_amise_plugin, select_likelihood, select_pit,
    BandwidthResult, PitConfig, SelectionMethod, TracePoint, ValidationSet,
};
pub use complexity::{
    build_complexity_curve, complexity_at, e_statistic, find_h_p, p_statistic, select_h_c,
    ComplexityCurve,
};
pub use datasets::{
    ingest_prices, simulate, slice_by_year, true_pdf, Distribution, IngestConfig, IngestStats,
    ReturnSeries, SimSpec,
};
pub use divergence::{
    cumulative_kl, cumulative_kl_of, euclidean_divergence_from_uniform,
    euclidean_divergence_from_uniform_of, fit_gaussian, ks_vs_empirical, lmc_complexity,
    shannon_entropy, shannon_entropy_of, GaussianFit,
};
pub use efficiency::{
    counting_market_information, hurst_exponent, market_information, null_bands, prob_positive,
    HurstConfig, HurstResult, MarketInfoResult, NullBands,
};
pub use error::{Error, Result};
pub use kde::KernelDensity;
pub use kernel::{KernelKind, KernelSpec};
pub use quad::QuadratureConfig;
pub use sample::Sample;
pub use search::SearchConfig;
