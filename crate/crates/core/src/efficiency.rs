//! Market-efficiency statistics of a return series.
//!
//! Three diagnostics, all driven by the kernel-smoothed sign of returns or
//! the log-price path:
//!
//! * the probability of a positive return, `1 - F_h(0)`;
//! * the market information `I_h`: the entropy difference between the
//!   estimated two-symbol sign dynamics and an efficient market in which the
//!   next sign is a fair coin, with Monte Carlo null bands for its
//!   distribution under that efficient null;
//! * the Hurst exponent of the log-price by rescaled-range analysis.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kde::KernelDensity;
use crate::kernel::normal_cdf;
use crate::sample::Sample;

/// Conditional sign probabilities are undefined below this marginal mass.
const SIGN_FLOOR: f64 = 1e-12;

/// Sign-dynamics summary at one bandwidth: marginal and transition
/// probabilities of the smoothed return sign and the market information of
/// the pair distribution, in bits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarketInfoResult {
    pub bandwidth: f64,
    /// Marginal probability that a return in a consecutive pair is positive.
    pub p_pos: f64,
    pub p_neg: f64,
    /// Probability of a positive return given the previous one was positive.
    pub pi_pos: f64,
    /// Probability of a positive return given the previous one was negative.
    pub pi_neg: f64,
    /// Information carried by one lag of sign history, in bits.
    pub info_bits: f64,
    /// Length of the conditioning symbol block (fixed to one lag).
    pub lag_length: usize,
}

/// Null-distribution quantiles of the counting market information for
/// i.i.d. fair signs of a given series length.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NullBands {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub q95: f64,
    pub q99: f64,
    pub q999: f64,
}

impl NullBands {
    /// The bands as (probability level, quantile) pairs, ascending.
    pub fn levels(&self) -> [(f64, f64); 3] {
        [(0.95, self.q95), (0.99, self.q99), (0.999, self.q999)]
    }
}

/// Settings for the rescaled-range Hurst estimator.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HurstConfig {
    /// Smallest window size in the geometric ladder.
    pub min_window: usize,
    /// Largest window is the increment count divided by this.
    pub max_window_divisor: usize,
    /// Number of ladder rungs before rounding and deduplication.
    pub ladder_points: usize,
    /// Subtract the expected rescaled range of an independent series
    /// (the Anis-Lloyd-Peters formula) before fitting, removing the
    /// well-known small-window upward bias of plain R/S.
    pub bias_correction: bool,
}

impl Default for HurstConfig {
    fn default() -> Self {
        HurstConfig {
            min_window: 8,
            max_window_divisor: 4,
            ladder_points: 15,
            bias_correction: true,
        }
    }
}

/// Rescaled-range estimate with the per-window statistics behind the fit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HurstResult {
    pub exponent: f64,
    pub window_sizes: Vec<usize>,
    /// Average rescaled range per window size (uncorrected).
    pub rs_values: Vec<f64>,
    /// Coefficient of determination of the log-log fit.
    pub r_squared: f64,
}

/// Probability of a positive return under the kernel estimate:
/// `1 - F_h(0) = (1/n) sum K(X_i / h)` by kernel symmetry.
pub fn prob_positive(kd: &KernelDensity) -> f64 {
    let h = kd.bandwidth();
    let vals = kd.sample().values();
    vals.iter().map(|&x| normal_cdf(x / h)).sum::<f64>() / vals.len() as f64
}

/// `x log2(x)` with the entropy convention `0 log 0 = 0`.
fn xlog2(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Market information of the joint sign law given the four quadrant masses
/// (++, +-, -+, --), in bits: the entropy of a pair under an efficient
/// market with the same current-sign marginal, minus the entropy of the
/// estimated pair distribution.
fn information_bits(q_pp: f64, q_pm: f64, q_mp: f64, q_mm: f64) -> f64 {
    let p1 = q_pp + q_pm;
    let p0 = q_mp + q_mm;
    // -sum p_i log2(p_i / 2) expands to (p1 + p0) - p1 log2 p1 - p0 log2 p0.
    (p1 + p0) - xlog2(p1) - xlog2(p0) + xlog2(q_pp) + xlog2(q_pm) + xlog2(q_mp) + xlog2(q_mm)
}

/// Market information of the return series at bandwidth h with one lag of
/// sign history.
///
/// Consecutive pairs (X_t, X_{t+1}) are smoothed by a product-Gaussian
/// kernel, so each quadrant mass is an average of products of `K(X/h)`
/// terms; the counting definition is recovered as h tends to zero. Errors if
/// either marginal sign probability is numerically zero, which leaves the
/// transition probabilities undefined.
pub fn market_information(s: &Sample, h: f64) -> Result<MarketInfoResult> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::InvalidBandwidth(h));
    }
    let n = s.len();
    if n < 3 {
        return Err(Error::SeriesTooShort { need: 3, got: n });
    }
    let phi: Vec<f64> = s.values().iter().map(|&x| normal_cdf(x / h)).collect();
    let m = (n - 1) as f64;
    let (mut q_pp, mut q_pm, mut q_mp, mut q_mm) = (0.0, 0.0, 0.0, 0.0);
    for w in phi.windows(2) {
        let (a, b) = (w[0], w[1]);
        q_pp += a * b;
        q_pm += a * (1.0 - b);
        q_mp += (1.0 - a) * b;
        q_mm += (1.0 - a) * (1.0 - b);
    }
    q_pp /= m;
    q_pm /= m;
    q_mp /= m;
    q_mm /= m;
    let p_pos = q_pp + q_pm;
    let p_neg = q_mp + q_mm;
    if p_pos < SIGN_FLOOR || p_neg < SIGN_FLOOR {
        return Err(Error::DegenerateSigns { p_pos, p_neg });
    }
    Ok(MarketInfoResult {
        bandwidth: h,
        p_pos,
        p_neg,
        pi_pos: q_pp / p_pos,
        pi_neg: q_mp / p_neg,
        info_bits: information_bits(q_pp, q_pm, q_mp, q_mm),
        lag_length: 1,
    })
}

/// Market information of a hard sign sequence (the h -> 0 counting limit),
/// in bits. Tolerates one-sided sequences: conditional probabilities are not
/// formed, only the quadrant entropies.
pub fn counting_market_information(signs: &[bool]) -> Result<f64> {
    let n = signs.len();
    if n < 3 {
        return Err(Error::SeriesTooShort { need: 3, got: n });
    }
    let m = (n - 1) as f64;
    let (mut c_pp, mut c_pm, mut c_mp, mut c_mm) = (0u32, 0u32, 0u32, 0u32);
    for w in signs.windows(2) {
        match (w[0], w[1]) {
            (true, true) => c_pp += 1,
            (true, false) => c_pm += 1,
            (false, true) => c_mp += 1,
            (false, false) => c_mm += 1,
        }
    }
    Ok(information_bits(
        f64::from(c_pp) / m,
        f64::from(c_pm) / m,
        f64::from(c_mp) / m,
        f64::from(c_mm) / m,
    ))
}

/// Monte Carlo quantiles of the counting market information under the
/// efficient null: `trials` i.i.d. fair-sign sequences of length `n`. Each
/// trial draws from its own deterministic RNG stream, so results do not
/// depend on evaluation order.
pub fn null_bands(n: usize, trials: usize, seed: u64) -> Result<NullBands> {
    if n < 3 {
        return Err(Error::SeriesTooShort { need: 3, got: n });
    }
    if trials < 1000 {
        return Err(Error::TooFewTrials {
            need: 1000,
            got: trials,
        });
    }
    let mut stats = Vec::with_capacity(trials);
    let mut signs = vec![false; n];
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        for s in signs.iter_mut() {
            *s = rng.gen_bool(0.5);
        }
        stats.push(counting_market_information(&signs)?);
    }
    stats.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let quantile = |p: f64| {
        // Inverse empirical cdf (type-1): smallest order statistic with at
        // least a fraction p of the sample at or below it.
        let k = (p * trials as f64).ceil() as usize;
        stats[k.clamp(1, trials) - 1]
    };
    Ok(NullBands {
        n,
        trials,
        seed,
        q95: quantile(0.95),
        q99: quantile(0.99),
        q999: quantile(0.999),
    })
}

/// Expected rescaled range of `w` independent increments (Anis-Lloyd with
/// the Peters small-sample factor); used to center log(R/S) when the bias
/// correction is enabled. The gamma ratio is evaluated through `lgamma`, so
/// no large-w approximation is needed.
pub(crate) fn expected_rescaled_range(w: usize) -> f64 {
    let wf = w as f64;
    let sum: f64 = (1..w).map(|i| ((wf - i as f64) / i as f64).sqrt()).sum();
    let front = libm::exp(libm::lgamma((wf - 1.0) / 2.0) - libm::lgamma(wf / 2.0))
        / std::f64::consts::PI.sqrt();
    (wf - 0.5) / wf * front * sum
}

/// Ordinary least squares of y on x; returns (slope, intercept, r_squared).
fn ols(x: &[f64], y: &[f64]) -> (f64, f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|&v| (v - mx) * (v - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(&a, &b)| (a - mx) * (b - my)).sum();
    let syy: f64 = y.iter().map(|&v| (v - my) * (v - my)).sum();
    let slope = sxy / sxx;
    let r2 = if syy > 0.0 { (sxy * sxy) / (sxx * syy) } else { 1.0 };
    (slope, my - slope * mx, r2)
}

/// Hurst exponent of a log-price path by rescaled-range analysis.
///
/// The increment series is partitioned into disjoint windows for each size
/// in a geometric ladder; each window contributes the range of its
/// mean-adjusted cumulative sum over its standard deviation, and the
/// exponent is the log-log slope of the averaged ratios (centered by the
/// independent-series expectation when `bias_correction` is on). Windows
/// with zero variance are skipped; a window size where every window is
/// degenerate is an error.
pub fn hurst_exponent(log_prices: &[f64], cfg: &HurstConfig) -> Result<HurstResult> {
    if log_prices.len() < 64 {
        return Err(Error::SeriesTooShort {
            need: 64,
            got: log_prices.len(),
        });
    }
    if let Some(i) = log_prices.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue(i));
    }
    if cfg.min_window < 4 || cfg.max_window_divisor < 2 || cfg.ladder_points < 2 {
        return Err(Error::InvalidGrid(cfg.ladder_points));
    }
    let increments: Vec<f64> = log_prices.windows(2).map(|w| w[1] - w[0]).collect();
    let m = increments.len();
    let max_window = m / cfg.max_window_divisor;
    if max_window <= cfg.min_window {
        return Err(Error::SeriesTooShort {
            need: cfg.min_window * cfg.max_window_divisor + 1,
            got: m,
        });
    }

    // Geometric ladder of window sizes, deduplicated after rounding.
    let ratio = (max_window as f64 / cfg.min_window as f64).powf(1.0 / (cfg.ladder_points - 1) as f64);
    let mut window_sizes: Vec<usize> = (0..cfg.ladder_points)
        .map(|i| (cfg.min_window as f64 * ratio.powi(i as i32)).round() as usize)
        .collect();
    window_sizes.dedup();

    let mut rs_values = Vec::with_capacity(window_sizes.len());
    for &w in &window_sizes {
        let mut total = 0.0;
        let mut kept = 0usize;
        for chunk in increments.chunks_exact(w) {
            let mean = chunk.iter().sum::<f64>() / w as f64;
            let var = chunk.iter().map(|&v| (v - mean) * (v - mean)).sum::<f64>() / w as f64;
            if var <= 0.0 {
                continue;
            }
            let (mut cum, mut lo, mut hi) = (0.0f64, 0.0f64, 0.0f64);
            for &v in chunk {
                cum += v - mean;
                lo = lo.min(cum);
                hi = hi.max(cum);
            }
            total += (hi - lo) / var.sqrt();
            kept += 1;
        }
        if kept == 0 {
            return Err(Error::DegenerateWindows { window: w });
        }
        rs_values.push(total / kept as f64);
    }

    let log_w: Vec<f64> = window_sizes.iter().map(|&w| (w as f64).ln()).collect();
    let log_rs: Vec<f64> = if cfg.bias_correction {
        window_sizes
            .iter()
            .zip(&rs_values)
            .map(|(&w, &rs)| rs.ln() - expected_rescaled_range(w).ln())
            .collect()
    } else {
        rs_values.iter().map(|&rs| rs.ln()).collect()
    };
    let (slope, _, r_squared) = ols(&log_w, &log_rs);
    let exponent = if cfg.bias_correction { 0.5 + slope } else { slope };
    if !(exponent > 0.0 && exponent < 1.0) {
        return Err(Error::HurstOutOfRange(exponent));
    }
    Ok(HurstResult {
        exponent,
        window_sizes,
        rs_values,
        r_squared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::XorShift;
    use approx::assert_abs_diff_eq;

    fn kd(values: Vec<f64>, h: f64) -> KernelDensity {
        KernelDensity::new(Sample::new(values).unwrap(), h).unwrap()
    }

    #[test]
    fn prob_positive_matches_closed_forms() {
        // Sign-symmetric sample: exactly one half.
        for h in [0.1, 1.0, 10.0] {
            assert_abs_diff_eq!(prob_positive(&kd(vec![-1.0, 1.0], h)), 0.5, epsilon = 1e-12);
        }
        // Single bump at 1 with h = 1.
        assert_abs_diff_eq!(
            prob_positive(&kd(vec![1.0], 1.0)),
            normal_cdf(1.0),
            epsilon = 1e-15
        );
        // Equals 1 - F(0).
        let est = kd(vec![-0.4, 0.3, 1.7, 2.2], 0.5);
        assert_abs_diff_eq!(prob_positive(&est), 1.0 - est.cdf(0.0), epsilon = 1e-12);
    }

    #[test]
    fn prob_positive_small_h_counts_signs() {
        let values = vec![-2.0, -0.5, 0.0, 0.3, 1.1, 4.0];
        // Strictly positive fraction plus half the mass at exact zeros.
        let expect = (3.0 + 0.5) / 6.0;
        let p = prob_positive(&kd(values, 1e-8));
        assert_abs_diff_eq!(p, expect, epsilon = 1e-9);
    }

    #[test]
    fn prob_positive_decreases_under_negative_shift() {
        let mut rng = XorShift(41);
        let values: Vec<f64> = (0..200).map(|_| rng.next_gaussian()).collect();
        let shifted: Vec<f64> = values.iter().map(|v| v - 0.3).collect();
        let p0 = prob_positive(&kd(values, 0.2));
        let p1 = prob_positive(&kd(shifted, 0.2));
        assert!(p1 < p0);
    }

    #[test]
    fn information_is_zero_for_fair_transitions() {
        // All returns exactly zero: every smoothed sign is 1/2, both
        // conditionals are 1/2, and the information telescopes to zero.
        let s = Sample::new(vec![0.0; 50]).unwrap();
        let r = market_information(&s, 1.0).unwrap();
        assert_abs_diff_eq!(r.pi_pos, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(r.pi_neg, 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(r.info_bits, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(r.p_pos + r.p_neg, 1.0, epsilon = 1e-12);
        assert_eq!(r.lag_length, 1);
    }

    #[test]
    fn alternating_signs_carry_one_bit() {
        let values: Vec<f64> = (0..100).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        let s = Sample::new(values).unwrap();
        let r = market_information(&s, 1e-6).unwrap();
        assert_abs_diff_eq!(r.info_bits, 1.0, epsilon = 1e-6);
        assert!(r.pi_pos < 1e-9);
        assert!(r.pi_neg > 1.0 - 1e-9);
    }

    #[test]
    fn information_is_nonnegative_on_random_series() {
        let mut rng = XorShift(17);
        for trial in 0..20 {
            let n = 20 + (trial * 13) % 80;
            let values: Vec<f64> = (0..n).map(|_| rng.next_gaussian() + 0.1).collect();
            let s = Sample::new(values).unwrap();
            for h in [0.05, 0.3, 2.0] {
                let r = market_information(&s, h).unwrap();
                assert!(r.info_bits >= -1e-9, "I = {}", r.info_bits);
                assert_abs_diff_eq!(r.p_pos + r.p_neg, 1.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn small_bandwidth_matches_counting_limit() {
        let mut rng = XorShift(29);
        let values: Vec<f64> = (0..300).map(|_| rng.next_gaussian() * 0.01).collect();
        let s = Sample::new(values.clone()).unwrap();
        let h = 1e-9 * s.std();
        let smoothed = market_information(&s, h).unwrap().info_bits;
        let signs: Vec<bool> = values.iter().map(|&v| v > 0.0).collect();
        let counted = counting_market_information(&signs).unwrap();
        assert_abs_diff_eq!(smoothed, counted, epsilon = 1e-6);
    }

    #[test]
    fn degenerate_and_short_inputs_error() {
        let s = Sample::new(vec![5.0, 6.0, 7.0, 8.0]).unwrap();
        // All mass on the positive side at tiny h: p_neg underflows.
        assert!(matches!(
            market_information(&s, 1e-9),
            Err(Error::DegenerateSigns { .. })
        ));
        let s = Sample::new(vec![1.0, -1.0]).unwrap();
        assert!(matches!(
            market_information(&s, 1.0),
            Err(Error::SeriesTooShort { need: 3, .. })
        ));
        assert!(market_information(&Sample::new(vec![0.0; 9]).unwrap(), 0.0).is_err());
    }

    #[test]
    fn counting_information_edge_sequences() {
        // One-sided sequence: one certain symbol carries one bit relative to
        // the fair-coin reference, with no conditional division involved.
        let all_up = vec![true; 40];
        assert_abs_diff_eq!(counting_market_information(&all_up).unwrap(), 1.0, epsilon = 1e-12);
        // Perfect alternation is equally informative.
        let alt: Vec<bool> = (0..41).map(|i| i % 2 == 0).collect();
        assert_abs_diff_eq!(counting_market_information(&alt).unwrap(), 1.0, epsilon = 1e-12);
        assert!(counting_market_information(&[true, false]).is_err());
    }

    #[test]
    fn null_bands_are_ordered_and_reproducible() {
        let b = null_bands(80, 1000, 7).unwrap();
        assert!(b.q95 > 0.0);
        assert!(b.q95 <= b.q99 && b.q99 <= b.q999);
        assert_eq!(null_bands(80, 1000, 7).unwrap(), b);
        let other = null_bands(80, 1000, 8).unwrap();
        assert!(other.q95 > 0.0);
        assert!(matches!(
            null_bands(80, 999, 7),
            Err(Error::TooFewTrials { need: 1000, .. })
        ));
        assert!(null_bands(2, 1000, 7).is_err());
        assert_eq!(b.levels()[0], (0.95, b.q95));
    }

    #[test]
    fn expected_rescaled_range_grows_like_sqrt_w() {
        // Asymptotically E[R/S] ~ sqrt(pi w / 2), i.e. E / sqrt(w) tends to
        // about 1.2533 from below; small w sits visibly under the limit.
        let limit = std::f64::consts::FRAC_PI_2.sqrt();
        let at = |w: usize| expected_rescaled_range(w) / (w as f64).sqrt();
        assert!(at(8) < limit);
        assert!(at(4096) > 0.95 * limit && at(4096) < limit);
        // Monotone in w, smooth through moderate sizes: sqrt growth means
        // one step changes E by roughly E / (2w).
        let mut prev = expected_rescaled_range(8);
        for w in 9..600 {
            let e = expected_rescaled_range(w);
            assert!(e > prev, "not monotone at w = {w}");
            assert!((e - prev) / prev < 1.0 / (w - 1) as f64, "jump at w = {w}");
            prev = e;
        }
    }

    /// Random-walk log prices from a seeded generator.
    fn random_walk(n: usize, seed: u64) -> Vec<f64> {
        let mut rng = XorShift(seed);
        let mut path = Vec::with_capacity(n);
        let mut level = 0.0;
        for _ in 0..n {
            level += 0.02 * rng.next_gaussian();
            path.push(level);
        }
        path
    }

    #[test]
    fn hurst_of_random_walk_is_near_half() {
        let cfg = HurstConfig::default();
        let mut estimates: Vec<f64> = (0..9)
            .map(|s| hurst_exponent(&random_walk(2000, 100 + s), &cfg).unwrap().exponent)
            .collect();
        estimates.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let median = estimates[4];
        assert!((median - 0.5).abs() < 0.08, "median H = {median}");
        let r = hurst_exponent(&random_walk(2000, 100), &cfg).unwrap();
        assert_eq!(r.window_sizes.len(), r.rs_values.len());
        // With the bias correction the response is flat for H = 1/2, so its
        // r-squared is small; the raw log-log fit is nearly perfectly linear.
        assert!((0.0..=1.0).contains(&r.r_squared));
        let plain = HurstConfig {
            bias_correction: false,
            ..HurstConfig::default()
        };
        let raw = hurst_exponent(&random_walk(2000, 100), &plain).unwrap();
        assert!(raw.r_squared > 0.98, "raw fit r^2 = {}", raw.r_squared);
        assert!(raw.exponent > r.exponent, "plain R/S should sit above corrected");
        assert!(r.rs_values.iter().all(|&v| v > 0.0));
        // Ladder spans the configured range.
        assert_eq!(r.window_sizes[0], 8);
        assert_eq!(*r.window_sizes.last().unwrap(), 1999 / 4);
    }

    #[test]
    fn hurst_is_affine_invariant() {
        let path = random_walk(500, 3);
        let cfg = HurstConfig::default();
        let base = hurst_exponent(&path, &cfg).unwrap();
        let mapped: Vec<f64> = path.iter().map(|v| 3.5 * v - 11.0).collect();
        let scaled = hurst_exponent(&mapped, &cfg).unwrap();
        assert_abs_diff_eq!(base.exponent, scaled.exponent, epsilon = 1e-9);
        for (a, b) in base.rs_values.iter().zip(&scaled.rs_values) {
            assert_abs_diff_eq!(a, b, epsilon = 1e-9);
        }
    }

    #[test]
    fn hurst_fit_is_reproducible_from_stored_points() {
        let cfg = HurstConfig::default();
        let r = hurst_exponent(&random_walk(1200, 9), &cfg).unwrap();
        let x: Vec<f64> = r.window_sizes.iter().map(|&w| (w as f64).ln()).collect();
        let y: Vec<f64> = r
            .window_sizes
            .iter()
            .zip(&r.rs_values)
            .map(|(&w, &rs)| rs.ln() - expected_rescaled_range(w).ln())
            .collect();
        let (slope, _, r2) = ols(&x, &y);
        assert_abs_diff_eq!(0.5 + slope, r.exponent, epsilon = 1e-12);
        assert_abs_diff_eq!(r2, r.r_squared, epsilon = 1e-12);
    }

    #[test]
    fn hurst_rejects_bad_inputs() {
        let cfg = HurstConfig::default();
        assert!(matches!(
            hurst_exponent(&[0.0; 63], &cfg),
            Err(Error::SeriesTooShort { need: 64, .. })
        ));
        // Constant prices: zero variance in every window.
        assert!(matches!(
            hurst_exponent(&[2.0; 500], &cfg),
            Err(Error::DegenerateWindows { .. })
        ));
        let mut path = random_walk(500, 5);
        path[250] = f64::NAN;
        assert!(matches!(
            hurst_exponent(&path, &cfg),
            Err(Error::NonFiniteValue(250))
        ));
    }
}
