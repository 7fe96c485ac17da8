//! The scaled-complexity bandwidth criterion.
//!
//! For a sample with ML Gaussian fit G, each candidate bandwidth h is scored
//! by two statistics of the kernel estimate:
//!
//! * `E_h`: the Kolmogorov-Smirnov distance from the empirical cdf (an
//!   equilibrium measure, largest at the disequilibrium bandwidth `h_p`);
//! * `P_h`: the cumulative Kullback-Leibler divergence from G (a
//!   disequilibrium measure, smallest at `h_p`).
//!
//! Bandwidths above `h_p = argmin P_h` oversmooth (they only move the
//! estimate further from the data), so the admissible range is `(0, h_p]`.
//! On that range both statistics are scaled by their maxima and combined as
//!
//! ```text
//! C_h = min(E_h / max E, P_h / max P)
//! ```
//!
//! which is small at both ends (E vanishes as h -> 0, P/max P is smallest at
//! h_p) and is maximized where the two scaled curves cross. The selected
//! bandwidth `h_c = argmax C_h` balances closeness to the data against
//! distance from the equilibrium Gaussian.

use crate::bandwidth::{BandwidthResult, SelectionMethod, TracePoint};
use crate::divergence::{cumulative_kl, fit_gaussian, ks_vs_empirical, GaussianFit};
use crate::error::{Error, Result};
use crate::kde::KernelDensity;
use crate::quad::QuadratureConfig;
use crate::sample::Sample;
use crate::search::{geometric_grid, golden_minimize, ternary_maximize, SearchConfig};

/// The complexity curve tabulated on a geometric bandwidth grid.
///
/// The grid covers `(h_min, h_p]`; entries with `beyond_hp[i] == true` are an
/// optional plotting extension past `h_p` and are never selectable. `c_values`
/// are scaled by the maxima of `E` and `P` over the admissible range only, so
/// extension values may exceed 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityCurve {
    pub grid: Vec<f64>,
    pub e_values: Vec<f64>,
    pub p_values: Vec<f64>,
    pub c_values: Vec<f64>,
    pub beyond_hp: Vec<bool>,
    pub h_p: f64,
    pub e_max: f64,
    pub p_max: f64,
    /// Grid argmax of `C` refined by a local ternary pass.
    pub h_c: f64,
    /// Complexity at `h_c`; at least the tabulated maximum.
    pub c_at_h_c: f64,
}

impl ComplexityCurve {
    /// Number of admissible grid points (those not flagged `beyond_hp`).
    pub fn admissible_len(&self) -> usize {
        self.beyond_hp.iter().filter(|&&b| !b).count()
    }
}

/// Equilibrium statistic: KS distance between the smoothed and empirical cdf.
pub fn e_statistic(s: &Sample, h: f64) -> Result<f64> {
    Ok(ks_vs_empirical(&KernelDensity::new(s.clone(), h)?))
}

/// Disequilibrium statistic: cumulative KL divergence from the ML Gaussian.
pub fn p_statistic(s: &Sample, h: f64, quad: &QuadratureConfig) -> Result<f64> {
    let g = fit_gaussian(s)?;
    cumulative_kl(&KernelDensity::new(s.clone(), h)?, &g, quad)
}

/// Shared evaluation state for repeated E/P queries on one sample.
struct Stats<'a> {
    s: &'a Sample,
    g: GaussianFit,
    quad: &'a QuadratureConfig,
}

impl<'a> Stats<'a> {
    fn new(s: &'a Sample, quad: &'a QuadratureConfig) -> Result<Self> {
        Ok(Stats {
            s,
            g: fit_gaussian(s)?,
            quad,
        })
    }

    fn e(&self, h: f64) -> Result<f64> {
        Ok(ks_vs_empirical(&KernelDensity::new(self.s.clone(), h)?))
    }

    fn p(&self, h: f64) -> Result<f64> {
        cumulative_kl(&KernelDensity::new(self.s.clone(), h)?, &self.g, self.quad)
    }
}

/// The disequilibrium bandwidth `h_p = argmin P_h`, located on a coarse
/// geometric grid over `[h_min_factor * sigma, span_factor * range]` and
/// refined by golden section. A minimum on either boundary of the range is
/// unbracketable and is reported as an error.
pub fn find_h_p(s: &Sample, cfg: &SearchConfig) -> Result<f64> {
    s.require_spread()?;
    cfg.validate()?;
    let stats = Stats::new(s, &cfg.quad)?;
    let lo = cfg.h_min_factor * s.std();
    let hi = cfg.span_factor * s.range();
    let grid = geometric_grid(lo, hi, cfg.coarse_points)?;
    let mut best = 0usize;
    let mut best_p = f64::INFINITY;
    for (i, &h) in grid.iter().enumerate() {
        let p = stats.p(h)?;
        if !p.is_finite() {
            return Err(Error::NonFiniteObjective { h });
        }
        if p < best_p {
            best = i;
            best_p = p;
        }
    }
    if best == 0 || best == grid.len() - 1 {
        return Err(Error::BoundaryOptimum {
            side: if best == 0 { "lower" } else { "upper" },
            lo,
            hi,
        });
    }
    let (h_p, _) = golden_minimize(
        |h| stats.p(h),
        grid[best - 1],
        grid[best + 1],
        cfg.golden_rel_tol,
    )?;
    Ok(h_p)
}

/// Scaled complexity `min(E_h / e_max, P_h / p_max)` at a single bandwidth,
/// for scaling maxima taken from a tabulated curve. Values at bandwidths
/// beyond `h_p` are meaningful for reporting and may exceed 1.
pub fn complexity_at(
    s: &Sample,
    h: f64,
    e_max: f64,
    p_max: f64,
    quad: &QuadratureConfig,
) -> Result<f64> {
    if !(e_max.is_finite() && p_max.is_finite()) || e_max <= 0.0 || p_max <= 0.0 {
        return Err(Error::InvalidScaling { e_max, p_max });
    }
    let stats = Stats::new(s, quad)?;
    Ok((stats.e(h)? / e_max).min(stats.p(h)? / p_max))
}

/// Tabulates E, P and scaled complexity on a geometric grid over
/// `(h_min, h_p]`, locates the complexity bandwidth, and optionally extends
/// the grid past `h_p` for plotting.
pub fn build_complexity_curve(s: &Sample, cfg: &SearchConfig) -> Result<ComplexityCurve> {
    let h_p = find_h_p(s, cfg)?;
    let stats = Stats::new(s, &cfg.quad)?;
    let h_min = cfg.curve_h_min_factor * s.std();
    let mut grid = geometric_grid(h_min, h_p, cfg.curve_points)?;
    let admissible = grid.len();
    if cfg.extend_points > 0 {
        let ext = geometric_grid(h_p, cfg.extend_factor * h_p, cfg.extend_points + 1)?;
        grid.extend_from_slice(&ext[1..]);
    }
    let mut e_values = Vec::with_capacity(grid.len());
    let mut p_values = Vec::with_capacity(grid.len());
    for &h in &grid {
        let e = stats.e(h)?;
        let p = stats.p(h)?;
        if !e.is_finite() || !p.is_finite() {
            return Err(Error::NonFiniteObjective { h });
        }
        e_values.push(e);
        p_values.push(p);
    }
    let e_max = e_values[..admissible].iter().cloned().fold(f64::MIN, f64::max);
    let p_max = p_values[..admissible].iter().cloned().fold(f64::MIN, f64::max);
    if !(e_max.is_finite() && p_max.is_finite()) || e_max <= 0.0 || p_max <= 0.0 {
        return Err(Error::InvalidScaling { e_max, p_max });
    }
    let c_values: Vec<f64> = e_values
        .iter()
        .zip(&p_values)
        .map(|(&e, &p)| (e / e_max).min(p / p_max))
        .collect();
    let beyond_hp: Vec<bool> = (0..grid.len()).map(|i| i >= admissible).collect();

    // Locate and refine the complexity maximum on the admissible range.
    let mut best = 0usize;
    for (i, &c) in c_values[..admissible].iter().enumerate() {
        if c > c_values[best] {
            best = i;
        }
    }
    let bracket_lo = grid[best.saturating_sub(1)];
    let bracket_hi = grid[(best + 1).min(admissible - 1)];
    let (mut h_c, mut c_at_h_c) = (grid[best], c_values[best]);
    if bracket_lo < bracket_hi {
        let complexity = |h: f64| Ok((stats.e(h)? / e_max).min(stats.p(h)? / p_max));
        let (h_ref, c_ref) =
            ternary_maximize(complexity, bracket_lo, bracket_hi, cfg.ternary_rel_tol)?;
        if c_ref > c_at_h_c {
            h_c = h_ref;
            c_at_h_c = c_ref;
        }
    }
    Ok(ComplexityCurve {
        grid,
        e_values,
        p_values,
        c_values,
        beyond_hp,
        h_p,
        e_max,
        p_max,
        h_c,
        c_at_h_c,
    })
}

/// The complexity bandwidth `h_c = argmax C_h` over `(0, h_p]`.
pub fn select_h_c(s: &Sample, cfg: &SearchConfig) -> Result<BandwidthResult> {
    let curve = build_complexity_curve(s, cfg)?;
    let mut best = 0usize;
    for i in 0..curve.admissible_len() {
        if curve.c_values[i] > curve.c_values[best] {
            best = i;
        }
    }
    Ok(BandwidthResult {
        method: SelectionMethod::Complexity,
        bandwidth: curve.h_c,
        objective: curve.c_at_h_c,
        trace: vec![
            TracePoint {
                h: curve.grid[best],
                objective: curve.c_values[best],
            },
            TracePoint {
                h: curve.h_c,
                objective: curve.c_at_h_c,
            },
        ],
    })
}
