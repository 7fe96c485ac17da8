//! Composite trapezoid quadrature on uniform grids.

use crate::error::{Error, Result};
use serde::Serialize;

/// Grid resolution and integration window for the quadrature-based
/// functionals (cumulative divergence, entropy, disequilibrium).
///
/// The window defaults to `mean +- window_sigmas * (std + h)`, wide enough
/// that a Gaussian-kernel estimate carries less than 1e-20 of its mass
/// outside; an explicit window overrides it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureConfig {
    /// Number of grid nodes (trapezoid panels + 1).
    pub points: usize,
    /// Half-width of the default window in units of `std + h`.
    pub window_sigmas: f64,
    /// Explicit integration window; `None` selects the default.
    pub window: Option<(f64, f64)>,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            points: 4001,
            window_sigmas: 10.0,
            window: None,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2 {
            return Err(Error::InvalidGrid(self.points));
        }
        if !self.window_sigmas.is_finite() || self.window_sigmas <= 0.0 {
            return Err(Error::InvalidInterval {
                lo: -self.window_sigmas,
                hi: self.window_sigmas,
            });
        }
        if let Some((lo, hi)) = self.window {
            check_interval(lo, hi)?;
        }
        Ok(())
    }

    /// Integration window for a kernel estimate with the given sample moments
    /// and bandwidth.
    pub fn window_for(&self, mean: f64, std: f64, h: f64) -> (f64, f64) {
        match self.window {
            Some(w) => w,
            None => {
                let half = self.window_sigmas * (std + h);
                (mean - half, mean + half)
            }
        }
    }
}

/// Errors unless `[lo, hi]` is a finite, nonempty interval.
pub(crate) fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(Error::InvalidInterval { lo, hi });
    }
    Ok(())
}

/// `n` equally spaced nodes from `lo` to `hi` inclusive.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    debug_assert!(n >= 2);
    let step = (hi - lo) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo + step * i as f64
            }
        })
        .collect()
}

/// Composite trapezoid rule over already-evaluated ordinates on a uniform
/// grid with the given step.
pub fn trapezoid_uniform(ys: &[f64], step: f64) -> f64 {
    debug_assert!(ys.len() >= 2);
    let inner: f64 = ys[1..ys.len() - 1].iter().sum();
    step * (0.5 * (ys[0] + ys[ys.len() - 1]) + inner)
}

/// Composite trapezoid rule for a function on `[lo, hi]` with `n` nodes.
pub fn trapezoid(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let ys: Vec<f64> = uniform_grid(lo, hi, n).into_iter().map(f).collect();
    trapezoid_uniform(&ys, (hi - lo) / (n - 1) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn integrates_polynomials() {
        // Trapezoid is exact for affine functions.
        assert_abs_diff_eq!(trapezoid(|x| 2.0 * x + 1.0, 0.0, 3.0, 11), 12.0, epsilon = 1e-12);
        // Quadratic has O(step^2) error.
        assert_abs_diff_eq!(trapezoid(|x| x * x, 0.0, 1.0, 100_001), 1.0 / 3.0, epsilon = 1e-9);
    }

    #[test]
    fn grid_hits_endpoints() {
        let g = uniform_grid(-1.0, 2.0, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], -1.0);
        assert_eq!(g[6], 2.0);
        let steps: Vec<f64> = g.windows(2).map(|w| w[1] - w[0]).collect();
        for s in steps {
            assert_abs_diff_eq!(s, 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn default_window_tracks_bandwidth() {
        let q = QuadratureConfig::default();
        let (lo, hi) = q.window_for(1.0, 2.0, 0.5);
        assert_abs_diff_eq!(lo, 1.0 - 25.0, epsilon = 1e-12);
        assert_abs_diff_eq!(hi, 1.0 + 25.0, epsilon = 1e-12);
        let explicit = QuadratureConfig {
            window: Some((-3.0, 3.0)),
            ..QuadratureConfig::default()
        };
        assert_eq!(explicit.window_for(1.0, 2.0, 0.5), (-3.0, 3.0));
    }

    #[test]
    fn validation_rejects_bad_configs() {
        assert!(QuadratureConfig { points: 1, ..Default::default() }.validate().is_err());
        assert!(QuadratureConfig {
            window: Some((2.0, 2.0)),
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(QuadratureConfig::default().validate().is_ok());
    }
}
