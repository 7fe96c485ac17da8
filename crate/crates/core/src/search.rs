//! Bandwidth-grid construction and one-dimensional refinement.
//!
//! Every selector in the crate scans a geometric bandwidth grid first and
//! then, where the objective is smooth, refines the best cell with a
//! golden-section or ternary pass. Grid endpoints are data-driven so that
//! the searches are equivariant under affine rescaling of the sample.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad::QuadratureConfig;

/// Grid sizes, search-range factors and refinement tolerances shared by the
/// bandwidth selectors.
///
/// Range conventions (`sigma` is the ML standard deviation of the sample):
///
/// * disequilibrium minimum `h_p`: geometric grid of `coarse_points` on
///   `[h_min_factor * sigma, span_factor * range]`;
/// * complexity curve: `curve_points` on `(curve_h_min_factor * sigma, h_p]`,
///   optionally extended past `h_p` by `extend_points` up to
///   `extend_factor * h_p` (extension points are flagged, not selectable);
/// * likelihood and PIT selectors: `selector_points` on
///   `[h_min_factor * sigma, selector_span_sigmas * sigma]`.
///
/// The curve grid starts lower than the searches: near `1e-3 * sigma` the
/// Kolmogorov-Smirnov term still feels neighbour overlap (at n = 1000 about a
/// third of the inter-point gaps are smaller), so the curve must reach down to
/// about `1e-4 * sigma` before its left end settles at the h -> 0 limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub coarse_points: usize,
    pub curve_points: usize,
    pub extend_points: usize,
    pub extend_factor: f64,
    pub h_min_factor: f64,
    pub curve_h_min_factor: f64,
    pub span_factor: f64,
    pub selector_points: usize,
    pub selector_span_sigmas: f64,
    pub golden_rel_tol: f64,
    pub ternary_rel_tol: f64,
    pub quad: QuadratureConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coarse_points: 200,
            curve_points: 500,
            extend_points: 0,
            extend_factor: 2.0,
            h_min_factor: 1e-3,
            curve_h_min_factor: 1e-4,
            span_factor: 2.0,
            selector_points: 200,
            selector_span_sigmas: 5.0,
            golden_rel_tol: 1e-4,
            ternary_rel_tol: 1e-3,
            quad: QuadratureConfig::default(),
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        for &points in &[self.coarse_points, self.curve_points, self.selector_points] {
            if points < 3 {
                return Err(Error::InvalidGrid(points));
            }
        }
        for &v in &[
            self.extend_factor,
            self.h_min_factor,
            self.curve_h_min_factor,
            self.span_factor,
            self.selector_span_sigmas,
            self.golden_rel_tol,
            self.ternary_rel_tol,
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidInterval { lo: v, hi: v });
            }
        }
        self.quad.validate()
    }
}

/// `n` geometrically spaced points from `lo` to `hi` inclusive (`lo > 0`).
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if !(lo.is_finite() && hi.is_finite()) || lo <= 0.0 || hi <= lo {
        return Err(Error::InvalidInterval { lo, hi });
    }
    if n < 2 {
        return Err(Error::InvalidGrid(n));
    }
    let log_ratio = (hi / lo).ln();
    Ok((0..n)
        .map(|i| {
            if i == n - 1 {
                hi
            } else {
                lo * (log_ratio * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect())
}

const INV_PHI: f64 = 0.618_033_988_749_894_9; // 1 / golden ratio
const MAX_REFINE_ITERS: usize = 200;

/// Golden-section minimization of a unimodal objective on `[a, b]`, stopping
/// once the bracket width falls below `rel_tol` times the bracket midpoint.
/// Returns the best evaluated point and its objective.
pub(crate) fn golden_minimize(
    mut f: impl FnMut(f64) -> Result<f64>,
    mut a: f64,
    mut b: f64,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    debug_assert!(a < b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..MAX_REFINE_ITERS {
        if (b - a) <= rel_tol * 0.5 * (a.abs() + b.abs()) {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc <= fd { (c, fc) } else { (d, fd) })
}

/// Ternary maximization of a unimodal objective on `[a, b]` with the same
/// relative stopping rule as [`golden_minimize`].
pub(crate) fn ternary_maximize(
    mut f: impl FnMut(f64) -> Result<f64>,
    mut a: f64,
    mut b: f64,
    rel_tol: f64,
) -> Result<(f64, f64)> {
    debug_assert!(a < b);
    for _ in 0..MAX_REFINE_ITERS {
        if (b - a) <= rel_tol * 0.5 * (a.abs() + b.abs()) {
            break;
        }
        let m1 = a + (b - a) / 3.0;
        let m2 = b - (b - a) / 3.0;
        if f(m1)? < f(m2)? {
            a = m1;
        } else {
            b = m2;
        }
    }
    let x = 0.5 * (a + b);
    Ok((x, f(x)?))
}
