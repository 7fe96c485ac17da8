//! Distances and information functionals of a density estimate.
//!
//! Two statistics drive the complexity-based bandwidth choice:
//!
//! * an equilibrium term: the two-sided Kolmogorov-Smirnov distance between
//!   the smoothed cdf and the empirical cdf of the same observations;
//! * a disequilibrium term: the cumulative Kullback-Leibler divergence
//!   `integral F log(F / G) dx` between the smoothed cdf F and the cdf G of a
//!   maximum-likelihood Gaussian fit.
//!
//! The module also exposes the Shannon differential entropy, the Euclidean
//! divergence from the uniform density, and their product, the LMC-style
//! statistical complexity. Each quadrature-based functional has an `_of`
//! variant that evaluates an arbitrary density or cdf closure on the same
//! rule, useful for analytic reference distributions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kde::KernelDensity;
use crate::kernel::{normal_cdf, normal_pdf};
use crate::quad::{check_interval, trapezoid_uniform, uniform_grid, QuadratureConfig};
use crate::sample::Sample;

/// Floor applied to reference densities inside logarithms; chosen at the edge
/// of the subnormal range so it never masks a genuinely positive value.
const DENSITY_FLOOR: f64 = 1e-300;

/// Largest density mass allowed to fall outside a support interval passed to
/// the entropy and disequilibrium functionals.
const SUPPORT_MASS_SLACK: f64 = 1e-6;

/// A Gaussian reference distribution, usually the maximum-likelihood fit of a
/// sample.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GaussianFit {
    mean: f64,
    std: f64,
}

impl GaussianFit {
    pub fn new(mean: f64, std: f64) -> Result<Self> {
        if !mean.is_finite() {
            return Err(Error::NonFiniteValue(0));
        }
        if !std.is_finite() || std <= 0.0 {
            return Err(Error::InvalidStd(std));
        }
        Ok(GaussianFit { mean, std })
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn std(&self) -> f64 {
        self.std
    }

    pub fn pdf(&self, x: f64) -> f64 {
        normal_pdf((x - self.mean) / self.std) / self.std
    }

    pub fn cdf(&self, x: f64) -> f64 {
        normal_cdf((x - self.mean) / self.std)
    }
}

/// Maximum-likelihood Gaussian fit (mean and divisor-`n` standard deviation).
pub fn fit_gaussian(s: &Sample) -> Result<GaussianFit> {
    s.require_spread()?;
    GaussianFit::new(s.mean(), s.std())
}

/// Two-sided Kolmogorov-Smirnov distance between the estimate's cdf and the
/// empirical cdf of its own sample, evaluated at the observations:
///
/// ```text
/// max_j max( |F(X_j) - #{X_i <= X_j}/n|, |F(X_j) - #{X_i < X_j}/n| )
/// ```
///
/// Both counts are needed because the empirical cdf jumps at each X_j; the
/// supremum over all of R is attained at one of these one-sided limits.
pub fn ks_vs_empirical(kd: &KernelDensity) -> f64 {
    let data = kd.sample().sorted();
    let n = data.len();
    let nf = n as f64;
    let fhat = kd.cdf_sorted(data);
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < n {
        // Run of tied observations: data[i..=j] are equal.
        let mut j = i;
        while j + 1 < n && data[j + 1] == data[i] {
            j += 1;
        }
        let le = (j + 1) as f64 / nf; // #{X_k <= X_i} / n
        let lt = i as f64 / nf; // #{X_k <  X_i} / n
        let f = fhat[i];
        d = d.max((f - le).abs()).max((f - lt).abs());
        i = j + 1;
    }
    d
}

/// Cumulative Kullback-Leibler integrand with the 0 log 0 := 0 convention
/// and the reference cdf floored away from zero. Not clamped from below:
/// the cumulative divergence as defined may be negative.
#[inline]
fn kl_term(f: f64, g: f64) -> f64 {
    if f <= 0.0 {
        0.0
    } else {
        f * (f / g.max(DENSITY_FLOOR)).ln()
    }
}

/// Cumulative Kullback-Leibler divergence `integral F log(F / G) dx` between
/// the estimate's cdf F and the Gaussian reference cdf G, integrated over the
/// configured quadrature window.
pub fn cumulative_kl(kd: &KernelDensity, g: &GaussianFit, quad: &QuadratureConfig) -> Result<f64> {
    quad.validate()?;
    let (lo, hi) = quad.window_for(kd.sample().mean(), kd.sample().std(), kd.bandwidth());
    check_interval(lo, hi)?;
    let grid = uniform_grid(lo, hi, quad.points);
    let f = kd.cdf_sorted(&grid);
    let mut ys = Vec::with_capacity(grid.len());
    for (k, &x) in grid.iter().enumerate() {
        let y = kl_term(f[k], g.cdf(x));
        if !y.is_finite() {
            return Err(Error::NonFiniteIntegrand { x });
        }
        ys.push(y);
    }
    Ok(trapezoid_uniform(&ys, (hi - lo) / (quad.points - 1) as f64))
}

/// [`cumulative_kl`] for an arbitrary cdf closure on an explicit window.
pub fn cumulative_kl_of(
    cdf: impl Fn(f64) -> f64,
    g: &GaussianFit,
    window: (f64, f64),
    points: usize,
) -> Result<f64> {
    let (lo, hi) = window;
    check_interval(lo, hi)?;
    if points < 2 {
        return Err(Error::InvalidGrid(points));
    }
    let grid = uniform_grid(lo, hi, points);
    let mut ys = Vec::with_capacity(points);
    for &x in &grid {
        let y = kl_term(cdf(x), g.cdf(x));
        if !y.is_finite() {
            return Err(Error::NonFiniteIntegrand { x });
        }
        ys.push(y);
    }
    Ok(trapezoid_uniform(&ys, (hi - lo) / (points - 1) as f64))
}

/// Evaluates the estimate's pdf on the support grid after checking that the
/// support really carries the estimate's mass.
fn density_on_support(
    kd: &KernelDensity,
    support: (f64, f64),
    quad: &QuadratureConfig,
) -> Result<(Vec<f64>, f64, f64)> {
    quad.validate()?;
    let (lo, hi) = support;
    check_interval(lo, hi)?;
    let mass = kd.cdf(hi) - kd.cdf(lo);
    if mass < 1.0 - SUPPORT_MASS_SLACK {
        return Err(Error::SupportTooNarrow { lo, hi, mass });
    }
    let grid = uniform_grid(lo, hi, quad.points);
    let f = kd.pdf_sorted(&grid);
    Ok((f, (hi - lo) / (quad.points - 1) as f64, hi - lo))
}

#[inline]
fn entropy_term(f: f64) -> f64 {
    if f <= 0.0 {
        0.0
    } else {
        -f * f.ln()
    }
}

/// Shannon differential entropy `-integral f log f` of the estimate over a
/// support interval that must hold at least `1 - 1e-6` of its mass.
pub fn shannon_entropy(
    kd: &KernelDensity,
    support: (f64, f64),
    quad: &QuadratureConfig,
) -> Result<f64> {
    let (f, step, _) = density_on_support(kd, support, quad)?;
    entropy_from_values(&f, step, support.0)
}

/// [`shannon_entropy`] for an arbitrary pdf closure (no mass check).
pub fn shannon_entropy_of(
    pdf: impl Fn(f64) -> f64,
    support: (f64, f64),
    points: usize,
) -> Result<f64> {
    let (lo, hi) = support;
    check_interval(lo, hi)?;
    if points < 2 {
        return Err(Error::InvalidGrid(points));
    }
    let f: Vec<f64> = uniform_grid(lo, hi, points).into_iter().map(pdf).collect();
    entropy_from_values(&f, (hi - lo) / (points - 1) as f64, lo)
}

fn entropy_from_values(f: &[f64], step: f64, lo: f64) -> Result<f64> {
    let mut ys = Vec::with_capacity(f.len());
    for (k, &v) in f.iter().enumerate() {
        let y = entropy_term(v);
        if !y.is_finite() {
            return Err(Error::NonFiniteIntegrand {
                x: lo + step * k as f64,
            });
        }
        ys.push(y);
    }
    Ok(trapezoid_uniform(&ys, step))
}

/// Euclidean (L2) divergence `integral (f - 1/(b - a))^2` of the estimate
/// from the uniform density on the support interval.
pub fn euclidean_divergence_from_uniform(
    kd: &KernelDensity,
    support: (f64, f64),
    quad: &QuadratureConfig,
) -> Result<f64> {
    let (f, step, width) = density_on_support(kd, support, quad)?;
    let u = 1.0 / width;
    let ys: Vec<f64> = f.iter().map(|&v| (v - u) * (v - u)).collect();
    Ok(trapezoid_uniform(&ys, step))
}

/// [`euclidean_divergence_from_uniform`] for an arbitrary pdf closure.
pub fn euclidean_divergence_from_uniform_of(
    pdf: impl Fn(f64) -> f64,
    support: (f64, f64),
    points: usize,
) -> Result<f64> {
    let (lo, hi) = support;
    check_interval(lo, hi)?;
    if points < 2 {
        return Err(Error::InvalidGrid(points));
    }
    let u = 1.0 / (hi - lo);
    let ys: Vec<f64> = uniform_grid(lo, hi, points)
        .into_iter()
        .map(|x| {
            let d = pdf(x) - u;
            d * d
        })
        .collect();
    Ok(trapezoid_uniform(&ys, (hi - lo) / (points - 1) as f64))
}

/// LMC-style statistical complexity: entropy times Euclidean divergence from
/// uniform, both on the same support grid. Reported as-is; for strongly
/// peaked estimates the entropy is negative and so is the product.
pub fn lmc_complexity(
    kd: &KernelDensity,
    support: (f64, f64),
    quad: &QuadratureConfig,
) -> Result<f64> {
    let (f, step, width) = density_on_support(kd, support, quad)?;
    let h = entropy_from_values(&f, step, support.0)?;
    let u = 1.0 / width;
    let d_ys: Vec<f64> = f.iter().map(|&v| (v - u) * (v - u)).collect();
    let d = trapezoid_uniform(&d_ys, step);
    Ok(h * d)
}
