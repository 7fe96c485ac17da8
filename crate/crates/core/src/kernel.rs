//! Smoothing kernels.
//!
//! Only the Gaussian kernel is supported; the enumeration leaves room for
//! other second-order kernels without touching the estimator code, since
//! everything downstream consumes a kernel only through [`KernelSpec`].

use std::f64::consts::{FRAC_1_SQRT_2, PI};

/// 1 / sqrt(2 pi), the Gaussian density normalization.
pub(crate) const FRAC_1_SQRT_2PI: f64 = 0.3989422804014327;

/// Standard normal density.
#[inline]
pub(crate) fn normal_pdf(z: f64) -> f64 {
    FRAC_1_SQRT_2PI * (-0.5 * z * z).exp()
}

/// Standard normal cdf via the complementary error function.
#[inline]
pub(crate) fn normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z * FRAC_1_SQRT_2)
}

/// Kernel families understood by the estimator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelKind {
    Gaussian,
}

/// A smoothing kernel together with the two constants the AMISE machinery
/// needs: the roughness R(K) = integral of K^2 and the second moment mu_2(K).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    kind: KernelKind,
}

impl KernelSpec {
    /// The standard Gaussian kernel.
    pub fn gaussian() -> Self {
        KernelSpec {
            kind: KernelKind::Gaussian,
        }
    }

    pub fn kind(&self) -> KernelKind {
        self.kind
    }

    /// Kernel density K(u).
    #[inline]
    pub fn pdf(&self, u: f64) -> f64 {
        match self.kind {
            KernelKind::Gaussian => normal_pdf(u),
        }
    }

    /// Integrated kernel, the cdf of K.
    #[inline]
    pub fn cdf(&self, u: f64) -> f64 {
        match self.kind {
            KernelKind::Gaussian => normal_cdf(u),
        }
    }

    /// Roughness R(K) = integral of K(u)^2 du; 1 / (2 sqrt(pi)) for the
    /// Gaussian kernel.
    pub fn roughness(&self) -> f64 {
        match self.kind {
            KernelKind::Gaussian => 0.5 / PI.sqrt(),
        }
    }

    /// Second moment mu_2(K) = integral of u^2 K(u) du; 1 for the Gaussian
    /// kernel.
    pub fn second_moment(&self) -> f64 {
        match self.kind {
            KernelKind::Gaussian => 1.0,
        }
    }
}

impl Default for KernelSpec {
    fn default() -> Self {
        KernelSpec::gaussian()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn kernel_pdf_integrates_to_one() {
        // Trapezoid over [-10, 10]; the mass outside is ~1e-23.
        let k = KernelSpec::gaussian();
        let n = 20_000;
        let (lo, hi) = (-10.0, 10.0);
        let step = (hi - lo) / n as f64;
        let mut sum = 0.5 * (k.pdf(lo) + k.pdf(hi));
        for i in 1..n {
            sum += k.pdf(lo + step * i as f64);
        }
        assert_abs_diff_eq!(sum * step, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn kernel_cdf_limits_and_symmetry() {
        let k = KernelSpec::gaussian();
        assert_abs_diff_eq!(k.cdf(0.0), 0.5, epsilon = 1e-15);
        assert!(k.cdf(-40.0) == 0.0);
        assert!(k.cdf(40.0) == 1.0);
        for &z in &[0.1, 0.7, 1.3, 2.9, 5.0] {
            assert_abs_diff_eq!(k.cdf(z) + k.cdf(-z), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn kernel_cdf_matches_integrated_pdf() {
        let k = KernelSpec::gaussian();
        for &z in &[-2.0, -0.5, 0.3, 1.7] {
            let n = 40_000;
            let lo = -12.0;
            let step = (z - lo) / n as f64;
            let mut sum = 0.5 * (k.pdf(lo) + k.pdf(z));
            for i in 1..n {
                sum += k.pdf(lo + step * i as f64);
            }
            assert_abs_diff_eq!(sum * step, k.cdf(z), epsilon = 1e-8);
        }
    }

    #[test]
    fn gaussian_constants() {
        let k = KernelSpec::gaussian();
        assert_abs_diff_eq!(k.roughness(), 0.28209479177387814, epsilon = 1e-16);
        assert_eq!(k.second_moment(), 1.0);
        // R(K) really is the integral of K^2.
        let n = 20_000;
        let (lo, hi) = (-10.0, 10.0);
        let step = (hi - lo) / n as f64;
        let sq = |u: f64| k.pdf(u) * k.pdf(u);
        let mut sum = 0.5 * (sq(lo) + sq(hi));
        for i in 1..n {
            sum += sq(lo + step * i as f64);
        }
        assert_abs_diff_eq!(sum * step, k.roughness(), epsilon = 1e-12);
    }
}
