//! Shared helpers for integration tests: an independent fractional-Brownian
//! path simulator (Cholesky factorization of the increment covariance) and
//! assorted sampling utilities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Cholesky factor of the covariance of fractional Gaussian noise with a
/// given Hurst exponent, reusable across seeds.
pub struct FgnCholesky {
    n: usize,
    /// Row-major packed lower triangle: row i occupies i+1 entries.
    l: Vec<f64>,
}

impl FgnCholesky {
    pub fn new(n: usize, hurst: f64) -> Self {
        assert!(n >= 2 && hurst > 0.0 && hurst < 1.0);
        let two_h = 2.0 * hurst;
        // Autocovariance of unit-variance fGn at lag k.
        let gamma = |k: usize| -> f64 {
            let k = k as f64;
            0.5 * ((k + 1.0).powf(two_h) - 2.0 * k.powf(two_h) + (k - 1.0).abs().powf(two_h))
        };
        let idx = |i: usize, j: usize| i * (i + 1) / 2 + j;
        let mut l = vec![0.0f64; n * (n + 1) / 2];
        for i in 0..n {
            for j in 0..=i {
                let mut sum = gamma(i - j);
                for k in 0..j {
                    sum -= l[idx(i, k)] * l[idx(j, k)];
                }
                if i == j {
                    assert!(sum > 0.0, "covariance lost positive definiteness");
                    l[idx(i, j)] = sum.sqrt();
                } else {
                    l[idx(i, j)] = sum / l[idx(j, j)];
                }
            }
        }
        FgnCholesky { n, l }
    }

    /// One fBm path (cumulative sum of correlated increments) of length
    /// `n + 1` starting at zero, deterministic in the seed.
    pub fn path(&self, scale: f64, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z: Vec<f64> = (0..self.n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let mut path = Vec::with_capacity(self.n + 1);
        let mut level = 0.0;
        path.push(level);
        let mut row = 0usize;
        for i in 0..self.n {
            let mut inc = 0.0;
            for (k, &zk) in z[..=i].iter().enumerate() {
                inc += self.l[row + k] * zk;
            }
            row += i + 1;
            level += scale * inc;
            path.push(level);
        }
        path
    }
}

/// Gaussian random-walk log prices of the given length.
pub fn random_walk(n: usize, scale: f64, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut level = 0.0;
    (0..n)
        .map(|_| {
            let z: f64 = rng.sample(StandardNormal);
            level += scale * z;
            level
        })
        .collect()
}

/// Standard normal draws from a seeded generator.
pub fn gaussian_values(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
}

/// Uniform(0,1) draws from a seeded generator.
pub fn uniform_values(n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| rng.gen::<f64>()).collect()
}

/// Median of a list (not required to be sorted).
pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if v.len() % 2 == 1 {
        v[v.len() / 2]
    } else {
        0.5 * (v[v.len() / 2 - 1] + v[v.len() / 2])
    }
}
