//! Validated observation vectors.

use crate::error::{Error, Result};

/// A finite, nonempty vector of observations.
///
/// Construction checks finiteness only; operations that need a positive
/// spread (selectors, Gaussian fits) call [`Sample::require_spread`] and
/// reject degenerate input themselves, so that pointwise estimator queries
/// remain usable on tiny or constant samples.
///
/// The standard deviation is the maximum-likelihood one (divisor `n`),
/// matching the Gaussian fit used by the divergence statistics.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
    sorted: Vec<f64>,
    mean: f64,
    std: f64,
}

impl Sample {
    /// Validates and wraps raw observations, preserving their order.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let mut sorted = values.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("values are finite"));
        Ok(Sample {
            values,
            sorted,
            mean,
            std: var.sqrt(),
        })
    }

    /// Observations in their original order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Observations sorted ascending.
    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty input
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Maximum-likelihood standard deviation (divisor `n`).
    pub fn std(&self) -> f64 {
        self.std
    }

    pub fn min(&self) -> f64 {
        self.sorted[0]
    }

    pub fn max(&self) -> f64 {
        self.sorted[self.sorted.len() - 1]
    }

    pub fn range(&self) -> f64 {
        self.max() - self.min()
    }

    /// Errors unless the sample has at least two observations and a strictly
    /// positive standard deviation.
    pub fn require_spread(&self) -> Result<()> {
        if self.len() < 2 || self.std <= 0.0 {
            return Err(Error::DegenerateSample {
                n: self.len(),
                std: self.std,
            });
        }
        Ok(())
    }
}
