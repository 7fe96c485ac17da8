use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use kde_complexity::{QuadratureConfig, SearchConfig};

/// Bandwidth selectors exposed on the command line, in the reporting order
/// used throughout (plug-in, PIT, likelihood, complexity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// AMISE plug-in
    Amise,
    /// PIT copula uniformity on validation data
    Pit,
    /// Validation log-likelihood
    Lik,
    /// Complexity maximization
    C,
}

impl Method {
    pub fn needs_validation(self) -> bool {
        matches!(self, Method::Pit | Method::Lik)
    }
}

/// Deduplicates while fixing the reporting order, so the output does not
/// depend on how the flag value was spelled.
pub fn canonical_methods(requested: &[Method]) -> Vec<Method> {
    [Method::Amise, Method::Pit, Method::Lik, Method::C]
        .into_iter()
        .filter(|m| requested.contains(m))
        .collect()
}

/// An evaluation grid written as `LO:HI:N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl GridSpec {
    /// The linear grid, with both endpoints hit exactly.
    pub fn linear(&self) -> Vec<f64> {
        let step = (self.hi - self.lo) / (self.n - 1) as f64;
        (0..self.n)
            .map(|i| {
                if i == self.n - 1 {
                    self.hi
                } else {
                    self.lo + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("expected LO:HI:N, got {text:?}"));
        }
        let lo: f64 = parts[0]
            .parse()
            .map_err(|e| format!("bad grid start {:?}: {e}", parts[0]))?;
        let hi: f64 = parts[1]
            .parse()
            .map_err(|e| format!("bad grid end {:?}: {e}", parts[1]))?;
        let n: usize = parts[2]
            .parse()
            .map_err(|e| format!("bad grid size {:?}: {e}", parts[2]))?;
        if !(lo.is_finite() && hi.is_finite()) || hi <= lo || n < 2 {
            return Err(format!(
                "grid needs finite LO < HI and N >= 2, got {text:?}"
            ));
        }
        Ok(GridSpec { lo, hi, n })
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.n)
    }
}

/// Sample input shared by the bandwidth commands. The CSV format is sniffed
/// from the header: a single `value` column, `date,return` rows, or dated
/// closing prices under the configured column names.
#[derive(Debug, clap::Args, Serialize)]
pub struct InputFlags {
    /// Input CSV: a value column, date,return rows, or dated closing prices
    #[arg(long)]
    pub input: PathBuf,

    /// Restrict a dated input to one calendar year
    #[arg(long)]
    pub year: Option<i32>,

    /// Date column name for price inputs
    #[arg(long, default_value = "Date")]
    pub date_column: String,

    /// Price column name for price inputs
    #[arg(long, default_value = "Close")]
    pub price_column: String,

    /// Derive simple instead of log returns from price inputs
    #[arg(long)]
    pub simple_returns: bool,
}

/// Search-range and resolution knobs shared by every selector, mirroring the
/// library defaults. Curve grid size is a per-command flag.
#[derive(Debug, clap::Args, Serialize)]
pub struct SearchFlags {
    /// Coarse grid size of the disequilibrium (h_p) search
    #[arg(long, default_value_t = SearchConfig::default().coarse_points)]
    pub coarse_points: usize,

    /// Grid size of the likelihood and PIT searches
    #[arg(long, default_value_t = SearchConfig::default().selector_points)]
    pub selector_points: usize,

    /// Lower search endpoint as a multiple of the sample deviation
    #[arg(long, default_value_t = SearchConfig::default().h_min_factor)]
    pub h_min_factor: f64,

    /// Lower curve endpoint as a multiple of the sample deviation
    #[arg(long, default_value_t = SearchConfig::default().curve_h_min_factor)]
    pub curve_h_min_factor: f64,

    /// Upper h_p search endpoint as a multiple of the sample range
    #[arg(long, default_value_t = SearchConfig::default().span_factor)]
    pub span_factor: f64,

    /// Upper selector endpoint as a multiple of the sample deviation
    #[arg(long, default_value_t = SearchConfig::default().selector_span_sigmas)]
    pub selector_span_sigmas: f64,

    /// Relative tolerance of golden-section refinement
    #[arg(long, default_value_t = SearchConfig::default().golden_rel_tol)]
    pub golden_tol: f64,

    /// Relative tolerance of the ternary complexity refinement
    #[arg(long, default_value_t = SearchConfig::default().ternary_rel_tol)]
    pub ternary_tol: f64,

    /// Trapezoid nodes of the divergence integrals
    #[arg(long, default_value_t = QuadratureConfig::default().points)]
    pub quad_points: usize,

    /// Integration window half-width in units of sigma + h
    #[arg(long, default_value_t = QuadratureConfig::default().window_sigmas)]
    pub window_sigmas: f64,
}

impl SearchFlags {
    pub fn to_config(
        &self,
        curve_points: usize,
        extend_points: usize,
        extend_factor: f64,
    ) -> SearchConfig {
        SearchConfig {
            coarse_points: self.coarse_points,
            curve_points,
            extend_points,
            extend_factor,
            h_min_factor: self.h_min_factor,
            curve_h_min_factor: self.curve_h_min_factor,
            span_factor: self.span_factor,
            selector_points: self.selector_points,
            selector_span_sigmas: self.selector_span_sigmas,
            golden_rel_tol: self.golden_tol,
            ternary_rel_tol: self.ternary_tol,
            quad: QuadratureConfig {
                points: self.quad_points,
                window_sigmas: self.window_sigmas,
                window: None,
            },
        }
    }
}
