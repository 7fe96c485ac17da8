use std::path::PathBuf;

use serde::Serialize;

use kde_complexity::search::geometric_grid;
use kde_complexity::{
    counting_market_information, hurst_exponent, market_information, null_bands, prob_positive,
    slice_by_year, HurstConfig, HurstResult, KernelDensity, NullBands,
};

use crate::error::{CliError, Result};
use crate::flags::GridSpec;
use crate::input::Columns;
use crate::input::load_returns;
use crate::manifest::RunManifest;
use crate::output::{emit_report, to_json_pretty};

/// Per-year market-efficiency statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    /// Positive-return probability across bandwidths
    Posprob,
    /// Market information across bandwidths, with null bands
    Info,
    /// Hurst exponent of the log price
    Hurst,
}

/// Sign-dynamics and memory statistics of one calendar year of returns.
#[derive(Debug, clap::Args, Serialize)]
pub struct EfficiencyArgs {
    /// Dated price CSV (or date,return rows)
    #[arg(long)]
    pub input: PathBuf,

    /// Calendar year to analyse
    #[arg(long)]
    pub year: i32,

    /// Statistics to compute, comma separated
    #[arg(long, value_enum, value_delimiter = ',',
          default_values_t = vec![Stat::Posprob, Stat::Info, Stat::Hurst])]
    pub stats: Vec<Stat>,

    /// Bandwidth grid LO:HI:N, geometric; required for posprob and info
    #[arg(long)]
    pub h_grid: Option<GridSpec>,

    /// Simulated trials behind the null bands
    #[arg(long, default_value_t = 10_000)]
    pub null_trials: usize,

    /// Seed of the null simulation
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Date column name for price inputs
    #[arg(long, default_value = "Date")]
    pub date_column: String,

    /// Price column name for price inputs
    #[arg(long, default_value = "Close")]
    pub price_column: String,

    /// Derive simple instead of log returns from price inputs
    #[arg(long)]
    pub simple_returns: bool,

    /// Smallest R/S window
    #[arg(long, default_value_t = HurstConfig::default().min_window)]
    pub hurst_min_window: usize,

    /// Largest R/S window divides the series length by this
    #[arg(long, default_value_t = HurstConfig::default().max_window_divisor)]
    pub hurst_max_window_divisor: usize,

    /// R/S window ladder size
    #[arg(long, default_value_t = HurstConfig::default().ladder_points)]
    pub hurst_ladder_points: usize,

    /// Skip the small-sample bias correction of the R/S fit
    #[arg(long)]
    pub hurst_raw: bool,

    /// Report path; standard output when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct PosprobSection {
    h: Vec<f64>,
    p_pos: Vec<f64>,
}

#[derive(Serialize)]
struct InfoSection {
    h: Vec<f64>,
    info_bits: Vec<f64>,
    /// The h -> 0 limit: information of the raw sign sequence.
    counting_bits: f64,
    null_bands: NullBands,
}

#[derive(Serialize)]
struct EfficiencyReport<'a> {
    manifest: RunManifest<'a, EfficiencyArgs>,
    year: i32,
    observations: usize,
    sigma: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    positive_return_probability: Option<PosprobSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    market_information: Option<InfoSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hurst: Option<HurstResult>,
}

/// Log-price path implied by the year's returns, anchored at zero.
fn log_price_path(values: &[f64], simple_returns: bool) -> Result<Vec<f64>> {
    let mut path = Vec::with_capacity(values.len() + 1);
    path.push(0.0);
    let mut level = 0.0;
    for (i, &r) in values.iter().enumerate() {
        let step = if simple_returns { (1.0 + r).ln() } else { r };
        if !step.is_finite() {
            return Err(CliError::Data(format!(
                "return {i} ({r}) does not correspond to a finite log price move"
            )));
        }
        level += step;
        path.push(level);
    }
    Ok(path)
}

fn resolve_grid(args: &EfficiencyArgs) -> Result<Vec<f64>> {
    let spec = args.h_grid.ok_or_else(|| {
        CliError::Usage("--h-grid is required when stats include posprob or info".into())
    })?;
    if spec.lo <= 0.0 {
        return Err(CliError::Usage(format!(
            "--h-grid needs a positive lower endpoint, got {}",
            spec.lo
        )));
    }
    Ok(geometric_grid(spec.lo, spec.hi, spec.n)?)
}

pub fn run(args: &EfficiencyArgs) -> Result<()> {
    let cols = Columns {
        date: &args.date_column,
        price: &args.price_column,
        simple_returns: args.simple_returns,
    };
    let series = load_returns(&args.input, &cols)?;
    let sample = slice_by_year(&series, args.year)?;

    let wants = |s: Stat| args.stats.contains(&s);
    let grid = if wants(Stat::Posprob) || wants(Stat::Info) {
        resolve_grid(args)?
    } else {
        Vec::new()
    };

    let positive_return_probability = if wants(Stat::Posprob) {
        let mut p_pos = Vec::with_capacity(grid.len());
        for &h in &grid {
            p_pos.push(prob_positive(&KernelDensity::new(sample.clone(), h)?));
        }
        Some(PosprobSection {
            h: grid.clone(),
            p_pos,
        })
    } else {
        None
    };

    let market_information = if wants(Stat::Info) {
        let mut info_bits = Vec::with_capacity(grid.len());
        for &h in &grid {
            info_bits.push(market_information(&sample, h)?.info_bits);
        }
        let signs: Vec<bool> = sample.values().iter().map(|&r| r > 0.0).collect();
        Some(InfoSection {
            h: grid.clone(),
            info_bits,
            counting_bits: counting_market_information(&signs)?,
            null_bands: null_bands(sample.len(), args.null_trials, args.seed)?,
        })
    } else {
        None
    };

    let hurst = if wants(Stat::Hurst) {
        let path = log_price_path(sample.values(), args.simple_returns)?;
        let cfg = HurstConfig {
            min_window: args.hurst_min_window,
            max_window_divisor: args.hurst_max_window_divisor,
            ladder_points: args.hurst_ladder_points,
            bias_correction: !args.hurst_raw,
        };
        Some(hurst_exponent(&path, &cfg)?)
    } else {
        None
    };

    let report = EfficiencyReport {
        manifest: RunManifest::new("efficiency", args),
        year: args.year,
        observations: sample.len(),
        sigma: sample.std(),
        positive_return_probability,
        market_information,
        hurst,
    };
    emit_report(args.out.as_deref(), &to_json_pretty(&report)?)
}
