use std::path::PathBuf;

use serde::Serialize;

use kde_complexity::{build_complexity_curve, SearchConfig};

use crate::error::Result;
use crate::flags::{InputFlags, SearchFlags};
use crate::input::load_sample;
use crate::manifest::RunManifest;
use crate::output::write_csv_with_manifest;

/// Tabulate the complexity curve as plot-ready CSV.
#[derive(Debug, clap::Args, Serialize)]
pub struct CurveArgs {
    #[command(flatten)]
    pub data: InputFlags,

    /// Number of tabulated bandwidths up to h_p
    #[arg(long, default_value_t = SearchConfig::default().curve_points)]
    pub points: usize,

    /// Extra plotting points past h_p, flagged in the output
    #[arg(long, default_value_t = 100)]
    pub extend_points: usize,

    /// Extension endpoint as a multiple of h_p
    #[arg(long, default_value_t = SearchConfig::default().extend_factor)]
    pub extend_factor: f64,

    #[command(flatten)]
    pub search: SearchFlags,

    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &CurveArgs) -> Result<()> {
    let sample = load_sample(&args.data)?;
    let cfg = args
        .search
        .to_config(args.points, args.extend_points, args.extend_factor);
    let curve = build_complexity_curve(&sample, &cfg)?;

    let mut csv = String::with_capacity(curve.grid.len() * 96 + 32);
    csv.push_str("h,e_h,p_h,c_h,beyond_hp\n");
    for i in 0..curve.grid.len() {
        csv.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{}\n",
            curve.grid[i],
            curve.e_values[i],
            curve.p_values[i],
            curve.c_values[i],
            curve.beyond_hp[i],
        ));
    }
    write_csv_with_manifest(&args.out, &csv, &RunManifest::new("curve", args))
}
