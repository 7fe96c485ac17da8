use std::path::PathBuf;

use serde::Serialize;

use kde_complexity::{simulate, Distribution, SimSpec};

use crate::error::Result;
use crate::manifest::RunManifest;
use crate::output::write_csv_with_manifest;

/// Draw a seeded sample from a reference distribution.
#[derive(Debug, clap::Args, Serialize)]
pub struct SimulateArgs {
    /// Distribution: gaussian, mixture, or student5
    #[arg(long)]
    pub dist: Distribution,

    /// Sample size
    #[arg(long)]
    pub n: usize,

    /// RNG seed
    #[arg(long)]
    pub seed: u64,

    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &SimulateArgs) -> Result<()> {
    let spec = SimSpec {
        dist: args.dist,
        n: args.n,
        seed: args.seed,
    };
    let sample = simulate(&spec)?;
    let mut csv = String::with_capacity(sample.len() * 26 + 8);
    csv.push_str("value\n");
    for v in sample.values() {
        csv.push_str(&format!("{v:.16e}\n"));
    }
    write_csv_with_manifest(&args.out, &csv, &RunManifest::new("simulate", args))
}
