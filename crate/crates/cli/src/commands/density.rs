use std::path::PathBuf;

use clap::ArgGroup;
use serde::Serialize;

use kde_complexity::{
    build_complexity_curve, select_amise_plugin, select_likelihood, select_pit, true_pdf,
    Distribution, KernelDensity, PitConfig, SearchConfig, ValidationSet,
};

use crate::error::{CliError, Result};
use crate::flags::{GridSpec, InputFlags, Method, SearchFlags};
use crate::input::{load_sample, load_values, Columns};
use crate::manifest::RunManifest;
use crate::output::write_csv_with_manifest;

/// Evaluate the kernel density on a grid, at a fixed or selected bandwidth.
#[derive(Debug, clap::Args, Serialize)]
#[command(group(ArgGroup::new("h_source").required(true).args(["bandwidth", "method"])))]
pub struct DensityArgs {
    #[command(flatten)]
    pub data: InputFlags,

    /// Fixed kernel bandwidth
    #[arg(long)]
    pub bandwidth: Option<f64>,

    /// Selector that chooses the bandwidth: c, amise, pit, or lik
    #[arg(long, value_enum)]
    pub method: Option<Method>,

    /// Held-out returns for the pit and lik selectors (whole file is used)
    #[arg(long)]
    pub validation: Option<PathBuf>,

    /// Evaluation grid LO:HI:N, linear
    #[arg(long, allow_hyphen_values = true)]
    pub grid: GridSpec,

    /// Overlay the analytic density: gaussian, mixture, or student5
    #[arg(long)]
    pub true_dist: Option<Distribution>,

    #[command(flatten)]
    pub search: SearchFlags,

    /// Grid size of the complexity curve behind method c
    #[arg(long, default_value_t = SearchConfig::default().curve_points)]
    pub curve_points: usize,

    /// Fixed-point relative tolerance of the plug-in iteration
    #[arg(long, default_value_t = 1e-6)]
    pub amise_tol: f64,

    /// Iteration cap of the plug-in
    #[arg(long, default_value_t = 80)]
    pub amise_max_iter: usize,

    /// Largest copula lag in the PIT objective
    #[arg(long, default_value_t = PitConfig::default().nu)]
    pub nu: usize,

    /// Output CSV path
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &DensityArgs) -> Result<()> {
    if let Some(h) = args.bandwidth {
        if !h.is_finite() || h <= 0.0 {
            return Err(CliError::Usage(format!(
                "--bandwidth must be a positive number, got {h}"
            )));
        }
    }
    if args.method.is_some_and(Method::needs_validation) && args.validation.is_none() {
        return Err(CliError::Usage(
            "--validation is required for methods pit and lik".into(),
        ));
    }

    let sample = load_sample(&args.data)?;
    let cfg = args
        .search
        .to_config(args.curve_points, 0, SearchConfig::default().extend_factor);

    let h = match (args.bandwidth, args.method) {
        (Some(h), _) => h,
        (None, Some(Method::C)) => build_complexity_curve(&sample, &cfg)?.h_c,
        (None, Some(Method::Amise)) => {
            select_amise_plugin(&sample, args.amise_tol, args.amise_max_iter)?.bandwidth
        }
        (None, Some(method)) => {
            let path = args.validation.as_ref().expect("checked above");
            let v = ValidationSet::new(load_values(path, &Columns::from(&args.data), None)?)?;
            match method {
                Method::Pit => select_pit(&sample, &v, &PitConfig { nu: args.nu }, &cfg)?.bandwidth,
                Method::Lik => select_likelihood(&sample, &v, &cfg)?.bandwidth,
                Method::C | Method::Amise => unreachable!("handled above"),
            }
        }
        (None, None) => unreachable!("clap group requires one of --bandwidth/--method"),
    };

    let kd = KernelDensity::new(sample, h)?;
    let xs = args.grid.linear();
    let mut csv = String::with_capacity(xs.len() * 48 + 32);
    csv.push_str(match args.true_dist {
        Some(_) => "x,density,true_density\n",
        None => "x,density\n",
    });
    for &x in &xs {
        match args.true_dist {
            Some(dist) => csv.push_str(&format!(
                "{x:.16e},{:.16e},{:.16e}\n",
                kd.pdf(x),
                true_pdf(dist, x)
            )),
            None => csv.push_str(&format!("{x:.16e},{:.16e}\n", kd.pdf(x))),
        }
    }
    write_csv_with_manifest(&args.out, &csv, &RunManifest::new("density", args))
}
