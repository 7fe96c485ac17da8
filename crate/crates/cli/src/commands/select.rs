use std::path::PathBuf;

use serde::Serialize;

use kde_complexity::{
    build_complexity_curve, complexity_at, select_amise_plugin, select_likelihood, select_pit,
    ComplexityCurve, PitConfig, Sample, SearchConfig, ValidationSet,
};

use crate::error::{CliError, Result};
use crate::flags::{canonical_methods, InputFlags, Method, SearchFlags};
use crate::input::{load_sample, load_values, Columns};
use crate::manifest::RunManifest;
use crate::output::{emit_report, to_json_pretty};

/// Run the requested bandwidth selectors and report one comparison column.
#[derive(Debug, clap::Args, Serialize)]
pub struct SelectArgs {
    #[command(flatten)]
    pub data: InputFlags,

    /// Held-out returns for the pit and lik selectors (whole file is used)
    #[arg(long)]
    pub validation: Option<PathBuf>,

    /// Selectors to run, comma separated: c, amise, pit, lik
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub methods: Vec<Method>,

    #[command(flatten)]
    pub search: SearchFlags,

    /// Grid size of the tabulated complexity curve
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

    /// Report path; standard output when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Selection {
    method: Method,
    bandwidth: f64,
    complexity: f64,
}

#[derive(Serialize)]
struct SelectReport<'a> {
    manifest: RunManifest<'a, SelectArgs>,
    observations: usize,
    sigma: f64,
    h_p: f64,
    c_at_h_p: f64,
    selections: Vec<Selection>,
}

/// Resolves one selector to its bandwidth.
fn bandwidth_for(
    method: Method,
    sample: &Sample,
    curve: &ComplexityCurve,
    validation: Option<&ValidationSet>,
    args: &SelectArgs,
    cfg: &SearchConfig,
) -> Result<f64> {
    let v = || validation.expect("validation presence checked before dispatch");
    Ok(match method {
        Method::C => curve.h_c,
        Method::Amise => select_amise_plugin(sample, args.amise_tol, args.amise_max_iter)?.bandwidth,
        Method::Pit => select_pit(sample, v(), &PitConfig { nu: args.nu }, cfg)?.bandwidth,
        Method::Lik => select_likelihood(sample, v(), cfg)?.bandwidth,
    })
}

pub fn run(args: &SelectArgs) -> Result<()> {
    let methods = canonical_methods(&args.methods);
    if methods.iter().any(|m| m.needs_validation()) && args.validation.is_none() {
        return Err(CliError::Usage(
            "--validation is required when methods include pit or lik".into(),
        ));
    }

    let sample = load_sample(&args.data)?;
    let validation = match &args.validation {
        Some(path) => Some(ValidationSet::new(load_values(
            path,
            &Columns::from(&args.data),
            None,
        )?)?),
        None => None,
    };

    let cfg = args
        .search
        .to_config(args.curve_points, 0, SearchConfig::default().extend_factor);
    let curve = build_complexity_curve(&sample, &cfg)?;

    let mut selections = Vec::with_capacity(methods.len());
    for &method in &methods {
        let bandwidth = bandwidth_for(method, &sample, &curve, validation.as_ref(), args, &cfg)?;
        let complexity = if method == Method::C {
            curve.c_at_h_c
        } else {
            complexity_at(&sample, bandwidth, curve.e_max, curve.p_max, &cfg.quad)?
        };
        selections.push(Selection {
            method,
            bandwidth,
            complexity,
        });
    }

    let report = SelectReport {
        manifest: RunManifest::new("select", args),
        observations: sample.len(),
        sigma: sample.std(),
        h_p: curve.h_p,
        c_at_h_p: complexity_at(&sample, curve.h_p, curve.e_max, curve.p_max, &cfg.quad)?,
        selections,
    };
    emit_report(args.out.as_deref(), &to_json_pretty(&report)?)
}
