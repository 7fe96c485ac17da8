//! Classic bandwidth selectors: AMISE plug-in, validation likelihood, and
//! PIT uniformity-independence.
//!
//! All three return a [`BandwidthResult`] carrying the selected bandwidth,
//! the objective value there, and the iterate trace that produced it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kde::{curvature_roughness_sorted, KernelDensity};
use crate::kernel::KernelSpec;
use crate::sample::Sample;
use crate::search::{geometric_grid, golden_minimize, SearchConfig};

/// Floor applied to density values before taking logs in the likelihood
/// objective.
const LIKELIHOOD_FLOOR: f64 = 1e-300;

/// How a bandwidth was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SelectionMethod {
    Amise,
    Likelihood,
    Pit,
    Complexity,
}

/// One step of a selector's search: the bandwidth visited and the objective
/// value there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub h: f64,
    pub objective: f64,
}

/// A selected bandwidth with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BandwidthResult {
    pub method: SelectionMethod,
    pub bandwidth: f64,
    pub objective: f64,
    /// Search path; never empty, and the last entry is the selected point.
    pub trace: Vec<TracePoint>,
}

/// Held-out observations for the likelihood and PIT selectors. Order is
/// preserved: the PIT statistic tests serial independence, so the validation
/// set must keep its time ordering.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationSet {
    values: Vec<f64>,
}

impl ValidationSet {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyValidation);
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        Ok(ValidationSet { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty input
    }
}

/// Maximum lag tested by the PIT selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PitConfig {
    pub nu: usize,
}

impl Default for PitConfig {
    fn default() -> Self {
        PitConfig { nu: 22 }
    }
}

/// The AMISE-optimal bandwidth for a known curvature roughness R(f''):
/// `[ R(K) / (n mu_2(K)^2 R(f'')) ]^(1/5)`.
pub fn amise_bandwidth_for_curvature(n: usize, curvature: f64, kernel: &KernelSpec) -> Result<f64> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    if !curvature.is_finite() || curvature <= 0.0 {
        return Err(Error::NonFiniteObjective { h: curvature });
    }
    let mu2 = kernel.second_moment();
    Ok((kernel.roughness() / (n as f64 * mu2 * mu2 * curvature)).powf(0.2))
}

/// Plug-in AMISE selector: starting from Silverman's rule
/// `h0 = 1.06 sigma n^(-1/5)`, iterates
/// `h <- [ R(K) / (n mu_2^2 R(f''_h)) ]^(1/5)` with the curvature roughness
/// estimated from the data at the current bandwidth, until successive
/// iterates differ by less than `tol * sigma`.
///
/// The trace records each iterate with the curvature roughness estimated
/// there; non-convergence returns the trace inside the error.
pub fn select_amise_plugin(s: &Sample, tol: f64, max_iter: usize) -> Result<BandwidthResult> {
    s.require_spread()?;
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidInterval { lo: tol, hi: tol });
    }
    if max_iter == 0 {
        return Err(Error::NoConvergence {
            max_iter,
            trace: vec![],
        });
    }
    let kernel = KernelSpec::gaussian();
    let sorted = s.sorted();
    let sigma = s.std();
    let mut h = 1.06 * sigma * (s.len() as f64).powf(-0.2);
    let mut trace: Vec<TracePoint> = Vec::new();
    for _ in 0..max_iter {
        let r2 = curvature_roughness_sorted(sorted, h);
        if !r2.is_finite() || r2 <= 0.0 {
            return Err(Error::NonFiniteObjective { h });
        }
        trace.push(TracePoint { h, objective: r2 });
        let next = amise_bandwidth_for_curvature(s.len(), r2, &kernel)?;
        if !next.is_finite() || next < 1e-12 * sigma || next > 1e12 * sigma {
            return Err(Error::DivergedBandwidth(next));
        }
        if (next - h).abs() < tol * sigma {
            let r2_final = curvature_roughness_sorted(sorted, next);
            trace.push(TracePoint {
                h: next,
                objective: r2_final,
            });
            return Ok(BandwidthResult {
                method: SelectionMethod::Amise,
                bandwidth: next,
                objective: r2_final,
                trace,
            });
        }
        h = next;
    }
    Err(Error::NoConvergence {
        max_iter,
        trace: trace.iter().map(|t| (t.h, t.objective)).collect(),
    })
}

/// Likelihood selector: maximizes the held-out log likelihood
/// `sum_i log max(f_h(v_i), 1e-300)` over a geometric bandwidth grid, then
/// refines the best cell by golden section. Train and validation sets should
/// be disjoint; reusing the training data drives the choice toward 0.
pub fn select_likelihood(
    s: &Sample,
    v: &ValidationSet,
    cfg: &SearchConfig,
) -> Result<BandwidthResult> {
    s.require_spread()?;
    cfg.validate()?;
    let lo = cfg.h_min_factor * s.std();
    let hi = cfg.selector_span_sigmas * s.std();
    let grid = geometric_grid(lo, hi, cfg.selector_points)?;
    let objective = |h: f64| -> Result<f64> {
        let kd = KernelDensity::new(s.clone(), h)?;
        let obj: f64 = kd
            .pdf_many(v.values())
            .iter()
            .map(|&f| f.max(LIKELIHOOD_FLOOR).ln())
            .sum();
        if !obj.is_finite() {
            return Err(Error::NonFiniteObjective { h });
        }
        Ok(obj)
    };
    let mut best = 0usize;
    let mut best_obj = f64::NEG_INFINITY;
    let mut values = Vec::with_capacity(grid.len());
    for (i, &h) in grid.iter().enumerate() {
        let obj = objective(h)?;
        values.push(obj);
        if obj > best_obj {
            best = i;
            best_obj = obj;
        }
    }
    if best == 0 || best == grid.len() - 1 {
        return Err(Error::BoundaryOptimum {
            side: if best == 0 { "lower" } else { "upper" },
            lo,
            hi,
        });
    }
    let (h_star, neg_obj) = golden_minimize(
        |h| objective(h).map(|o| -o),
        grid[best - 1],
        grid[best + 1],
        cfg.golden_rel_tol,
    )?;
    // Keep the grid point if refinement could not improve on it.
    let (h_star, obj_star) = if -neg_obj >= best_obj {
        (h_star, -neg_obj)
    } else {
        (grid[best], best_obj)
    };
    Ok(BandwidthResult {
        method: SelectionMethod::Likelihood,
        bandwidth: h_star,
        objective: obj_star,
        trace: vec![
            TracePoint {
                h: grid[best],
                objective: best_obj,
            },
            TracePoint {
                h: h_star,
                objective: obj_star,
            },
        ],
    })
}

/// Fenwick (binary indexed) tree over value ranks, used for exact dominance
/// counting in [`k_tau`].
struct Fenwick(Vec<u32>);

impl Fenwick {
    fn new(n: usize) -> Self {
        Fenwick(vec![0; n + 1])
    }

    /// Adds one at rank `i` (0-based).
    fn add(&mut self, i: usize) {
        let mut k = i + 1;
        while k < self.0.len() {
            self.0[k] += 1;
            k += k & k.wrapping_neg();
        }
    }

    /// Count of inserted ranks `<= i` (0-based, inclusive).
    fn prefix(&self, i: usize) -> u32 {
        let mut k = i + 1;
        let mut sum = 0;
        while k > 0 {
            sum += self.0[k];
            k -= k & k.wrapping_neg();
        }
        sum
    }
}

/// Lagged uniformity-independence statistic of PIT values `z` in [0, 1].
///
/// For `tau = 0` it is the Kolmogorov distance between the `z` and the
/// uniform law,
/// `max_i | z_i - 1/(m+1) sum_j 1{z_j <= z_i} |`;
/// for `tau > 0` it compares the empirical law of the lagged pairs
/// `(z_i, z_{i+tau})` with the product of independent uniforms,
/// `max_i | z_i z_{i+tau} - 1/(m-tau+1) sum_j 1{z_j <= z_i} 1{z_{j+tau} <= z_{i+tau}} |`
/// with `i, j` ranging over the `m - tau` usable pairs.
///
/// Counting uses sorted ranks (and a Fenwick tree for the two-dimensional
/// case); the counts are exact integers, so the result is bit-identical to
/// the quadratic-time double loop written out above.
pub fn k_tau(z: &[f64], tau: usize) -> Result<f64> {
    let m = z.len();
    if m == 0 || (tau > 0 && tau >= m) {
        return Err(Error::EmptyLagRange { tau, m });
    }
    if let Some(index) = z.iter().position(|v| !(0.0..=1.0).contains(v)) {
        return Err(Error::PitOutOfRange {
            index,
            value: z[index],
        });
    }
    if tau == 0 {
        let mut sorted = z.to_vec();
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("PIT values are finite"));
        let denom = m as f64 + 1.0;
        let mut stat: f64 = 0.0;
        for &zi in z {
            let count = sorted.partition_point(|&v| v <= zi);
            stat = stat.max((zi - count as f64 / denom).abs());
        }
        return Ok(stat);
    }
    let len = m - tau;
    let a = &z[..len];
    let b = &z[tau..];
    // Rank-compress the second coordinates.
    let mut b_sorted: Vec<f64> = b.to_vec();
    b_sorted.sort_by(|x, y| x.partial_cmp(y).expect("PIT values are finite"));
    b_sorted.dedup();
    let rank = |v: f64| b_sorted.partition_point(|&w| w < v); // index of v
    // Process points in ascending first coordinate, whole tie-groups at a
    // time: inserting a group before querying it makes `a_j <= a_i` inclusive
    // of ties, exactly as the double loop counts them.
    let mut order: Vec<usize> = (0..len).collect();
    order.sort_by(|&i, &j| a[i].partial_cmp(&a[j]).expect("PIT values are finite"));
    let mut fen = Fenwick::new(b_sorted.len());
    let denom = len as f64 + 1.0;
    let mut stat: f64 = 0.0;
    let mut g = 0usize;
    while g < len {
        let mut end = g;
        while end + 1 < len && a[order[end + 1]] == a[order[g]] {
            end += 1;
        }
        for &i in &order[g..=end] {
            fen.add(rank(b[i]));
        }
        for &i in &order[g..=end] {
            let count = fen.prefix(rank(b[i]));
            stat = stat.max((a[i] * b[i] - count as f64 / denom).abs());
        }
        g = end + 1;
    }
    Ok(stat)
}

/// PIT selector: minimizes `max_{0 <= tau <= nu} sqrt(m - tau) k_tau(z)`
/// over a geometric bandwidth grid, where `z` are the PIT values `F_h(v_i)`
/// of the validation set in time order. The objective is a maximum of
/// nonsmooth statistics, so the grid minimum is returned without local
/// refinement.
pub fn select_pit(
    s: &Sample,
    v: &ValidationSet,
    pit: &PitConfig,
    cfg: &SearchConfig,
) -> Result<BandwidthResult> {
    s.require_spread()?;
    cfg.validate()?;
    let m = v.len();
    if pit.nu >= m {
        return Err(Error::LagExceedsSample { nu: pit.nu, m });
    }
    let lo = cfg.h_min_factor * s.std();
    let hi = cfg.selector_span_sigmas * s.std();
    let grid = geometric_grid(lo, hi, cfg.selector_points)?;
    let mut best = 0usize;
    let mut best_obj = f64::INFINITY;
    for (i, &h) in grid.iter().enumerate() {
        let kd = KernelDensity::new(s.clone(), h)?;
        let z = kd.cdf_many(v.values());
        let mut obj: f64 = 0.0;
        for tau in 0..=pit.nu {
            obj = obj.max(((m - tau) as f64).sqrt() * k_tau(&z, tau)?);
        }
        if !obj.is_finite() {
            return Err(Error::NonFiniteObjective { h });
        }
        if obj < best_obj {
            best = i;
            best_obj = obj;
        }
    }
    if best == 0 || best == grid.len() - 1 {
        return Err(Error::BoundaryOptimum {
            side: if best == 0 { "lower" } else { "upper" },
            lo,
            hi,
        });
    }
    Ok(BandwidthResult {
        method: SelectionMethod::Pit,
        bandwidth: grid[best],
        objective: best_obj,
        trace: vec![TracePoint {
            h: grid[best],
            objective: best_obj,
        }],
    })
}
