//! Simulation generators and price-series ingestion.
//!
//! Three reference distributions drive the simulation studies: the standard
//! Gaussian, a two-component Gaussian mixture
//! `0.6 N(-1.25, 1) + 0.4 N(+1.25, 1)`, and Student-t with five degrees of
//! freedom. Real data enters as a CSV of dated closing prices, is converted
//! to returns, and is sliced by calendar year.

use std::fmt;
use std::str::FromStr;

use chrono::{Datelike, NaiveDate};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{StandardNormal, StudentT};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::normal_pdf;
use crate::sample::Sample;

/// Reference distributions for simulated samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    Gaussian,
    Mixture,
    Student5,
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Distribution::Gaussian => "gaussian",
            Distribution::Mixture => "mixture",
            Distribution::Student5 => "student5",
        })
    }
}

impl FromStr for Distribution {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "gaussian" => Ok(Distribution::Gaussian),
            "mixture" => Ok(Distribution::Mixture),
            "student5" => Ok(Distribution::Student5),
            other => Err(format!(
                "unknown distribution {other:?}; expected gaussian, mixture, or student5"
            )),
        }
    }
}

/// A reproducible simulation request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimSpec {
    pub dist: Distribution,
    pub n: usize,
    pub seed: u64,
}

/// Draws a sample of `spec.n` values; bit-reproducible for a fixed spec.
pub fn simulate(spec: &SimSpec) -> Result<Sample> {
    if spec.n < 2 {
        return Err(Error::SimTooSmall(spec.n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let values: Vec<f64> = (0..spec.n)
        .map(|_| match spec.dist {
            Distribution::Gaussian => rng.sample(StandardNormal),
            Distribution::Mixture => {
                let negative = rng.gen_bool(0.6);
                let z: f64 = rng.sample(StandardNormal);
                if negative {
                    z - 1.25
                } else {
                    z + 1.25
                }
            }
            Distribution::Student5 => rng.sample(StudentT::new(5.0).expect("valid dof")),
        })
        .collect();
    Sample::new(values)
}

/// Analytic density of the reference distribution at `x`.
pub fn true_pdf(dist: Distribution, x: f64) -> f64 {
    match dist {
        Distribution::Gaussian => normal_pdf(x),
        Distribution::Mixture => 0.6 * normal_pdf(x + 1.25) + 0.4 * normal_pdf(x - 1.25),
        Distribution::Student5 => {
            // t(5): Gamma(3) / (sqrt(5 pi) Gamma(5/2)) (1 + x^2/5)^{-3}
            // with the constant reduced to 8 / (3 pi sqrt(5)).
            let c = 8.0 / (3.0 * std::f64::consts::PI * 5.0f64.sqrt());
            c * (1.0 + x * x / 5.0).powi(-3)
        }
    }
}

/// Dated log- or simple-return series derived from closing prices.
#[derive(Debug, Clone, PartialEq)]
pub struct ReturnSeries {
    dates: Vec<NaiveDate>,
    returns: Vec<f64>,
    source: String,
}

impl ReturnSeries {
    /// Builds a series from parallel date/return vectors; dates must be
    /// strictly ascending and returns finite.
    pub fn new(dates: Vec<NaiveDate>, returns: Vec<f64>, source: String) -> Result<Self> {
        if dates.len() != returns.len() || returns.is_empty() {
            return Err(Error::TooFewRows(returns.len()));
        }
        if let Some(i) = returns.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue(i));
        }
        if let Some(w) = dates.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::DuplicateDates(format!("{} >= {}", w[0], w[1])));
        }
        Ok(ReturnSeries {
            dates,
            returns,
            source,
        })
    }

    pub fn dates(&self) -> &[NaiveDate] {
        &self.dates
    }

    pub fn returns(&self) -> &[f64] {
        &self.returns
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.returns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.returns.is_empty()
    }

    /// Calendar years present, ascending without duplicates.
    pub fn years(&self) -> Vec<i32> {
        let mut ys: Vec<i32> = self.dates.iter().map(|d| d.year()).collect();
        ys.dedup();
        ys
    }

    /// Serializes as `date,return` rows with full round-trip precision.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("date,return\n");
        for (d, r) in self.dates.iter().zip(&self.returns) {
            out.push_str(&format!("{d},{r:.16e}\n"));
        }
        out
    }

    /// Parses the `date,return` format emitted by [`ReturnSeries::to_csv`].
    pub fn from_csv(bytes: &[u8], source: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(bytes);
        let mut dates = Vec::new();
        let mut returns = Vec::new();
        for (i, record) in reader.records().enumerate() {
            let row = i + 2; // header is line 1
            let record = record?;
            let date = parse_date(record.get(0).unwrap_or(""), row)?;
            let value: f64 = record
                .get(1)
                .unwrap_or("")
                .parse()
                .map_err(|e| Error::CsvRow {
                    row,
                    msg: format!("bad return: {e}"),
                })?;
            dates.push(date);
            returns.push(value);
        }
        ReturnSeries::new(dates, returns, source.to_owned())
    }
}

/// Column names and return convention for price ingestion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IngestConfig {
    pub date_column: String,
    pub price_column: String,
    /// Compute `P_t / P_{t-1} - 1` instead of the default `log(P_t / P_{t-1})`.
    pub simple_returns: bool,
    /// Label stored in the resulting series.
    pub source_label: String,
}

impl Default for IngestConfig {
    fn default() -> Self {
        IngestConfig {
            date_column: "Date".to_owned(),
            price_column: "Close".to_owned(),
            simple_returns: false,
            source_label: "prices".to_owned(),
        }
    }
}

/// Row accounting from one ingestion pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IngestStats {
    /// Data rows present in the file.
    pub rows_read: usize,
    /// Rows dropped for a missing or non-positive price.
    pub rows_dropped: usize,
}

fn parse_date(text: &str, row: usize) -> Result<NaiveDate> {
    NaiveDate::parse_from_str(text, "%Y-%m-%d").map_err(|e| Error::CsvRow {
        row,
        msg: format!("bad date {text:?}: {e}"),
    })
}

/// Reads a CSV of dated closing prices and produces the return series.
///
/// Rows are sorted by date; rows whose price field is empty, a non-number
/// placeholder ("null", "NA", "NaN"), or not strictly positive are dropped
/// and counted. Unparseable dates and malformed numeric fields are errors
/// carrying the row number, as are duplicate dates among the kept rows.
pub fn ingest_prices(csv_bytes: &[u8], cfg: &IngestConfig) -> Result<(ReturnSeries, IngestStats)> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(csv_bytes);
    let headers = reader.headers()?.clone();
    let find = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_owned()))
    };
    let date_idx = find(&cfg.date_column)?;
    let price_idx = find(&cfg.price_column)?;

    let mut rows: Vec<(NaiveDate, f64)> = Vec::new();
    let mut rows_read = 0usize;
    let mut rows_dropped = 0usize;
    for (i, record) in reader.records().enumerate() {
        let row = i + 2; // header is line 1
        let record = record?;
        rows_read += 1;
        let date = parse_date(record.get(date_idx).unwrap_or(""), row)?;
        let raw = record.get(price_idx).unwrap_or("").trim();
        if raw.is_empty() || raw.eq_ignore_ascii_case("null") || raw.eq_ignore_ascii_case("na") {
            rows_dropped += 1;
            continue;
        }
        let price: f64 = raw.parse().map_err(|e| Error::CsvRow {
            row,
            msg: format!("bad price {raw:?}: {e}"),
        })?;
        if !price.is_finite() || price <= 0.0 {
            rows_dropped += 1;
            continue;
        }
        rows.push((date, price));
    }
    if rows.len() < 2 {
        return Err(Error::TooFewRows(rows.len()));
    }
    rows.sort_by_key(|&(d, _)| d);
    let duplicates: Vec<String> = rows
        .windows(2)
        .filter(|w| w[0].0 == w[1].0)
        .map(|w| w[0].0.to_string())
        .collect();
    if !duplicates.is_empty() {
        return Err(Error::DuplicateDates(duplicates.join(", ")));
    }

    let mut dates = Vec::with_capacity(rows.len() - 1);
    let mut returns = Vec::with_capacity(rows.len() - 1);
    for w in rows.windows(2) {
        let (_, prev) = w[0];
        let (date, price) = w[1];
        let r = if cfg.simple_returns {
            price / prev - 1.0
        } else {
            (price / prev).ln()
        };
        dates.push(date);
        returns.push(r);
    }
    let series = ReturnSeries::new(dates, returns, cfg.source_label.clone())?;
    Ok((
        series,
        IngestStats {
            rows_read,
            rows_dropped,
        },
    ))
}

/// All returns dated within the given calendar year, in date order.
pub fn slice_by_year(rs: &ReturnSeries, year: i32) -> Result<Sample> {
    let values: Vec<f64> = rs
        .dates
        .iter()
        .zip(&rs.returns)
        .filter(|(d, _)| d.year() == year)
        .map(|(_, &r)| r)
        .collect();
    if values.is_empty() {
        return Err(Error::EmptyYear(year));
    }
    Sample::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn spec(dist: Distribution, n: usize, seed: u64) -> SimSpec {
        SimSpec { dist, n, seed }
    }

    #[test]
    fn simulation_moments_match_theory() {
        let s = simulate(&spec(Distribution::Gaussian, 100_000, 1)).unwrap();
        assert_abs_diff_eq!(s.mean(), 0.0, epsilon = 0.02);
        assert_abs_diff_eq!(s.std(), 1.0, epsilon = 0.02);

        let s = simulate(&spec(Distribution::Mixture, 100_000, 2)).unwrap();
        assert_abs_diff_eq!(s.mean(), -0.25, epsilon = 0.02);
        // Mixture variance: 1 + 1.25^2 - 0.25^2 = 2.5 (law of total variance).
        assert_abs_diff_eq!(s.std() * s.std(), 2.5, epsilon = 0.05);

        let s = simulate(&spec(Distribution::Student5, 100_000, 3)).unwrap();
        assert_abs_diff_eq!(s.mean(), 0.0, epsilon = 0.03);
        assert_abs_diff_eq!(s.std() * s.std(), 5.0 / 3.0, epsilon = 0.1);
    }

    #[test]
    fn simulation_is_reproducible_and_seed_sensitive() {
        let a = simulate(&spec(Distribution::Mixture, 500, 42)).unwrap();
        let b = simulate(&spec(Distribution::Mixture, 500, 42)).unwrap();
        assert_eq!(a.values(), b.values());
        let c = simulate(&spec(Distribution::Mixture, 500, 43)).unwrap();
        assert_ne!(a.values(), c.values());
        assert!(matches!(
            simulate(&spec(Distribution::Gaussian, 1, 1)),
            Err(Error::SimTooSmall(1))
        ));
    }

    #[test]
    fn true_pdf_closed_forms() {
        assert_abs_diff_eq!(true_pdf(Distribution::Gaussian, 0.0), 0.398942, epsilon = 1e-6);
        assert_abs_diff_eq!(true_pdf(Distribution::Mixture, 0.0), 0.182650, epsilon = 1e-6);
        assert_abs_diff_eq!(true_pdf(Distribution::Student5, 0.0), 0.379607, epsilon = 1e-6);
        // The mixture density at 0 collapses to phi(1.25).
        assert_abs_diff_eq!(
            true_pdf(Distribution::Mixture, 0.0),
            normal_pdf(1.25),
            epsilon = 1e-15
        );
    }

    #[test]
    fn true_pdf_integrates_to_one() {
        use crate::quad::trapezoid;
        for dist in [
            Distribution::Gaussian,
            Distribution::Mixture,
            Distribution::Student5,
        ] {
            // Student-t tails are heavy: integrate wide and allow for the
            // O(x^-5) truncation remainder.
            let mass = trapezoid(|x| true_pdf(dist, x), -60.0, 60.0, 120_001);
            assert_abs_diff_eq!(mass, 1.0, epsilon = 1e-6);
        }
    }

    #[test]
    fn simulated_histogram_tracks_true_pdf() {
        // Coarse histogram comparison on the mixture: bin frequencies within
        // Monte Carlo noise of the analytic bin masses.
        let s = simulate(&spec(Distribution::Mixture, 100_000, 9)).unwrap();
        let (lo, hi, bins) = (-4.0, 4.0, 16usize);
        let width = (hi - lo) / bins as f64;
        let mut counts = vec![0usize; bins];
        for &v in s.values() {
            if v >= lo && v < hi {
                counts[((v - lo) / width) as usize] += 1;
            }
        }
        for (i, &c) in counts.iter().enumerate() {
            let center = lo + (i as f64 + 0.5) * width;
            let expected = true_pdf(Distribution::Mixture, center) * width;
            let observed = c as f64 / s.len() as f64;
            assert_abs_diff_eq!(observed, expected, epsilon = 0.01);
        }
    }

    const PRICES: &str = "Date,Close\n2020-01-03,110\n2020-01-02,100\n2020-01-04,121\n";

    #[test]
    fn ingest_computes_sorted_log_returns() {
        let (rs, stats) = ingest_prices(PRICES.as_bytes(), &IngestConfig::default()).unwrap();
        assert_eq!(stats.rows_read, 3);
        assert_eq!(stats.rows_dropped, 0);
        assert_eq!(rs.len(), 2);
        // Out-of-order rows are sorted before differencing; returns carry
        // the later date of each pair.
        assert_eq!(
            rs.dates(),
            &[
                NaiveDate::from_ymd_opt(2020, 1, 3).unwrap(),
                NaiveDate::from_ymd_opt(2020, 1, 4).unwrap()
            ]
        );
        assert_relative_eq!(rs.returns()[0], 1.1f64.ln(), max_relative = 1e-12);
        assert_relative_eq!(rs.returns()[1], 1.1f64.ln(), max_relative = 1e-12);
        assert_abs_diff_eq!(rs.returns()[0], 0.0953102, epsilon = 1e-7);

        let simple = IngestConfig {
            simple_returns: true,
            ..IngestConfig::default()
        };
        let (rs, _) = ingest_prices(PRICES.as_bytes(), &simple).unwrap();
        assert_relative_eq!(rs.returns()[0], 0.1, max_relative = 1e-12);
    }

    #[test]
    fn ingest_drops_and_counts_bad_prices() {
        let text = "Date,Close\n2020-01-02,100\n2020-01-03,null\n2020-01-04,-5\n2020-01-05,121\n";
        let (rs, stats) = ingest_prices(text.as_bytes(), &IngestConfig::default()).unwrap();
        assert_eq!(stats.rows_read, 4);
        assert_eq!(stats.rows_dropped, 2);
        assert_eq!(rs.len(), 1);
        assert_relative_eq!(rs.returns()[0], 1.21f64.ln(), max_relative = 1e-12);
    }

    #[test]
    fn ingest_errors_carry_row_numbers() {
        let bad_date = "Date,Close\n2020-01-02,100\nnot-a-date,110\n";
        match ingest_prices(bad_date.as_bytes(), &IngestConfig::default()) {
            Err(Error::CsvRow { row: 3, .. }) => {}
            other => panic!("expected row-3 error, got {other:?}"),
        }
        let bad_price = "Date,Close\n2020-01-02,100\n2020-01-03,ten\n";
        assert!(matches!(
            ingest_prices(bad_price.as_bytes(), &IngestConfig::default()),
            Err(Error::CsvRow { row: 3, .. })
        ));
        let dup = "Date,Close\n2020-01-02,100\n2020-01-02,110\n2020-01-03,105\n";
        match ingest_prices(dup.as_bytes(), &IngestConfig::default()) {
            Err(Error::DuplicateDates(list)) => assert!(list.contains("2020-01-02")),
            other => panic!("expected duplicate-date error, got {other:?}"),
        }
        let missing = "Day,Close\n2020-01-02,100\n";
        assert!(matches!(
            ingest_prices(missing.as_bytes(), &IngestConfig::default()),
            Err(Error::MissingColumn(c)) if c == "Date"
        ));
        let short = "Date,Close\n2020-01-02,100\n";
        assert!(matches!(
            ingest_prices(short.as_bytes(), &IngestConfig::default()),
            Err(Error::TooFewRows(1))
        ));
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let text = "Date,Close\n2020-01-02,100\n2020-01-03,103.7\n2020-01-06,99.185\n2020-01-07,104.4401\n";
        let (rs, _) = ingest_prices(text.as_bytes(), &IngestConfig::default()).unwrap();
        let emitted = rs.to_csv();
        let back = ReturnSeries::from_csv(emitted.as_bytes(), rs.source()).unwrap();
        assert_eq!(back.dates(), rs.dates());
        assert_eq!(back.returns(), rs.returns());
    }

    /// Gap-free daily series spanning the given years.
    fn daily_series(start_year: i32, end_year: i32) -> ReturnSeries {
        let mut dates = Vec::new();
        let mut day = NaiveDate::from_ymd_opt(start_year, 1, 1).unwrap();
        let stop = NaiveDate::from_ymd_opt(end_year + 1, 1, 1).unwrap();
        while day < stop {
            dates.push(day);
            day = day.succ_opt().unwrap();
        }
        let returns: Vec<f64> = (0..dates.len())
            .map(|i| 1e-4 * (i as f64 - 10.0))
            .collect();
        ReturnSeries::new(dates, returns, "synthetic".into()).unwrap()
    }

    #[test]
    fn year_slices_partition_the_series() {
        let rs = daily_series(2019, 2021);
        // Leap year 2020 has 366 days.
        assert_eq!(slice_by_year(&rs, 2019).unwrap().len(), 365);
        assert_eq!(slice_by_year(&rs, 2020).unwrap().len(), 366);
        assert_eq!(slice_by_year(&rs, 2021).unwrap().len(), 365);
        assert!(matches!(
            slice_by_year(&rs, 2024),
            Err(Error::EmptyYear(2024))
        ));
        let total: usize = rs
            .years()
            .iter()
            .map(|&y| slice_by_year(&rs, y).unwrap().len())
            .sum();
        assert_eq!(total, rs.len());
        assert_eq!(rs.years(), vec![2019, 2020, 2021]);
        // Concatenated slices reproduce the series in order.
        let mut rebuilt = Vec::new();
        for y in rs.years() {
            rebuilt.extend_from_slice(slice_by_year(&rs, y).unwrap().values());
        }
        assert_eq!(rebuilt, rs.returns());
    }
}
