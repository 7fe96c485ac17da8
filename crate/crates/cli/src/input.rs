use std::fs;
use std::path::Path;

use kde_complexity::{ingest_prices, slice_by_year, IngestConfig, ReturnSeries, Sample};

use crate::error::{CliError, Result};
use crate::flags::InputFlags;

/// Column names looked up in price inputs.
pub struct Columns<'a> {
    pub date: &'a str,
    pub price: &'a str,
    pub simple_returns: bool,
}

impl<'a> From<&'a InputFlags> for Columns<'a> {
    fn from(flags: &'a InputFlags) -> Self {
        Columns {
            date: &flags.date_column,
            price: &flags.price_column,
            simple_returns: flags.simple_returns,
        }
    }
}

fn header_fields(bytes: &[u8], path: &Path) -> Result<Vec<String>> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::Data(format!("{}: not valid UTF-8", path.display())))?;
    let first = text
        .lines()
        .next()
        .ok_or_else(|| CliError::Data(format!("{}: empty file", path.display())))?;
    Ok(first.split(',').map(|f| f.trim().to_owned()).collect())
}

fn parse_value_rows(bytes: &[u8], path: &Path) -> Result<Vec<f64>> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| CliError::Data(format!("{}: not valid UTF-8", path.display())))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line.parse().map_err(|e| {
            CliError::Data(format!("{} line {}: bad value: {e}", path.display(), i + 1))
        })?;
        values.push(v);
    }
    Ok(values)
}

/// Reads a dated series: `date,return` rows or dated prices. Bare value
/// columns are rejected because the caller needs dates.
pub fn load_returns(path: &Path, cols: &Columns<'_>) -> Result<ReturnSeries> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    let header = header_fields(&bytes, path)?;
    if header == ["date", "return"] {
        let source = path.display().to_string();
        return Ok(ReturnSeries::from_csv(&bytes, &source)?);
    }
    if header.iter().any(|f| f == cols.date) && header.iter().any(|f| f == cols.price) {
        let cfg = IngestConfig {
            date_column: cols.date.to_owned(),
            price_column: cols.price.to_owned(),
            simple_returns: cols.simple_returns,
            source_label: path.display().to_string(),
        };
        let (series, _) = ingest_prices(&bytes, &cfg)?;
        return Ok(series);
    }
    Err(CliError::Data(format!(
        "{}: unrecognized header {:?}; expected a `value` column, `date,return` rows, \
         or `{}`/`{}` price columns",
        path.display(),
        header.join(","),
        cols.date,
        cols.price,
    )))
}

/// Reads any supported CSV into time-ordered values, slicing to one year
/// when asked. Year slicing needs a dated format.
pub fn load_values(path: &Path, cols: &Columns<'_>, year: Option<i32>) -> Result<Vec<f64>> {
    let bytes = fs::read(path).map_err(|e| CliError::io(path, e))?;
    let header = header_fields(&bytes, path)?;
    if header == ["value"] {
        if year.is_some() {
            return Err(CliError::Usage(format!(
                "--year needs a dated input, but {} has only a value column",
                path.display()
            )));
        }
        return parse_value_rows(&bytes, path);
    }
    let series = load_returns(path, cols)?;
    match year {
        Some(y) => Ok(slice_by_year(&series, y)?.values().to_vec()),
        None => Ok(series.returns().to_vec()),
    }
}

/// Loads the sample input of a bandwidth command.
pub fn load_sample(flags: &InputFlags) -> Result<Sample> {
    let values = load_values(&flags.input, &Columns::from(flags), flags.year)?;
    Ok(Sample::new(values)?)
}
