//! CSV input: load one column of positive values, naming the offending file
//! row on any failure.

use std::path::Path;

use logparadox::{SampleVector, VectorError};

use crate::CliError;

/// Reads `column` (a 0-based index or a header name) from the CSV file at
/// `path`.
///
/// The first row counts as a header exactly when at least one of its fields
/// does not parse as a number. Error messages cite 1-based file rows, header
/// included.
pub fn load_column(path: &Path, column: &str) -> Result<SampleVector<f64>, CliError> {
    let data = |message: String| CliError::Data(format!("{}: {message}", path.display()));

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Data(format!("cannot read {}: {e}", path.display())))?;

    let mut records = Vec::new();
    for (index, record) in reader.records().enumerate() {
        let record = record.map_err(|e| data(format!("row {}: {e}", index + 1)))?;
        records.push(record);
    }
    if records.is_empty() {
        return Err(data("file has no rows".to_string()));
    }

    let has_header = !records[0].iter().all(|field| field.parse::<f64>().is_ok());
    let width = records[0].len();
    let index = match column.parse::<usize>() {
        Ok(i) => {
            if i >= width {
                return Err(data(format!(
                    "column index {i} is out of range; the file has {width} columns"
                )));
            }
            i
        }
        Err(_) => {
            if !has_header {
                return Err(data(format!(
                    "column '{column}' was requested by name, but the file has no header row"
                )));
            }
            records[0]
                .iter()
                .position(|name| name == column)
                .ok_or_else(|| data(format!("no column named '{column}' in the header")))?
        }
    };

    let header_offset = usize::from(has_header);
    let data_rows = &records[header_offset..];
    if data_rows.is_empty() {
        return Err(data("no data rows below the header".to_string()));
    }

    let mut values = Vec::with_capacity(data_rows.len());
    for (offset, record) in data_rows.iter().enumerate() {
        let row = offset + header_offset + 1;
        let field = record
            .get(index)
            .ok_or_else(|| data(format!("row {row} has no column {index}")))?;
        let value: f64 = field
            .parse()
            .map_err(|_| data(format!("row {row}: '{field}' is not a number")))?;
        values.push(value);
    }

    SampleVector::new(values).map_err(|e| match e {
        VectorError::NonFiniteElement { index } | VectorError::NonPositiveElement { index } => {
            data(format!("row {}: {e}", index + header_offset + 1))
        }
        other => data(other.to_string()),
    })
}
