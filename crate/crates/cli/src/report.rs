//! The report envelope every command emits, and the two renderers.
//!
//! JSON carries the full structure; CSV flattens the payload into one table
//! per command. Parameters live in a sorted map and floats serialize via
//! their shortest round-trip representation, so a report is byte-identical
//! across runs with the same inputs.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use logparadox::{
    BaseSensitivity, DiffResult, KmerExperiment, MeanSummary, SignPrediction, SweepReport,
};
use serde::{Deserialize, Serialize};

use crate::{CliError, Format};

/// Version of the report layout itself.
pub const SCHEMA_VERSION: u32 = 1;

/// The envelope: what ran, with which parameters and seed, and what came out.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    /// Version of the report layout.
    pub schema_version: u32,
    /// Version of the binary that produced the report.
    pub tool_version: String,
    /// Which command ran.
    pub command: String,
    /// Effective parameters, stringified, in sorted order.
    pub params: BTreeMap<String, String>,
    /// Master seed in effect (0 unless set via --seed or LOGPARADOX_SEED).
    pub seed: u64,
    /// Command-specific results.
    pub payload: Payload,
}

impl ExperimentReport {
    /// Wraps a payload with the current schema and tool versions.
    pub fn new(
        command: &str,
        params: BTreeMap<String, String>,
        seed: u64,
        payload: Payload,
    ) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            params,
            seed,
            payload,
        }
    }
}

/// Command-specific report bodies.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    /// One column summarized.
    Summary {
        summary: MeanSummary<f64>,
        base: f64,
        transform_mode: String,
        transformed_mean: f64,
        base_sensitivity: BaseSensitivity<f64>,
    },
    /// One edit differenced in closed form and by brute force.
    Diff {
        operation: String,
        closed: ClosedDiff,
        oracle: DiffResult<f64>,
        /// Largest absolute disagreement between the closed forms and the
        /// brute-force recomputation, over the components both produced.
        agreement_delta: f64,
        /// Signs predicted from the means of the edit's pieces alone; absent
        /// when the edit has no matched-size sign rule.
        prediction: Option<SignPrediction>,
    },
    /// A trajectory of repeated mean-flattening edits.
    Induce {
        mode: String,
        steps: u32,
        initial: MeanSummary<f64>,
        #[serde(rename = "final")]
        final_summary: MeanSummary<f64>,
        trajectory: Vec<TrajectoryRow>,
    },
    /// Replacement sweeps with bootstrap significance, one per sample size.
    BootstrapSweep {
        max_fraction: f64,
        step: usize,
        reports: Vec<SweepReport<f64>>,
    },
    /// The two-population simulation.
    Markov {
        model_a: ModelDescription,
        model_b: ModelDescription,
        /// Whether both populations carry the same total structure count.
        protein_matched: bool,
        grand_arith_a: f64,
        grand_geom_a: f64,
        grand_arith_b: f64,
        grand_geom_b: f64,
        experiment: Box<KmerExperiment<f64>>,
    },
    /// Reversal-room scores over a (min, max) grid.
    SweepSurface {
        min_grid: Vec<f64>,
        max_grid: Vec<f64>,
        /// `matrix[i][j]` scores `(min_grid[i], max_grid[j])`.
        matrix: Vec<Vec<f64>>,
    },
    /// A synthetic dataset.
    Generate { family: String, values: Vec<f64> },
}

/// Closed-form differences; the geometric components are absent when a
/// replacement inserts and removes differently many values, where only the
/// arithmetic difference has a closed form.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedDiff {
    pub d_arith: f64,
    pub d_geom: Option<f64>,
    pub d_id: Option<f64>,
    pub paradox_signed: Option<bool>,
}

/// One step of an `induce` trajectory; step 0 is the untouched input.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub step: usize,
    pub arith_mean: f64,
    pub geom_mean: f64,
    /// Gap between the two means after this step.
    pub id: f64,
    /// Arithmetic mean minus its initial value.
    pub cum_d_arith: f64,
    /// Geometric mean minus its initial value.
    pub cum_d_geom: f64,
}

/// A population model as configured and derived.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelDescription {
    pub counts: Vec<u64>,
    pub states: Vec<u64>,
    pub structure_frequencies: Vec<f64>,
    pub protein_total: u64,
}

/// The flat table a report renders to under `--format csv`.
#[derive(Debug)]
pub struct CsvTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Renders the report in the requested format to `output` (stdout when
/// absent).
pub fn emit(
    report: &ExperimentReport,
    table: &CsvTable,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let bytes = match format {
        Format::Json => {
            let mut text = serde_json::to_string_pretty(report)
                .map_err(|e| CliError::Data(format!("cannot serialize the report: {e}")))?;
            text.push('\n');
            text.into_bytes()
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            writer.write_record(&table.header).map_err(csv_error)?;
            for row in &table.rows {
                writer.write_record(row).map_err(csv_error)?;
            }
            writer
                .into_inner()
                .map_err(|e| CliError::Data(format!("cannot render the csv table: {e}")))?
        }
    };
    match output {
        Some(path) => std::fs::write(path, &bytes)
            .map_err(|e| CliError::Data(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(&bytes)
            .map_err(|e| CliError::Data(format!("cannot write to stdout: {e}"))),
    }
}

fn csv_error(e: csv::Error) -> CliError {
    CliError::Data(format!("cannot render the csv table: {e}"))
}

/// Shortest representation of `v` that parses back to the same bits.
pub fn fmt_f(v: f64) -> String {
    format!("{v}")
}

/// [`fmt_f`] with `None` rendered as an empty field.
pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_f).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let mut params = BTreeMap::new();
        params.insert("n".to_string(), "3".to_string());
        params.insert("kind".to_string(), "exponential".to_string());
        let report = ExperimentReport::new(
            "generate",
            params,
            7,
            Payload::Generate {
                family: "exponential".to_string(),
                values: vec![10.5, 0.1 + 0.2, 1e-300],
            },
        );
        let text = serde_json::to_string_pretty(&report).expect("serializable");
        let parsed: ExperimentReport = serde_json::from_str(&text).expect("parseable");
        assert_eq!(parsed, report);
    }

    #[test]
    fn diff_payload_round_trips_with_absent_components() {
        let report = ExperimentReport::new(
            "diff",
            BTreeMap::new(),
            0,
            Payload::Diff {
                operation: "replace".to_string(),
                closed: ClosedDiff {
                    d_arith: -0.25,
                    d_geom: None,
                    d_id: None,
                    paradox_signed: None,
                },
                oracle: DiffResult {
                    d_arith: -0.25,
                    d_geom: 0.3,
                    d_id: -0.55,
                    paradox_signed: true,
                },
                agreement_delta: 0.0,
                prediction: None,
            },
        );
        let text = serde_json::to_string(&report).expect("serializable");
        let parsed: ExperimentReport = serde_json::from_str(&text).expect("parseable");
        assert_eq!(parsed, report);
    }

    #[test]
    fn float_formatting_round_trips_exactly() {
        for v in [0.1 + 0.2, 1.0 / 3.0, 6.25, 1e-300, f64::MAX] {
            let text = fmt_f(v);
            assert_eq!(text.parse::<f64>().expect("parses").to_bits(), v.to_bits());
        }
        assert_eq!(fmt_opt(None), "");
    }
}
