//! Command bodies: thin wrappers that load input, call one library entry
//! point, and wrap the result in a report.

use std::collections::BTreeMap;
use std::path::Path;

use logparadox::rng::derive_seed;
use logparadox::{
    closed_form_diff, condition_check, d_surface, diff_arith, gen_exponential, gen_symmetric_tails,
    insert_step, kmer_experiment, markov_model, oracle_diff, replace_step, replacement_sweep,
    BootstrapConfig, DiffError, MarkovKmerModel, Perturbation, ReplaceSelector, SampleVector, Sign,
    Statistic, SweepPoint, TransformMode, TransformOptions, VectorError,
};

use crate::input::load_column;
use crate::report::{
    emit, fmt_f, fmt_opt, ClosedDiff, CsvTable, ExperimentReport, ModelDescription, Payload,
    TrajectoryRow,
};
use crate::{Cli, CliError, Command, DiffOp, Format, GenerateKind, InduceMode, InputArgs};

/// Dispatches the parsed invocation.
pub fn run(cli: Cli) -> Result<(), CliError> {
    let seed = cli.seed.unwrap_or(0);
    let format = cli.format;
    let output = cli.output.as_deref();
    match cli.command {
        Command::Summary {
            input,
            base,
            offset,
            clamp_epsilon,
        } => cmd_summary(&input, base, offset, clamp_epsilon, seed, format, output),
        Command::Diff {
            input,
            op,
            y,
            z,
            match_tolerance,
        } => cmd_diff(
            &input,
            op,
            &y,
            z.as_deref(),
            match_tolerance,
            seed,
            format,
            output,
        ),
        Command::Induce { input, mode, steps } => {
            cmd_induce(&input, mode, steps, seed, format, output)
        }
        Command::BootstrapSweep {
            input,
            sample_sizes,
            resamples,
            max_fraction,
            step,
            smooth,
        } => cmd_bootstrap_sweep(
            &input,
            &sample_sizes,
            resamples,
            max_fraction,
            step,
            smooth,
            seed,
            format,
            output,
        ),
        Command::Markov {
            model_a,
            model_b,
            states,
            cells,
            per_cell,
        } => cmd_markov(
            &model_a, &model_b, &states, cells, per_cell, seed, format, output,
        ),
        Command::SweepSurface { min_grid, max_grid } => {
            cmd_sweep_surface(&min_grid, &max_grid, seed, format, output)
        }
        Command::Generate { kind } => cmd_generate(&kind, seed, format, output),
    }
}

fn cmd_summary(
    input: &InputArgs,
    base: f64,
    offset: Option<f64>,
    clamp_epsilon: Option<f64>,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let x = load_column(&input.input, &input.column)?;
    let summary = x.summarize();

    // --offset and --clamp-epsilon conflict at the parser, so at most one
    // of them is present here.
    let (transform_mode, options) = match (offset, clamp_epsilon) {
        (Some(offset), None) => (
            "offset",
            TransformOptions {
                base,
                mode: TransformMode::Offset,
                offset,
                ..TransformOptions::default()
            },
        ),
        (None, Some(clamp_epsilon)) => (
            "clamp",
            TransformOptions {
                base,
                mode: TransformMode::Clamp,
                clamp_epsilon,
                ..TransformOptions::default()
            },
        ),
        _ => (
            "plain",
            TransformOptions {
                base,
                ..TransformOptions::default()
            },
        ),
    };
    let transformed = x
        .log_transform(&options)
        .map_err(|e| CliError::Data(e.to_string()))?;
    let transformed_mean = transformed.iter().sum::<f64>() / transformed.len() as f64;
    let base_sensitivity = x
        .base_sensitivity(base)
        .map_err(|e| CliError::Data(e.to_string()))?;

    let mut params = input_params(input);
    params.insert("base".to_string(), fmt_f(base));
    if let Some(offset) = offset {
        params.insert("offset".to_string(), fmt_f(offset));
    }
    if let Some(clamp_epsilon) = clamp_epsilon {
        params.insert("clamp_epsilon".to_string(), fmt_f(clamp_epsilon));
    }

    let table = CsvTable {
        header: str_row(&[
            "n",
            "arith_mean",
            "geom_mean",
            "id",
            "flatness",
            "base",
            "transform_mode",
            "transformed_mean",
            "min_below_base",
            "derivative_at_min",
        ]),
        rows: vec![vec![
            summary.n.to_string(),
            fmt_f(summary.arith_mean),
            fmt_f(summary.geom_mean),
            fmt_f(summary.id),
            fmt_f(summary.flatness),
            fmt_f(base),
            transform_mode.to_string(),
            fmt_f(transformed_mean),
            base_sensitivity.min_below_base.to_string(),
            fmt_f(base_sensitivity.derivative_at_min),
        ]],
    };
    let report = ExperimentReport::new(
        "summary",
        params,
        seed,
        Payload::Summary {
            summary,
            base,
            transform_mode: transform_mode.to_string(),
            transformed_mean,
            base_sensitivity,
        },
    );
    emit(&report, &table, format, output)
}

#[allow(clippy::too_many_arguments)]
fn cmd_diff(
    input: &InputArgs,
    op: DiffOp,
    y: &[f64],
    z: Option<&[f64]>,
    match_tolerance: f64,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if !match_tolerance.is_finite() || match_tolerance < 0.0 {
        return Err(CliError::Usage(
            "--match-tolerance must be finite and >= 0".to_string(),
        ));
    }
    let x = load_column(&input.input, &input.column)?;
    let y_vec = flag_vector(y, "--y")?;

    let perturbation = match op {
        DiffOp::Concat | DiffOp::Delete => {
            if z.is_some() {
                return Err(CliError::Usage(
                    "--z only applies to --op replace".to_string(),
                ));
            }
            match op {
                DiffOp::Concat => Perturbation::Concat(y_vec),
                _ => Perturbation::Delete(resolve_removals(&x, &y_vec, match_tolerance)?),
            }
        }
        DiffOp::Replace => {
            let z = z.ok_or_else(|| {
                CliError::Usage("--op replace needs --z with the values to remove".to_string())
            })?;
            let z_vec = flag_vector(z, "--z")?;
            Perturbation::Replace {
                insert: y_vec,
                remove: resolve_removals(&x, &z_vec, match_tolerance)?,
            }
        }
    };

    let oracle = oracle_diff(&x, &perturbation).map_err(|e| CliError::Data(e.to_string()))?;
    let closed = match closed_form_diff(&x, &perturbation) {
        Ok(d) => ClosedDiff {
            d_arith: d.d_arith,
            d_geom: Some(d.d_geom),
            d_id: Some(d.d_id),
            paradox_signed: Some(d.paradox_signed),
        },
        Err(DiffError::ReplaceSizeMismatch { .. }) => ClosedDiff {
            d_arith: diff_arith(&x, &perturbation).map_err(|e| CliError::Data(e.to_string()))?,
            d_geom: None,
            d_id: None,
            paradox_signed: None,
        },
        Err(e) => return Err(CliError::Data(e.to_string())),
    };

    let mut agreement_delta = (closed.d_arith - oracle.d_arith).abs();
    if let Some(d_geom) = closed.d_geom {
        agreement_delta = agreement_delta.max((d_geom - oracle.d_geom).abs());
    }
    if let Some(d_id) = closed.d_id {
        agreement_delta = agreement_delta.max((d_id - oracle.d_id).abs());
    }
    let prediction = condition_check(&x, &perturbation).ok();

    let mut params = input_params(input);
    params.insert("op".to_string(), op_name(op).to_string());
    params.insert("y".to_string(), join_f(y));
    if let Some(z) = z {
        params.insert("z".to_string(), join_f(z));
    }
    params.insert("match_tolerance".to_string(), fmt_f(match_tolerance));

    let table = CsvTable {
        header: str_row(&[
            "operation",
            "closed_d_arith",
            "closed_d_geom",
            "closed_d_id",
            "closed_paradox_signed",
            "oracle_d_arith",
            "oracle_d_geom",
            "oracle_d_id",
            "oracle_paradox_signed",
            "agreement_delta",
            "predicted_sign_arith",
            "predicted_sign_geom",
        ]),
        rows: vec![vec![
            op_name(op).to_string(),
            fmt_f(closed.d_arith),
            fmt_opt(closed.d_geom),
            fmt_opt(closed.d_id),
            closed
                .paradox_signed
                .map(|b| b.to_string())
                .unwrap_or_default(),
            fmt_f(oracle.d_arith),
            fmt_f(oracle.d_geom),
            fmt_f(oracle.d_id),
            oracle.paradox_signed.to_string(),
            fmt_f(agreement_delta),
            prediction
                .map(|p| sign_name(p.sign_arith).to_string())
                .unwrap_or_default(),
            prediction
                .map(|p| sign_name(p.sign_geom).to_string())
                .unwrap_or_default(),
        ]],
    };
    let report = ExperimentReport::new(
        "diff",
        params,
        seed,
        Payload::Diff {
            operation: op_name(op).to_string(),
            closed,
            oracle,
            agreement_delta,
            prediction,
        },
    );
    emit(&report, &table, format, output)
}

fn cmd_induce(
    input: &InputArgs,
    mode: InduceMode,
    steps: u32,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut x = load_column(&input.input, &input.column)?;
    let initial = x.summarize();
    let mut trajectory = vec![TrajectoryRow {
        step: 0,
        arith_mean: initial.arith_mean,
        geom_mean: initial.geom_mean,
        id: initial.id,
        cum_d_arith: 0.0,
        cum_d_geom: 0.0,
    }];

    for step_number in 1..=steps {
        let edited = match mode {
            InduceMode::Insert => insert_step(&x).0,
            InduceMode::ReplaceMinmax => {
                replace_step(&x, ReplaceSelector::MinMax)
                    .map_err(|e| CliError::Data(e.to_string()))?
                    .0
            }
            InduceMode::ReplaceRandom => {
                let step_seed = derive_seed(seed, u64::from(step_number));
                replace_step(&x, ReplaceSelector::Random(step_seed))
                    .map_err(|e| CliError::Data(e.to_string()))?
                    .0
            }
        };
        x = edited;
        let s = x.summarize();
        trajectory.push(TrajectoryRow {
            step: step_number as usize,
            arith_mean: s.arith_mean,
            geom_mean: s.geom_mean,
            id: s.id,
            cum_d_arith: s.arith_mean - initial.arith_mean,
            cum_d_geom: s.geom_mean - initial.geom_mean,
        });
    }
    let final_summary = x.summarize();

    let mut params = input_params(input);
    params.insert("mode".to_string(), mode_name(mode).to_string());
    params.insert("steps".to_string(), steps.to_string());

    let table = CsvTable {
        header: str_row(&[
            "step",
            "arith_mean",
            "geom_mean",
            "id",
            "cum_d_arith",
            "cum_d_geom",
        ]),
        rows: trajectory
            .iter()
            .map(|row| {
                vec![
                    row.step.to_string(),
                    fmt_f(row.arith_mean),
                    fmt_f(row.geom_mean),
                    fmt_f(row.id),
                    fmt_f(row.cum_d_arith),
                    fmt_f(row.cum_d_geom),
                ]
            })
            .collect(),
    };
    let report = ExperimentReport::new(
        "induce",
        params,
        seed,
        Payload::Induce {
            mode: mode_name(mode).to_string(),
            steps,
            initial,
            final_summary,
            trajectory,
        },
    );
    emit(&report, &table, format, output)
}

#[allow(clippy::too_many_arguments)]
fn cmd_bootstrap_sweep(
    input: &InputArgs,
    sample_sizes: &[usize],
    resamples: u32,
    max_fraction: f64,
    step: u32,
    smooth: bool,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if sample_sizes.is_empty() {
        return Err(CliError::Usage(
            "--sample-sizes needs at least one size".to_string(),
        ));
    }
    if sample_sizes.contains(&0) {
        return Err(CliError::Usage(
            "--sample-sizes entries must be >= 1".to_string(),
        ));
    }
    let x = load_column(&input.input, &input.column)?;

    // The same master seed feeds every sweep, so different sample sizes see
    // the same sequence of edited vectors.
    let mut reports = Vec::with_capacity(sample_sizes.len());
    for &sample_size in sample_sizes {
        let cfg = BootstrapConfig {
            sample_size,
            n_resamples: resamples as usize,
            statistic: Statistic::ArithMean,
            seed,
        };
        let report = replacement_sweep(&x, max_fraction, step as usize, &cfg)
            .map_err(|e| CliError::Data(e.to_string()))?;
        reports.push(report);
    }

    let mut header = str_row(&[
        "row_kind",
        "sample_size",
        "k",
        "p_arith",
        "p_geom",
        "d_arith_of_sample_means",
        "d_geom_of_sample_means",
        "paradox_direction_ok",
        "alpha",
        "first_k_arith",
        "first_k_geom",
    ]);
    if smooth {
        header.push("p_arith_smooth10".to_string());
        header.push("p_geom_smooth10".to_string());
    }
    let blank = String::new();
    let mut rows = Vec::new();
    for report in &reports {
        let smooth_arith = trailing_mean10(&report.points, |p| p.p_arith);
        let smooth_geom = trailing_mean10(&report.points, |p| p.p_geom);
        for (i, point) in report.points.iter().enumerate() {
            let mut row = vec![
                "point".to_string(),
                report.sample_size.to_string(),
                point.k.to_string(),
                fmt_f(point.p_arith),
                fmt_f(point.p_geom),
                fmt_f(point.d_arith_of_sample_means),
                fmt_f(point.d_geom_of_sample_means),
                point.paradox_direction_ok.to_string(),
                blank.clone(),
                blank.clone(),
                blank.clone(),
            ];
            if smooth {
                row.push(fmt_f(smooth_arith[i]));
                row.push(fmt_f(smooth_geom[i]));
            }
            rows.push(row);
        }
        for crossing in &report.crossings {
            let mut row = vec![
                "crossing".to_string(),
                report.sample_size.to_string(),
                blank.clone(),
                blank.clone(),
                blank.clone(),
                blank.clone(),
                blank.clone(),
                blank.clone(),
                fmt_f(crossing.alpha),
                crossing
                    .first_k_arith
                    .map(|k| k.to_string())
                    .unwrap_or_default(),
                crossing
                    .first_k_geom
                    .map(|k| k.to_string())
                    .unwrap_or_default(),
            ];
            if smooth {
                row.push(blank.clone());
                row.push(blank.clone());
            }
            rows.push(row);
        }
    }

    let mut params = input_params(input);
    params.insert("sample_sizes".to_string(), join_usize(sample_sizes));
    params.insert("resamples".to_string(), resamples.to_string());
    params.insert("max_fraction".to_string(), fmt_f(max_fraction));
    params.insert("step".to_string(), step.to_string());
    params.insert("smooth".to_string(), smooth.to_string());

    let report = ExperimentReport::new(
        "bootstrap-sweep",
        params,
        seed,
        Payload::BootstrapSweep {
            max_fraction,
            step: step as usize,
            reports,
        },
    );
    emit(&report, &CsvTable { header, rows }, format, output)
}

#[allow(clippy::too_many_arguments)]
fn cmd_markov(
    model_a_counts: &[u64],
    model_b_counts: &[u64],
    states: &[u64],
    cells: u32,
    per_cell: u32,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let model_a = markov_model(model_a_counts, states)
        .map_err(|e| CliError::Data(format!("--model-a: {e}")))?;
    let model_b = markov_model(model_b_counts, states)
        .map_err(|e| CliError::Data(format!("--model-b: {e}")))?;
    let protein_matched = model_a.check_protein_matched(&model_b).is_ok();

    let experiment =
        kmer_experiment::<f64>(&model_a, &model_b, cells as usize, per_cell as usize, seed);
    let grand_arith_a = mean(&experiment.arith_means_a);
    let grand_geom_a = mean(&experiment.geom_means_a);
    let grand_arith_b = mean(&experiment.arith_means_b);
    let grand_geom_b = mean(&experiment.geom_means_b);

    let mut params = BTreeMap::new();
    params.insert("model_a".to_string(), join_u(model_a_counts));
    params.insert("model_b".to_string(), join_u(model_b_counts));
    params.insert("states".to_string(), join_u(states));
    params.insert("cells".to_string(), cells.to_string());
    params.insert("per_cell".to_string(), per_cell.to_string());

    let mut rows = Vec::with_capacity(2 * cells as usize);
    for (line, arith_means, geom_means) in [
        ("a", &experiment.arith_means_a, &experiment.geom_means_a),
        ("b", &experiment.arith_means_b, &experiment.geom_means_b),
    ] {
        for (cell, (&arith, &geom)) in arith_means.iter().zip(geom_means).enumerate() {
            rows.push(vec![
                line.to_string(),
                cell.to_string(),
                fmt_f(arith),
                fmt_f(geom),
            ]);
        }
    }
    let table = CsvTable {
        header: str_row(&["line", "cell", "arith_mean_volume", "geom_mean_volume"]),
        rows,
    };

    let report = ExperimentReport::new(
        "markov",
        params,
        seed,
        Payload::Markov {
            model_a: describe_model(&model_a),
            model_b: describe_model(&model_b),
            protein_matched,
            grand_arith_a,
            grand_geom_a,
            grand_arith_b,
            grand_geom_b,
            experiment: Box::new(experiment),
        },
    );
    emit(&report, &table, format, output)
}

fn cmd_sweep_surface(
    min_grid_text: &str,
    max_grid_text: &str,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let min_grid = parse_grid(min_grid_text, "--min-grid")?;
    let max_grid = parse_grid(max_grid_text, "--max-grid")?;
    let matrix = d_surface(&min_grid, &max_grid).map_err(|e| CliError::Data(e.to_string()))?;

    let mut header = vec!["min\\max".to_string()];
    header.extend(max_grid.iter().map(|&v| fmt_f(v)));
    let rows = min_grid
        .iter()
        .zip(&matrix)
        .map(|(&min_value, row)| {
            let mut fields = Vec::with_capacity(row.len() + 1);
            fields.push(fmt_f(min_value));
            fields.extend(row.iter().map(|&v| fmt_f(v)));
            fields
        })
        .collect();

    let mut params = BTreeMap::new();
    params.insert("min_grid".to_string(), min_grid_text.to_string());
    params.insert("max_grid".to_string(), max_grid_text.to_string());

    let report = ExperimentReport::new(
        "sweep-surface",
        params,
        seed,
        Payload::SweepSurface {
            min_grid,
            max_grid,
            matrix,
        },
    );
    emit(&report, &CsvTable { header, rows }, format, output)
}

fn cmd_generate(
    kind: &GenerateKind,
    seed: u64,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let mut params = BTreeMap::new();
    let (kind_name, values) = match kind {
        GenerateKind::Exponential { n } => {
            params.insert("n".to_string(), n.to_string());
            (
                "exponential",
                gen_exponential::<f64>(*n as usize, seed).into_values(),
            )
        }
        GenerateKind::SymmetricTails { mu, sigma, n } => {
            params.insert("mu".to_string(), fmt_f(*mu));
            params.insert("sigma".to_string(), fmt_f(*sigma));
            params.insert("n".to_string(), n.to_string());
            let vector = gen_symmetric_tails::<f64>(*mu, *sigma, *n as usize, seed)
                .map_err(|e| CliError::Data(e.to_string()))?;
            ("symmetric-tails", vector.into_values())
        }
    };
    params.insert("family".to_string(), kind_name.to_string());

    let table = CsvTable {
        header: vec!["value".to_string()],
        rows: values.iter().map(|&v| vec![fmt_f(v)]).collect(),
    };
    let report = ExperimentReport::new(
        "generate",
        params,
        seed,
        Payload::Generate {
            family: kind_name.to_string(),
            values,
        },
    );
    emit(&report, &table, format, output)
}

/// Wraps flag-supplied values, attributing validation failures to the flag.
fn flag_vector(values: &[f64], flag: &str) -> Result<SampleVector<f64>, CliError> {
    SampleVector::new(values.to_vec()).map_err(|e| CliError::Data(format!("{flag}: {e}")))
}

/// Resolves user-typed removal values to elements of `x`. With zero
/// tolerance the values pass through untouched and must match exactly
/// downstream; with a positive tolerance each value is matched to a distinct
/// element within it and the matched elements are removed instead, so a
/// rounded rendition of an element works.
fn resolve_removals(
    x: &SampleVector<f64>,
    approx: &SampleVector<f64>,
    tolerance: f64,
) -> Result<SampleVector<f64>, CliError> {
    if tolerance == 0.0 {
        return Ok(approx.clone());
    }
    match x.multiset_difference_within(approx, tolerance) {
        Ok(survivors) => x
            .multiset_difference(&survivors)
            .map_err(|e| CliError::Data(e.to_string())),
        // A complete matching that consumes the whole vector: every element
        // is a removal target (legal for a full replacement).
        Err(VectorError::EmptyVector) if approx.len() == x.len() => Ok(x.clone()),
        Err(e) => Err(CliError::Data(e.to_string())),
    }
}

/// Grid syntax: comma-separated values ("2,4,8"), or "start:stop:count" for
/// an inclusive linear range.
fn parse_grid(text: &str, flag: &str) -> Result<Vec<f64>, CliError> {
    let bad = |detail: String| CliError::Data(format!("{flag}: {detail}"));
    if text.contains(':') {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(bad(format!(
                "range syntax is start:stop:count, got '{text}'"
            )));
        }
        let number = |piece: &str| {
            piece
                .trim()
                .parse::<f64>()
                .map_err(|_| bad(format!("'{}' is not a number", piece.trim())))
        };
        let start = number(parts[0])?;
        let stop = number(parts[1])?;
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|_| bad(format!("'{}' is not a whole number", parts[2].trim())))?;
        if count == 0 {
            return Err(bad("count must be >= 1".to_string()));
        }
        if count == 1 {
            return Ok(vec![start]);
        }
        let step = (stop - start) / (count - 1) as f64;
        Ok((0..count).map(|i| start + step * i as f64).collect())
    } else {
        text.split(',')
            .map(|piece| {
                piece
                    .trim()
                    .parse::<f64>()
                    .map_err(|_| bad(format!("'{}' is not a number", piece.trim())))
            })
            .collect()
    }
}

fn input_params(input: &InputArgs) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    params.insert("input".to_string(), input.input.display().to_string());
    params.insert("column".to_string(), input.column.clone());
    params
}

fn describe_model(model: &MarkovKmerModel) -> ModelDescription {
    ModelDescription {
        counts: model.counts().to_vec(),
        states: model.states().to_vec(),
        structure_frequencies: model.structure_frequencies().to_vec(),
        protein_total: model.protein_total(),
    }
}

/// Trailing moving average over up to the last 10 points, one value per
/// point; the window is partial at the start of the series.
fn trailing_mean10<F: Fn(&SweepPoint<f64>) -> f64>(
    points: &[SweepPoint<f64>],
    pick: F,
) -> Vec<f64> {
    (0..points.len())
        .map(|i| {
            let lo = i.saturating_sub(9);
            let window = &points[lo..=i];
            window.iter().map(&pick).sum::<f64>() / window.len() as f64
        })
        .collect()
}

fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

fn op_name(op: DiffOp) -> &'static str {
    match op {
        DiffOp::Concat => "concat",
        DiffOp::Delete => "delete",
        DiffOp::Replace => "replace",
    }
}

fn mode_name(mode: InduceMode) -> &'static str {
    match mode {
        InduceMode::Insert => "insert",
        InduceMode::ReplaceMinmax => "replace-minmax",
        InduceMode::ReplaceRandom => "replace-random",
    }
}

fn sign_name(sign: Sign) -> &'static str {
    match sign {
        Sign::Negative => "negative",
        Sign::Zero => "zero",
        Sign::Positive => "positive",
    }
}

fn join_f(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| fmt_f(v))
        .collect::<Vec<_>>()
        .join(",")
}

fn join_u(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn join_usize(values: &[usize]) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn str_row(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}
