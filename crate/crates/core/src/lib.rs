//! Calculus of the gap between arithmetic and geometric means.
//!
//! Two samples of positive data can order one way under the arithmetic mean
//! and the opposite way under the geometric mean, so a downstream analysis
//! that log-transforms its data can reverse a "significant" effect outright.
//! This crate makes that phenomenon computable:
//!
//! - [`stats`]: validated positive vectors, both means, the inequality
//!   deviation between them, and log transforms.
//! - [`diff`]: exact closed-form finite differences of both means under
//!   concatenation, deletion, and replacement, plus sign predictions and a
//!   brute-force oracle.
//! - [`paradox`]: reversal verdicts for sample pairs, the optimal insertion
//!   target, heuristics that steer a vector toward (or away from) reversal,
//!   and difficulty scores/surfaces.
//! - [`resample`]: bootstrap resampling, a self-contained Mann-Whitney U
//!   test, and the replacement sweep experiment measuring how few edits flip
//!   which mean.
//! - [`generate`]: seeded long-tailed and symmetric-tailed generators and a
//!   two-population simulation over discrete size classes.
//!
//! All randomized entry points take explicit `u64` seeds and reproduce their
//! output bit for bit.

pub mod diff;
pub mod generate;
pub mod paradox;
pub mod real;
pub mod resample;
pub mod rng;
pub mod stats;

pub use diff::{
    closed_form_diff, condition_check, diff_arith, diff_geom, diff_id, oracle_diff, DiffError,
    DiffResult, Perturbation, Sign, SignPrediction, SIGN_ZERO_BAND,
};
pub use paradox::{
    candidate_grid, d_score, d_surface, gradient_product_sweep, insert_step, optimal_target,
    paradox_verdict, replace_step, HeuristicStep, ParadoxError, ParadoxVerdict, ProductSweepPoint,
    ReplaceSelector, DEFAULT_GRID_POINTS,
};
pub use real::Real;
pub use resample::{
    bootstrap, mwu_test, mwu_test_with_method, replacement_sweep, Alternative, BootstrapConfig,
    MwuMethod, MwuResult, ResampleError, Statistic, SweepPoint, SweepReport, ThresholdCrossing,
    SWEEP_ALPHAS,
};
pub use stats::{
    BaseSensitivity, MeanSummary, SampleVector, TransformError, TransformMode, TransformOptions,
    VectorError,
};

pub use generate::{
    gen_exponential, gen_symmetric_tails, kmer_experiment, markov_model, sample_cells,
    standard_cell_models, CellSample, GenerateError, KmerExperiment, MarkovKmerModel,
};

/// `f64` vector alias; the workhorse instantiation.
pub type SampleVector64 = stats::SampleVector<f64>;
/// `f32` vector alias for memory-bound callers.
pub type SampleVector32 = stats::SampleVector<f32>;
/// `f64` summary alias.
pub type MeanSummary64 = stats::MeanSummary<f64>;
/// `f32` summary alias.
pub type MeanSummary32 = stats::MeanSummary<f32>;
