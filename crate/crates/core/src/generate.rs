//! Seeded dataset generators and a two-population size-class simulation.
//!
//! Three constructions produce the data the rest of the crate experiments
//! on: a long-tailed shifted exponential ([`gen_exponential`]), a
//! symmetric body with one left and one right tail element pinned at
//! sqrt(mu) and mu^2 ([`gen_symmetric_tails`]), and a discrete size-class
//! simulator ([`markov_model`] / [`sample_cells`] / [`kmer_experiment`])
//! in which cells draw structures of k elements and each structure's
//! volume is k^3. The simulator's two standard populations have equal
//! element totals yet reversed mean orderings: the arithmetic mean volume
//! favors one population and the geometric mean the other.
//!
//! Every generator is deterministic in its seed; cells draw from per-cell
//! substreams so cell i is the same no matter how many cells are sampled.

use thiserror::Error;

use rand_distr::{Exp1, StandardNormal};

use crate::paradox::ParadoxVerdict;
use crate::real::{t_from, t_from_usize, Real};
use crate::resample::{mwu_test, Alternative, MwuResult};
use crate::rng;
use crate::stats::SampleVector;

/// Failures of generator construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    /// A parameter is outside its documented domain.
    #[error("invalid parameters: {detail}")]
    InvalidParams { detail: String },
    /// A frequency model needs at least one occupied state.
    #[error("structure counts must not be all zero")]
    AllZeroCounts,
    /// Two models declared element-matched disagree on their totals.
    #[error("element totals differ: {left} vs {right}")]
    ProteinTotalMismatch { left: u64, right: u64 },
}

/// n draws of `10 + 1000 * Exponential(1)`: a long-tailed positive vector
/// with population mean 1010, sd 1000, and minimum strictly above 10.
pub fn gen_exponential<T: Real>(n: usize, seed: u64) -> SampleVector<T> {
    let mut rng = rng::stream(seed, 0);
    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        let mut e: f64 = rand::Rng::sample(&mut rng, Exp1);
        // An exactly-zero draw would put the value on the 10 boundary;
        // redraw so the minimum stays strictly above it.
        while e <= 0.0 {
            e = rand::Rng::sample(&mut rng, Exp1);
        }
        values.push(t_from::<T>(10.0 + 1000.0 * e));
    }
    SampleVector::new(values).expect("generated values are positive; n must be >= 1")
}

/// The pinned-tails construction `[sqrt(mu)] ++ (n draws of Normal(mu,
/// sigma), resampling any non-positive draw) ++ [mu^2]`: a symmetric body
/// flanked by one small and one large element. Requires `mu >= 10` (which
/// makes non-positive draws vanishingly rare for reasonable sigma) and
/// `sigma >= 0`.
pub fn gen_symmetric_tails<T: Real>(
    mu: T,
    sigma: T,
    n: usize,
    seed: u64,
) -> Result<SampleVector<T>, GenerateError> {
    let mu_f = crate::real::t_to(mu);
    let sigma_f = crate::real::t_to(sigma);
    if !mu_f.is_finite() || mu_f < 10.0 {
        return Err(GenerateError::InvalidParams {
            detail: format!("mu must be finite and >= 10, got {mu_f}"),
        });
    }
    if !sigma_f.is_finite() || sigma_f < 0.0 {
        return Err(GenerateError::InvalidParams {
            detail: format!("sigma must be finite and >= 0, got {sigma_f}"),
        });
    }
    let mut rng = rng::stream(seed, 0);
    let mut values = Vec::with_capacity(n + 2);
    values.push(t_from::<T>(mu_f.sqrt()));
    for _ in 0..n {
        let mut v = mu_f;
        if sigma_f > 0.0 {
            loop {
                let z: f64 = rand::Rng::sample(&mut rng, StandardNormal);
                v = mu_f + sigma_f * z;
                if v > 0.0 {
                    break;
                }
            }
        }
        values.push(t_from::<T>(v));
    }
    values.push(t_from::<T>(mu_f * mu_f));
    Ok(SampleVector::new(values).expect("constructed values are positive"))
}

/// A population over discrete size classes: class s contains structures of
/// `states[s]` elements each, sampled with probability
/// `structure_frequencies[s]`, and a structure's volume is `states[s]^3`
/// exactly.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MarkovKmerModel {
    states: Vec<u64>,
    counts: Vec<u64>,
    structure_frequencies: Vec<f64>,
    transition: Option<Vec<Vec<f64>>>,
}

impl MarkovKmerModel {
    /// Size classes (elements per structure).
    pub fn states(&self) -> &[u64] {
        &self.states
    }

    /// The raw structure counts the model was built from.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Sampling distribution over states; sums to 1 within 1e-12.
    pub fn structure_frequencies(&self) -> &[f64] {
        &self.structure_frequencies
    }

    /// Optional row-stochastic transition matrix, carried for model
    /// description; sampling draws i.i.d. from the frequencies.
    pub fn transition(&self) -> Option<&[Vec<f64>]> {
        self.transition.as_deref()
    }

    /// Total elements across all counted structures: sum of count * state.
    pub fn protein_total(&self) -> u64 {
        self.counts
            .iter()
            .zip(&self.states)
            .map(|(&c, &k)| c * k)
            .sum()
    }

    /// Exact per-state volumes (state^3) in the requested scalar type.
    pub fn volumes<T: Real>(&self) -> Vec<T> {
        self.states
            .iter()
            .map(|&k| t_from::<T>((k * k * k) as f64))
            .collect()
    }

    /// Attaches a transition matrix, validating shape, non-negativity, and
    /// row sums (1 within 1e-12).
    pub fn with_transition(mut self, rows: Vec<Vec<f64>>) -> Result<Self, GenerateError> {
        if rows.len() != self.states.len() {
            return Err(GenerateError::InvalidParams {
                detail: format!(
                    "transition matrix has {} rows for {} states",
                    rows.len(),
                    self.states.len()
                ),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != self.states.len() {
                return Err(GenerateError::InvalidParams {
                    detail: format!("transition row {i} has length {}", row.len()),
                });
            }
            if row.iter().any(|&p| !p.is_finite() || p < 0.0) {
                return Err(GenerateError::InvalidParams {
                    detail: format!("transition row {i} has a negative or non-finite entry"),
                });
            }
            let sum: f64 = row.iter().sum();
            if (sum - 1.0).abs() > 1e-12 {
                return Err(GenerateError::InvalidParams {
                    detail: format!("transition row {i} sums to {sum}, not 1"),
                });
            }
        }
        self.transition = Some(rows);
        Ok(self)
    }

    /// Verifies that two models describe element-matched populations (same
    /// total element count), the precondition of the standard two-line
    /// comparison.
    pub fn check_protein_matched(&self, other: &Self) -> Result<(), GenerateError> {
        let left = self.protein_total();
        let right = other.protein_total();
        if left != right {
            return Err(GenerateError::ProteinTotalMismatch { left, right });
        }
        Ok(())
    }
}

/// Builds a size-class model from observed structure counts: frequencies
/// are `counts / sum(counts)`, normalized over structures so they form a
/// proper probability distribution. No transition matrix is attached.
pub fn markov_model(
    counts_per_state: &[u64],
    states: &[u64],
) -> Result<MarkovKmerModel, GenerateError> {
    if counts_per_state.len() != states.len() || states.is_empty() {
        return Err(GenerateError::InvalidParams {
            detail: format!(
                "got {} counts for {} states",
                counts_per_state.len(),
                states.len()
            ),
        });
    }
    if states.contains(&0) {
        return Err(GenerateError::InvalidParams {
            detail: "states must be >= 1 element per structure".into(),
        });
    }
    let total: u64 = counts_per_state.iter().sum();
    if total == 0 {
        return Err(GenerateError::AllZeroCounts);
    }
    let structure_frequencies = counts_per_state
        .iter()
        .map(|&c| c as f64 / total as f64)
        .collect();
    Ok(MarkovKmerModel {
        states: states.to_vec(),
        counts: counts_per_state.to_vec(),
        structure_frequencies,
        transition: None,
    })
}

/// One simulated cell: how many structures of each state it drew, and the
/// per-state volumes.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CellSample<T> {
    /// Draws per state; sums to the requested structures per cell.
    pub structure_counts: Vec<u64>,
    /// Exact volume (state^3) of each state, aligned with
    /// `structure_counts`.
    pub volumes: Vec<T>,
}

impl<T: Real> CellSample<T> {
    /// Total structures drawn.
    pub fn total_structures(&self) -> u64 {
        self.structure_counts.iter().sum()
    }

    /// Arithmetic mean volume across the cell's structures.
    pub fn arith_mean_volume(&self) -> T {
        let total = t_from::<T>(self.total_structures() as f64);
        let sum = self
            .structure_counts
            .iter()
            .zip(&self.volumes)
            .map(|(&c, &v)| t_from::<T>(c as f64) * v)
            .fold(T::zero(), |acc, x| acc + x);
        sum / total
    }

    /// Geometric mean volume across the cell's structures.
    pub fn geom_mean_volume(&self) -> T {
        let total = t_from::<T>(self.total_structures() as f64);
        let ln_sum = self
            .structure_counts
            .iter()
            .zip(&self.volumes)
            .map(|(&c, &v)| t_from::<T>(c as f64) * v.ln())
            .fold(T::zero(), |acc, x| acc + x);
        (ln_sum / total).exp()
    }
}

/// Samples `n_cells` cells of `structures_per_cell` i.i.d. structure draws
/// each. Cell i draws from substream `(seed, i)`, so prefixes agree across
/// runs with different `n_cells`.
pub fn sample_cells<T: Real>(
    model: &MarkovKmerModel,
    n_cells: usize,
    structures_per_cell: usize,
    seed: u64,
) -> Vec<CellSample<T>> {
    assert!(n_cells >= 1, "n_cells must be >= 1");
    assert!(structures_per_cell >= 1, "structures_per_cell must be >= 1");
    let volumes = model.volumes::<T>();
    let mut cumulative = Vec::with_capacity(model.structure_frequencies.len());
    let mut acc = 0.0;
    for &f in &model.structure_frequencies {
        acc += f;
        cumulative.push(acc);
    }

    (0..n_cells)
        .map(|cell| {
            let mut rng = rng::stream(seed, cell as u64);
            let mut structure_counts = vec![0u64; model.states.len()];
            for _ in 0..structures_per_cell {
                let u = rng::unit_open(&mut rng);
                let state = cumulative
                    .iter()
                    .position(|&c| u <= c)
                    .unwrap_or(model.states.len() - 1);
                structure_counts[state] += 1;
            }
            CellSample {
                structure_counts,
                volumes: volumes.clone(),
            }
        })
        .collect()
}

/// Everything the two-population experiment produces.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KmerExperiment<T> {
    /// Per-cell arithmetic mean volumes, line A.
    pub arith_means_a: Vec<T>,
    /// Per-cell geometric mean volumes, line A.
    pub geom_means_a: Vec<T>,
    /// Per-cell arithmetic mean volumes, line B.
    pub arith_means_b: Vec<T>,
    /// Per-cell geometric mean volumes, line B.
    pub geom_means_b: Vec<T>,
    /// Comparison of the grand means (mean over cells) of the two lines.
    pub verdict: ParadoxVerdict<T>,
    /// Two-sided U test between the per-cell arithmetic means.
    pub mwu_arith: MwuResult,
    /// Two-sided U test between the per-cell geometric means.
    pub mwu_geom: MwuResult,
    /// Master seed of the experiment.
    pub seed: u64,
}

/// Simulates both cell lines and compares them under both means.
///
/// Lines A and B sample from child seeds derived from (seed, 1) and
/// (seed, 2), so the two populations use disjoint streams. The verdict
/// compares grand means (the mean over cells of the per-cell means); the
/// U tests compare the full per-cell distributions.
pub fn kmer_experiment<T: Real>(
    model_a: &MarkovKmerModel,
    model_b: &MarkovKmerModel,
    n_cells: usize,
    structures_per_cell: usize,
    seed: u64,
) -> KmerExperiment<T> {
    let cells_a = sample_cells::<T>(
        model_a,
        n_cells,
        structures_per_cell,
        rng::derive_seed(seed, 1),
    );
    let cells_b = sample_cells::<T>(
        model_b,
        n_cells,
        structures_per_cell,
        rng::derive_seed(seed, 2),
    );

    let arith_means_a: Vec<T> = cells_a.iter().map(CellSample::arith_mean_volume).collect();
    let geom_means_a: Vec<T> = cells_a.iter().map(CellSample::geom_mean_volume).collect();
    let arith_means_b: Vec<T> = cells_b.iter().map(CellSample::arith_mean_volume).collect();
    let geom_means_b: Vec<T> = cells_b.iter().map(CellSample::geom_mean_volume).collect();

    let grand = |xs: &[T]| xs.iter().copied().sum::<T>() / t_from_usize::<T>(xs.len());
    let verdict = ParadoxVerdict::from_means(
        grand(&arith_means_a),
        grand(&arith_means_b),
        grand(&geom_means_a),
        grand(&geom_means_b),
    );
    let mwu_arith = mwu_test(&arith_means_a, &arith_means_b, Alternative::TwoSided);
    let mwu_geom = mwu_test(&geom_means_a, &geom_means_b, Alternative::TwoSided);

    KmerExperiment {
        arith_means_a,
        geom_means_a,
        arith_means_b,
        geom_means_b,
        verdict,
        mwu_arith,
        mwu_geom,
        seed,
    }
}

/// The two standard element-matched populations: equal element totals,
/// reversed mean orderings. Used as CLI defaults and in tests.
pub fn standard_cell_models() -> (MarkovKmerModel, MarkovKmerModel) {
    let states = [1u64, 3, 9, 27];
    let a = markov_model(&[300, 100, 30, 7], &states).expect("line A counts are valid");
    let b = markov_model(&[240, 147, 30, 4], &states).expect("line B counts are valid");
    a.check_protein_matched(&b)
        .expect("standard lines are element-matched");
    (a, b)
}
