//! Bootstrap resampling, a self-contained Mann-Whitney U test, and the
//! replacement-sweep experiment.
//!
//! The sweep quantifies how *few* random edits to a dataset make one mean
//! report a significant difference while the other does not: for each
//! replacement count k it rebuilds the dataset with k random elements
//! redrawn from the gap between its geometric and arithmetic means,
//! bootstraps sample-mean distributions for the original and edited data
//! under both statistics, and compares each pair with the U test.
//!
//! Everything here is seeded and deterministic: one master seed reproduces
//! a sweep bit for bit, and each sweep point draws from its own
//! `(seed, k)` substream so adding points never perturbs existing ones.

use thiserror::Error;

use rand_chacha::ChaCha12Rng;

use crate::real::{t_from_usize, t_to, Real};
use crate::rng;
use crate::stats::SampleVector;

/// Significance thresholds tracked by sweep reports, largest first.
pub const SWEEP_ALPHAS: [f64; 3] = [0.05, 0.01, 0.001];

/// Largest pooled size the exact U distribution will be enumerated for.
const EXACT_POOL_LIMIT: usize = 20;

/// Failures of the resampling experiments.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResampleError {
    /// Sweeps replace at most half the data; fractions outside (0, 0.5]
    /// are rejected.
    #[error("max_fraction {fraction} must lie in (0, 0.5]")]
    FractionOutOfRange { fraction: f64 },
}

/// Which sample statistic a bootstrap distribution collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Statistic {
    /// Mean of each resample.
    ArithMean,
    /// Geometric mean of each resample.
    GeomMean,
}

/// Parameters of a bootstrap run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BootstrapConfig {
    /// Elements drawn (with replacement) per resample.
    pub sample_size: usize,
    /// Number of resamples, i.e. the length of the output.
    pub n_resamples: usize,
    /// Statistic collected by [`bootstrap`]. [`replacement_sweep`] always
    /// evaluates both statistics and ignores this field.
    pub statistic: Statistic,
    /// Master seed.
    pub seed: u64,
}

/// Draws `cfg.n_resamples` with-replacement samples of size
/// `cfg.sample_size` from `a` and returns the chosen statistic of each.
/// Deterministic in `cfg.seed`.
pub fn bootstrap<T: Real>(a: &SampleVector<T>, cfg: &BootstrapConfig) -> Vec<T> {
    assert!(cfg.sample_size >= 1, "sample_size must be >= 1");
    let mut rng = rng::stream(cfg.seed, 0);
    let (arith, geom) = bootstrap_both(a.as_slice(), cfg, &mut rng);
    match cfg.statistic {
        Statistic::ArithMean => arith,
        Statistic::GeomMean => geom,
    }
}

/// Runs the resampling loop once, collecting both statistics from each
/// single resample (the same index draws feed both means).
fn bootstrap_both<T: Real>(
    values: &[T],
    cfg: &BootstrapConfig,
    rng: &mut ChaCha12Rng,
) -> (Vec<T>, Vec<T>) {
    let s = t_from_usize::<T>(cfg.sample_size);
    let mut arith = Vec::with_capacity(cfg.n_resamples);
    let mut geom = Vec::with_capacity(cfg.n_resamples);
    for _ in 0..cfg.n_resamples {
        let mut sum = T::zero();
        let mut ln_sum = T::zero();
        for _ in 0..cfg.sample_size {
            let v = values[rand::Rng::random_range(&mut *rng, 0..values.len())];
            sum = sum + v;
            ln_sum = ln_sum + v.ln();
        }
        arith.push(sum / s);
        geom.push((ln_sum / s).exp());
    }
    (arith, geom)
}

/// Sidedness of the U test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Alternative {
    /// The two samples differ in either direction.
    TwoSided,
    /// The first sample is stochastically greater.
    Greater,
    /// The first sample is stochastically smaller.
    Less,
}

/// How the p-value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum MwuMethod {
    /// Full enumeration of the U distribution; selected automatically for
    /// pooled sizes up to 20 with no ties.
    Exact,
    /// Normal approximation with tie correction and continuity correction.
    NormalApprox,
}

/// Outcome of a Mann-Whitney U test.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MwuResult {
    /// U statistic of the first sample, in [0, n1*n2].
    pub u_statistic: f64,
    /// p-value in [0, 1].
    pub p_value: f64,
    /// Computation path taken.
    pub method: MwuMethod,
    /// Sidedness the p-value answers.
    pub alternative: Alternative,
}

/// Mann-Whitney U test with midrank tie handling.
///
/// The exact path (full enumeration of the U distribution) is used when the
/// pooled size is at most 20 and the data has no ties; otherwise the normal
/// approximation with tie correction and continuity correction is used.
///
/// ```
/// use logparadox::{mwu_test, Alternative};
///
/// let r = mwu_test(&[1.0, 2.0], &[3.0, 4.0], Alternative::TwoSided);
/// assert_eq!(r.u_statistic, 0.0);
/// assert!((r.p_value - 1.0 / 3.0).abs() < 1e-12);
/// ```
pub fn mwu_test<T: Real>(a: &[T], b: &[T], alternative: Alternative) -> MwuResult {
    let ranks = pooled_ranks(a, b);
    let method = if a.len() + b.len() <= EXACT_POOL_LIMIT && !ranks.has_ties {
        MwuMethod::Exact
    } else {
        MwuMethod::NormalApprox
    };
    mwu_from_ranks(&ranks, a.len(), b.len(), alternative, method)
}

/// [`mwu_test`] with the computation path chosen by the caller instead of by
/// sample size. Forcing [`MwuMethod::Exact`] on tied data rounds the midrank
/// U to the nearest integer and enumerates as if ties were absent; the
/// pooled size must stay small enough to enumerate (at most 60).
pub fn mwu_test_with_method<T: Real>(
    a: &[T],
    b: &[T],
    alternative: Alternative,
    method: MwuMethod,
) -> MwuResult {
    let ranks = pooled_ranks(a, b);
    mwu_from_ranks(&ranks, a.len(), b.len(), alternative, method)
}

struct PooledRanks {
    /// Rank sum of the first sample (midranks).
    r1: f64,
    /// Sum of t^3 - t over tie groups of size t.
    tie_term: f64,
    has_ties: bool,
}

fn pooled_ranks<T: Real>(a: &[T], b: &[T]) -> PooledRanks {
    assert!(
        !a.is_empty() && !b.is_empty(),
        "both samples must be nonempty"
    );
    let mut pooled: Vec<(f64, bool)> = a
        .iter()
        .map(|&v| (t_to(v), true))
        .chain(b.iter().map(|&v| (t_to(v), false)))
        .collect();
    pooled.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("samples must be NaN-free"));

    let n = pooled.len();
    let mut r1 = 0.0;
    let mut tie_term = 0.0;
    let mut has_ties = false;
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && pooled[j].0 == pooled[i].0 {
            j += 1;
        }
        let run = (j - i) as f64;
        let midrank = (i + 1 + j) as f64 / 2.0;
        if j - i > 1 {
            has_ties = true;
            tie_term += run * run * run - run;
        }
        for entry in &pooled[i..j] {
            if entry.1 {
                r1 += midrank;
            }
        }
        i = j;
    }
    PooledRanks {
        r1,
        tie_term,
        has_ties,
    }
}

fn mwu_from_ranks(
    ranks: &PooledRanks,
    n1: usize,
    n2: usize,
    alternative: Alternative,
    method: MwuMethod,
) -> MwuResult {
    let u1 = ranks.r1 - (n1 * (n1 + 1)) as f64 / 2.0;
    let p_value = match method {
        MwuMethod::Exact => exact_p(n1, n2, u1.round() as usize, alternative),
        MwuMethod::NormalApprox => normal_p(n1, n2, u1, ranks.tie_term, alternative),
    };
    MwuResult {
        u_statistic: u1,
        p_value,
        method,
        alternative,
    }
}

/// Counts, for every u in 0..=n1*n2, the rank assignments with U = u, via
/// the recurrence c(a, b, u) = c(a-1, b, u-b) + c(a, b-1, u).
fn u_distribution(n1: usize, n2: usize) -> Vec<u128> {
    assert!(
        n1 + n2 <= 60,
        "exact enumeration is intended for small samples (pooled size <= 60)"
    );
    let span = n1 * n2 + 1;
    // prev/cur are the b-1 and b columns; each column holds all a rows.
    let mut table = vec![vec![0u128; span]; n1 + 1];
    for row in table.iter_mut() {
        row[0] = 1; // c(a, 0, 0) = 1
    }
    for _b in 1..=n2 {
        let mut next = vec![vec![0u128; span]; n1 + 1];
        next[0][0] = 1; // c(0, b, 0) = 1
        for a in 1..=n1 {
            for u in 0..span {
                let from_smaller_b = table[a][u];
                let from_smaller_a = if u >= _b { next[a - 1][u - _b] } else { 0 };
                next[a][u] = from_smaller_b + from_smaller_a;
            }
        }
        table = next;
    }
    table.pop().expect("table has n1+1 rows")
}

fn exact_p(n1: usize, n2: usize, u: usize, alternative: Alternative) -> f64 {
    let dist = u_distribution(n1, n2);
    let total: u128 = dist.iter().sum();
    let total = total as f64;
    let below_or_at: u128 = dist[..=u.min(dist.len() - 1)].iter().sum();
    let at_or_above: u128 = dist[u.min(dist.len() - 1)..].iter().sum();
    let cdf = below_or_at as f64 / total;
    let sf = at_or_above as f64 / total;
    match alternative {
        Alternative::Less => cdf,
        Alternative::Greater => sf,
        Alternative::TwoSided => (2.0 * cdf.min(sf)).min(1.0),
    }
}

fn normal_p(n1: usize, n2: usize, u1: f64, tie_term: f64, alternative: Alternative) -> f64 {
    let n = (n1 + n2) as f64;
    let n1f = n1 as f64;
    let n2f = n2 as f64;
    let mu = n1f * n2f / 2.0;
    let variance = n1f * n2f / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if variance <= 0.0 {
        // Every pooled value is identical: the test cannot discriminate.
        return 1.0;
    }
    let sigma = variance.sqrt();
    let p = match alternative {
        Alternative::Greater => phi(-(u1 - 0.5 - mu) / sigma),
        Alternative::Less => phi((u1 + 0.5 - mu) / sigma),
        Alternative::TwoSided => {
            let distance = ((u1 - mu).abs() - 0.5).max(0.0);
            2.0 * phi(-distance / sigma)
        }
    };
    p.clamp(0.0, 1.0)
}

/// Standard normal CDF via a rational approximation of erfc; fractional
/// error below 1.3e-7 everywhere, ample for p-values compared at 0.05/0.02
/// tolerances.
fn phi(z: f64) -> f64 {
    0.5 * erfc_approx(-z / std::f64::consts::SQRT_2)
}

fn erfc_approx(x: f64) -> f64 {
    let z = x.abs();
    let t = 1.0 / (1.0 + 0.5 * z);
    let poly = -z * z - 1.26551223
        + t * (1.00002368
            + t * (0.37409196
                + t * (0.09678418
                    + t * (-0.18628806
                        + t * (0.27886807
                            + t * (-1.13520398
                                + t * (1.48851587 + t * (-0.82215223 + t * 0.17087277))))))));
    let ans = t * poly.exp();
    if x >= 0.0 {
        ans
    } else {
        2.0 - ans
    }
}

/// One replacement count of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepPoint<T> {
    /// Number of elements replaced.
    pub k: usize,
    /// Two-sided U-test p-value between the arithmetic sample-mean
    /// distributions of the original and edited data.
    pub p_arith: f64,
    /// Same comparison for the geometric sample-mean distributions.
    pub p_geom: f64,
    /// mean(bootstrap arith means of edited) - mean(of original).
    pub d_arith_of_sample_means: T,
    /// mean(bootstrap geom means of edited) - mean(of original).
    pub d_geom_of_sample_means: T,
    /// True exactly when the geometric sample means moved up while the
    /// arithmetic sample means moved down: the reversal direction.
    pub paradox_direction_ok: bool,
}

/// First significant replacement count per threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdCrossing {
    /// Significance threshold.
    pub alpha: f64,
    /// Smallest k whose arithmetic p-value fell below alpha with the
    /// reversal direction flag set; None if the sweep never got there.
    pub first_k_arith: Option<usize>,
    /// Same for the geometric p-value.
    pub first_k_geom: Option<usize>,
}

/// Full result of [`replacement_sweep`].
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepReport<T> {
    /// Seed that reproduces the sweep bit for bit.
    pub master_seed: u64,
    /// Resample size S.
    pub sample_size: usize,
    /// Resamples per distribution N.
    pub n_resamples: usize,
    /// One entry per evaluated k, ascending.
    pub points: Vec<SweepPoint<T>>,
    /// One entry per alpha in [`SWEEP_ALPHAS`].
    pub crossings: Vec<ThresholdCrossing>,
}

/// Runs the replacement sweep on `a`.
///
/// For k = 0, step, 2*step, ... up to `max_fraction * |a|` elements, builds
/// an edited copy of `a` with k random positions redrawn uniformly from
/// `[geom_mean(a), arith_mean(a)]` (the *original* means, fixed across the
/// sweep), bootstraps both datasets (`cfg.sample_size` draws per resample,
/// `cfg.n_resamples` resamples; each single resample feeds both statistics),
/// and U-tests original vs edited under each statistic, two-sided.
///
/// Every sweep point draws from the independent substream
/// `(cfg.seed, k)`, so reports are bit-identical across runs and stable
/// under adding further points. Points execute and report in k-order.
///
/// A crossing records the first k at which a statistic's p-value fell below
/// the threshold *while the direction flag was set*, keeping only
/// reversal-compatible significance.
pub fn replacement_sweep<T: Real>(
    a: &SampleVector<T>,
    max_fraction: f64,
    step: usize,
    cfg: &BootstrapConfig,
) -> Result<SweepReport<T>, ResampleError> {
    if !max_fraction.is_finite() || max_fraction <= 0.0 || max_fraction > 0.5 {
        return Err(ResampleError::FractionOutOfRange {
            fraction: max_fraction,
        });
    }
    assert!(step >= 1, "sweep step must be >= 1");
    assert!(cfg.sample_size >= 1, "sample_size must be >= 1");

    let k_max = (max_fraction * a.len() as f64).floor() as usize;
    let geom = a.geom_mean();
    let arith = a.arith_mean();

    let mut points = Vec::with_capacity(k_max / step + 1);
    let mut k = 0;
    while k <= k_max {
        points.push(sweep_point(a, k, geom, arith, cfg));
        k += step;
    }

    let crossings = SWEEP_ALPHAS
        .iter()
        .map(|&alpha| ThresholdCrossing {
            alpha,
            first_k_arith: first_crossing(&points, alpha, |p| p.p_arith),
            first_k_geom: first_crossing(&points, alpha, |p| p.p_geom),
        })
        .collect();

    Ok(SweepReport {
        master_seed: cfg.seed,
        sample_size: cfg.sample_size,
        n_resamples: cfg.n_resamples,
        points,
        crossings,
    })
}

fn first_crossing<T: Real>(
    points: &[SweepPoint<T>],
    alpha: f64,
    p_of: impl Fn(&SweepPoint<T>) -> f64,
) -> Option<usize> {
    points
        .iter()
        .find(|p| p.paradox_direction_ok && p_of(p) < alpha)
        .map(|p| p.k)
}

fn sweep_point<T: Real>(
    a: &SampleVector<T>,
    k: usize,
    geom: T,
    arith: T,
    cfg: &BootstrapConfig,
) -> SweepPoint<T> {
    let mut rng = rng::stream(cfg.seed, k as u64);
    let edited = replaced_variant(a.as_slice(), k, geom, arith, &mut rng);
    let (orig_arith, orig_geom) = bootstrap_both(a.as_slice(), cfg, &mut rng);
    let (edit_arith, edit_geom) = bootstrap_both(&edited, cfg, &mut rng);

    let p_arith = mwu_test(&orig_arith, &edit_arith, Alternative::TwoSided).p_value;
    let p_geom = mwu_test(&orig_geom, &edit_geom, Alternative::TwoSided).p_value;
    let d_arith = mean(&edit_arith) - mean(&orig_arith);
    let d_geom = mean(&edit_geom) - mean(&orig_geom);
    SweepPoint {
        k,
        p_arith,
        p_geom,
        d_arith_of_sample_means: d_arith,
        d_geom_of_sample_means: d_geom,
        paradox_direction_ok: d_geom > T::zero() && d_arith < T::zero(),
    }
}

/// Copy of `values` with `k` distinct random positions redrawn uniformly
/// from `[lo, hi]`. Length and positivity are preserved by construction.
fn replaced_variant<T: Real>(
    values: &[T],
    k: usize,
    lo: T,
    hi: T,
    rng: &mut ChaCha12Rng,
) -> Vec<T> {
    let mut edited = values.to_vec();
    for index in rng::sample_distinct_indices(rng, values.len(), k) {
        edited[index] = rng::uniform_in(rng, lo, hi);
    }
    edited
}

fn mean<T: Real>(values: &[T]) -> T {
    values.iter().copied().sum::<T>() / t_from_usize(values.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::gen_exponential;
    use approx::assert_abs_diff_eq;

    fn vector(values: &[f64]) -> SampleVector<f64> {
        SampleVector::new(values.to_vec()).expect("test vector is valid")
    }

    fn config(seed: u64) -> BootstrapConfig {
        BootstrapConfig {
            sample_size: 50,
            n_resamples: 50,
            statistic: Statistic::ArithMean,
            seed,
        }
    }

    #[test]
    fn bootstrap_of_constant_vector_is_constant() {
        let v = vector(&[7.0; 30]);
        for statistic in [Statistic::ArithMean, Statistic::GeomMean] {
            let cfg = BootstrapConfig {
                statistic,
                ..config(3)
            };
            let out = bootstrap(&v, &cfg);
            assert_eq!(out.len(), 50);
            for x in out {
                assert_abs_diff_eq!(x, 7.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn bootstrap_is_deterministic_in_the_seed() {
        let v = gen_exponential::<f64>(200, 11);
        assert_eq!(bootstrap(&v, &config(5)), bootstrap(&v, &config(5)));
        assert_ne!(bootstrap(&v, &config(5)), bootstrap(&v, &config(6)));
    }

    #[test]
    fn bootstrap_mean_lands_near_the_true_mean() {
        let v = vector(&(1..=100).map(|i| i as f64).collect::<Vec<_>>());
        let out = bootstrap(&v, &config(17));
        let grand = out.iter().sum::<f64>() / out.len() as f64;
        // sd of one value ~28.9, of a 50-draw mean ~4.08, of the grand mean
        // over 50 resamples ~0.58; allow 3 of those.
        assert!(
            (grand - 50.5).abs() < 3.0 * 0.58,
            "grand mean {grand} strayed from 50.5"
        );
    }

    #[test]
    fn bootstrap_variance_shrinks_with_sample_size() {
        let v = gen_exponential::<f64>(2000, 99);
        let mut wins = 0;
        for seed in 0..10 {
            let small = BootstrapConfig {
                sample_size: 50,
                ..config(seed)
            };
            let large = BootstrapConfig {
                sample_size: 200,
                ..config(seed)
            };
            let var = |xs: &[f64]| {
                let m = xs.iter().sum::<f64>() / xs.len() as f64;
                xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / xs.len() as f64
            };
            if var(&bootstrap(&v, &large)) < var(&bootstrap(&v, &small)) {
                wins += 1;
            }
        }
        assert!(wins > 5, "larger samples won only {wins}/10 seeds");
    }

    #[test]
    fn mwu_tiny_exact_example() {
        let r = mwu_test(&[1.0, 2.0], &[3.0, 4.0], Alternative::TwoSided);
        assert_eq!(r.method, MwuMethod::Exact);
        assert_eq!(r.u_statistic, 0.0);
        assert_abs_diff_eq!(r.p_value, 1.0 / 3.0, epsilon = 1e-15);

        // One-sided: all mass at or above U=0 for Greater.
        let g = mwu_test(&[1.0, 2.0], &[3.0, 4.0], Alternative::Greater);
        assert_abs_diff_eq!(g.p_value, 1.0, epsilon = 1e-15);
        let l = mwu_test(&[1.0, 2.0], &[3.0, 4.0], Alternative::Less);
        assert_abs_diff_eq!(l.p_value, 1.0 / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn mwu_identical_samples_report_no_evidence() {
        let a: Vec<f64> = (1..=10).map(|i| i as f64).collect();
        let r = mwu_test(&a, &a, Alternative::TwoSided);
        assert_eq!(
            r.method,
            MwuMethod::NormalApprox,
            "ties force the approximation"
        );
        assert!(r.p_value >= 0.99, "p was {}", r.p_value);

        // Fully degenerate data: zero variance, p = 1 by convention.
        let c = vec![4.2; 30];
        let r = mwu_test(&c, &c, Alternative::TwoSided);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn mwu_separated_samples_are_significant() {
        let mut rng = rng::stream(123, 0);
        let a: Vec<f64> = (0..200).map(|_| rng::unit_open(&mut rng) + 5.0).collect();
        let b: Vec<f64> = (0..200).map(|_| rng::unit_open(&mut rng)).collect();
        let r = mwu_test(&a, &b, Alternative::TwoSided);
        assert!(r.p_value < 0.001, "p was {}", r.p_value);
        // Direction: a is greater, so Greater should be tiny and Less ~1.
        assert!(mwu_test(&a, &b, Alternative::Greater).p_value < 0.001);
        assert!(mwu_test(&a, &b, Alternative::Less).p_value > 0.999);
    }

    #[test]
    fn mwu_u_symmetry() {
        let mut rng = rng::stream(7, 0);
        let a: Vec<f64> = (0..9).map(|_| rng::unit_open(&mut rng)).collect();
        let b: Vec<f64> = (0..13).map(|_| rng::unit_open(&mut rng)).collect();
        let ab = mwu_test(&a, &b, Alternative::TwoSided);
        let ba = mwu_test(&b, &a, Alternative::TwoSided);
        assert_abs_diff_eq!(
            ab.u_statistic + ba.u_statistic,
            (a.len() * b.len()) as f64,
            epsilon = 1e-9
        );
        assert_abs_diff_eq!(ab.p_value, ba.p_value, epsilon = 1e-12);
    }

    #[test]
    fn exact_and_normal_agree_for_moderate_sizes() {
        // Tie-free data, pooled size 40: forced exact vs forced normal.
        let mut rng = rng::stream(21, 0);
        for _ in 0..20 {
            let a: Vec<f64> = (0..20).map(|_| rng::unit_open(&mut rng)).collect();
            let b: Vec<f64> = (0..20).map(|_| rng::unit_open(&mut rng)).collect();
            let e = mwu_test_with_method(&a, &b, Alternative::TwoSided, MwuMethod::Exact);
            let n = mwu_test_with_method(&a, &b, Alternative::TwoSided, MwuMethod::NormalApprox);
            assert!(
                (e.p_value - n.p_value).abs() <= 0.02,
                "exact {} vs normal {} diverged",
                e.p_value,
                n.p_value
            );
        }
    }

    #[test]
    fn normal_cdf_sanity() {
        assert_abs_diff_eq!(phi(0.0), 0.5, epsilon = 1e-6);
        assert_abs_diff_eq!(phi(1.96), 0.9750021048517795, epsilon = 1e-6);
        assert_abs_diff_eq!(phi(-1.96) + phi(1.96), 1.0, epsilon = 1e-7);
        assert!(phi(8.0) > 0.999999);
        assert!(phi(-8.0) < 1e-6);
    }

    #[test]
    fn sweep_rejects_bad_fractions() {
        let v = gen_exponential::<f64>(100, 1);
        for fraction in [0.0, -0.1, 0.6, f64::NAN] {
            let err = replacement_sweep(&v, fraction, 10, &config(1)).unwrap_err();
            assert!(matches!(err, ResampleError::FractionOutOfRange { .. }));
        }
    }

    #[test]
    fn sweep_is_bit_identical_across_runs() {
        let v = gen_exponential::<f64>(300, 8);
        let cfg = BootstrapConfig {
            sample_size: 40,
            n_resamples: 20,
            statistic: Statistic::ArithMean,
            seed: 1234,
        };
        let a = replacement_sweep(&v, 0.1, 10, &cfg).unwrap();
        let b = replacement_sweep(&v, 0.1, 10, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.points.len(), 4); // k = 0, 10, 20, 30
        assert_eq!(a.points[0].k, 0);
        assert_eq!(a.points[3].k, 30);
    }

    #[test]
    fn sweep_at_k_zero_shows_only_noise() {
        let v = gen_exponential::<f64>(500, 3);
        let cfg = BootstrapConfig {
            sample_size: 100,
            n_resamples: 50,
            statistic: Statistic::ArithMean,
            seed: 77,
        };
        let report = replacement_sweep(&v, 0.01, 10, &cfg).unwrap();
        let origin = &report.points[0];
        assert_eq!(origin.k, 0);
        // Same underlying data: no systematic shift, so no extreme p-value
        // and no crossing credited at k=0.
        assert!(origin.p_geom > 0.001 && origin.p_arith > 0.001);
        for c in &report.crossings {
            assert_ne!(c.first_k_arith, Some(0));
            assert_ne!(c.first_k_geom, Some(0));
        }
    }

    #[test]
    fn replacement_preserves_length_and_positivity() {
        let v = gen_exponential::<f64>(400, 5);
        let geom = v.geom_mean();
        let arith = v.arith_mean();
        let mut rng = rng::stream(42, 9);
        let edited = replaced_variant(v.as_slice(), 40, geom, arith, &mut rng);
        assert_eq!(edited.len(), v.len());
        assert!(edited.iter().all(|&x| x > 0.0 && x.is_finite()));
        let changed = edited
            .iter()
            .zip(v.as_slice())
            .filter(|(e, o)| e != o)
            .count();
        assert_eq!(changed, 40);
        // Replacements land inside the closed gap between the means.
        for (e, o) in edited.iter().zip(v.as_slice()) {
            if e != o {
                assert!(*e >= geom && *e <= arith);
            }
        }
    }

    #[test]
    fn heavy_replacement_moves_the_means_apart() {
        // Long-tailed data, half the elements replaced by mid-gap values:
        // the arithmetic sample means must drop and the geometric ones rise.
        let v = gen_exponential::<f64>(1000, 31);
        let cfg = BootstrapConfig {
            sample_size: 200,
            n_resamples: 50,
            statistic: Statistic::ArithMean,
            seed: 5150,
        };
        let report = replacement_sweep(&v, 0.5, 500, &cfg).unwrap();
        let far = report.points.last().unwrap();
        assert_eq!(far.k, 500);
        assert!(
            far.paradox_direction_ok,
            "direction at k=500: d_arith {} d_geom {}",
            far.d_arith_of_sample_means, far.d_geom_of_sample_means
        );
        assert!(far.p_geom < 0.001);
        assert!(far.p_arith < 0.001);
    }
}
