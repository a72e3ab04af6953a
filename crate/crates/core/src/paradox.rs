//! Reversal verdicts and the calculus of inducing (or defusing) a reversal.
//!
//! Two samples are in *paradox* when their arithmetic means order one way
//! and their geometric means order the opposite way: any analysis that
//! compares the samples after a log transform then contradicts the same
//! analysis on the raw data. This module decides that verdict for a pair of
//! samples, computes the single most effective value to insert into a
//! vector (the midpoint of its two means), takes heuristic editing steps
//! toward a reversal, and scores how much room a data range leaves for one.

use thiserror::Error;

use crate::diff::{self, Perturbation, Sign};
use crate::real::{t_from, t_from_usize, t_to, Real};
use crate::rng;
use crate::stats::SampleVector;

/// Number of points [`candidate_grid`] produces by default.
pub const DEFAULT_GRID_POINTS: usize = 400;

/// Failures of the heuristic and scoring operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParadoxError {
    /// The heuristic needs more elements than the vector has.
    #[error("vector of length {len} is too small; the step needs at least {required}")]
    VectorTooSmall { len: usize, required: usize },
    /// Scores and sweeps are defined for strictly positive finite inputs.
    #[error("input {value} must be strictly positive and finite")]
    NonPositiveInput { value: f64 },
}

/// The comparison of two samples under both means.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ParadoxVerdict<T> {
    /// Sign of `arith_mean(B) - arith_mean(A)`: Positive means B wins the
    /// raw comparison.
    pub arith_order: Sign,
    /// Sign of `geom_mean(B) - geom_mean(A)`: Positive means B wins the
    /// log-domain comparison.
    pub geom_order: Sign,
    /// True when the two orders strictly oppose each other.
    pub is_paradox: bool,
    /// `arith_mean(B) - arith_mean(A)`.
    pub d_arith: T,
    /// `geom_mean(B) - geom_mean(A)`.
    pub d_geom: T,
    /// `-d_arith * d_geom`: positive exactly when the differences oppose,
    /// and larger when both are large. A scale-dependent effect size for
    /// the reversal.
    pub criterion: T,
}

impl<T: Real> ParadoxVerdict<T> {
    /// Builds the verdict from the four means directly; used when the means
    /// are aggregates (e.g. grand means over simulated cells) rather than
    /// summaries of concrete vectors.
    pub fn from_means(arith_a: T, arith_b: T, geom_a: T, geom_b: T) -> Self {
        let d_arith = arith_b - arith_a;
        let d_geom = geom_b - geom_a;
        let arith_order = Sign::of_banded(d_arith);
        let geom_order = Sign::of_banded(d_geom);
        Self {
            arith_order,
            geom_order,
            is_paradox: arith_order.is_opposite(geom_order),
            d_arith,
            d_geom,
            criterion: -(d_arith * d_geom),
        }
    }
}

/// Compares samples `a` and `b` under both means.
pub fn paradox_verdict<T: Real>(a: &SampleVector<T>, b: &SampleVector<T>) -> ParadoxVerdict<T> {
    let sa = a.summarize();
    let sb = b.summarize();
    ParadoxVerdict::from_means(sa.arith_mean, sb.arith_mean, sa.geom_mean, sb.geom_mean)
}

/// The single value whose insertion moves the two means against each other
/// hardest: the midpoint `(geom_mean + arith_mean) / 2` of the open interval
/// where any inserted value lowers the arithmetic mean while raising the
/// geometric one.
pub fn optimal_target<T: Real>(x: &SampleVector<T>) -> T {
    let s = x.summarize();
    (s.arith_mean + s.geom_mean) / t_from(2.0)
}

/// One edit taken by a heuristic, with enough context to audit it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HeuristicStep<T> {
    /// The midpoint target the step aimed at.
    pub q: T,
    /// Values removed from the vector (empty for pure insertion).
    pub removed: Vec<T>,
    /// Values inserted into the vector.
    pub inserted: Vec<T>,
    /// Whether the heuristic's own precondition held for the input vector;
    /// see [`insert_step`] and [`replace_step`] for the respective
    /// conditions.
    pub precondition_holds: bool,
}

/// Which elements [`replace_step`] swaps out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ReplaceSelector {
    /// Remove the smallest element; insert the midpoint target.
    Min,
    /// Remove the largest element; insert the midpoint target.
    Max,
    /// Remove both extremes; insert the midpoint target twice. Needs at
    /// least 3 elements.
    MinMax,
    /// Remove one uniformly chosen element; insert a uniform draw from
    /// `[geom_mean, arith_mean]`. Fully determined by the carried seed.
    Random(u64),
}

/// Appends the midpoint target to the vector.
///
/// Precondition (reported, not enforced): the target lies strictly between
/// the two means, i.e. the vector is not constant. While that holds, each
/// application strictly shrinks the gap between the means, so repeated
/// insertion flattens the vector without ever crossing the means over.
pub fn insert_step<T: Real>(x: &SampleVector<T>) -> (SampleVector<T>, HeuristicStep<T>) {
    let s = x.summarize();
    let q = (s.arith_mean + s.geom_mean) / t_from(2.0);
    let inserted = SampleVector::new(vec![q]).expect("midpoint of valid means is valid");
    let edited = x.concat(&inserted);
    let step = HeuristicStep {
        q,
        removed: Vec::new(),
        inserted: vec![q],
        precondition_holds: s.geom_mean < q && q < s.arith_mean,
    };
    (edited, step)
}

/// Swaps selected elements for the midpoint target (or a random in-gap
/// value, for [`ReplaceSelector::Random`]).
///
/// The reported precondition is the pair-swap condition on the vector's
/// extremes m = min(X), M = max(X):
///
/// ```text
/// sqrt(m * M)  <  Q  <  (m + M) / 2
/// ```
///
/// Replacing both extremes by Q moves the means in strictly opposite
/// directions exactly when this holds (and the reverse opposition is
/// impossible, since sqrt(m M) <= (m + M)/2 always). Selectors that swap a
/// single element take half such a step, so for them the flag describes the
/// vector's readiness rather than the single edit's effect.
pub fn replace_step<T: Real>(
    x: &SampleVector<T>,
    selector: ReplaceSelector,
) -> Result<(SampleVector<T>, HeuristicStep<T>), ParadoxError> {
    let s = x.summarize();
    let q = (s.arith_mean + s.geom_mean) / t_from(2.0);
    let min = x.min();
    let max = x.max();
    let precondition_holds = (min * max).sqrt() < q && q < (min + max) / t_from(2.0);

    let (removed, inserted) = match selector {
        ReplaceSelector::Min => (vec![min], vec![q]),
        ReplaceSelector::Max => (vec![max], vec![q]),
        ReplaceSelector::MinMax => {
            if x.len() < 3 {
                return Err(ParadoxError::VectorTooSmall {
                    len: x.len(),
                    required: 3,
                });
            }
            (vec![min, max], vec![q, q])
        }
        ReplaceSelector::Random(seed) => {
            let mut rng = rng::stream(seed, 0);
            let index = rand::Rng::random_range(&mut rng, 0..x.len());
            let value = rng::uniform_in(&mut rng, s.geom_mean, s.arith_mean);
            (vec![x.as_slice()[index]], vec![value])
        }
    };

    let p = Perturbation::Replace {
        insert: SampleVector::new(inserted.clone()).expect("inserted values are valid"),
        remove: SampleVector::new(removed.clone()).expect("removed values come from the vector"),
    };
    let edited = diff::apply(x, &p).expect("swap of existing elements cannot fail");
    Ok((
        edited,
        HeuristicStep {
            q,
            removed,
            inserted,
            precondition_holds,
        },
    ))
}

/// How much room the range `[a, b]` leaves for a reversal: the gap between
/// the midpoint and the geometric mean of the two endpoints,
/// `(a + b)/2 - sqrt(a b)`. Zero exactly at a = b, positive otherwise, and
/// symmetric in its arguments.
pub fn d_score<T: Real>(a: T, b: T) -> Result<T, ParadoxError> {
    for v in [a, b] {
        if !v.is_finite() || v <= T::zero() {
            return Err(ParadoxError::NonPositiveInput { value: t_to(v) });
        }
    }
    Ok((a + b) / t_from(2.0) - (a * b).sqrt())
}

/// [`d_score`] over a grid: element `[i][j]` scores `(rows[i], cols[j])`.
pub fn d_surface<T: Real>(rows: &[T], cols: &[T]) -> Result<Vec<Vec<T>>, ParadoxError> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| d_score(r, c)).collect())
        .collect()
}

/// One candidate insertion evaluated by [`gradient_product_sweep`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProductSweepPoint<T> {
    /// The value whose insertion was evaluated.
    pub candidate: T,
    /// Arithmetic-mean change of inserting it.
    pub d_arith: T,
    /// Geometric-mean change of inserting it.
    pub d_geom: T,
    /// `d_arith * d_geom`; negative exactly when the candidate lies strictly
    /// between the vector's geometric and arithmetic means.
    pub product: T,
}

/// Evaluates single-element insertion across `candidates`: both mean
/// changes and their product. The product is negative precisely on the open
/// interval `(geom_mean, arith_mean)`, which is how the sweep locates the
/// reversal-inducing region of a dataset.
pub fn gradient_product_sweep<T: Real>(
    x: &SampleVector<T>,
    candidates: &[T],
) -> Result<Vec<ProductSweepPoint<T>>, ParadoxError> {
    let n = t_from_usize::<T>(x.len());
    let arith = x.arith_mean();
    let ln_mean = x.ln_mean();
    let geom = ln_mean.exp();
    let one = T::one();
    candidates
        .iter()
        .map(|&c| {
            if !c.is_finite() || c <= T::zero() {
                return Err(ParadoxError::NonPositiveInput { value: t_to(c) });
            }
            let d_arith = (c - arith) / (n + one);
            let d_geom = ((n * ln_mean + c.ln()) / (n + one)).exp() - geom;
            Ok(ProductSweepPoint {
                candidate: c,
                d_arith,
                d_geom,
                product: d_arith * d_geom,
            })
        })
        .collect()
}

/// Log-spaced candidate grid covering `[min(x)/10, max(x)*10]` with
/// `points` entries (at least 2), for use with
/// [`gradient_product_sweep`].
pub fn candidate_grid<T: Real>(x: &SampleVector<T>, points: usize) -> Vec<T> {
    assert!(points >= 2, "a grid needs at least 2 points");
    let lo = (x.min() / t_from(10.0)).ln();
    let hi = (x.max() * t_from(10.0)).ln();
    let last = t_from_usize::<T>(points - 1);
    (0..points)
        .map(|i| (lo + (hi - lo) * t_from_usize::<T>(i) / last).exp())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diff::closed_form_diff;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn vector(values: &[f64]) -> SampleVector<f64> {
        SampleVector::new(values.to_vec()).expect("test vector is valid")
    }

    fn reference() -> SampleVector<f64> {
        vector(&[2.0, 4.0, 6.0, 13.0])
    }

    #[test]
    fn midpoint_target_of_reference_vectors() {
        assert_relative_eq!(
            optimal_target(&reference()),
            5.623999399439382,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            optimal_target(&vector(&[1.0, 100.0])),
            30.25,
            max_relative = 1e-13
        );
    }

    #[test]
    fn verdict_detects_opposite_orderings() {
        let a = reference(); // arith 6.25, geom ~4.998
        let b = vector(&[5.5, 5.5, 5.5, 5.5]); // arith 5.5, geom 5.5
        let v = paradox_verdict(&a, &b);
        assert_eq!(v.arith_order, Sign::Negative);
        assert_eq!(v.geom_order, Sign::Positive);
        assert!(v.is_paradox);
        assert!(v.criterion > 0.0);

        let same_direction = paradox_verdict(&a, &vector(&[4.0, 4.0, 4.0, 4.0]));
        assert!(!same_direction.is_paradox);
        assert!(same_direction.criterion < 0.0);
    }

    #[test]
    fn verdict_from_aggregated_means() {
        let v = ParadoxVerdict::from_means(10.0, 9.5, 3.0, 3.2);
        assert!(v.is_paradox);
        assert_relative_eq!(v.d_arith, -0.5);
        assert_relative_eq!(v.d_geom, 0.2, max_relative = 1e-14);
        assert_relative_eq!(v.criterion, 0.1, max_relative = 1e-14);

        let tie = ParadoxVerdict::from_means(10.0, 10.0, 3.0, 3.2);
        assert_eq!(tie.arith_order, Sign::Zero);
        assert!(!tie.is_paradox, "a tie on either mean is not a reversal");
    }

    #[test]
    fn insert_step_appends_the_target_and_shrinks_the_gap() {
        let x = reference();
        let before = x.summarize();
        let (edited, step) = insert_step(&x);
        assert_eq!(edited.len(), 5);
        assert_eq!(*edited.as_slice().last().unwrap(), step.q);
        assert!(step.precondition_holds);
        assert!(step.removed.is_empty());
        assert_eq!(step.inserted, vec![step.q]);
        let after = edited.summarize();
        assert!(after.id < before.id);
        // The insertion moves the means toward each other.
        assert!(after.arith_mean < before.arith_mean);
        assert!(after.geom_mean > before.geom_mean);
    }

    #[test]
    fn repeated_insertion_is_monotone_while_the_gap_is_open() {
        let mut x = reference();
        let mut id = x.summarize().id;
        for _ in 0..50 {
            let (next, step) = insert_step(&x);
            let next_id = next.summarize().id;
            if id > 1e-9 {
                assert!(step.precondition_holds);
                assert!(next_id < id, "gap must shrink: {next_id} !< {id}");
            }
            x = next;
            id = next_id;
        }
        assert!(id < reference().summarize().id / 2.0);
    }

    #[test]
    fn insert_step_on_constant_vector_reports_no_precondition() {
        let x = vector(&[5.0, 5.0, 5.0]);
        let (_, step) = insert_step(&x);
        assert!(!step.precondition_holds);
    }

    #[test]
    fn minmax_swap_matches_the_pair_condition() {
        let x = reference();
        let (edited, step) = replace_step(&x, ReplaceSelector::MinMax).unwrap();
        assert_eq!(step.removed, vec![2.0, 13.0]);
        assert_eq!(step.inserted, vec![step.q, step.q]);
        assert!(step.precondition_holds); // sqrt(26) < 5.624 < 7.5
        assert_eq!(edited.as_slice(), &[4.0, 6.0, step.q, step.q]);

        // The edit itself is paradox-signed exactly because the pair
        // condition holds.
        let p = Perturbation::Replace {
            insert: vector(&[step.q, step.q]),
            remove: vector(&[2.0, 13.0]),
        };
        let r = closed_form_diff(&x, &p).unwrap();
        assert!(r.paradox_signed);
        assert!(r.d_arith < 0.0 && r.d_geom > 0.0);
    }

    #[test]
    fn single_extreme_swaps_move_both_means_the_same_way() {
        let x = reference();
        let (_, step) = replace_step(&x, ReplaceSelector::Min).unwrap();
        assert_eq!(step.removed, vec![2.0]);
        let p = Perturbation::Replace {
            insert: vector(&[step.q]),
            remove: vector(&[2.0]),
        };
        let r = closed_form_diff(&x, &p).unwrap();
        assert!(r.d_arith > 0.0 && r.d_geom > 0.0);
        assert!(!r.paradox_signed);

        let (_, step) = replace_step(&x, ReplaceSelector::Max).unwrap();
        assert_eq!(step.removed, vec![13.0]);
    }

    #[test]
    fn minmax_needs_three_elements() {
        assert_eq!(
            replace_step(&vector(&[2.0, 13.0]), ReplaceSelector::MinMax).unwrap_err(),
            ParadoxError::VectorTooSmall {
                len: 2,
                required: 3
            }
        );
    }

    #[test]
    fn random_swap_is_seeded_and_stays_in_the_gap() {
        let x = reference();
        let (a, step_a) = replace_step(&x, ReplaceSelector::Random(7)).unwrap();
        let (b, step_b) = replace_step(&x, ReplaceSelector::Random(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(step_a, step_b);
        assert!(x.as_slice().contains(&step_a.removed[0]));
        let s = x.summarize();
        let v = step_a.inserted[0];
        assert!(s.geom_mean <= v && v <= s.arith_mean);

        let (c, _) = replace_step(&x, ReplaceSelector::Random(8)).unwrap();
        assert_ne!(a, c, "different seeds should give different edits");
    }

    #[test]
    fn d_score_reference_values_and_symmetry() {
        assert_relative_eq!(
            d_score(2.0, 13.0).unwrap(),
            2.4009804864072155,
            max_relative = 1e-14
        );
        assert_eq!(d_score(2.0, 13.0).unwrap(), d_score(13.0, 2.0).unwrap());
        assert_eq!(d_score(5.0, 5.0).unwrap(), 0.0);
        assert!(d_score(1.0, 2.0).unwrap() > 0.0);
    }

    #[test]
    fn d_score_rejects_nonpositive_input() {
        assert_eq!(
            d_score(0.0, 2.0).unwrap_err(),
            ParadoxError::NonPositiveInput { value: 0.0 }
        );
        assert!(matches!(
            d_score(2.0, -1.0),
            Err(ParadoxError::NonPositiveInput { .. })
        ));
        assert!(matches!(
            d_score(f64::INFINITY, 1.0),
            Err(ParadoxError::NonPositiveInput { .. })
        ));
    }

    #[test]
    fn d_surface_is_symmetric_with_a_zero_diagonal() {
        let grid = [1.0, 2.5, 7.0];
        let m = d_surface(&grid, &grid).unwrap();
        for (i, row) in m.iter().enumerate() {
            assert_abs_diff_eq!(row[i], 0.0, epsilon = 1e-12);
            for (j, &value) in row.iter().enumerate() {
                assert_eq!(value, m[j][i]);
                if i != j {
                    assert!(value > 0.0);
                }
            }
        }
    }

    #[test]
    fn product_sweep_is_negative_exactly_between_the_means() {
        let x = reference();
        let s = x.summarize();
        let candidates = [
            s.geom_mean - 1e-6,
            s.geom_mean + 1e-6,
            optimal_target(&x),
            s.arith_mean - 1e-6,
            s.arith_mean + 1e-6,
        ];
        let points = gradient_product_sweep(&x, &candidates).unwrap();
        assert!(points[0].product > 0.0);
        assert!(points[1].product < 0.0);
        assert!(points[2].product < 0.0);
        assert!(points[3].product < 0.0);
        assert!(points[4].product > 0.0);
    }

    #[test]
    fn product_sweep_rejects_nonpositive_candidates() {
        let x = reference();
        assert!(matches!(
            gradient_product_sweep(&x, &[1.0, 0.0]),
            Err(ParadoxError::NonPositiveInput { .. })
        ));
    }

    #[test]
    fn candidate_grid_spans_a_decade_past_each_end() {
        let x = reference();
        let grid = candidate_grid(&x, DEFAULT_GRID_POINTS);
        assert_eq!(grid.len(), DEFAULT_GRID_POINTS);
        assert_relative_eq!(grid[0], 0.2, max_relative = 1e-12);
        assert_relative_eq!(grid[399], 130.0, max_relative = 1e-12);
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }
}
