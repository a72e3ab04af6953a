//! Exact finite differences of both means under vector edits.
//!
//! For a positive vector X and an edit (concatenate Y, delete Y, or replace
//! Z with Y), the change of the arithmetic and geometric means of the edited
//! vector has a closed form in the means of the pieces alone. This module
//! evaluates those closed forms, predicts the *sign* of each change without
//! touching the edited vector, and provides a brute-force oracle
//! ([`oracle_diff`]) that rebuilds the edited vector and measures the change
//! directly, for cross-checking.
//!
//! Sign convention: every difference is `F(edited) - F(original)`. Deleting
//! small elements therefore *raises* both means (positive differences).
//!
//! Geometric closed forms are evaluated in log space, so intermediate
//! quantities cannot overflow even when element magnitudes differ by
//! hundreds of orders of magnitude.

use thiserror::Error;

use crate::real::{t_from, t_from_usize, Real};
use crate::stats::{SampleVector, VectorError};

/// Absolute half-width of the interval treated as "zero" when classifying
/// the sign of a difference of means.
pub const SIGN_ZERO_BAND: f64 = 1e-12;

/// Failures of finite-difference evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DiffError {
    /// Deletion must leave at least one element behind.
    #[error("cannot delete {remove} elements from a vector of length {len}")]
    DeleteLargerThanVector { remove: usize, len: usize },
    /// A value to remove has no unmatched occurrence.
    #[error("value {value} is not present in the vector being edited")]
    ElementNotPresent { value: f64 },
    /// Geometric and sign closed forms for replacement require equally many
    /// insertions and removals; only the arithmetic difference generalizes.
    #[error("replacement closed form needs |insert| == |remove|, got {insert} vs {remove}")]
    ReplaceSizeMismatch { insert: usize, remove: usize },
    /// The edit would leave an empty vector.
    #[error("edit would leave an empty vector")]
    EmptyResult,
}

/// One edit of a sample vector.
#[derive(Debug, Clone, PartialEq)]
pub enum Perturbation<T> {
    /// Append every element of the payload.
    Concat(SampleVector<T>),
    /// Remove every element of the payload (multiset semantics); must be a
    /// strict sub-multiset of the vector.
    Delete(SampleVector<T>),
    /// Remove `remove` and append `insert`. `remove` is matched against the
    /// multiset union of the original vector and `insert`, so a replacement
    /// may swap out the entire original (used by the optimal-target
    /// construction, which replaces all of X at once).
    Replace {
        insert: SampleVector<T>,
        remove: SampleVector<T>,
    },
}

/// Sign of a difference, classified with the ±[`SIGN_ZERO_BAND`] dead zone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Sign {
    /// Below -band.
    Negative,
    /// Within ±band of zero.
    Zero,
    /// Above +band.
    Positive,
}

impl Sign {
    /// Classifies `v` against the ±[`SIGN_ZERO_BAND`] dead zone.
    pub fn of_banded<T: Real>(v: T) -> Self {
        let band = t_from(SIGN_ZERO_BAND);
        if v > band {
            Sign::Positive
        } else if v < -band {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    /// True for the strict opposition (Positive, Negative) in either order;
    /// a Zero on either side never counts.
    pub fn is_opposite(self, other: Self) -> bool {
        matches!(
            (self, other),
            (Sign::Positive, Sign::Negative) | (Sign::Negative, Sign::Positive)
        )
    }
}

/// Both mean differences of one edit, with derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiffResult<T> {
    /// Change of the arithmetic mean.
    pub d_arith: T,
    /// Change of the geometric mean.
    pub d_geom: T,
    /// Change of the inequality deviation (arith minus geom).
    pub d_id: T,
    /// True when the two means move in strictly opposite directions
    /// (outside the ±[`SIGN_ZERO_BAND`] dead zone).
    pub paradox_signed: bool,
}

/// Predicted signs of both mean differences, from the pieces' means alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SignPrediction {
    /// Sign the arithmetic difference will take.
    pub sign_arith: Sign,
    /// Sign the geometric difference will take.
    pub sign_geom: Sign,
}

/// Change of the arithmetic mean under `p`, in closed form.
///
/// ```
/// use logparadox::{diff_arith, Perturbation, SampleVector};
///
/// let x = SampleVector::new(vec![2.0_f64, 4.0, 6.0, 13.0]).unwrap();
/// let y = SampleVector::new(vec![5.5]).unwrap();
/// let d = diff_arith(&x, &Perturbation::Concat(y)).unwrap();
/// assert!((d - (-0.15)).abs() < 1e-15);
/// ```
pub fn diff_arith<T: Real>(x: &SampleVector<T>, p: &Perturbation<T>) -> Result<T, DiffError> {
    validate(x, p)?;
    Ok(arith_term(x, p))
}

/// Change of the geometric mean under `p`, in closed form. Replacement
/// requires equally many insertions and removals.
pub fn diff_geom<T: Real>(x: &SampleVector<T>, p: &Perturbation<T>) -> Result<T, DiffError> {
    validate(x, p)?;
    require_matched_replace(p)?;
    Ok(geom_term(x, p))
}

/// Change of the inequality deviation: `diff_arith - diff_geom`.
pub fn diff_id<T: Real>(x: &SampleVector<T>, p: &Perturbation<T>) -> Result<T, DiffError> {
    validate(x, p)?;
    require_matched_replace(p)?;
    Ok(arith_term(x, p) - geom_term(x, p))
}

/// All closed-form differences of one edit, validated once.
pub fn closed_form_diff<T: Real>(
    x: &SampleVector<T>,
    p: &Perturbation<T>,
) -> Result<DiffResult<T>, DiffError> {
    validate(x, p)?;
    require_matched_replace(p)?;
    let d_arith = arith_term(x, p);
    let d_geom = geom_term(x, p);
    Ok(assemble(d_arith, d_geom))
}

/// Brute-force reference: rebuilds the edited vector and differences its
/// summaries directly. Unlike the closed forms, this handles replacement
/// with mismatched sizes, since it never needs the factored identity.
pub fn oracle_diff<T: Real>(
    x: &SampleVector<T>,
    p: &Perturbation<T>,
) -> Result<DiffResult<T>, DiffError> {
    let edited = apply(x, p)?;
    let before = x.summarize();
    let after = edited.summarize();
    let d_arith = after.arith_mean - before.arith_mean;
    let d_geom = after.geom_mean - before.geom_mean;
    Ok(DiffResult {
        d_arith,
        d_geom,
        d_id: after.id - before.id,
        paradox_signed: Sign::of_banded(d_arith).is_opposite(Sign::of_banded(d_geom)),
    })
}

/// Materializes the edited vector itself.
pub fn apply<T: Real>(
    x: &SampleVector<T>,
    p: &Perturbation<T>,
) -> Result<SampleVector<T>, DiffError> {
    match p {
        Perturbation::Concat(y) => Ok(x.concat(y)),
        Perturbation::Delete(y) => {
            check_delete_size(x, y)?;
            x.multiset_difference(y).map_err(lift_vector_error)
        }
        Perturbation::Replace { insert, remove } => x
            .concat(insert)
            .multiset_difference(remove)
            .map_err(lift_vector_error),
    }
}

/// Predicts the sign of both differences from the pieces' means alone,
/// without evaluating either difference:
///
/// - concat:  sign(mean(Y) - mean(X)) per mean kind;
/// - delete:  sign(mean(X) - mean(Y));
/// - replace (equal sizes): sign(mean(Y) - mean(Z)).
///
/// The closed forms make each difference a positive multiple of the
/// corresponding gap, so these predictions are exact up to the ±band dead
/// zone around ties.
pub fn condition_check<T: Real>(
    x: &SampleVector<T>,
    p: &Perturbation<T>,
) -> Result<SignPrediction, DiffError> {
    validate(x, p)?;
    require_matched_replace(p)?;
    let (gap_arith, gap_geom) = match p {
        Perturbation::Concat(y) => (
            y.arith_mean() - x.arith_mean(),
            y.geom_mean() - x.geom_mean(),
        ),
        Perturbation::Delete(y) => (
            x.arith_mean() - y.arith_mean(),
            x.geom_mean() - y.geom_mean(),
        ),
        Perturbation::Replace { insert, remove } => (
            insert.arith_mean() - remove.arith_mean(),
            insert.geom_mean() - remove.geom_mean(),
        ),
    };
    Ok(SignPrediction {
        sign_arith: Sign::of_banded(gap_arith),
        sign_geom: Sign::of_banded(gap_geom),
    })
}

fn assemble<T: Real>(d_arith: T, d_geom: T) -> DiffResult<T> {
    DiffResult {
        d_arith,
        d_geom,
        d_id: d_arith - d_geom,
        paradox_signed: Sign::of_banded(d_arith).is_opposite(Sign::of_banded(d_geom)),
    }
}

fn lift_vector_error(e: VectorError) -> DiffError {
    match e {
        VectorError::ElementNotPresent { value } => DiffError::ElementNotPresent { value },
        VectorError::EmptyVector => DiffError::EmptyResult,
        // Construction already validated both vectors, so nothing else can
        // surface here; keep a conservative mapping regardless.
        VectorError::NonFiniteElement { .. } | VectorError::NonPositiveElement { .. } => {
            DiffError::EmptyResult
        }
    }
}

fn check_delete_size<T: Real>(x: &SampleVector<T>, y: &SampleVector<T>) -> Result<(), DiffError> {
    if y.len() >= x.len() {
        return Err(DiffError::DeleteLargerThanVector {
            remove: y.len(),
            len: x.len(),
        });
    }
    Ok(())
}

/// Runs the structural checks (sizes and multiset membership) shared by all
/// closed forms, by materializing the edit once and discarding it.
fn validate<T: Real>(x: &SampleVector<T>, p: &Perturbation<T>) -> Result<(), DiffError> {
    apply(x, p).map(drop)
}

fn require_matched_replace<T: Real>(p: &Perturbation<T>) -> Result<(), DiffError> {
    if let Perturbation::Replace { insert, remove } = p {
        if insert.len() != remove.len() {
            return Err(DiffError::ReplaceSizeMismatch {
                insert: insert.len(),
                remove: remove.len(),
            });
        }
    }
    Ok(())
}

/// Arithmetic closed forms. With A(..) the arithmetic mean, n = |X|,
/// m = |Y|, k = |Z|:
///
/// - concat:          m/(n+m) * (A(Y) - A(X))
/// - delete:          m/(n-m) * (A(X) - A(Y))
/// - replace (m=k):   m/n * (A(Y) - A(Z))
/// - replace (m!=k):  (n*A(X) + m*A(Y) - k*A(Z))/(n+m-k) - A(X)
fn arith_term<T: Real>(x: &SampleVector<T>, p: &Perturbation<T>) -> T {
    let n = t_from_usize::<T>(x.len());
    match p {
        Perturbation::Concat(y) => {
            let m = t_from_usize::<T>(y.len());
            m / (n + m) * (y.arith_mean() - x.arith_mean())
        }
        Perturbation::Delete(y) => {
            let m = t_from_usize::<T>(y.len());
            m / (n - m) * (x.arith_mean() - y.arith_mean())
        }
        Perturbation::Replace { insert, remove } => {
            let m = t_from_usize::<T>(insert.len());
            let k = t_from_usize::<T>(remove.len());
            if insert.len() == remove.len() {
                m / n * (insert.arith_mean() - remove.arith_mean())
            } else {
                let pooled = (n * x.arith_mean() + m * insert.arith_mean()
                    - k * remove.arith_mean())
                    / (n + m - k);
                pooled - x.arith_mean()
            }
        }
    }
}

/// Geometric closed forms, evaluated via mean logs. With L(..) the mean log
/// and G(X) = exp(L(X)):
///
/// - concat:        exp((n L(X) + m L(Y))/(n+m)) - G(X)
/// - delete:        exp((n L(X) - m L(Y))/(n-m)) - G(X)
/// - replace (m=k): exp(L(X) + m/n (L(Y) - L(Z))) - G(X)
///
/// Callers guarantee matched sizes for replacement.
fn geom_term<T: Real>(x: &SampleVector<T>, p: &Perturbation<T>) -> T {
    let n = t_from_usize::<T>(x.len());
    let lx = x.ln_mean();
    match p {
        Perturbation::Concat(y) => {
            let m = t_from_usize::<T>(y.len());
            ((n * lx + m * y.ln_mean()) / (n + m)).exp() - lx.exp()
        }
        Perturbation::Delete(y) => {
            let m = t_from_usize::<T>(y.len());
            ((n * lx - m * y.ln_mean()) / (n - m)).exp() - lx.exp()
        }
        Perturbation::Replace { insert, remove } => {
            let m = t_from_usize::<T>(insert.len());
            (lx + m / n * (insert.ln_mean() - remove.ln_mean())).exp() - lx.exp()
        }
    }
}
