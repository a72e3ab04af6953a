//! Validated positive vectors and their two central tendencies.
//!
//! The arithmetic mean and the geometric mean of the same data can order two
//! samples differently; everything else in this crate is built on the gap
//! between them. This module owns the input type ([`SampleVector`]), the
//! summary quantities (the means, their difference, and their ratio), log
//! transforms with the offset/clamp variants used on real data, and exact
//! multiset editing (concatenate / remove) used to realize perturbations.
//!
//! Both means are computed over an internally sorted copy so that any
//! permutation of the same values produces bitwise-identical results, and the
//! geometric mean is evaluated in log space so products never overflow.

use thiserror::Error;

use crate::real::{t_from, t_from_usize, t_to, Real};

/// Validation and multiset-editing failures for sample vectors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum VectorError {
    /// The vector has no elements (or an edit removed all of them).
    #[error("vector must contain at least one element")]
    EmptyVector,
    /// An element is NaN or infinite.
    #[error("element at index {index} is not finite")]
    NonFiniteElement { index: usize },
    /// An element is zero or negative; the geometric mean needs x > 0.
    #[error("element at index {index} is not strictly positive")]
    NonPositiveElement { index: usize },
    /// A value scheduled for removal does not occur (often enough) in the
    /// vector, at the active matching tolerance.
    #[error("value {value} is not present in the vector")]
    ElementNotPresent { value: f64 },
}

/// Failures of the log-transform family.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    /// Offset transforms compute log(x - c); c must stay below min(x).
    #[error("offset {offset} must be smaller than the vector minimum {min}")]
    OffsetTooLarge { offset: f64, min: f64 },
    /// Bases at or below 1 flip or destroy monotonicity.
    #[error("log base {base} must be finite and greater than 1")]
    InvalidBase { base: f64 },
}

/// A non-empty vector of finite, strictly positive values.
///
/// Construction validates every element, so downstream math can assume both
/// means exist. Element order is preserved as given (edits keep the relative
/// order of survivors); all statistics are order-independent.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleVector<T> {
    values: Vec<T>,
}

impl<T: Real> SampleVector<T> {
    /// Validates `values` and wraps them. Fails on empty input, non-finite
    /// elements, and elements `<= 0`, identifying the first offending index.
    pub fn new(values: Vec<T>) -> Result<Self, VectorError> {
        if values.is_empty() {
            return Err(VectorError::EmptyVector);
        }
        for (index, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(VectorError::NonFiniteElement { index });
            }
            if v <= T::zero() {
                return Err(VectorError::NonPositiveElement { index });
            }
        }
        Ok(Self { values })
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: emptiness is ruled out at construction. Provided so the
    /// type plays well with generic code expecting the usual pair.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The elements, in their original order.
    pub fn as_slice(&self) -> &[T] {
        &self.values
    }

    /// Consumes the vector, returning its elements.
    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    /// Smallest element.
    pub fn min(&self) -> T {
        self.values.iter().copied().fold(T::infinity(), T::min)
    }

    /// Largest element.
    pub fn max(&self) -> T {
        self.values.iter().copied().fold(T::neg_infinity(), T::max)
    }

    /// Arithmetic mean, summed in ascending order so permutations of the
    /// same multiset give bitwise-identical results.
    pub fn arith_mean(&self) -> T {
        sorted_sum(&self.values) / t_from_usize(self.len())
    }

    /// Geometric mean, exp of the mean log. Computed entirely in log space,
    /// so it cannot overflow for any valid vector, and capped at the
    /// arithmetic mean so the means' guaranteed ordering survives rounding.
    pub fn geom_mean(&self) -> T {
        self.ln_mean().exp().min(self.arith_mean())
    }

    /// Mean of element logs: the log of the geometric mean, before the
    /// rounding cap. This is the quantity the closed-form differences use.
    pub(crate) fn ln_mean(&self) -> T {
        sorted_ln_sum(&self.values) / t_from_usize(self.len())
    }

    /// All summary quantities at once. `geom_mean <= arith_mean` holds by
    /// construction, so `id >= 0` and `flatness` lands in (0, 1].
    pub fn summarize(&self) -> MeanSummary<T> {
        let arith_mean = self.arith_mean();
        let geom_mean = self.geom_mean();
        MeanSummary {
            arith_mean,
            geom_mean,
            id: arith_mean - geom_mean,
            flatness: geom_mean / arith_mean,
            n: self.len(),
        }
    }

    /// Applies the selected log transform to every element. The result is a
    /// plain vector: transformed values are frequently zero or negative.
    pub fn log_transform(&self, options: &TransformOptions<T>) -> Result<Vec<T>, TransformError> {
        if !options.base.is_finite() || options.base <= T::one() {
            return Err(TransformError::InvalidBase {
                base: t_to(options.base),
            });
        }
        let ln_base = options.base.ln();
        match options.mode {
            TransformMode::Plain => Ok(self.values.iter().map(|&v| v.ln() / ln_base).collect()),
            TransformMode::Offset => {
                let min = self.min();
                if options.offset >= min {
                    return Err(TransformError::OffsetTooLarge {
                        offset: t_to(options.offset),
                        min: t_to(min),
                    });
                }
                Ok(self
                    .values
                    .iter()
                    .map(|&v| (v - options.offset).ln() / ln_base)
                    .collect())
            }
            TransformMode::Clamp => {
                let eps = options.clamp_epsilon;
                Ok(self
                    .values
                    .iter()
                    .map(|&v| v.max(eps).ln() / ln_base)
                    .collect())
            }
        }
    }

    /// How sensitive the transform is to the choice of base for this data:
    /// whether any element falls below the base (where the transformed value
    /// is below 1 and small shifts matter most) and the derivative
    /// d/dx log_b(x) = 1/(x ln b) at the minimum element, the steepest point.
    pub fn base_sensitivity(&self, base: T) -> Result<BaseSensitivity<T>, TransformError> {
        if !base.is_finite() || base <= T::one() {
            return Err(TransformError::InvalidBase { base: t_to(base) });
        }
        let min = self.min();
        Ok(BaseSensitivity {
            min_below_base: min < base,
            derivative_at_min: (base.ln() * min).recip(),
        })
    }

    /// Concatenation: all elements of `self`, then all elements of `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Self { values }
    }

    /// Removes `other` from `self` as a multiset, matching values exactly
    /// (bit equality). Survivors keep their relative order. Fails with
    /// [`VectorError::ElementNotPresent`] when a requested value has no
    /// unmatched occurrence left, and [`VectorError::EmptyVector`] when the
    /// removal would consume the entire vector.
    pub fn multiset_difference(&self, other: &Self) -> Result<Self, VectorError> {
        self.multiset_difference_within(other, T::zero())
    }

    /// [`Self::multiset_difference`] with an absolute matching tolerance:
    /// a removal value y matches any unmatched element within `tolerance`
    /// of it. Matching is greedy over both sides in ascending order, which
    /// finds a complete matching whenever one exists.
    pub fn multiset_difference_within(
        &self,
        other: &Self,
        tolerance: T,
    ) -> Result<Self, VectorError> {
        debug_assert!(tolerance >= T::zero(), "matching tolerance must be >= 0");
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| {
            self.values[a]
                .partial_cmp(&self.values[b])
                .expect("validated elements are comparable")
        });
        let mut removals = other.values.clone();
        removals.sort_by(|a, b| a.partial_cmp(b).expect("validated elements are comparable"));

        let mut matched = vec![false; self.len()];
        let mut cursor = 0usize;
        for y in removals {
            while cursor < order.len() && self.values[order[cursor]] < y - tolerance {
                cursor += 1;
            }
            if cursor < order.len() && self.values[order[cursor]] <= y + tolerance {
                matched[order[cursor]] = true;
                cursor += 1;
            } else {
                return Err(VectorError::ElementNotPresent { value: t_to(y) });
            }
        }
        let survivors: Vec<T> = self
            .values
            .iter()
            .zip(&matched)
            .filter(|(_, &m)| !m)
            .map(|(&v, _)| v)
            .collect();
        if survivors.is_empty() {
            return Err(VectorError::EmptyVector);
        }
        Ok(Self { values: survivors })
    }
}

/// The summary quantities of one vector.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MeanSummary<T> {
    /// Arithmetic mean.
    pub arith_mean: T,
    /// Geometric mean; never exceeds `arith_mean`.
    pub geom_mean: T,
    /// Inequality deviation: `arith_mean - geom_mean`, always >= 0. Zero
    /// exactly when the data is constant.
    pub id: T,
    /// `geom_mean / arith_mean`, in (0, 1]; 1 means perfectly flat data.
    pub flatness: T,
    /// Element count.
    pub n: usize,
}

/// Which log-domain mapping to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum TransformMode {
    /// log_b(x).
    #[default]
    Plain,
    /// log_b(x - offset), for data with a known floor.
    Offset,
    /// log_b(max(x, epsilon)), guarding against values at or near zero.
    Clamp,
}

/// Parameters of [`SampleVector::log_transform`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformOptions<T> {
    /// Base of the logarithm; must be finite and > 1.
    pub base: T,
    /// Mapping variant.
    pub mode: TransformMode,
    /// Subtracted floor for [`TransformMode::Offset`]; keep it >= 0 and
    /// below the vector minimum.
    pub offset: T,
    /// Lower clamp for [`TransformMode::Clamp`].
    pub clamp_epsilon: T,
}

impl<T: Real> Default for TransformOptions<T> {
    fn default() -> Self {
        Self {
            base: t_from(10.0),
            mode: TransformMode::Plain,
            offset: T::zero(),
            clamp_epsilon: t_from(1e-12),
        }
    }
}

/// Report of [`SampleVector::base_sensitivity`].
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BaseSensitivity<T> {
    /// True when min(x) < base, the regime where transformed values dip
    /// below 1 and base choice visibly reshapes the data.
    pub min_below_base: bool,
    /// d/dx log_base(x) evaluated at min(x): 1 / (ln(base) * min).
    pub derivative_at_min: T,
}

/// Ascending-order sum: one canonical accumulation order per multiset.
fn sorted_sum<T: Real>(values: &[T]) -> T {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("validated elements are comparable"));
    sorted.into_iter().sum()
}

/// Ascending-order sum of logs; ln is monotone, so sorting values first
/// yields a canonical order here too.
fn sorted_ln_sum<T: Real>(values: &[T]) -> T {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("validated elements are comparable"));
    sorted.into_iter().map(|v| v.ln()).sum()
}
