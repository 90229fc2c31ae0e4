//! Non-normalized Lorenz curves, the generalized majorization order on
//! decreasing arrays, and measures that respect that order.

use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::error::{Error, Result};

/// Array entries the order is defined over: non-negative integers or reals.
pub trait Weight: Copy + PartialOrd + Add<Output = Self> + fmt::Display {
    fn zero() -> Self;
    fn as_f64(self) -> f64;
    fn is_admissible(self) -> bool;
}

impl Weight for u64 {
    fn zero() -> Self {
        0
    }
    fn as_f64(self) -> f64 {
        self as f64
    }
    fn is_admissible(self) -> bool {
        true
    }
}

impl Weight for f64 {
    fn zero() -> Self {
        0.0
    }
    fn as_f64(self) -> f64 {
        self
    }
    fn is_admissible(self) -> bool {
        self.is_finite() && self >= 0.0
    }
}

fn validate<T: Weight>(x: &[T]) -> Result<()> {
    if !x.iter().all(|v| v.is_admissible()) {
        return Err(Error::NegativeEntry);
    }
    if x.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDecreasing);
    }
    Ok(())
}

fn prefix_sums<T: Weight>(x: &[T]) -> Vec<T> {
    let mut acc = T::zero();
    x.iter()
        .map(|&v| {
            acc = acc + v;
            acc
        })
        .collect()
}

/// Polygonal curve through `(0, 0)` and `(j, x_1 + ... + x_j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LorenzCurve<T> {
    pub points: Vec<(usize, T)>,
}

impl<T: Weight> LorenzCurve<T> {
    pub fn endpoint(&self) -> (usize, T) {
        *self
            .points
            .last()
            .expect("curve always contains the origin")
    }

    /// Two-column `j,cumulative` CSV with a header row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,cumulative\n");
        for (j, s) in &self.points {
            out.push_str(&format!("{j},{s}\n"));
        }
        out
    }
}

pub fn lorenz_curve<T: Weight>(x: &[T]) -> Result<LorenzCurve<T>> {
    validate(x)?;
    let mut points = vec![(0, T::zero())];
    points.extend(
        prefix_sums(x)
            .into_iter()
            .enumerate()
            .map(|(j, s)| (j + 1, s)),
    );
    Ok(LorenzCurve { points })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Equal,
    Less,
    Greater,
    Incomparable,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::Less => "less",
            Relation::Greater => "greater",
            Relation::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of comparing `x` against `y`: `Less` means `x ≺ y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MajorizationVerdict {
    pub relation: Relation,
    /// Some prefix inequality is strict. Always true for `Less`/`Greater`
    /// and false for `Equal`.
    pub strict: bool,
}

impl MajorizationVerdict {
    /// The verdict with the arguments swapped.
    pub fn reversed(self) -> Self {
        let relation = match self.relation {
            Relation::Less => Relation::Greater,
            Relation::Greater => Relation::Less,
            r => r,
        };
        MajorizationVerdict { relation, ..self }
    }

    /// `x ≺ y`, equality included.
    pub fn is_majorized(self) -> bool {
        matches!(self.relation, Relation::Less | Relation::Equal)
    }
}

/// Compares the running sums of two decreasing arrays of equal length.
pub fn majorize_compare<T: Weight>(x: &[T], y: &[T]) -> Result<MajorizationVerdict> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    validate(x)?;
    validate(y)?;
    let (mut below, mut above) = (false, false);
    for (sx, sy) in prefix_sums(x).into_iter().zip(prefix_sums(y)) {
        if sx < sy {
            below = true;
        } else if sx > sy {
            above = true;
        }
    }
    let relation = match (below, above) {
        (false, false) => Relation::Equal,
        (true, false) => Relation::Less,
        (false, true) => Relation::Greater,
        (true, true) => Relation::Incomparable,
    };
    Ok(MajorizationVerdict {
        relation,
        strict: below != above,
    })
}

/// Sum of all running sums, `sum_i sum_{j<=i} x_j`.
pub fn gini_generalized<T: Weight>(x: &[T]) -> Result<T> {
    validate(x)?;
    Ok(prefix_sums(x).into_iter().fold(T::zero(), |a, s| a + s))
}

/// `sum_j x_j ln x_j` with `0 ln 0 = 0`.
pub fn theil<T: Weight>(x: &[T]) -> Result<f64> {
    validate(x)?;
    Ok(x.iter()
        .map(|v| v.as_f64())
        .filter(|&v| v > 0.0)
        .map(|v| v * v.ln())
        .sum())
}

/// `sum_j x_j^p` for `p > 1`.
pub fn power_measure<T: Weight>(x: &[T], p: f64) -> Result<f64> {
    if !p.is_finite() || p <= 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    validate(x)?;
    Ok(x.iter().map(|v| v.as_f64().powf(p)).sum())
}

/// Classical Gini coefficient: mean absolute pairwise difference over twice
/// the mean.
pub fn gini_standard<T: Weight>(x: &[T]) -> Result<f64> {
    validate(x)?;
    let n = x.len() as f64;
    let total: f64 = x.iter().map(|v| v.as_f64()).sum();
    if total <= 0.0 {
        return Err(Error::ZeroSum);
    }
    // for decreasing x, sum_{i<j} (x_i - x_j) = sum_i x_i (n - 1 - 2i)
    let half_abs_diff: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| v.as_f64() * (n - 1.0 - 2.0 * i as f64))
        .sum();
    Ok(half_abs_diff / (n * total))
}
