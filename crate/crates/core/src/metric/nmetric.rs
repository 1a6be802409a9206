use super::sorted_sum;
use crate::{Error, Result};

/// A pairwise metric `d(x, y)`.
pub trait Metric<P: ?Sized> {
    fn distance(&self, a: &P, b: &P) -> f64;
}

impl<P: ?Sized, F: Fn(&P, &P) -> f64> Metric<P> for F {
    fn distance(&self, a: &P, b: &P) -> f64 {
        self(a, b)
    }
}

/// `|x - y|` on the reals.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AbsDiff;

impl Metric<f64> for AbsDiff {
    fn distance(&self, a: &f64, b: &f64) -> f64 {
        (a - b).abs()
    }
}

/// An n-argument distance functional `G_n : X^n -> [0, inf)`, n >= 3.
pub trait GeneralizedNMetric<P> {
    fn arity(&self) -> usize;

    /// Evaluates on exactly `arity()` points. Callers are responsible for the
    /// length; use [`GeneralizedNMetric::evaluate`] for a checked call.
    fn measure(&self, points: &[P]) -> f64;

    fn evaluate(&self, points: &[P]) -> Result<f64> {
        if points.len() != self.arity() {
            return Err(Error::arity_exact(self.arity(), points.len()));
        }
        Ok(self.measure(points))
    }
}

/// `rho(x_1..x_n) = sum_{r<s} |x_r - x_s|` on the reals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rho {
    arity: usize,
}

impl Rho {
    pub fn new(arity: usize) -> Result<Self> {
        if arity < 3 {
            return Err(Error::arity_at_least(3, arity));
        }
        Ok(Rho { arity })
    }
}

impl GeneralizedNMetric<f64> for Rho {
    fn arity(&self) -> usize {
        self.arity
    }

    fn measure(&self, points: &[f64]) -> f64 {
        pair_sum(points, &AbsDiff)
    }
}

pub fn gn_rho(points: &[f64]) -> Result<f64> {
    Rho::new(points.len())?.evaluate(points)
}

/// How pairwise base distances are aggregated into an n-metric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairAggregation {
    /// Sum over all unordered pairs.
    Sum,
    /// Largest pairwise distance.
    Max,
}

/// An n-metric built from a pairwise metric by summing or maximising over
/// all unordered pairs.
#[derive(Clone, Debug)]
pub struct PairwiseNMetric<D> {
    arity: usize,
    base: D,
    mode: PairAggregation,
}

impl<D> PairwiseNMetric<D> {
    pub fn new(arity: usize, base: D, mode: PairAggregation) -> Result<Self> {
        if arity < 3 {
            return Err(Error::arity_at_least(3, arity));
        }
        Ok(PairwiseNMetric { arity, base, mode })
    }

    pub fn mode(&self) -> PairAggregation {
        self.mode
    }
}

impl<P, D: Metric<P>> GeneralizedNMetric<P> for PairwiseNMetric<D> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn measure(&self, points: &[P]) -> f64 {
        match self.mode {
            PairAggregation::Sum => pair_sum(points, &self.base),
            PairAggregation::Max => pairs(points.len())
                .map(|(r, s)| self.base.distance(&points[r], &points[s]))
                .fold(0.0, f64::max),
        }
    }
}

pub fn gn_from_metric<P, D: Metric<P>>(
    points: &[P],
    base: D,
    mode: PairAggregation,
) -> Result<f64> {
    PairwiseNMetric::new(points.len(), base, mode)?.evaluate(points)
}

/// Wraps an arbitrary closure as an n-metric. Mostly useful for feeding
/// deliberately broken evaluators to the axiom harness.
pub struct FnNMetric<F> {
    arity: usize,
    f: F,
}

impl<F> FnNMetric<F> {
    pub fn new(arity: usize, f: F) -> Self {
        FnNMetric { arity, f }
    }
}

impl<P, F: Fn(&[P]) -> f64> GeneralizedNMetric<P> for FnNMetric<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn measure(&self, points: &[P]) -> f64 {
        (self.f)(points)
    }
}

/// All index pairs `(r, s)` with `r < s < n`, in lexicographic order.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |r| (r + 1..n).map(move |s| (r, s)))
}

fn pair_sum<P, D: Metric<P>>(points: &[P], base: &D) -> f64 {
    sorted_sum(
        pairs(points.len())
            .map(|(r, s)| base.distance(&points[r], &points[s]))
            .collect(),
    )
}
