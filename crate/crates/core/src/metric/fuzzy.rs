use super::nmetric::pairs;
use super::{check_t, sorted_product, GeneralizedNMetric, Metric, TNorm};
use crate::{Error, Result};

/// A fuzzy set on `X^n x (0, inf)` giving the degree of nearness of `n`
/// points at scale `t`, together with the t-norm it is paired with.
///
/// Stationary metrics still take `t` and ignore it.
pub trait FuzzyNMetric<P> {
    fn arity(&self) -> usize;

    fn tnorm(&self) -> TNorm;

    fn is_stationary(&self) -> bool {
        false
    }

    /// Degree of nearness of exactly `arity()` points at `t > 0`, unchecked.
    fn degree(&self, points: &[P], t: f64) -> f64;

    fn evaluate(&self, points: &[P], t: f64) -> Result<f64> {
        check_t(t)?;
        if points.len() != self.arity() {
            return Err(Error::arity_exact(self.arity(), points.len()));
        }
        Ok(self.degree(points, t))
    }
}

impl<P, F: FuzzyNMetric<P> + ?Sized> FuzzyNMetric<P> for &F {
    fn arity(&self) -> usize {
        (**self).arity()
    }
    fn tnorm(&self) -> TNorm {
        (**self).tnorm()
    }
    fn is_stationary(&self) -> bool {
        (**self).is_stationary()
    }
    fn degree(&self, points: &[P], t: f64) -> f64 {
        (**self).degree(points, t)
    }
}

/// `M_d(x, y, t) = t / (t + d(x, y))` with the product t-norm.
#[derive(Clone, Copy, Debug, Default)]
pub struct StandardFuzzyMetric<D> {
    base: D,
}

impl<D> StandardFuzzyMetric<D> {
    pub fn new(base: D) -> Self {
        StandardFuzzyMetric { base }
    }
}

impl<P, D: Metric<P>> FuzzyNMetric<P> for StandardFuzzyMetric<D> {
    fn arity(&self) -> usize {
        2
    }

    fn tnorm(&self) -> TNorm {
        TNorm::Product
    }

    fn degree(&self, points: &[P], t: f64) -> f64 {
        t / (t + self.base.distance(&points[0], &points[1]))
    }
}

pub fn std_fuzzy_metric<P, D: Metric<P>>(base: D, x: &P, y: &P, t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(t / (t + base.distance(x, y)))
}

/// `F_n(xs, t) = t / (t + G_n(xs))` with the product t-norm.
#[derive(Clone, Debug)]
pub struct GnFuzzyMetric<G> {
    gn: G,
}

impl<G> GnFuzzyMetric<G> {
    pub fn new(gn: G) -> Self {
        GnFuzzyMetric { gn }
    }

    pub fn inner(&self) -> &G {
        &self.gn
    }
}

impl<P, G: GeneralizedNMetric<P>> FuzzyNMetric<P> for GnFuzzyMetric<G> {
    fn arity(&self) -> usize {
        self.gn.arity()
    }

    fn tnorm(&self) -> TNorm {
        TNorm::Product
    }

    fn degree(&self, points: &[P], t: f64) -> f64 {
        t / (t + self.gn.measure(points))
    }
}

pub fn fuzzy_from_gn<P, G: GeneralizedNMetric<P>>(gn: &G, points: &[P], t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(t / (t + gn.evaluate(points)?))
}

/// `F_n(xs, t) = prod_{i<j} F(x_i, x_j, t)` for a pairwise fuzzy metric `F`.
///
/// Only defined for a product t-norm pair metric.
#[derive(Clone, Debug)]
pub struct ProductFuzzyMetric<F> {
    pair: F,
    arity: usize,
}

impl<F> ProductFuzzyMetric<F> {
    pub fn new<P>(pair: F, arity: usize) -> Result<Self>
    where
        F: FuzzyNMetric<P>,
    {
        if pair.arity() != 2 {
            return Err(Error::arity_exact(2, pair.arity()));
        }
        if pair.tnorm() != TNorm::Product {
            return Err(Error::UnsupportedConstruction(format!(
                "pairwise product construction requires the product t-norm, got {:?}",
                pair.tnorm()
            )));
        }
        if arity < 3 {
            return Err(Error::arity_at_least(3, arity));
        }
        Ok(ProductFuzzyMetric { pair, arity })
    }
}

impl<P: Clone, F: FuzzyNMetric<P>> FuzzyNMetric<P> for ProductFuzzyMetric<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn tnorm(&self) -> TNorm {
        TNorm::Product
    }

    fn is_stationary(&self) -> bool {
        self.pair.is_stationary()
    }

    fn degree(&self, points: &[P], t: f64) -> f64 {
        pair_product(&self.pair, points, t)
    }
}

fn pair_product<P: Clone, F: FuzzyNMetric<P>>(pair: &F, points: &[P], t: f64) -> f64 {
    sorted_product(
        pairs(points.len())
            .map(|(i, j)| pair.degree(&[points[i].clone(), points[j].clone()], t))
            .collect(),
    )
}

pub fn product_construction<P: Clone, F: FuzzyNMetric<P>>(
    pair: &F,
    points: &[P],
    t: f64,
) -> Result<f64> {
    ProductFuzzyMetric::new(pair, points.len())?.evaluate(points, t)
}

/// `|F_n(xs)^(n-2) - prod over (n-1)-subsets of F_{n-1}(subset)|` for the
/// pairwise product construction. Zero up to rounding for every input.
pub fn subset_identity_residual<P: Clone, F: FuzzyNMetric<P>>(
    pair: &F,
    points: &[P],
    t: f64,
) -> Result<f64> {
    let n = points.len();
    let full = product_construction(pair, points, t)?;
    let lhs = full.powi(n as i32 - 2);
    let mut subset = Vec::with_capacity(n - 1);
    let rhs = (0..n)
        .map(|skip| {
            subset.clear();
            subset.extend(
                points
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, p)| p.clone()),
            );
            pair_product(pair, &subset, t)
        })
        .product::<f64>();
    Ok((lhs - rhs).abs())
}

/// The pairwise fuzzy metric induced by an n-ary one:
/// `M(x, y, t) = F_n(x, y, .., y, t/2) * F_n(x, .., x, y, t/2)`.
#[derive(Clone, Debug)]
pub struct InducedFuzzyMetric<F> {
    inner: F,
}

impl<F> InducedFuzzyMetric<F> {
    pub fn new(inner: F) -> Self {
        InducedFuzzyMetric { inner }
    }
}

impl<P: Clone, F: FuzzyNMetric<P>> FuzzyNMetric<P> for InducedFuzzyMetric<F> {
    fn arity(&self) -> usize {
        2
    }

    fn tnorm(&self) -> TNorm {
        self.inner.tnorm()
    }

    fn is_stationary(&self) -> bool {
        self.inner.is_stationary()
    }

    fn degree(&self, points: &[P], t: f64) -> f64 {
        induced_degree(&self.inner, &points[0], &points[1], t)
    }
}

fn induced_degree<P: Clone, F: FuzzyNMetric<P>>(inner: &F, x: &P, y: &P, t: f64) -> f64 {
    let n = inner.arity();
    let mut tuple = vec![y.clone(); n];
    tuple[0] = x.clone();
    let first = inner.degree(&tuple, t / 2.0);
    tuple.fill(x.clone());
    tuple[n - 1] = y.clone();
    let second = inner.degree(&tuple, t / 2.0);
    inner.tnorm().combine(first, second)
}

pub fn induced_pairwise<P: Clone, F: FuzzyNMetric<P>>(
    inner: &F,
    x: &P,
    y: &P,
    t: f64,
) -> Result<f64> {
    check_t(t)?;
    if inner.arity() < 2 {
        return Err(Error::arity_at_least(2, inner.arity()));
    }
    Ok(induced_degree(inner, x, y, t))
}

/// Wraps a closure as a fuzzy n-metric, e.g. to feed mutated evaluators to
/// the axiom harness.
pub struct FnFuzzyMetric<F> {
    arity: usize,
    tnorm: TNorm,
    stationary: bool,
    f: F,
}

impl<F> FnFuzzyMetric<F> {
    pub fn new(arity: usize, tnorm: TNorm, f: F) -> Self {
        FnFuzzyMetric {
            arity,
            tnorm,
            stationary: false,
            f,
        }
    }

    pub fn stationary(mut self) -> Self {
        self.stationary = true;
        self
    }
}

impl<P, F: Fn(&[P], f64) -> f64> FuzzyNMetric<P> for FnFuzzyMetric<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn tnorm(&self) -> TNorm {
        self.tnorm
    }

    fn is_stationary(&self) -> bool {
        self.stationary
    }

    fn degree(&self, points: &[P], t: f64) -> f64 {
        (self.f)(points, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{stationary_frn, AbsDiff, BoundedBox, Rho, StationaryFrn};
    use proptest::prelude::*;

    fn std_abs() -> StandardFuzzyMetric<AbsDiff> {
        StandardFuzzyMetric::new(AbsDiff)
    }

    #[test]
    fn standard_metric_examples() {
        assert_eq!(std_fuzzy_metric(AbsDiff, &5.0, &5.0, 1.0).unwrap(), 1.0);
        assert_eq!(std_fuzzy_metric(AbsDiff, &0.0, &3.0, 1.0).unwrap(), 0.25);
        assert_eq!(std_fuzzy_metric(AbsDiff, &0.0, &3.0, 3.0).unwrap(), 0.5);
        assert!(matches!(
            std_fuzzy_metric(AbsDiff, &0.0, &3.0, 0.0),
            Err(Error::Domain(_))
        ));
        assert!(std_fuzzy_metric(AbsDiff, &0.0, &3.0, -1.0).is_err());
    }

    #[test]
    fn from_gn_examples() {
        let rho = Rho::new(3).unwrap();
        assert_eq!(fuzzy_from_gn(&rho, &[0.0, 0.0, 0.0], 7.0).unwrap(), 1.0);
        assert_eq!(fuzzy_from_gn(&rho, &[0.0, 1.0, 2.0], 4.0).unwrap(), 0.5);
        assert!(fuzzy_from_gn(&rho, &[0.0, 1.0, 2.0], 0.0).is_err());
        assert!(matches!(
            fuzzy_from_gn(&rho, &[0.0, 1.0], 1.0),
            Err(Error::Arity { .. })
        ));
    }

    // The limit t -> inf is only claimed for the t/(t+G) construction;
    // stationary metrics below 1 stay below 1.
    #[test]
    fn from_gn_tends_to_one() {
        let rho = Rho::new(3).unwrap();
        let mut prev = 0.0;
        for t in [1e2, 1e4, 1e6, 1e8] {
            let v = fuzzy_from_gn(&rho, &[0.0, 1.0, 2.0], t).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(1.0 - prev < 1e-7);
    }

    #[test]
    fn product_examples() {
        let f = std_abs();
        assert_eq!(
            product_construction(&f, &[0.0, 0.0, 0.0], 1.0).unwrap(),
            1.0
        );
        let v = product_construction(&f, &[0.0, 1.0, 2.0], 1.0).unwrap();
        assert!((v - 1.0 / 12.0).abs() < 1e-15, "{v}");
        let w = product_construction(&f, &[2.0, 0.0, 1.0], 1.0).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn product_rejects_minimum_tnorm() {
        let min_pair = FnFuzzyMetric::new(2, TNorm::Minimum, |p: &[f64], t: f64| {
            t / (t + (p[0] - p[1]).abs())
        });
        let err = product_construction(&min_pair, &[0.0, 1.0, 2.0], 1.0).unwrap_err();
        assert!(matches!(err, Error::UnsupportedConstruction(_)));
        assert!(ProductFuzzyMetric::new(std_abs(), 2).is_err());
    }

    #[test]
    fn subset_identity_examples() {
        let f = std_abs();
        assert!(subset_identity_residual(&f, &[0.0, 1.0, 2.0], 1.0).unwrap() <= 1e-12);
        assert_eq!(
            subset_identity_residual(&f, &[3.0, 3.0, 3.0, 3.0], 1.0).unwrap(),
            0.0
        );
    }

    #[test]
    fn induced_examples() {
        let frn = StationaryFrn::new(3, BoundedBox::rgb(1024.0).unwrap()).unwrap();
        let x = [0.0, 0.0, 0.0];
        let y = [255.0, 255.0, 255.0];
        assert_eq!(induced_pairwise(&frn, &x, &x, 1.0).unwrap(), 1.0);
        let v = induced_pairwise(&frn, &x, &y, 1.0).unwrap();
        let expected = (1024.0f64 / 1279.0).powi(6);
        assert!((v - expected).abs() < 1e-15, "{v} vs {expected}");
        assert_eq!(v, induced_pairwise(&frn, &y, &x, 1.0).unwrap());
        assert!(induced_pairwise(&frn, &x, &y, 0.0).is_err());
        // both factors equal the pairwise bounded-box value
        let pair = stationary_frn(&[x, y], &BoundedBox::rgb(1024.0).unwrap()).unwrap();
        assert_eq!(v, pair * pair);
    }

    proptest! {
        #[test]
        fn subset_identity_holds_on_random_tuples(
            xs in prop::collection::vec(0.0..10.0f64, 3..=5),
            t in 0.1..5.0f64,
        ) {
            let r = subset_identity_residual(&std_abs(), &xs, t).unwrap();
            prop_assert!(r <= 1e-12, "residual {}", r);
        }

        #[test]
        fn standard_metric_is_symmetric(x in -100.0..100.0f64, y in -100.0..100.0f64, t in 0.01..10.0f64) {
            let a = std_fuzzy_metric(AbsDiff, &x, &y, t).unwrap();
            let b = std_fuzzy_metric(AbsDiff, &y, &x, t).unwrap();
            prop_assert_eq!(a, b);
            prop_assert!(a > 0.0 && a <= 1.0);
        }
    }
}
