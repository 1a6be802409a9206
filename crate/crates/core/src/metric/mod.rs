//! Metric, generalized n-metric, and fuzzy n-metric constructions.
//!
//! Every evaluator here is a pure function of its inputs. Sums and products
//! over unordered pairs are accumulated in sorted order so that permuting the
//! argument tuple reproduces the value bit for bit.

mod bounded;
mod fuzzy;
mod nmetric;
mod tnorm;

pub use bounded::{stationary_frn, BoundedBox, StationaryFrn};
pub use fuzzy::{
    fuzzy_from_gn, induced_pairwise, product_construction, std_fuzzy_metric,
    subset_identity_residual, FnFuzzyMetric, FuzzyNMetric, GnFuzzyMetric, InducedFuzzyMetric,
    ProductFuzzyMetric, StandardFuzzyMetric,
};
pub use nmetric::{
    gn_from_metric, gn_rho, AbsDiff, FnNMetric, GeneralizedNMetric, Metric, PairAggregation,
    PairwiseNMetric, Rho,
};
pub use tnorm::{tnorm_apply, TNorm};

/// Sum of `terms` taken in ascending order.
pub(crate) fn sorted_sum(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(f64::total_cmp);
    terms.into_iter().sum()
}

/// Product of `terms` taken in ascending order.
pub(crate) fn sorted_product(mut terms: Vec<f64>) -> f64 {
    terms.sort_by(f64::total_cmp);
    terms.into_iter().product()
}

pub(crate) fn check_t(t: f64) -> crate::Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::Domain(format!(
            "t must be a positive finite real, got {t}"
        )))
    }
}
