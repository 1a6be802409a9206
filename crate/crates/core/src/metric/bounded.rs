use super::{check_t, FuzzyNMetric, TNorm};
use crate::{Error, Result};

/// Channel bounds `[lower, upper]`, smoothing constant `K`, and channel count
/// for the stationary bounded-box metric.
///
/// `K > |lower|` is required when `lower < 0`; for non-negative bounds any
/// `K > 0` is accepted.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundedBox {
    lower: f64,
    upper: f64,
    smoothing: f64,
    channels: usize,
}

impl BoundedBox {
    pub fn new(lower: f64, upper: f64, smoothing: f64, channels: usize) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite() && upper > lower) {
            return Err(Error::Domain(format!(
                "bounds must satisfy lower < upper, got [{lower}, {upper}]"
            )));
        }
        if !(smoothing.is_finite() && smoothing > 0.0) {
            return Err(Error::Domain(format!(
                "K must be positive, got {smoothing}"
            )));
        }
        if lower < 0.0 && smoothing <= lower.abs() {
            return Err(Error::Domain(format!(
                "K must exceed |lower| = {} for a negative lower bound, got {smoothing}",
                lower.abs()
            )));
        }
        if channels == 0 {
            return Err(Error::Domain("channel count must be positive".into()));
        }
        Ok(BoundedBox {
            lower,
            upper,
            smoothing,
            channels,
        })
    }

    /// `[0, 255]^3` with the given `K`.
    pub fn rgb(smoothing: f64) -> Result<Self> {
        BoundedBox::new(0.0, 255.0, smoothing, 3)
    }

    pub fn lower(&self) -> f64 {
        self.lower
    }

    pub fn upper(&self) -> f64 {
        self.upper
    }

    pub fn smoothing(&self) -> f64 {
        self.smoothing
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    /// `((lower + K) / (upper + K))^channels`, the infimum of the metric on
    /// the box.
    pub fn lower_bound(&self) -> f64 {
        ((self.lower + self.smoothing) / (self.upper + self.smoothing)).powi(self.channels as i32)
    }

    fn validate<V: AsRef<[f64]>>(&self, vectors: &[V]) -> Result<()> {
        for v in vectors {
            let v = v.as_ref();
            if v.len() != self.channels {
                return Err(Error::Domain(format!(
                    "expected {} channels, got {}",
                    self.channels,
                    v.len()
                )));
            }
            if let Some(c) = v.iter().find(|c| !(self.lower..=self.upper).contains(*c)) {
                return Err(Error::Domain(format!(
                    "channel value {c} outside [{}, {}]",
                    self.lower, self.upper
                )));
            }
        }
        Ok(())
    }
}

/// `prod_i (min_j x^j_i + K) / (max_j x^j_i + K)`, accumulated channel by
/// channel from 1.0.
#[inline]
pub(crate) fn frn_degree<V: AsRef<[f64]>>(vectors: &[V], smoothing: f64) -> f64 {
    let channels = vectors[0].as_ref().len();
    let mut acc = 1.0;
    for i in 0..channels {
        let (lo, hi) = vectors
            .iter()
            .map(|v| v.as_ref()[i])
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
                (lo.min(x), hi.max(x))
            });
        acc *= (lo + smoothing) / (hi + smoothing);
    }
    acc
}

/// The stationary, F-bounded fuzzy r-metric on vectors inside a
/// [`BoundedBox`], with the product t-norm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StationaryFrn {
    arity: usize,
    bounds: BoundedBox,
}

impl StationaryFrn {
    pub fn new(arity: usize, bounds: BoundedBox) -> Result<Self> {
        if arity < 2 {
            return Err(Error::arity_at_least(2, arity));
        }
        Ok(StationaryFrn { arity, bounds })
    }

    pub fn bounds(&self) -> &BoundedBox {
        &self.bounds
    }
}

impl<V: AsRef<[f64]>> FuzzyNMetric<V> for StationaryFrn {
    fn arity(&self) -> usize {
        self.arity
    }

    fn tnorm(&self) -> TNorm {
        TNorm::Product
    }

    fn is_stationary(&self) -> bool {
        true
    }

    fn degree(&self, points: &[V], _t: f64) -> f64 {
        frn_degree(points, self.bounds.smoothing)
    }

    fn evaluate(&self, points: &[V], t: f64) -> Result<f64> {
        check_t(t)?;
        if points.len() != self.arity {
            return Err(Error::arity_exact(self.arity, points.len()));
        }
        self.bounds.validate(points)?;
        Ok(frn_degree(points, self.bounds.smoothing))
    }
}

pub fn stationary_frn<V: AsRef<[f64]>>(vectors: &[V], bounds: &BoundedBox) -> Result<f64> {
    StationaryFrn::new(vectors.len(), *bounds)?.evaluate(vectors, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coincident_vectors_give_one() {
        let b = BoundedBox::rgb(1024.0).unwrap();
        let v = [10.0, 20.0, 30.0];
        assert_eq!(stationary_frn(&[v, v, v], &b).unwrap(), 1.0);
    }

    #[test]
    fn black_white_pair() {
        let b = BoundedBox::rgb(1024.0).unwrap();
        let v = stationary_frn(&[[0.0; 3], [255.0; 3]], &b).unwrap();
        let expected = (1024.0f64 / 1279.0).powi(3);
        assert!((v - expected).abs() < 1e-15);
        assert!((v - 0.5132).abs() < 1e-4);
        assert!((b.lower_bound() - expected).abs() < 1e-15);
    }

    #[test]
    fn rejects_out_of_box_channels() {
        let b = BoundedBox::rgb(1024.0).unwrap();
        assert!(matches!(
            stationary_frn(&[[0.0, 0.0, 256.0], [0.0; 3]], &b),
            Err(Error::Domain(_))
        ));
        assert!(stationary_frn(&[[0.0, 0.0], [0.0, 0.0]], &b).is_err());
        assert!(stationary_frn(&[[0.0; 3]], &b).is_err());
    }

    #[test]
    fn box_validation() {
        assert!(BoundedBox::new(0.0, 0.0, 1.0, 3).is_err());
        assert!(BoundedBox::new(0.0, 255.0, 0.0, 3).is_err());
        assert!(BoundedBox::new(-10.0, 255.0, 5.0, 3).is_err());
        assert!(BoundedBox::new(-10.0, 255.0, 11.0, 3).is_ok());
        assert!(BoundedBox::new(0.0, 255.0, 0.5, 3).is_ok());
    }

    #[test]
    fn ignores_t() {
        let m = StationaryFrn::new(3, BoundedBox::rgb(1024.0).unwrap()).unwrap();
        let xs = [[1.0, 2.0, 3.0], [200.0, 0.0, 9.0], [40.0, 40.0, 40.0]];
        assert_eq!(
            m.evaluate(&xs, 0.01).unwrap(),
            m.evaluate(&xs, 1e6).unwrap()
        );
        assert!(m.evaluate(&xs, 0.0).is_err());
    }

    fn rgb() -> impl Strategy<Value = [f64; 3]> {
        prop::array::uniform3(0u8..=255).prop_map(|c| c.map(f64::from))
    }

    proptest! {
        #[test]
        fn bounded_below_on_rgb_cube(xs in prop::collection::vec(rgb(), 2..=5)) {
            let b = BoundedBox::rgb(1024.0).unwrap();
            let v = stationary_frn(&xs, &b).unwrap();
            prop_assert!(v >= b.lower_bound() && v <= 1.0);
        }
    }
}
