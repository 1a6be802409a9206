use crate::{Error, Result};

/// A continuous t-norm on `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TNorm {
    /// `a * b`
    Product,
    /// `min(a, b)`
    Minimum,
}

impl TNorm {
    /// Combines two degrees without checking that they lie in `[0, 1]`.
    #[inline]
    pub fn combine(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Product => a * b,
            TNorm::Minimum => a.min(b),
        }
    }

    /// Checked application; both arguments must lie in `[0, 1]`.
    pub fn apply(self, a: f64, b: f64) -> Result<f64> {
        for v in [a, b] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain(format!("t-norm argument {v} outside [0, 1]")));
            }
        }
        Ok(self.combine(a, b))
    }

    /// `a * a * ... * a` with `k` operands; the empty fold is the identity 1.
    pub fn power(self, a: f64, k: usize) -> f64 {
        match (self, k) {
            (_, 0) => 1.0,
            (TNorm::Product, k) => (0..k).fold(1.0, |acc, _| acc * a),
            (TNorm::Minimum, _) => a,
        }
    }

    /// Left fold of `degrees` starting from the identity.
    pub fn fold<I: IntoIterator<Item = f64>>(self, degrees: I) -> f64 {
        degrees.into_iter().fold(1.0, |acc, d| self.combine(acc, d))
    }
}

pub fn tnorm_apply(tnorm: TNorm, a: f64, b: f64) -> Result<f64> {
    tnorm.apply(a, b)
}
