use super::RgbPixel;
use crate::{Error, Result};

pub fn lp_distance(a: RgbPixel, b: RgbPixel, p: f64) -> Result<f64> {
    check_p(p)?;
    Ok(lp_unchecked(a, b, p))
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    if p >= 1.0 && p.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("L_p needs a finite p >= 1, got {p}")))
    }
}

pub(crate) fn check_k(k: f64) -> Result<()> {
    if k > 0.0 && k.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("K must be positive, got {k}")))
    }
}

pub(crate) fn lp_unchecked(a: RgbPixel, b: RgbPixel, p: f64) -> f64 {
    let diffs = [0, 1, 2].map(|l| f64::from(a.0[l].abs_diff(b.0[l])));
    if p == 1.0 {
        diffs.iter().sum()
    } else if p == 2.0 {
        diffs.iter().map(|d| d * d).sum::<f64>().sqrt()
    } else {
        diffs.iter().map(|d| d.powf(p)).sum::<f64>().powf(1.0 / p)
    }
}

/// Same operation order as the bounded-box metric so that the two agree
/// bit for bit.
#[inline]
pub(crate) fn pixel_degree(a: RgbPixel, b: RgbPixel, k: f64) -> f64 {
    let mut acc = 1.0;
    for l in 0..3 {
        let lo = a.0[l].min(b.0[l]);
        let hi = a.0[l].max(b.0[l]);
        acc *= (f64::from(lo) + k) / (f64::from(hi) + k);
    }
    acc
}

#[inline]
pub(crate) fn triple_degree(a: RgbPixel, b: RgbPixel, c: RgbPixel, k: f64) -> f64 {
    let mut acc = 1.0;
    for l in 0..3 {
        let lo = a.0[l].min(b.0[l]).min(c.0[l]);
        let hi = a.0[l].max(b.0[l]).max(c.0[l]);
        acc *= (f64::from(lo) + k) / (f64::from(hi) + k);
    }
    acc
}

/// `prod_l (min(a_l, b_l) + K) / (max(a_l, b_l) + K)`.
pub fn fuzzy_pixel_metric(a: RgbPixel, b: RgbPixel, k: f64) -> Result<f64> {
    check_k(k)?;
    Ok(pixel_degree(a, b, k))
}

/// The bounded-box metric on three pixels: the per-channel min/max ratio
/// taken over all three.
pub fn fuzzy_triple_metric(a: RgbPixel, b: RgbPixel, c: RgbPixel, k: f64) -> Result<f64> {
    check_k(k)?;
    Ok(triple_degree(a, b, c, k))
}
