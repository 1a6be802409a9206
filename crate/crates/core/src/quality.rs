//! MAE, PSNR, and NCD between a reference image and a test image.
//!
//! NCD is measured in CIELAB. The conversion is fixed as follows:
//!
//! * sRGB decoding of `c = v / 255`: `c / 12.92` if `c <= 0.04045`, else
//!   `((c + 0.055) / 1.055)^2.4`.
//! * Linear RGB to XYZ (D65):
//!   ```text
//!   X = 0.4124564 R + 0.3575761 G + 0.1804375 B
//!   Y = 0.2126729 R + 0.7151522 G + 0.0721750 B
//!   Z = 0.0193339 R + 0.1191920 G + 0.9503041 B
//!   ```
//! * Reference white `(Xn, Yn, Zn) = (0.95047, 1.0, 1.08883)`.
//! * `f(t) = t^(1/3)` if `t > (6/29)^3`, else `t / (3 (6/29)^2) + 4/29`;
//!   `L = 116 f(Y/Yn) - 16`, `a = 500 (f(X/Xn) - f(Y/Yn))`,
//!   `b = 200 (f(Y/Yn) - f(Z/Zn))`.

use std::fmt;

use crate::image::{RgbImage, RgbPixel};
use crate::{Error, Result};

const SRGB_MATRIX: [[f64; 3]; 3] = [
    [0.4124564, 0.3575761, 0.1804375],
    [0.2126729, 0.7151522, 0.0721750],
    [0.0193339, 0.1191920, 0.9503041],
];
const WHITE_D65: [f64; 3] = [0.95047, 1.0, 1.08883];
const DELTA: f64 = 6.0 / 29.0;

/// Peak signal-to-noise ratio in decibels. Identical images give
/// [`Psnr::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Psnr {
    Finite(f64),
    Infinite,
}

impl Psnr {
    pub fn is_infinite(self) -> bool {
        matches!(self, Psnr::Infinite)
    }

    /// The value as an `f64`, using `f64::INFINITY` for the marker.
    pub fn value(self) -> f64 {
        match self {
            Psnr::Finite(v) => v,
            Psnr::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Psnr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Psnr::Finite(v) => write!(f, "{v}"),
            Psnr::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QualityReport {
    pub mae: f64,
    pub psnr: Psnr,
    pub ncd: f64,
}

impl QualityReport {
    pub const CSV_HEADER: &'static str = "mae,psnr,ncd";

    /// One CSV row without a trailing newline.
    pub fn csv_row(&self) -> String {
        format!("{},{},{}", self.mae, self.psnr, self.ncd)
    }
}

fn check_dims(reference: &RgbImage, test: &RgbImage) -> Result<()> {
    if reference.same_dimensions(test) {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left_w: reference.width(),
            left_h: reference.height(),
            right_w: test.width(),
            right_h: test.height(),
        })
    }
}

fn channel_pairs<'a>(
    reference: &'a RgbImage,
    test: &'a RgbImage,
) -> impl Iterator<Item = (u8, u8)> + 'a {
    reference
        .pixels()
        .iter()
        .zip(test.pixels())
        .flat_map(|(a, b)| a.0.into_iter().zip(b.0))
}

/// Mean absolute channel difference, in 0..=255.
pub fn mae(reference: &RgbImage, test: &RgbImage) -> Result<f64> {
    check_dims(reference, test)?;
    let total: u64 = channel_pairs(reference, test)
        .map(|(a, b)| u64::from(a.abs_diff(b)))
        .sum();
    Ok(total as f64 / (3 * reference.pixels().len()) as f64)
}

/// `10 log10(255^2 / MSE)` over all channels.
pub fn psnr(reference: &RgbImage, test: &RgbImage) -> Result<Psnr> {
    check_dims(reference, test)?;
    let total: u64 = channel_pairs(reference, test)
        .map(|(a, b)| {
            let d = u64::from(a.abs_diff(b));
            d * d
        })
        .sum();
    if total == 0 {
        return Ok(Psnr::Infinite);
    }
    let mse = total as f64 / (3 * reference.pixels().len()) as f64;
    Ok(Psnr::Finite(10.0 * (255.0 * 255.0 / mse).log10()))
}

fn srgb_to_linear(v: u8) -> f64 {
    let c = f64::from(v) / 255.0;
    if c <= 0.04045 {
        c / 12.92
    } else {
        ((c + 0.055) / 1.055).powf(2.4)
    }
}

fn lab_f(t: f64) -> f64 {
    if t > DELTA * DELTA * DELTA {
        t.cbrt()
    } else {
        t / (3.0 * DELTA * DELTA) + 4.0 / 29.0
    }
}

/// CIELAB coordinates `[L, a, b]` of an sRGB pixel under D65.
pub fn to_lab(pixel: RgbPixel) -> [f64; 3] {
    let lin = pixel.0.map(srgb_to_linear);
    let xyz = SRGB_MATRIX.map(|row| row[0] * lin[0] + row[1] * lin[1] + row[2] * lin[2]);
    let fx = lab_f(xyz[0] / WHITE_D65[0]);
    let fy = lab_f(xyz[1] / WHITE_D65[1]);
    let fz = lab_f(xyz[2] / WHITE_D65[2]);
    [116.0 * fy - 16.0, 500.0 * (fx - fy), 200.0 * (fy - fz)]
}

fn norm(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

/// Normalized colour difference: summed CIELAB distance between
/// corresponding pixels over the summed CIELAB norm of the reference.
///
/// Identical images give 0 for any reference. Otherwise a reference whose
/// CIELAB norms sum to zero (all black) yields [`Error::NcdUndefined`].
pub fn ncd(reference: &RgbImage, test: &RgbImage) -> Result<f64> {
    check_dims(reference, test)?;
    if reference == test {
        return Ok(0.0);
    }
    let (mut num, mut den) = (0.0, 0.0);
    for (&a, &b) in reference.pixels().iter().zip(test.pixels()) {
        let la = to_lab(a);
        if a != b {
            let lb = to_lab(b);
            num += norm([la[0] - lb[0], la[1] - lb[1], la[2] - lb[2]]);
        }
        den += norm(la);
    }
    if den == 0.0 {
        return Err(Error::NcdUndefined);
    }
    Ok(num / den)
}

pub fn evaluate(reference: &RgbImage, test: &RgbImage) -> Result<QualityReport> {
    Ok(QualityReport {
        mae: mae(reference, test)?,
        psnr: psnr(reference, test)?,
        ncd: ncd(reference, test)?,
    })
}
