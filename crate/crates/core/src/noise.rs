//! Reproducible impulse noise.
//!
//! Randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Two streams are derived from the
//! seed: the hit stream decides, one draw per pixel in row-major order,
//! whether a pixel is corrupted; the value stream (the hit stream advanced by
//! one `jump`, i.e. 2^128 steps) supplies the replacement values. Changing
//! `per_channel` or `kind` therefore never moves which pixels are hit.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::image::{RgbImage, RgbPixel};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoiseKind {
    /// Salt and pepper: replacement values are 0 or 255 with equal odds.
    FixedValue,
    /// Replacement values uniform in 0..=255.
    RandomValue,
}

impl NoiseKind {
    pub fn name(self) -> &'static str {
        match self {
            NoiseKind::FixedValue => "fixed",
            NoiseKind::RandomValue => "random",
        }
    }
}

impl fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NoiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" | "fixed-value" => Ok(NoiseKind::FixedValue),
            "random" | "random-value" => Ok(NoiseKind::RandomValue),
            other => Err(Error::Domain(format!("unknown noise kind `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseSpec {
    kind: NoiseKind,
    density: f64,
    per_channel: bool,
    seed: u64,
}

impl NoiseSpec {
    /// `density` is the per-pixel corruption probability and must lie in
    /// `[0, 1]`. With `per_channel` each channel of a hit pixel gets its own
    /// replacement value; otherwise one value is shared by all three.
    pub fn new(kind: NoiseKind, density: f64, per_channel: bool, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&density) {
            return Err(Error::Domain(format!(
                "noise density must be in [0, 1], got {density}"
            )));
        }
        Ok(NoiseSpec {
            kind,
            density,
            per_channel,
            seed,
        })
    }

    pub fn kind(&self) -> NoiseKind {
        self.kind
    }

    pub fn density(&self) -> f64 {
        self.density
    }

    pub fn per_channel(&self) -> bool {
        self.per_channel
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

fn draw_value(kind: NoiseKind, rng: &mut Xoshiro256PlusPlus) -> u8 {
    match kind {
        NoiseKind::FixedValue => {
            if rng.random::<bool>() {
                255
            } else {
                0
            }
        }
        NoiseKind::RandomValue => rng.random::<u8>(),
    }
}

/// Returns a corrupted copy of `image`. Pixels that are not hit are copied
/// unchanged.
pub fn add_impulse(image: &RgbImage, spec: &NoiseSpec) -> RgbImage {
    let mut hits = Xoshiro256PlusPlus::seed_from_u64(spec.seed);
    let mut values = hits.clone();
    values.jump();

    let mut out = image.clone();
    for px in out.pixels_mut() {
        if !hits.random_bool(spec.density) {
            continue;
        }
        *px = if spec.per_channel {
            let mut c = [0u8; 3];
            for ch in &mut c {
                *ch = draw_value(spec.kind, &mut values);
            }
            RgbPixel(c)
        } else {
            let v = draw_value(spec.kind, &mut values);
            RgbPixel([v; 3])
        };
    }
    out
}
