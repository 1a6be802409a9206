//! RGB images, sliding windows, and the vector order-statistics filters.

mod aggregate;
mod filter;
mod pixel_metric;
pub mod scheme;
mod synthetic;
mod window;

use crate::{Error, Result};

pub use aggregate::{
    agg_classical, agg_fuzzy_pairwise, agg_fuzzy_triples_full, agg_fuzzy_triples_scheme,
    select_output, Sense, WindowAggregate,
};
pub use filter::{filter_image, filter_image_with, FilterKind, DEFAULT_K, DEFAULT_P};
pub use pixel_metric::{fuzzy_pixel_metric, fuzzy_triple_metric, lp_distance};
pub use synthetic::synthetic_scene;
pub use window::Window;

/// An RGB pixel with 8-bit channels.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RgbPixel(pub [u8; 3]);

impl RgbPixel {
    pub const BLACK: RgbPixel = RgbPixel([0, 0, 0]);
    pub const WHITE: RgbPixel = RgbPixel([255, 255, 255]);

    pub const fn new(r: u8, g: u8, b: u8) -> Self {
        RgbPixel([r, g, b])
    }

    /// Builds a pixel from wider integers, rejecting channels outside 0..=255.
    pub fn try_from_channels(channels: [i64; 3]) -> Result<Self> {
        let mut out = [0u8; 3];
        for (o, c) in out.iter_mut().zip(channels) {
            *o = u8::try_from(c)
                .map_err(|_| Error::Domain(format!("channel value {c} outside 0..=255")))?;
        }
        Ok(RgbPixel(out))
    }

    pub fn channels(&self) -> [u8; 3] {
        self.0
    }

    pub fn to_f64(self) -> [f64; 3] {
        self.0.map(f64::from)
    }
}

impl From<[u8; 3]> for RgbPixel {
    fn from(c: [u8; 3]) -> Self {
        RgbPixel(c)
    }
}

/// Row-major RGB image.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RgbImage {
    width: usize,
    height: usize,
    pixels: Vec<RgbPixel>,
}

impl RgbImage {
    pub fn new(width: usize, height: usize, pixels: Vec<RgbPixel>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::Domain(format!(
                "image dimensions must be positive, got {width}x{height}"
            )));
        }
        if pixels.len() != width * height {
            return Err(Error::Domain(format!(
                "{width}x{height} image needs {} pixels, got {}",
                width * height,
                pixels.len()
            )));
        }
        Ok(RgbImage {
            width,
            height,
            pixels,
        })
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn filled(width: usize, height: usize, pixel: RgbPixel) -> Self {
        RgbImage::new(width, height, vec![pixel; width * height]).expect("positive dimensions")
    }

    /// # Panics
    /// If either dimension is zero.
    pub fn from_fn(width: usize, height: usize, f: impl Fn(usize, usize) -> RgbPixel) -> Self {
        let pixels = (0..height)
            .flat_map(|y| (0..width).map(move |x| (x, y)))
            .map(|(x, y)| f(x, y))
            .collect();
        RgbImage::new(width, height, pixels).expect("positive dimensions")
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[RgbPixel] {
        &self.pixels
    }

    pub fn pixels_mut(&mut self) -> &mut [RgbPixel] {
        &mut self.pixels
    }

    pub fn into_pixels(self) -> Vec<RgbPixel> {
        self.pixels
    }

    pub fn get(&self, x: usize, y: usize) -> RgbPixel {
        self.pixels[y * self.width + x]
    }

    /// Pixel at `(x, y)` with coordinates clamped into the image.
    pub fn get_clamped(&self, x: isize, y: isize) -> RgbPixel {
        let cx = x.clamp(0, self.width as isize - 1) as usize;
        let cy = y.clamp(0, self.height as isize - 1) as usize;
        self.get(cx, cy)
    }

    pub fn same_dimensions(&self, other: &RgbImage) -> bool {
        self.width == other.width && self.height == other.height
    }

    /// Raw interleaved RGB bytes, row-major.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.pixels.iter().flat_map(|p| p.0).collect()
    }

    pub fn from_bytes(width: usize, height: usize, bytes: &[u8]) -> Result<Self> {
        if bytes.len() != width * height * 3 {
            return Err(Error::Domain(format!(
                "{width}x{height} image needs {} bytes, got {}",
                width * height * 3,
                bytes.len()
            )));
        }
        let pixels = bytes
            .chunks_exact(3)
            .map(|c| RgbPixel([c[0], c[1], c[2]]))
            .collect();
        RgbImage::new(width, height, pixels)
    }
}
