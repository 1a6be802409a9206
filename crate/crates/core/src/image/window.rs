use super::{RgbImage, RgbPixel};
use crate::{Error, Result};

/// A square `side x side` neighbourhood, pixels in row-major order.
///
/// Positions are zero-based: for a 3x3 window, index 0 is the top-left
/// pixel and index 4 the center.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    side: usize,
    pixels: Vec<RgbPixel>,
}

pub(crate) fn check_side(side: usize) -> Result<()> {
    if side >= 3 && side % 2 == 1 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "window side must be odd and at least 3, got {side}"
        )))
    }
}

impl Window {
    pub fn new(side: usize, pixels: Vec<RgbPixel>) -> Result<Self> {
        check_side(side)?;
        if pixels.len() != side * side {
            return Err(Error::Domain(format!(
                "{side}x{side} window needs {} pixels, got {}",
                side * side,
                pixels.len()
            )));
        }
        Ok(Window { side, pixels })
    }

    /// The window centered on `(x, y)`, with out-of-range coordinates
    /// clamped to the nearest border pixel.
    pub fn around(image: &RgbImage, x: usize, y: usize, side: usize) -> Result<Self> {
        check_side(side)?;
        let mut pixels = Vec::with_capacity(side * side);
        fill_around(image, x, y, side, &mut pixels);
        Ok(Window { side, pixels })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn center_index(&self) -> usize {
        self.pixels.len() / 2
    }

    pub fn pixels(&self) -> &[RgbPixel] {
        &self.pixels
    }

    pub(crate) fn reset(&mut self, image: &RgbImage, x: usize, y: usize) {
        self.pixels.clear();
        fill_around(image, x, y, self.side, &mut self.pixels);
    }
}

fn fill_around(image: &RgbImage, x: usize, y: usize, side: usize, out: &mut Vec<RgbPixel>) {
    let r = (side / 2) as isize;
    let (x, y) = (x as isize, y as isize);
    for dy in -r..=r {
        for dx in -r..=r {
            out.push(image.get_clamped(x + dx, y + dy));
        }
    }
}
