use super::{RgbImage, RgbPixel};

/// A deterministic test scene: a red/green gradient over a constant blue
/// level, with a filled rectangle, a disc, and a diagonal band drawn on top.
/// Shape positions scale with the image size.
///
/// # Panics
/// If either dimension is zero.
pub fn synthetic_scene(width: usize, height: usize) -> RgbImage {
    let (w, h) = (width as f64, height as f64);
    RgbImage::from_fn(width, height, |x, y| {
        let (fx, fy) = (x as f64, y as f64);
        let (u, v) = (fx / w, fy / h);

        if (0.12..0.38).contains(&u) && (0.60..0.88).contains(&v) {
            return RgbPixel::new(200, 40, 40);
        }
        let (dx, dy) = (u - 0.68, v - 0.32);
        if dx * dx + dy * dy < 0.19 * 0.19 {
            return RgbPixel::new(30, 30, 200);
        }
        if (u - v + 0.1).abs() < 0.04 {
            return RgbPixel::new(250, 230, 60);
        }

        let r = (255.0 * fx / (w - 1.0).max(1.0)).round() as u8;
        let g = (255.0 * fy / (h - 1.0).max(1.0)).round() as u8;
        RgbPixel::new(r, g, 128)
    })
}
