//! Image files: binary PPM (P6, maxval 255) and 8-bit PNG, chosen by
//! extension.

use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::Path;

use fvmlf_core::image::RgbImage;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ppm,
    Png,
}

impl Format {
    pub fn from_path(path: &Path) -> Result<Self, CliError> {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("ppm") | Some("pnm") => Ok(Format::Ppm),
            Some("png") => Ok(Format::Png),
            _ => Err(CliError::Format(format!(
                "{}: unsupported image format (use .ppm or .png)",
                path.display()
            ))),
        }
    }
}

/// Encodes as `P6\n<w> <h>\n255\n` followed by raw RGB triples.
pub fn encode_ppm(image: &RgbImage) -> Vec<u8> {
    let mut out = format!("P6\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.extend_from_slice(&image.to_bytes());
    out
}

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Format(format!("malformed PPM: {}", msg.into()))
}

struct Header<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Header<'_> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while self.bytes.get(self.pos).is_some_and(|&c| c != b'\n') {
                    self.pos += 1;
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<usize, CliError> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| malformed(format!("bad {what}")))
    }
}

/// Decodes a binary PPM. Header comments are allowed; only maxval 255 is
/// accepted and trailing bytes after the raster are rejected.
pub fn decode_ppm(bytes: &[u8]) -> Result<RgbImage, CliError> {
    if !bytes.starts_with(b"P6") {
        return Err(malformed("missing P6 magic"));
    }
    let mut h = Header { bytes, pos: 2 };
    let width = h.number("width")?;
    let height = h.number("height")?;
    let maxval = h.number("maxval")?;
    if maxval != 255 {
        return Err(CliError::Format(format!(
            "unsupported PPM maxval {maxval} (only 255)"
        )));
    }
    if !bytes.get(h.pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(malformed("missing whitespace after maxval"));
    }
    let raster = &bytes[h.pos + 1..];
    let expected = width
        .checked_mul(height)
        .and_then(|n| n.checked_mul(3))
        .ok_or_else(|| malformed("dimensions overflow"))?;
    if raster.len() != expected {
        return Err(malformed(format!(
            "expected {expected} raster bytes, found {}",
            raster.len()
        )));
    }
    Ok(RgbImage::from_bytes(width, height, raster)?)
}

fn decode_png(path: &Path) -> Result<RgbImage, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    let mut decoder = png::Decoder::new(BufReader::new(file));
    decoder.set_transformations(png::Transformations::EXPAND | png::Transformations::STRIP_16);
    let bad = |e: png::DecodingError| CliError::Format(format!("{}: {e}", path.display()));
    let mut reader = decoder.read_info().map_err(bad)?;
    let size = reader
        .output_buffer_size()
        .ok_or_else(|| CliError::Format(format!("{}: image too large", path.display())))?;
    let mut buf = vec![0; size];
    let info = reader.next_frame(&mut buf).map_err(bad)?;
    let data = &buf[..info.buffer_size()];
    let rgb: Vec<u8> = match info.color_type {
        png::ColorType::Rgb => data.to_vec(),
        png::ColorType::Rgba => data
            .chunks_exact(4)
            .flat_map(|p| [p[0], p[1], p[2]])
            .collect(),
        png::ColorType::Grayscale => data.iter().flat_map(|&g| [g, g, g]).collect(),
        png::ColorType::GrayscaleAlpha => data.chunks_exact(2).flat_map(|p| [p[0]; 3]).collect(),
        png::ColorType::Indexed => {
            return Err(CliError::Format(format!(
                "{}: unexpanded palette",
                path.display()
            )))
        }
    };
    Ok(RgbImage::from_bytes(
        info.width as usize,
        info.height as usize,
        &rgb,
    )?)
}

fn encode_png(image: &RgbImage, path: &Path) -> Result<(), CliError> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut encoder = png::Encoder::new(
        BufWriter::new(file),
        image.width() as u32,
        image.height() as u32,
    );
    encoder.set_color(png::ColorType::Rgb);
    encoder.set_depth(png::BitDepth::Eight);
    let bad = |e: png::EncodingError| CliError::Format(format!("{}: {e}", path.display()));
    let mut writer = encoder.write_header().map_err(bad)?;
    writer.write_image_data(&image.to_bytes()).map_err(bad)?;
    writer.finish().map_err(bad)
}

pub fn read_image(path: &Path) -> Result<RgbImage, CliError> {
    match Format::from_path(path)? {
        Format::Ppm => {
            let bytes = std::fs::read(path).map_err(|e| CliError::io(path, e))?;
            decode_ppm(&bytes).map_err(|e| e.in_file(path))
        }
        Format::Png => decode_png(path),
    }
}

pub fn write_image(image: &RgbImage, path: &Path) -> Result<(), CliError> {
    match Format::from_path(path)? {
        Format::Ppm => std::fs::write(path, encode_ppm(image)).map_err(|e| CliError::io(path, e)),
        Format::Png => encode_png(image, path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fvmlf_core::image::RgbPixel;
    use proptest::prelude::*;

    fn sample() -> RgbImage {
        RgbImage::from_fn(3, 2, |x, y| RgbPixel::new(x as u8 * 40, y as u8 * 90, 7))
    }

    #[test]
    fn ppm_exact_layout() {
        let bytes = encode_ppm(&sample());
        assert!(bytes.starts_with(b"P6\n3 2\n255\n"));
        assert_eq!(bytes.len(), 11 + 18);
        assert_eq!(&bytes[11..14], &[0, 0, 7]);
    }

    #[test]
    fn ppm_header_comments_and_spacing() {
        let mut bytes = b"P6 # made by hand\n3\t2 # size\n255\n".to_vec();
        bytes.extend_from_slice(&sample().to_bytes());
        assert_eq!(decode_ppm(&bytes).unwrap(), sample());
    }

    #[test]
    fn ppm_rejects_bad_input() {
        let raster = sample().to_bytes();
        let with = |header: &[u8], tail: &[u8]| [header, tail].concat();
        assert!(decode_ppm(&with(b"P3\n3 2\n255\n", &raster)).is_err());
        assert!(decode_ppm(&with(b"P6\n3 2\n65535\n", &raster)).is_err());
        assert!(decode_ppm(&with(b"P6\n3 2\n255\n", &raster[1..])).is_err());
        assert!(decode_ppm(&with(
            b"P6\n3 2\n255\n",
            &[raster.as_slice(), &[0]].concat()
        ))
        .is_err());
        assert!(decode_ppm(&with(b"P6\n3 x\n255\n", &raster)).is_err());
        assert!(decode_ppm(b"P6\n3 2\n255").is_err());
        assert!(decode_ppm(&with(b"P6\n0 2\n255\n", &[])).is_err());
    }

    #[test]
    fn png_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.png");
        write_image(&sample(), &path).unwrap();
        assert_eq!(read_image(&path).unwrap(), sample());
    }

    #[test]
    fn format_by_extension() {
        assert_eq!(Format::from_path(Path::new("x.PPM")).unwrap(), Format::Ppm);
        assert_eq!(Format::from_path(Path::new("x.png")).unwrap(), Format::Png);
        assert!(Format::from_path(Path::new("x.jpg")).is_err());
        assert!(Format::from_path(Path::new("x")).is_err());
    }

    proptest! {
        #[test]
        fn ppm_round_trip(w in 1usize..8, h in 1usize..8, seed in any::<u64>()) {
            let img = RgbImage::from_fn(w, h, |x, y| {
                let v = seed.wrapping_mul((x * 31 + y * 7 + 1) as u64).to_le_bytes();
                RgbPixel::new(v[0], v[3], v[6])
            });
            prop_assert_eq!(decode_ppm(&encode_ppm(&img)).unwrap(), img);
        }
    }
}
