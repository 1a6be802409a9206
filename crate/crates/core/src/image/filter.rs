use std::fmt;
use std::str::FromStr;

use super::aggregate::{
    classical_values, pairwise_values, scheme_values, select_index, triples_full_values, Sense,
};
use super::pixel_metric::{check_k, check_p};
use super::scheme::partner_table;
use super::window::check_side;
use super::{RgbImage, RgbPixel, Window};
use crate::{Error, Execution, Result};

pub const DEFAULT_K: f64 = 1024.0;
pub const DEFAULT_P: f64 = 2.0;

/// A window filter together with its parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum FilterKind {
    /// Vector median with the `L_p` distance.
    Vmf { p: f64 },
    /// Vector median with the pairwise fuzzy metric (argmax of accumulated
    /// nearness).
    Fvmf { k: f64 },
    /// Triple metric summed over every pair of other window pixels.
    FvmlfFull { k: f64 },
    /// Triple metric over four partner pairs per position; 3x3 only.
    FvmlfScheme { k: f64 },
}

impl FilterKind {
    pub fn name(&self) -> &'static str {
        match self {
            FilterKind::Vmf { .. } => "vmf",
            FilterKind::Fvmf { .. } => "fvmf",
            FilterKind::FvmlfFull { .. } => "fvmlf-full",
            FilterKind::FvmlfScheme { .. } => "fvmlf-scheme",
        }
    }

    /// Builds a kind from its name, taking `p` or `k` as appropriate.
    pub fn from_name(name: &str, p: f64, k: f64) -> Result<Self> {
        match name {
            "vmf" => Ok(FilterKind::Vmf { p }),
            "fvmf" => Ok(FilterKind::Fvmf { k }),
            "fvmlf-full" => Ok(FilterKind::FvmlfFull { k }),
            "fvmlf-scheme" => Ok(FilterKind::FvmlfScheme { k }),
            other => Err(Error::Domain(format!("unknown filter kind `{other}`"))),
        }
    }

    pub fn validate(&self, side: usize) -> Result<()> {
        check_side(side)?;
        match *self {
            FilterKind::Vmf { p } => check_p(p),
            FilterKind::Fvmf { k } | FilterKind::FvmlfFull { k } => check_k(k),
            FilterKind::FvmlfScheme { k } => {
                if side != 3 {
                    return Err(Error::UnsupportedWindow(side));
                }
                check_k(k)
            }
        }
    }
}

impl fmt::Display for FilterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FilterKind {
    type Err = Error;

    /// Parses a bare name with default parameters.
    fn from_str(s: &str) -> Result<Self> {
        FilterKind::from_name(s, DEFAULT_P, DEFAULT_K)
    }
}

/// Filters with the default execution mode.
pub fn filter_image(image: &RgbImage, kind: FilterKind, side: usize) -> Result<RgbImage> {
    filter_image_with(image, kind, side, Execution::default())
}

/// Replaces every pixel by the window member selected under `kind`.
/// Borders use replicate padding. Rows are independent, so parallel and
/// sequential execution give identical output.
pub fn filter_image_with(
    image: &RgbImage,
    kind: FilterKind,
    side: usize,
    execution: Execution,
) -> Result<RgbImage> {
    kind.validate(side)?;
    let width = image.width();
    let table = partner_table();
    let mut out = vec![RgbPixel::default(); width * image.height()];
    execution.for_each_row(&mut out, width, |y, row| {
        let mut window = Window::new(side, vec![RgbPixel::default(); side * side])
            .expect("side validated above");
        let center = window.center_index();
        let mut values = Vec::with_capacity(side * side);
        for (x, slot) in row.iter_mut().enumerate() {
            window.reset(image, x, y);
            let px = window.pixels();
            let sense = match kind {
                FilterKind::Vmf { p } => {
                    classical_values(px, p, &mut values);
                    Sense::Argmin
                }
                FilterKind::Fvmf { k } => {
                    pairwise_values(px, k, &mut values);
                    Sense::Argmax
                }
                FilterKind::FvmlfFull { k } => {
                    triples_full_values(px, k, &mut values);
                    Sense::Argmax
                }
                FilterKind::FvmlfScheme { k } => {
                    scheme_values(px, &table, k, &mut values);
                    Sense::Argmax
                }
            };
            *slot = px[select_index(&values, sense, center)];
        }
    });
    RgbImage::new(width, image.height(), out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::image::{
        agg_classical, agg_fuzzy_pairwise, agg_fuzzy_triples_full, agg_fuzzy_triples_scheme,
        select_output,
    };

    fn all_kinds() -> [FilterKind; 4] {
        [
            FilterKind::Vmf { p: 2.0 },
            FilterKind::Fvmf { k: 1024.0 },
            FilterKind::FvmlfFull { k: 1024.0 },
            FilterKind::FvmlfScheme { k: 1024.0 },
        ]
    }

    fn scene() -> RgbImage {
        RgbImage::from_fn(13, 9, |x, y| {
            let h = (x * 31 + y * 17) % 7;
            RgbPixel::new((x * 19) as u8, (y * 23) as u8, (h * 36) as u8)
        })
    }

    #[test]
    fn constant_image_is_fixed() {
        let img = RgbImage::filled(6, 5, RgbPixel::new(12, 200, 77));
        for kind in all_kinds() {
            assert_eq!(filter_image(&img, kind, 3).unwrap(), img, "{kind}");
        }
        assert_eq!(
            filter_image(&img, FilterKind::Vmf { p: 1.0 }, 5).unwrap(),
            img
        );
    }

    #[test]
    fn matches_per_window_aggregates() {
        let img = scene();
        for kind in all_kinds() {
            let out = filter_image(&img, kind, 3).unwrap();
            for y in 0..img.height() {
                for x in 0..img.width() {
                    let w = Window::around(&img, x, y, 3).unwrap();
                    let agg = match kind {
                        FilterKind::Vmf { p } => agg_classical(&w, p),
                        FilterKind::Fvmf { k } => agg_fuzzy_pairwise(&w, k),
                        FilterKind::FvmlfFull { k } => agg_fuzzy_triples_full(&w, k),
                        FilterKind::FvmlfScheme { k } => agg_fuzzy_triples_scheme(&w, k),
                    }
                    .unwrap();
                    assert_eq!(out.get(x, y), select_output(&agg, &w).unwrap());
                }
            }
        }
    }

    #[test]
    fn step_edge_output_comes_from_window() {
        let left = RgbPixel::new(20, 40, 60);
        let right = RgbPixel::new(220, 180, 10);
        let img = RgbImage::from_fn(10, 6, |x, _| if x < 5 { left } else { right });
        let out = filter_image(&img, FilterKind::FvmlfScheme { k: 1024.0 }, 3).unwrap();
        for y in 0..6 {
            for x in 0..10 {
                let w = Window::around(&img, x, y, 3).unwrap();
                assert!(w.pixels().contains(&out.get(x, y)));
            }
        }
        // a clean step edge survives
        assert_eq!(out, img);
    }

    #[test]
    fn execution_modes_agree() {
        let img = scene();
        for kind in all_kinds() {
            let a = filter_image_with(&img, kind, 3, Execution::Sequential).unwrap();
            let b = filter_image_with(&img, kind, 3, Execution::Parallel).unwrap();
            assert_eq!(a, b);
        }
        let a = filter_image_with(
            &img,
            FilterKind::FvmlfFull { k: 512.0 },
            5,
            Execution::Sequential,
        )
        .unwrap();
        let b = filter_image_with(
            &img,
            FilterKind::FvmlfFull { k: 512.0 },
            5,
            Execution::Parallel,
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_parameters() {
        let img = scene();
        assert!(filter_image(&img, FilterKind::Vmf { p: 0.0 }, 3).is_err());
        assert!(filter_image(&img, FilterKind::Fvmf { k: -1.0 }, 3).is_err());
        assert!(filter_image(&img, FilterKind::Vmf { p: 2.0 }, 4).is_err());
        assert_eq!(
            filter_image(&img, FilterKind::FvmlfScheme { k: 1024.0 }, 5).unwrap_err(),
            Error::UnsupportedWindow(5)
        );
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in all_kinds() {
            let parsed = FilterKind::from_name(kind.name(), 2.0, 1024.0).unwrap();
            assert_eq!(parsed, kind);
        }
        assert!("median".parse::<FilterKind>().is_err());
        assert_eq!(
            "fvmf".parse::<FilterKind>().unwrap(),
            FilterKind::Fvmf { k: DEFAULT_K }
        );
    }
}
