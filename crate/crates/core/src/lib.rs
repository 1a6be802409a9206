//! Generalized fuzzy n-metrics and the vector order-statistics filters built
//! on them.
//!
//! The crate is organised bottom-up:
//!
//! * [`metric`] holds t-norms, generalized n-metrics, and fuzzy n-metric
//!   constructions (standard, product, stationary bounded-box, induced).
//! * [`axioms`] verifies the axioms and derived properties of those
//!   constructions by seeded random sampling.
//! * [`image`] models RGB images and windows and implements the VMF, fuzzy
//!   VMF, and fuzzy vector median-like filters.
//! * [`noise`] injects reproducible impulse noise.
//! * [`quality`] computes MAE, PSNR, and NCD.
//!
//! With the default `parallel` feature, sampling and filtering run on rayon;
//! without it every [`Execution`] falls back to a sequential loop. Both paths
//! produce identical output.

pub mod axioms;
mod error;
mod exec;
pub mod image;
pub mod metric;
pub mod noise;
pub mod quality;

pub use error::{Error, Result};
pub use exec::Execution;
