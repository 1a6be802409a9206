use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use super::Domain;

/// A point type the harness knows how to draw from a [`Domain`].
pub trait SamplePoint: Clone + PartialEq + Debug + Send + Sync {
    fn supports(domain: &Domain) -> bool;

    fn draw<R: Rng>(domain: &Domain, rng: &mut R) -> Self;

    /// A point close to `anchor`, at a randomly chosen scale.
    fn draw_near<R: Rng>(domain: &Domain, anchor: &Self, rng: &mut R) -> Self;
}

fn jitter<R: Rng>(value: f64, lo: f64, hi: f64, rng: &mut R) -> f64 {
    let scale = (hi - lo) / 100.0 * 10f64.powi(-rng.random_range(0..3));
    (value + rng.random_range(-scale..=scale)).clamp(lo, hi)
}

impl SamplePoint for f64 {
    fn supports(domain: &Domain) -> bool {
        matches!(domain, Domain::Interval { .. })
    }

    fn draw<R: Rng>(domain: &Domain, rng: &mut R) -> Self {
        match *domain {
            Domain::Interval { lo, hi } => rng.random_range(lo..=hi),
            Domain::RgbCube => unreachable!("scalar points are not drawn from the RGB cube"),
        }
    }

    fn draw_near<R: Rng>(domain: &Domain, anchor: &Self, rng: &mut R) -> Self {
        match *domain {
            Domain::Interval { lo, hi } => jitter(*anchor, lo, hi, rng),
            Domain::RgbCube => unreachable!("scalar points are not drawn from the RGB cube"),
        }
    }
}

impl SamplePoint for [f64; 3] {
    fn supports(_: &Domain) -> bool {
        true
    }

    fn draw<R: Rng>(domain: &Domain, rng: &mut R) -> Self {
        match *domain {
            Domain::Interval { lo, hi } => std::array::from_fn(|_| rng.random_range(lo..=hi)),
            Domain::RgbCube => std::array::from_fn(|_| f64::from(rng.random::<u8>())),
        }
    }

    fn draw_near<R: Rng>(domain: &Domain, anchor: &Self, rng: &mut R) -> Self {
        match *domain {
            Domain::Interval { lo, hi } => anchor.map(|c| jitter(c, lo, hi, rng)),
            Domain::RgbCube => {
                let reach = [1, 4, 16][rng.random_range(0..3)];
                anchor.map(|c| (c + f64::from(rng.random_range(-reach..=reach))).clamp(0.0, 255.0))
            }
        }
    }
}

/// The generator for sample `index` of a run seeded with `seed`.
pub(crate) fn sample_rng(seed: u64, index: usize) -> Xoshiro256PlusPlus {
    let stream = (index as u64)
        .wrapping_add(1)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15);
    Xoshiro256PlusPlus::seed_from_u64(seed ^ stream)
}

/// A tuple mixing fresh points with copies and near-copies of earlier ones,
/// so that coincidences and near-coincidences occur regularly.
pub(crate) fn draw_tuple<P: SamplePoint, R: Rng>(
    domain: &Domain,
    arity: usize,
    rng: &mut R,
) -> Vec<P> {
    let first = P::draw(domain, rng);
    if rng.random_bool(0.05) {
        return vec![first; arity];
    }
    let mut xs = Vec::with_capacity(arity);
    xs.push(first);
    while xs.len() < arity {
        let roll: f64 = rng.random();
        let prev = xs[rng.random_range(0..xs.len())].clone();
        let next = if roll < 0.2 {
            prev
        } else if roll < 0.45 {
            P::draw_near(domain, &prev, rng)
        } else {
            P::draw(domain, rng)
        };
        xs.push(next);
    }
    xs
}

/// A point related to `anchors` in the same way as [`draw_tuple`] elements.
pub(crate) fn draw_related<P: SamplePoint, R: Rng>(
    domain: &Domain,
    anchors: &[P],
    rng: &mut R,
) -> P {
    let roll: f64 = rng.random();
    let anchor = &anchors[rng.random_range(0..anchors.len())];
    if roll < 0.15 {
        anchor.clone()
    } else if roll < 0.5 {
        P::draw_near(domain, anchor, rng)
    } else {
        P::draw(domain, rng)
    }
}
