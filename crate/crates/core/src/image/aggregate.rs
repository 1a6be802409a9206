use super::pixel_metric::{check_k, check_p, lp_unchecked, pixel_degree, triple_degree};
use super::scheme::{partner_table, PartnerTable};
use super::{RgbPixel, Window};
use crate::{Error, Result};

/// Whether the best window position minimises or maximises its aggregate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Argmin,
    Argmax,
}

/// Per-position aggregate values of a window and the selected position.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowAggregate {
    pub values: Vec<f64>,
    pub selected: usize,
    pub sense: Sense,
}

impl WindowAggregate {
    /// Selects the optimum of `values`; ties go to `center` when it attains
    /// the optimum, otherwise to the lowest index.
    pub fn from_values(values: Vec<f64>, sense: Sense, center: usize) -> Self {
        let selected = select_index(&values, sense, center);
        WindowAggregate {
            values,
            selected,
            sense,
        }
    }
}

pub(crate) fn select_index(values: &[f64], sense: Sense, center: usize) -> usize {
    let better = |a: f64, b: f64| match sense {
        Sense::Argmin => a < b,
        Sense::Argmax => a > b,
    };
    let mut best = 0;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if better(v, values[best]) {
            best = i;
        }
    }
    if values[center] == values[best] {
        center
    } else {
        best
    }
}

/// `values[i] = sum_j L_p(I_i, I_j)`, minimised.
pub fn agg_classical(window: &Window, p: f64) -> Result<WindowAggregate> {
    check_p(p)?;
    let mut values = Vec::with_capacity(window.len());
    classical_values(window.pixels(), p, &mut values);
    Ok(WindowAggregate::from_values(
        values,
        Sense::Argmin,
        window.center_index(),
    ))
}

/// `values[i] = sum_{j != i} M(I_i, I_j)`, maximised.
pub fn agg_fuzzy_pairwise(window: &Window, k: f64) -> Result<WindowAggregate> {
    check_k(k)?;
    let mut values = Vec::with_capacity(window.len());
    pairwise_values(window.pixels(), k, &mut values);
    Ok(WindowAggregate::from_values(
        values,
        Sense::Argmax,
        window.center_index(),
    ))
}

/// `values[i] = sum over pairs {a < b}, a, b != i of F3(I_i, I_a, I_b)`,
/// maximised. Each position gets `C(n-1, 2)` terms.
pub fn agg_fuzzy_triples_full(window: &Window, k: f64) -> Result<WindowAggregate> {
    check_k(k)?;
    let mut values = Vec::with_capacity(window.len());
    triples_full_values(window.pixels(), k, &mut values);
    Ok(WindowAggregate::from_values(
        values,
        Sense::Argmax,
        window.center_index(),
    ))
}

/// Four triple terms per position, using the partner pairs of
/// [`super::scheme::partner_table`]. Only defined for 3x3 windows.
pub fn agg_fuzzy_triples_scheme(window: &Window, k: f64) -> Result<WindowAggregate> {
    if window.side() != 3 {
        return Err(Error::UnsupportedWindow(window.side()));
    }
    check_k(k)?;
    let mut values = Vec::with_capacity(9);
    scheme_values(window.pixels(), &partner_table(), k, &mut values);
    Ok(WindowAggregate::from_values(
        values,
        Sense::Argmax,
        window.center_index(),
    ))
}

pub fn select_output(agg: &WindowAggregate, window: &Window) -> Result<RgbPixel> {
    window.pixels().get(agg.selected).copied().ok_or_else(|| {
        Error::Precondition(format!(
            "selected index {} outside window of {} pixels",
            agg.selected,
            window.len()
        ))
    })
}

pub(crate) fn classical_values(px: &[RgbPixel], p: f64, out: &mut Vec<f64>) {
    out.clear();
    out.extend(
        px.iter()
            .map(|&a| px.iter().map(|&b| lp_unchecked(a, b, p)).sum::<f64>()),
    );
}

pub(crate) fn pairwise_values(px: &[RgbPixel], k: f64, out: &mut Vec<f64>) {
    out.clear();
    out.extend(px.iter().enumerate().map(|(i, &a)| {
        px.iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &b)| pixel_degree(a, b, k))
            .sum::<f64>()
    }));
}

pub(crate) fn triples_full_values(px: &[RgbPixel], k: f64, out: &mut Vec<f64>) {
    let n = px.len();
    out.clear();
    out.extend((0..n).map(|i| {
        let mut sum = 0.0;
        for a in (0..n).filter(|&a| a != i) {
            for b in (a + 1..n).filter(|&b| b != i) {
                sum += triple_degree(px[i], px[a], px[b], k);
            }
        }
        sum
    }));
}

pub(crate) fn scheme_values(px: &[RgbPixel], table: &PartnerTable, k: f64, out: &mut Vec<f64>) {
    out.clear();
    out.extend(table.iter().enumerate().map(|(i, partners)| {
        partners
            .iter()
            .map(|&(a, b)| triple_degree(px[i], px[a], px[b], k))
            .sum::<f64>()
    }));
}
