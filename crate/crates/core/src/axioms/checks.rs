use rand::seq::SliceRandom;
use rand::Rng;
use rand_xoshiro::Xoshiro256PlusPlus;

use super::sampling::{draw_related, draw_tuple, sample_rng};
use super::{AxiomReport, SamplePoint, SampleSpec, Violation, SLACK};
use crate::metric::{check_t, FuzzyNMetric, GeneralizedNMetric, TNorm};
use crate::{Error, Result};

/// Outcomes of the checks performed on one sample, tagged by report index.
#[derive(Default)]
struct SampleLog {
    entries: Vec<(usize, Option<Violation>)>,
}

impl SampleLog {
    fn record(&mut self, axiom: usize, ok: bool, v: impl FnOnce() -> Violation) {
        self.entries
            .push((axiom, if ok { None } else { Some(v()) }));
    }

    /// `lhs <= rhs + slack`
    fn le(
        &mut self,
        axiom: usize,
        lhs: f64,
        rhs: f64,
        slack: f64,
        inputs: impl FnOnce() -> String,
    ) {
        self.record(axiom, lhs <= rhs + slack, || Violation {
            inputs: inputs(),
            lhs,
            relation: "<=",
            rhs,
            slack,
        });
    }

    /// `lhs < rhs`
    fn lt(&mut self, axiom: usize, lhs: f64, rhs: f64, inputs: impl FnOnce() -> String) {
        self.record(axiom, lhs < rhs, || Violation {
            inputs: inputs(),
            lhs,
            relation: "<",
            rhs,
            slack: 0.0,
        });
    }

    /// `lhs == rhs`, bit for bit.
    fn eq(&mut self, axiom: usize, lhs: f64, rhs: f64, inputs: impl FnOnce() -> String) {
        self.record(axiom, lhs == rhs, || Violation {
            inputs: inputs(),
            lhs,
            relation: "==",
            rhs,
            slack: 0.0,
        });
    }
}

fn run_samples<F>(ids: &[&str], spec: &SampleSpec, per_sample: F) -> Vec<AxiomReport>
where
    F: Fn(&mut Xoshiro256PlusPlus, &mut SampleLog) + Sync + Send,
{
    let logs = spec.execution.map_indices(spec.count, |i| {
        let mut rng = sample_rng(spec.seed, i);
        let mut log = SampleLog::default();
        per_sample(&mut rng, &mut log);
        log
    });
    let mut reports: Vec<AxiomReport> = ids.iter().map(|id| AxiomReport::new(*id)).collect();
    for log in logs {
        for (axiom, violation) in log.entries {
            reports[axiom].checked += 1;
            reports[axiom].violations.extend(violation);
        }
    }
    reports
}

fn prepare<P: SamplePoint>(spec: &SampleSpec, arity: usize) -> Result<()> {
    spec.validate()?;
    if !P::supports(&spec.domain) {
        return Err(Error::Domain(format!(
            "point type cannot be drawn from {:?}",
            spec.domain
        )));
    }
    if spec.tuple_arity != arity {
        return Err(Error::arity_exact(arity, spec.tuple_arity));
    }
    Ok(())
}

fn all_equal<P: PartialEq>(xs: &[P]) -> bool {
    xs.windows(2).all(|w| w[0] == w[1])
}

fn has_distinct_pair<P: PartialEq>(xs: &[P]) -> bool {
    !all_equal(xs)
}

/// `(head, tail, tail, ..., tail)` of length `n`.
fn head_then<P: Clone>(head: &P, tail: &P, n: usize) -> Vec<P> {
    let mut v = vec![tail.clone(); n];
    v[0] = head.clone();
    v
}

/// `(head, head, ..., head, last)` of length `n`.
fn repeat_then<P: Clone>(head: &P, last: &P, n: usize) -> Vec<P> {
    let mut v = vec![head.clone(); n];
    v[n - 1] = last.clone();
    v
}

fn pick_t<R: Rng>(grid: &[f64], rng: &mut R) -> f64 {
    grid[rng.random_range(0..grid.len())]
}

/// Checks G1-G5 on `spec.count` sampled tuples.
///
/// G4 uses one random permutation per sample and G5 one random witness
/// point. Inequalities (G3, G5) allow [`SLACK`]; G1, G2, and G4 are exact.
pub fn check_gn_axioms<P, G>(gn: &G, spec: &SampleSpec) -> Result<Vec<AxiomReport>>
where
    P: SamplePoint,
    G: GeneralizedNMetric<P> + Sync,
{
    let n = gn.arity();
    prepare::<P>(spec, n)?;
    let dom = spec.domain;
    Ok(run_samples(
        &["G1", "G2", "G3", "G4", "G5"],
        spec,
        |rng, log| {
            let xs: Vec<P> = draw_tuple(&dom, n, rng);
            let w: P = draw_related(&dom, &xs, rng);
            let mut permuted = xs.clone();
            permuted.shuffle(rng);
            let show = || format!("xs={xs:?}");

            let coincident = vec![xs[0].clone(); n];
            log.eq(0, gn.measure(&coincident), 0.0, || {
                format!("xs={coincident:?}")
            });
            let full = gn.measure(&xs);
            if all_equal(&xs) {
                log.eq(0, full, 0.0, show);
            }

            let one_off = repeat_then(&xs[0], &xs[1], n);
            let one_off_val = gn.measure(&one_off);
            if xs[0] != xs[1] {
                log.lt(1, 0.0, one_off_val, || format!("xs={one_off:?}"));
            }

            if has_distinct_pair(&xs[1..]) {
                log.le(2, one_off_val, full, SLACK, show);
            }

            log.eq(3, gn.measure(&permuted), full, || {
                format!("xs={xs:?} permuted={permuted:?}")
            });

            let via_w = head_then(&xs[0], &w, n);
            let mut rest = xs.clone();
            rest[0] = w.clone();
            let bound = gn.measure(&via_w) + gn.measure(&rest);
            log.le(4, full, bound, SLACK, || format!("xs={xs:?} w={w:?}"));
        },
    ))
}

/// Checks M1-M6 (plus `STAT` for stationary metrics).
///
/// M5 draws `(t, s)` from the grid; M6 bounds the change between adjacent
/// grid points by 0.5. M2 is only checked when some pair among
/// `x_2..x_n` differs, so it is vacuous for arity 2.
pub fn check_fn_axioms<P, F>(fm: &F, spec: &SampleSpec) -> Result<Vec<AxiomReport>>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    let n = fm.arity();
    prepare::<P>(spec, n)?;
    let dom = spec.domain;
    let grid = spec.t_grid.as_slice();
    let tnorm = fm.tnorm();
    let mut ids = vec!["M1", "M2", "M3", "M4", "M5", "M6"];
    if fm.is_stationary() {
        ids.push("STAT");
    }
    let stationary = fm.is_stationary();
    Ok(run_samples(&ids, spec, |rng, log| {
        let xs: Vec<P> = draw_tuple(&dom, n, rng);
        let w: P = draw_related(&dom, &xs, rng);
        let mut permuted = xs.clone();
        permuted.shuffle(rng);
        let t = pick_t(grid, rng);
        let s = pick_t(grid, rng);
        let show = || format!("xs={xs:?} t={t}");

        let full = fm.degree(&xs, t);
        let one_off = repeat_then(&xs[0], &xs[1], n);
        let one_off_val = fm.degree(&one_off, t);

        // M1, plus the (0, 1] range of every evaluation
        if xs[0] != xs[1] {
            log.lt(0, 0.0, one_off_val, || format!("xs={one_off:?} t={t}"));
        }
        log.lt(0, 0.0, full, show);
        log.le(0, full, 1.0, 0.0, show);

        if has_distinct_pair(&xs[1..]) {
            log.le(1, full, one_off_val, SLACK, show);
        }

        let coincident = vec![xs[0].clone(); n];
        log.eq(2, fm.degree(&coincident, t), 1.0, || {
            format!("xs={coincident:?} t={t}")
        });
        if all_equal(&xs) {
            log.eq(2, full, 1.0, show);
        } else {
            log.lt(2, full, 1.0, show);
        }

        log.eq(3, fm.degree(&permuted, t), full, || {
            format!("xs={xs:?} permuted={permuted:?} t={t}")
        });

        let via_w = head_then(&xs[0], &w, n);
        let mut rest = xs.clone();
        rest[0] = w.clone();
        let lhs = tnorm.combine(fm.degree(&via_w, t), fm.degree(&rest, s));
        log.le(4, lhs, fm.degree(&xs, t + s), SLACK, || {
            format!("xs={xs:?} w={w:?} t={t} s={s}")
        });

        let along: Vec<f64> = grid.iter().map(|&g| fm.degree(&xs, g)).collect();
        for pair in along.windows(2) {
            log.le(5, (pair[1] - pair[0]).abs(), 0.5, 0.0, || {
                format!("xs={xs:?} grid")
            });
        }
        if stationary {
            for &v in &along[1..] {
                log.eq(6, v, along[0], || format!("xs={xs:?} grid"));
            }
        }
    }))
}

/// `F(x, y, .., y, t) >= [F(y, x, .., x, t/(n-1))]^(n-1)` up to [`SLACK`],
/// with the power taken under the metric's t-norm.
pub fn check_power_inequality<P, F>(fm: &F, spec: &SampleSpec) -> Result<AxiomReport>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    let n = fm.arity();
    if n < 3 {
        return Err(Error::arity_at_least(3, n));
    }
    prepare::<P>(spec, n)?;
    let dom = spec.domain;
    let grid = spec.t_grid.as_slice();
    let tnorm = fm.tnorm();
    let mut reports = run_samples(&["P3.4"], spec, |rng, log| {
        let x = P::draw(&dom, rng);
        let y: P = draw_related(&dom, std::slice::from_ref(&x), rng);
        let t = pick_t(grid, rng);
        let lhs = fm.degree(&head_then(&x, &y, n), t);
        let base = fm.degree(&head_then(&y, &x, n), t / (n - 1) as f64);
        let rhs = tnorm.power(base, n - 1);
        log.le(0, rhs, lhs, SLACK, || format!("x={x:?} y={y:?} t={t}"));
    });
    Ok(reports.remove(0))
}

/// Non-decreasing in `t` across each adjacent pair of the grid.
pub fn check_monotone_t<P, F>(fm: &F, spec: &SampleSpec) -> Result<AxiomReport>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    let n = fm.arity();
    prepare::<P>(spec, n)?;
    if spec.t_grid.len() < 2 {
        return Err(Error::Precondition(
            "monotonicity needs at least two t values".into(),
        ));
    }
    let dom = spec.domain;
    let grid = spec.t_grid.as_slice();
    let mut reports = run_samples(&["P3.13"], spec, |rng, log| {
        let xs: Vec<P> = draw_tuple(&dom, n, rng);
        for pair in grid.windows(2) {
            let lo = fm.degree(&xs, pair[0]);
            let hi = fm.degree(&xs, pair[1]);
            log.le(0, lo, hi, SLACK, || {
                format!("xs={xs:?} t1={} t2={}", pair[0], pair[1])
            });
        }
    });
    Ok(reports.remove(0))
}

/// Every sampled tuple has degree strictly above `bound`.
pub fn check_f_bounded<P, F>(fm: &F, spec: &SampleSpec, bound: f64) -> Result<AxiomReport>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    let n = fm.arity();
    prepare::<P>(spec, n)?;
    if !(0.0..=1.0).contains(&bound) {
        return Err(Error::Domain(format!("bound {bound} outside [0, 1]")));
    }
    let dom = spec.domain;
    let grid = spec.t_grid.as_slice();
    let mut reports = run_samples(&["F-BOUND"], spec, |rng, log| {
        let xs: Vec<P> = draw_tuple(&dom, n, rng);
        let t = pick_t(grid, rng);
        log.lt(0, bound, fm.degree(&xs, t), || format!("xs={xs:?} t={t}"));
    });
    Ok(reports.remove(0))
}

/// Which open ball a membership test refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ball {
    /// `B_F(x, r, t)` of the n-ary metric.
    F,
    /// `B_M(x, r, t)` of the induced pairwise metric.
    M,
}

pub fn ball_contains<P, F>(
    fm: &F,
    center: &P,
    candidate: &P,
    radius: f64,
    t: f64,
    which: Ball,
) -> Result<bool>
where
    P: Clone,
    F: FuzzyNMetric<P>,
{
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::Domain(format!("radius {radius} outside (0, 1)")));
    }
    check_t(t)?;
    Ok(degree_for(fm, center, candidate, t, which) > 1.0 - radius)
}

fn degree_for<P: Clone, F: FuzzyNMetric<P>>(fm: &F, x: &P, y: &P, t: f64, which: Ball) -> f64 {
    let n = fm.arity();
    match which {
        Ball::F => fm.degree(&head_then(x, y, n), t),
        Ball::M => {
            let first = fm.degree(&head_then(x, y, n), t / 2.0);
            let second = fm.degree(&repeat_then(x, y, n), t / 2.0);
            fm.tnorm().combine(first, second)
        }
    }
}

/// `y in B_F(x, r/n, t/(n-1))` implies `y in B_M(x, s, 2t)` with
/// `s = 1 - (1 - r/n)^n`. Only non-vacuous implications are counted.
pub fn check_ball_containment<P, F>(
    fm: &F,
    spec: &SampleSpec,
    radius: f64,
    t: f64,
) -> Result<AxiomReport>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    let n = fm.arity();
    prepare::<P>(spec, n)?;
    if fm.tnorm() != TNorm::Product {
        return Err(Error::UnsupportedConstruction(
            "ball containment is checked for the product t-norm only".into(),
        ));
    }
    if !(radius > 0.0 && radius < 1.0) {
        return Err(Error::Domain(format!("radius {radius} outside (0, 1)")));
    }
    check_t(t)?;
    let dom = spec.domain;
    let small = radius / n as f64;
    let s = 1.0 - (1.0 - small).powi(n as i32);
    let mut reports = run_samples(&["P3.17"], spec, |rng, log| {
        let x = P::draw(&dom, rng);
        let y = if rng.random_bool(0.8) {
            P::draw_near(&dom, &x, rng)
        } else {
            P::draw(&dom, rng)
        };
        if degree_for(fm, &x, &y, t / (n - 1) as f64, Ball::F) > 1.0 - small {
            let m = degree_for(fm, &x, &y, 2.0 * t, Ball::M);
            log.lt(0, 1.0 - s - SLACK, m, || format!("x={x:?} y={y:?} s={s}"));
        }
    });
    Ok(reports.remove(0))
}

/// Builds the disjoint balls around distinct `x` and `y` and checks that no
/// sampled point lies in both.
///
/// With `r = F(x, y, .., y, t)` and `r0 = (r + 1) / 2`, the balls are
/// `B_F(x, 1 - r1, t/n)` and `B_F(y, 1 - r1, t/n)` where `r1 = r0^(1/n)` for
/// the product t-norm and `r1 = r0` for the minimum. An `r` outside `(0, 1)`
/// is reported as a violation of the metric.
pub fn check_hausdorff_separation<P, F>(
    fm: &F,
    x: &P,
    y: &P,
    t: f64,
    spec: &SampleSpec,
) -> Result<AxiomReport>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    let n = fm.arity();
    prepare::<P>(spec, n)?;
    check_t(t)?;
    if x == y {
        return Err(Error::Precondition(
            "separation needs two distinct points".into(),
        ));
    }
    let r = fm.degree(&head_then(x, y, n), t);
    if !(r > 0.0 && r < 1.0) {
        let mut report = AxiomReport::new("P3.12");
        report.checked = 1;
        report.violations.push(Violation {
            inputs: format!("x={x:?} y={y:?} t={t}"),
            lhs: r,
            relation: "in (0,1)",
            rhs: f64::NAN,
            slack: 0.0,
        });
        return Ok(report);
    }
    let r0 = (r + 1.0) / 2.0;
    let r1 = match fm.tnorm() {
        TNorm::Product => r0.powf(1.0 / n as f64),
        TNorm::Minimum => r0,
    };
    let dom = spec.domain;
    let scale = t / n as f64;
    let mut reports = run_samples(&["P3.12"], spec, |rng, log| {
        let z = match rng.random_range(0..5) {
            0 => x.clone(),
            1 => y.clone(),
            2 => P::draw_near(&dom, x, rng),
            3 => P::draw_near(&dom, y, rng),
            _ => P::draw(&dom, rng),
        };
        let to_x = fm.degree(&head_then(x, &z, n), scale);
        let to_y = fm.degree(&head_then(y, &z, n), scale);
        let both = to_x > r1 && to_y > r1;
        log.record(0, !both, || Violation {
            inputs: format!("x={x:?} y={y:?} z={z:?} r1={r1}"),
            lhs: to_x,
            relation: "and",
            rhs: to_y,
            slack: 0.0,
        });
    });
    Ok(reports.remove(0))
}

/// `|F_n^(n-2) - prod of F_(n-1) over (n-1)-subsets| <= SLACK` for the
/// pairwise product construction over `pair`.
pub fn check_subset_identity<P, F>(pair: &F, spec: &SampleSpec) -> Result<AxiomReport>
where
    P: SamplePoint,
    F: FuzzyNMetric<P> + Sync,
{
    spec.validate()?;
    let n = spec.tuple_arity;
    // validates the pair metric and arity up front
    crate::metric::ProductFuzzyMetric::new(pair, n)?;
    prepare::<P>(spec, n)?;
    let dom = spec.domain;
    let grid = spec.t_grid.as_slice();
    let mut reports = run_samples(&["P3.15"], spec, |rng, log| {
        let xs: Vec<P> = draw_tuple(&dom, n, rng);
        let t = pick_t(grid, rng);
        let residual = crate::metric::subset_identity_residual(pair, &xs, t).unwrap_or(f64::NAN);
        log.le(0, residual, 0.0, SLACK, || format!("xs={xs:?} t={t}"));
    });
    Ok(reports.remove(0))
}

#[cfg(test)]
mod tests {
    use super::super::Domain;
    use super::*;
    use crate::metric::{
        AbsDiff, BoundedBox, FnFuzzyMetric, FnNMetric, GnFuzzyMetric, PairAggregation,
        PairwiseNMetric, ProductFuzzyMetric, Rho, StandardFuzzyMetric, StationaryFrn,
    };
    use crate::Execution;

    fn reals(arity: usize, seed: u64) -> SampleSpec {
        SampleSpec::new(
            Domain::Interval { lo: 0.0, hi: 10.0 },
            arity,
            1000,
            seed,
            vec![0.25, 0.5, 1.0, 2.0, 4.0, 8.0],
        )
    }

    fn rgb(arity: usize, seed: u64) -> SampleSpec {
        SampleSpec::new(Domain::RgbCube, arity, 1000, seed, vec![0.5, 1.0, 2.0, 4.0])
    }

    type Rgb = [f64; 3];

    fn frn(r: usize) -> StationaryFrn {
        StationaryFrn::new(r, BoundedBox::rgb(1024.0).unwrap()).unwrap()
    }

    fn assert_all_pass(reports: &[AxiomReport]) {
        for r in reports {
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0 || r.axiom_id == "M2", "{r}");
        }
    }

    #[test]
    fn rho_passes_all_g_axioms() {
        let reports = check_gn_axioms(&Rho::new(3).unwrap(), &reals(3, 1)).unwrap();
        assert_eq!(reports.len(), 5);
        assert_all_pass(&reports);
    }

    #[test]
    fn pairwise_max_passes() {
        let gn = PairwiseNMetric::new(4, AbsDiff, PairAggregation::Max).unwrap();
        assert_all_pass(&check_gn_axioms(&gn, &reals(4, 2)).unwrap());
    }

    #[test]
    fn zero_evaluator_fails_g2() {
        let zero = FnNMetric::new(3, |_: &[f64]| 0.0);
        let reports = check_gn_axioms(&zero, &reals(3, 1)).unwrap();
        let g2 = reports.iter().find(|r| r.axiom_id == "G2").unwrap();
        assert!(!g2.passed());
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let err = check_gn_axioms(&Rho::new(3).unwrap(), &reals(4, 1)).unwrap_err();
        assert!(matches!(err, Error::Arity { .. }));
        assert!(check_fn_axioms::<Rgb, _>(&frn(3), &rgb(2, 1)).is_err());
    }

    #[test]
    fn frn_passes_all_m_axioms() {
        let reports = check_fn_axioms::<Rgb, _>(&frn(3), &rgb(3, 1)).unwrap();
        assert_eq!(reports.last().unwrap().axiom_id, "STAT");
        assert_all_pass(&reports);
    }

    #[test]
    fn product_construction_passes() {
        let f = ProductFuzzyMetric::new(StandardFuzzyMetric::new(AbsDiff), 4).unwrap();
        assert_all_pass(&check_fn_axioms(&f, &reals(4, 3)).unwrap());
    }

    #[test]
    fn constant_one_fails_m3() {
        let one = FnFuzzyMetric::new(3, TNorm::Product, |_: &[f64], _| 1.0);
        let reports = check_fn_axioms(&one, &reals(3, 1)).unwrap();
        let m3 = reports.iter().find(|r| r.axiom_id == "M3").unwrap();
        assert!(!m3.passed());
    }

    #[test]
    fn power_inequality_examples() {
        let f = frn(3);
        assert_eq!(
            f.degree(&[[1.0, 2.0, 3.0]; 3], 1.0),
            TNorm::Product.power(f.degree(&[[1.0, 2.0, 3.0]; 3], 0.5), 2)
        );
        assert!(check_power_inequality::<Rgb, _>(&f, &rgb(3, 1))
            .unwrap()
            .passed());
        let g = GnFuzzyMetric::new(Rho::new(4).unwrap());
        assert!(check_power_inequality(&g, &reals(4, 1)).unwrap().passed());
        assert!(check_power_inequality::<Rgb, _>(&frn(2), &rgb(2, 1)).is_err());
    }

    #[test]
    fn monotone_examples() {
        let g = GnFuzzyMetric::new(Rho::new(3).unwrap());
        let mut spec = reals(3, 1);
        spec.t_grid = vec![1.0, 2.0, 4.0, 8.0];
        assert!(check_monotone_t(&g, &spec).unwrap().passed());
        // strictly increasing where G > 0
        let xs = [0.0, 1.0, 2.0];
        let vals: Vec<f64> = spec.t_grid.iter().map(|&t| g.degree(&xs, t)).collect();
        assert!(vals.windows(2).all(|w| w[0] < w[1]));

        assert!(check_monotone_t::<Rgb, _>(&frn(3), &rgb(3, 1))
            .unwrap()
            .passed());

        let decreasing =
            FnFuzzyMetric::new(3, TNorm::Product, |_: &[f64], t: f64| (1.0 / t).min(1.0));
        assert!(!check_monotone_t(&decreasing, &spec).unwrap().passed());

        spec.t_grid = vec![1.0];
        assert!(check_monotone_t(&g, &spec).is_err());
    }

    #[test]
    fn f_bounded_examples() {
        let f = frn(3);
        let bound = f.bounds().lower_bound() - 1e-12;
        assert!(check_f_bounded::<Rgb, _>(&f, &rgb(3, 1), bound)
            .unwrap()
            .passed());
        assert!(check_f_bounded::<Rgb, _>(&f, &rgb(3, 1), 0.0)
            .unwrap()
            .passed());
        assert!(!check_f_bounded::<Rgb, _>(&f, &rgb(3, 1), 1.0)
            .unwrap()
            .passed());
        assert!(check_f_bounded::<Rgb, _>(&f, &rgb(3, 1), 1.5).is_err());
    }

    #[test]
    fn ball_membership_examples() {
        let f = frn(3);
        let black = [0.0; 3];
        let white = [255.0; 3];
        assert!(ball_contains(&f, &black, &black, 0.01, 1.0, Ball::F).unwrap());
        assert!(ball_contains(&f, &black, &black, 0.01, 1.0, Ball::M).unwrap());
        assert!(ball_contains(&f, &black, &white, 1.0 - 1e-9, 1.0, Ball::F).unwrap());
        assert!(!ball_contains(&f, &black, &white, 0.4, 1.0, Ball::F).unwrap());
        assert!(ball_contains(&f, &black, &white, 1.0, 1.0, Ball::F).is_err());
        assert!(ball_contains(&f, &black, &white, 0.5, 0.0, Ball::F).is_err());
    }

    #[test]
    fn ball_containment_holds() {
        // n = 3, r = 0.3 gives s = 1 - 0.9^3
        let s: f64 = 1.0 - (1.0 - 0.3 / 3.0f64).powi(3);
        assert!((s - 0.271).abs() < 1e-12);
        let report = check_ball_containment::<Rgb, _>(&frn(3), &rgb(3, 1), 0.3, 1.0).unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.checked > 100, "{report}");
        let min = FnFuzzyMetric::new(3, TNorm::Minimum, |_: &[[f64; 3]], _| 1.0);
        assert!(check_ball_containment::<Rgb, _>(&min, &rgb(3, 1), 0.3, 1.0).is_err());
    }

    #[test]
    fn hausdorff_examples() {
        let f = frn(3);
        let x = [10.0, 20.0, 30.0];
        let y = [200.0, 100.0, 50.0];
        let report = check_hausdorff_separation::<Rgb, _>(&f, &x, &y, 1.0, &rgb(3, 1)).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.checked, 1000);

        // x is inside its own ball and outside the one around y
        let r = f.degree(&[x, y, y], 1.0);
        let r1 = ((r + 1.0) / 2.0).powf(1.0 / 3.0);
        assert!(f.degree(&[x, x, x], 1.0 / 3.0) > r1);
        assert!(f.degree(&[y, x, x], 1.0 / 3.0) <= r1);

        assert!(matches!(
            check_hausdorff_separation::<Rgb, _>(&f, &x, &x, 1.0, &rgb(3, 1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn hausdorff_flags_metric_reaching_one() {
        let one = FnFuzzyMetric::new(3, TNorm::Product, |_: &[f64], _| 1.0);
        let report = check_hausdorff_separation(&one, &1.0, &2.0, 1.0, &reals(3, 1)).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn subset_identity_passes() {
        for n in 3..=5 {
            let report =
                check_subset_identity(&StandardFuzzyMetric::new(AbsDiff), &reals(n, 7)).unwrap();
            assert!(report.passed(), "{report}");
            assert_eq!(report.checked, 1000);
        }
    }

    #[test]
    fn reports_do_not_depend_on_execution() {
        let f = frn(3);
        let seq = check_fn_axioms::<Rgb, _>(&f, &rgb(3, 5).with_execution(Execution::Sequential))
            .unwrap();
        let par =
            check_fn_axioms::<Rgb, _>(&f, &rgb(3, 5).with_execution(Execution::Parallel)).unwrap();
        assert_eq!(seq, par);
        let broken = FnFuzzyMetric::new(3, TNorm::Product, |xs: &[[f64; 3]], _| {
            // K dropped on the first channel
            let lo = xs.iter().map(|v| v[0]).fold(f64::INFINITY, f64::min);
            let hi = xs.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
            if hi == 0.0 {
                1.0
            } else {
                lo / hi
            }
        });
        let a = render(
            &check_fn_axioms::<Rgb, _>(&broken, &rgb(3, 9).with_execution(Execution::Sequential))
                .unwrap(),
        );
        let b = render(
            &check_fn_axioms::<Rgb, _>(&broken, &rgb(3, 9).with_execution(Execution::Parallel))
                .unwrap(),
        );
        assert_eq!(a, b);
        assert!(a
            .lines()
            .any(|l| l.starts_with("M1\t") && !l.ends_with("\t0")));
    }

    fn render(reports: &[AxiomReport]) -> String {
        super::super::render_reports(reports)
    }
}
