//! The full verification run over every construction in [`crate::metric`].

use super::{
    check_ball_containment, check_f_bounded, check_fn_axioms, check_gn_axioms,
    check_hausdorff_separation, check_monotone_t, check_power_inequality, check_subset_identity,
    AxiomReport, Domain, SampleSpec,
};
use crate::metric::{
    AbsDiff, BoundedBox, GnFuzzyMetric, InducedFuzzyMetric, PairAggregation, PairwiseNMetric,
    ProductFuzzyMetric, Rho, StandardFuzzyMetric, StationaryFrn,
};
use crate::{Execution, Result};

/// Smoothing constant used for the RGB constructions.
pub const RGB_K: f64 = 1024.0;
/// Reals are sampled from `[0, REAL_HI]`.
pub const REAL_HI: f64 = 10.0;
pub const REAL_T_GRID: [f64; 6] = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0];
pub const RGB_T_GRID: [f64; 4] = [0.5, 1.0, 2.0, 4.0];
/// Ball radius and scale for the containment check.
pub const BALL_RADIUS: f64 = 0.3;
pub const BALL_T: f64 = 1.0;

/// Reports for one construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteEntry {
    pub construction: String,
    pub reports: Vec<AxiomReport>,
}

impl SuiteEntry {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(AxiomReport::passed)
    }
}

struct Runner {
    seed: u64,
    samples: usize,
    execution: Execution,
    entries: Vec<SuiteEntry>,
}

impl Runner {
    fn reals(&self, arity: usize) -> SampleSpec {
        SampleSpec::new(
            Domain::Interval {
                lo: 0.0,
                hi: REAL_HI,
            },
            arity,
            self.samples,
            self.seed,
            REAL_T_GRID.to_vec(),
        )
        .with_execution(self.execution)
    }

    fn rgb(&self, arity: usize) -> SampleSpec {
        SampleSpec::new(
            Domain::RgbCube,
            arity,
            self.samples,
            self.seed,
            RGB_T_GRID.to_vec(),
        )
        .with_execution(self.execution)
    }

    fn push(&mut self, construction: String, reports: Vec<AxiomReport>) {
        self.entries.push(SuiteEntry {
            construction,
            reports,
        });
    }
}

/// Runs every axiom and property check with `samples` samples per check.
///
/// Covered: `rho`, the pairwise sum and max n-metrics, `t/(t+rho)`, and the
/// pairwise product of the standard fuzzy metric for n = 3, 4, 5; the
/// bounded-box metric on the RGB cube for r = 2, 3; the standard pairwise
/// metric; and two induced pairwise metrics.
pub fn run_standard_suite(
    seed: u64,
    samples: usize,
    execution: Execution,
) -> Result<Vec<SuiteEntry>> {
    let mut run = Runner {
        seed,
        samples,
        execution,
        entries: Vec::new(),
    };

    for n in 3..=5 {
        let spec = run.reals(n);
        let rho = Rho::new(n)?;
        run.push(format!("rho n={n}"), check_gn_axioms(&rho, &spec)?);
        for (label, mode) in [("sum", PairAggregation::Sum), ("max", PairAggregation::Max)] {
            let gn = PairwiseNMetric::new(n, AbsDiff, mode)?;
            run.push(
                format!("pairwise-{label} n={n}"),
                check_gn_axioms(&gn, &spec)?,
            );
        }

        let fuzzy_rho = GnFuzzyMetric::new(rho);
        let mut reports = check_fn_axioms(&fuzzy_rho, &spec)?;
        reports.push(check_power_inequality(&fuzzy_rho, &spec)?);
        reports.push(check_monotone_t(&fuzzy_rho, &spec)?);
        reports.push(check_ball_containment(
            &fuzzy_rho,
            &spec,
            BALL_RADIUS,
            BALL_T,
        )?);
        reports.push(check_hausdorff_separation(
            &fuzzy_rho, &1.0, &3.0, 1.0, &spec,
        )?);
        run.push(format!("t/(t+rho) n={n}"), reports);

        let pair = StandardFuzzyMetric::new(AbsDiff);
        let product = ProductFuzzyMetric::new(pair, n)?;
        let mut reports = check_fn_axioms(&product, &spec)?;
        reports.push(check_power_inequality(&product, &spec)?);
        reports.push(check_monotone_t(&product, &spec)?);
        reports.push(check_subset_identity(&pair, &spec)?);
        reports.push(check_ball_containment(
            &product,
            &spec,
            BALL_RADIUS,
            BALL_T,
        )?);
        reports.push(check_hausdorff_separation(
            &product, &1.0, &3.0, 1.0, &spec,
        )?);
        run.push(format!("pairwise-product n={n}"), reports);
    }

    let bounds = BoundedBox::rgb(RGB_K)?;
    let x = [10.0, 20.0, 30.0];
    let y = [200.0, 100.0, 50.0];
    for r in 2..=3 {
        let spec = run.rgb(r);
        let frn = StationaryFrn::new(r, bounds)?;
        let mut reports = check_fn_axioms::<[f64; 3], _>(&frn, &spec)?;
        reports.push(check_monotone_t::<[f64; 3], _>(&frn, &spec)?);
        reports.push(check_f_bounded::<[f64; 3], _>(
            &frn,
            &spec,
            bounds.lower_bound() - 1e-12,
        )?);
        if r >= 3 {
            reports.push(check_power_inequality::<[f64; 3], _>(&frn, &spec)?);
            reports.push(check_ball_containment::<[f64; 3], _>(
                &frn,
                &spec,
                BALL_RADIUS,
                BALL_T,
            )?);
        }
        reports.push(check_hausdorff_separation(&frn, &x, &y, 1.0, &spec)?);
        run.push(format!("bounded-box r={r} K={RGB_K}"), reports);
    }

    let spec = run.reals(2);
    run.push(
        "standard |x-y|".to_string(),
        check_fn_axioms(&StandardFuzzyMetric::new(AbsDiff), &spec)?,
    );
    run.push(
        "induced from t/(t+rho) n=4".to_string(),
        check_fn_axioms(
            &InducedFuzzyMetric::new(GnFuzzyMetric::new(Rho::new(4)?)),
            &spec,
        )?,
    );
    let spec = run.rgb(2);
    run.push(
        format!("induced from bounded-box r=3 K={RGB_K}"),
        check_fn_axioms::<[f64; 3], _>(
            &InducedFuzzyMetric::new(StationaryFrn::new(3, bounds)?),
            &spec,
        )?,
    );

    Ok(run.entries)
}

/// Text rendering: a `# construction` header line followed by its reports.
pub fn render_suite(entries: &[SuiteEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("# {}\n", e.construction));
        out.push_str(&super::render_reports(&e.reports));
    }
    out
}
