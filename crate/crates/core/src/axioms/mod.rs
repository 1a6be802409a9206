//! Sampling-based verification of the generalized n-metric axioms (G1-G5),
//! the fuzzy n-metric axioms (M1-M6), and the properties derived from them.
//!
//! Every check draws `count` samples from a [`SampleSpec`]. Sample `i` uses
//! its own generator seeded from `(seed, i)`, so samples can be evaluated in
//! parallel and the reports are identical for a given spec regardless of the
//! execution mode.

mod checks;
mod sampling;
pub mod suite;

use std::fmt;

use crate::{Error, Execution, Result};

pub use checks::{
    ball_contains, check_ball_containment, check_f_bounded, check_fn_axioms, check_gn_axioms,
    check_hausdorff_separation, check_monotone_t, check_power_inequality, check_subset_identity,
    Ball,
};
pub use sampling::SamplePoint;

/// Absolute slack used by every inequality check.
pub const SLACK: f64 = 1e-12;

/// Where sample points come from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Domain {
    /// Real numbers in `[lo, hi]` (per channel for vector points).
    Interval { lo: f64, hi: f64 },
    /// Integer RGB vectors in `{0..255}^3`.
    RgbCube,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SampleSpec {
    pub domain: Domain,
    pub tuple_arity: usize,
    pub count: usize,
    pub seed: u64,
    /// Strictly increasing positive scales.
    pub t_grid: Vec<f64>,
    pub execution: Execution,
}

impl SampleSpec {
    pub fn new(
        domain: Domain,
        tuple_arity: usize,
        count: usize,
        seed: u64,
        t_grid: Vec<f64>,
    ) -> Self {
        SampleSpec {
            domain,
            tuple_arity,
            count,
            seed,
            t_grid,
            execution: Execution::default(),
        }
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Precondition(
                "sample count must be at least 1".into(),
            ));
        }
        if self.t_grid.is_empty() {
            return Err(Error::Precondition("t grid must not be empty".into()));
        }
        if self.t_grid.iter().any(|t| !(*t > 0.0 && t.is_finite())) {
            return Err(Error::Domain("t grid values must be positive".into()));
        }
        if self.t_grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("t grid must be strictly increasing".into()));
        }
        if let Domain::Interval { lo, hi } = self.domain {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Domain(format!("bad interval [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

/// One failed check: `lhs relation rhs` did not hold within `slack`.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub inputs: String,
    pub lhs: f64,
    pub relation: &'static str,
    pub rhs: f64,
    pub slack: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub axiom_id: String,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new(axiom_id: impl Into<String>) -> Self {
        AxiomReport {
            axiom_id: axiom_id.into(),
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `axiom_id<TAB>checked<TAB>violations`, then one tab-indented line per
/// violation.
impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}",
            self.axiom_id,
            self.checked,
            self.violations.len()
        )?;
        for v in &self.violations {
            write!(
                f,
                "\n\t{}\t{} {} {}\tslack={}",
                v.inputs, v.lhs, v.relation, v.rhs, v.slack
            )?;
        }
        Ok(())
    }
}

/// Renders reports one after another, each terminated by a newline.
pub fn render_reports(reports: &[AxiomReport]) -> String {
    reports.iter().map(|r| format!("{r}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_line_format() {
        let mut r = AxiomReport::new("M5");
        r.checked = 10;
        assert_eq!(r.to_string(), "M5\t10\t0");
        r.violations.push(Violation {
            inputs: "[1.0, 2.0]".into(),
            lhs: 0.5,
            relation: "<=",
            rhs: 0.25,
            slack: 1e-12,
        });
        assert_eq!(
            render_reports(&[r]),
            "M5\t10\t1\n\t[1.0, 2.0]\t0.5 <= 0.25\tslack=0.000000000001\n"
        );
    }

    #[test]
    fn spec_validation() {
        let ok = SampleSpec::new(Domain::RgbCube, 3, 10, 1, vec![1.0, 2.0]);
        assert!(ok.validate().is_ok());
        let mut bad = ok.clone();
        bad.count = 0;
        assert!(bad.validate().is_err());
        let mut bad = ok.clone();
        bad.t_grid = vec![2.0, 1.0];
        assert!(bad.validate().is_err());
        let mut bad = ok;
        bad.t_grid = vec![0.0, 1.0];
        assert!(bad.validate().is_err());
    }
}
