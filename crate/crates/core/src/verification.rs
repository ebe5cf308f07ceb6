//! Grid sweeps running every cross-check and collecting the outcomes into a
//! serializable report.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::tensor_decompose;
use crate::closedform::{
    dimension_via_filtration, graded_character_closed, graded_decomposition_direct,
};
use crate::oracle::{fusion_graded_character_bounded, EvaluationParams};
use crate::qseries::GradedDecomposition;
use crate::weights::{weyl_dim, DominantWeight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    DimensionIdentity,
    LrVsTensor,
    GradeZero,
    GradeBound,
    Involution,
    Symmetry,
    MultiplicityFree,
    DirectAgreement,
    OracleAgreement,
    ZIndependence,
}

impl Check {
    pub const ALL: [Check; 10] = [
        Check::DimensionIdentity,
        Check::LrVsTensor,
        Check::GradeZero,
        Check::GradeBound,
        Check::Involution,
        Check::Symmetry,
        Check::MultiplicityFree,
        Check::DirectAgreement,
        Check::OracleAgreement,
        Check::ZIndependence,
    ];
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_coord: u32,
    pub oracle_dim_bound: u64,
    pub evaluation_params: Vec<EvaluationParams>,
    pub checks: BTreeSet<Check>,
    pub parallelism: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_coord: 2,
            oracle_dim_bound: 100,
            evaluation_params: vec![
                EvaluationParams::default(),
                EvaluationParams::from_integers(2, 5).expect("distinct"),
            ],
            checks: Check::ALL.into_iter().collect(),
            parallelism: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

/// A failing instance with enough data to re-run it alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub check: Check,
    pub lambda: DominantWeight,
    pub mu: DominantWeight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_coord: u32,
    pub oracle_dim_bound: u64,
    pub evaluation_params: Vec<String>,
    pub pairs: u64,
    pub checks: BTreeMap<Check, CheckCounts>,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn executed(&self) -> u64 {
        self.checks.values().map(|c| c.passed + c.failed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.checks.values().map(|c| c.failed).sum()
    }

    pub fn is_success(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("pairs: {}\n", self.pairs);
        for (c, n) in &self.checks {
            let name = serde_json::to_value(c).expect("check name");
            out += &format!(
                "{:<20} passed {:>6}  failed {:>4}  skipped {:>6}\n",
                name.as_str().unwrap_or_default(),
                n.passed,
                n.failed,
                n.skipped
            );
        }
        for f in &self.failures {
            out += &format!(
                "FAIL {:?} λ={} μ={}{}: expected {} got {}\n",
                f.check,
                f.lambda,
                f.mu,
                f.z.as_ref().map(|z| format!(" z={z}")).unwrap_or_default(),
                f.expected,
                f.actual
            );
        }
        out
    }
}

enum Outcome {
    Pass,
    Skip,
    Fail {
        z: Option<String>,
        expected: String,
        actual: String,
    },
}

fn compare<T: PartialEq>(expected: T, actual: T, show: impl Fn(&T) -> String) -> Outcome {
    if expected == actual {
        Outcome::Pass
    } else {
        Outcome::Fail {
            z: None,
            expected: show(&expected),
            actual: show(&actual),
        }
    }
}

fn show_map(m: &BTreeMap<DominantWeight, u64>) -> String {
    let body: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", body.join(","))
}

fn at_one(d: &GradedDecomposition) -> BTreeMap<DominantWeight, u64> {
    d.summands()
        .iter()
        .map(|(nu, p)| (*nu, p.eval_at_one()))
        .filter(|(_, n)| *n > 0)
        .collect()
}

fn run_check(check: Check, l: DominantWeight, m: DominantWeight, cfg: &SweepConfig, closed: &GradedDecomposition) -> Outcome {
    let text = |d: &GradedDecomposition| d.to_text();
    let within_bound = weyl_dim(l) * weyl_dim(m) <= cfg.oracle_dim_bound;
    match check {
        Check::DimensionIdentity => compare(
            weyl_dim(l) * weyl_dim(m),
            dimension_via_filtration(l, m),
            u64::to_string,
        ),
        Check::LrVsTensor => match tensor_decompose(l, m) {
            Ok(t) => compare(t, at_one(closed), show_map),
            Err(e) => Outcome::Fail {
                z: None,
                expected: "tensor decomposition".into(),
                actual: e.to_string(),
            },
        },
        Check::GradeZero => compare(
            BTreeMap::from([(DominantWeight::try_from(l.weight() + m.weight()).expect("dominant"), 1)]),
            closed.grade(0),
            show_map,
        ),
        Check::GradeBound => {
            let bound = l.height().min(m.height()) as usize;
            let top = closed.max_grade().unwrap_or(0);
            compare(true, top <= bound, |ok| {
                if *ok {
                    format!("max grade ≤ {bound}")
                } else {
                    format!("max grade {top}")
                }
            })
        }
        Check::Involution => compare(
            closed.involuted(),
            graded_character_closed(l.involution(), m.involution()),
            text,
        ),
        Check::Symmetry => compare(closed.clone(), graded_character_closed(m, l), text),
        Check::MultiplicityFree => {
            if m.c2() != 0 || m.c1() < 1 || m.c1() > l.c1() {
                return Outcome::Skip;
            }
            let free = closed.summands().values().all(|p| p.is_unit_monomial());
            compare(true, free, |ok| if *ok { "multiplicity free".into() } else { text(closed) })
        }
        Check::DirectAgreement => compare(closed.clone(), graded_decomposition_direct(l, m), text),
        Check::OracleAgreement => {
            let Some(z) = cfg.evaluation_params.first().filter(|_| within_bound) else {
                return Outcome::Skip;
            };
            let actual = fusion_graded_character_bounded(l, m, z, cfg.oracle_dim_bound).and_then(|g| g.decompose());
            let outcome = match actual {
                Ok(d) => compare(closed.clone(), d, text),
                Err(e) => Outcome::Fail {
                    z: None,
                    expected: text(closed),
                    actual: e.to_string(),
                },
            };
            with_z(outcome, z)
        }
        Check::ZIndependence => {
            if !within_bound || cfg.evaluation_params.len() < 2 {
                return Outcome::Skip;
            }
            let z0 = &cfg.evaluation_params[0];
            let base = fusion_graded_character_bounded(l, m, z0, cfg.oracle_dim_bound);
            for z in &cfg.evaluation_params[1..] {
                let other = fusion_graded_character_bounded(l, m, z, cfg.oracle_dim_bound);
                if other != base {
                    let show = |g: &crate::error::Result<crate::qseries::GradedCharacter>| match g {
                        Ok(g) => g.decompose().map_or_else(|e| e.to_string(), |d| d.to_text()),
                        Err(e) => e.to_string(),
                    };
                    return Outcome::Fail {
                        z: Some(format!("{z0};{z}")),
                        expected: show(&base),
                        actual: show(&other),
                    };
                }
            }
            Outcome::Pass
        }
    }
}

fn with_z(o: Outcome, z: &EvaluationParams) -> Outcome {
    match o {
        Outcome::Fail { expected, actual, .. } => Outcome::Fail {
            z: Some(z.to_string()),
            expected,
            actual,
        },
        other => other,
    }
}

fn run_pair(l: DominantWeight, m: DominantWeight, cfg: &SweepConfig) -> Vec<(Check, Outcome)> {
    if cfg.checks.is_empty() {
        return Vec::new();
    }
    let closed = graded_character_closed(l, m);
    cfg.checks.iter().map(|c| (*c, run_check(*c, l, m, cfg, &closed))).collect()
}

/// Runs every configured check on every pair with coordinates up to
/// `max_coord`, in lexicographic order of `(λ₁, λ₂, μ₁, μ₂)`.
pub fn run_sweep(cfg: &SweepConfig) -> VerificationReport {
    let pairs: Vec<(DominantWeight, DominantWeight)> = DominantWeight::grid(cfg.max_coord)
        .flat_map(|l| DominantWeight::grid(cfg.max_coord).map(move |m| (l, m)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<Vec<(Check, Outcome)>> =
        pool.install(|| pairs.par_iter().map(|(l, m)| run_pair(*l, *m, cfg)).collect());

    let mut report = VerificationReport {
        max_coord: cfg.max_coord,
        oracle_dim_bound: cfg.oracle_dim_bound,
        evaluation_params: cfg.evaluation_params.iter().map(ToString::to_string).collect(),
        pairs: pairs.len() as u64,
        checks: cfg.checks.iter().map(|c| (*c, CheckCounts::default())).collect(),
        failures: Vec::new(),
    };
    for ((l, m), outcomes) in pairs.iter().zip(results) {
        for (check, outcome) in outcomes {
            let counts = report.checks.get_mut(&check).expect("configured check");
            match outcome {
                Outcome::Pass => counts.passed += 1,
                Outcome::Skip => counts.skipped += 1,
                Outcome::Fail { z, expected, actual } => {
                    counts.failed += 1;
                    report.failures.push(Failure {
                        check,
                        lambda: *l,
                        mu: *m,
                        z,
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    report
}
