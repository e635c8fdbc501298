//! Suite execution and the JSON report.

use std::time::Instant;

use neatalg::field::FieldSpec;
use neatalg::involutions::{AlgebraDoc, AnyAlgebra};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{Budgets, GridPoint, SuiteConfig, SuiteName};
use crate::error::HarnessError;
use crate::instance::{generate_instance, instance_seed};
use crate::suites::{run_algebra_case, run_springer_case, CaseResult, Ctx, Status};

pub const REPORT_SCHEMA: &str = "neatalg/report/v1";
pub const FAILURE_SCHEMA: &str = "neatalg/failure/v1";

/// What a failing case ran on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Subject {
    Algebra { point: GridPoint, algebra: AlgebraDoc },
    /// A planted cubic, regenerated from the seed.
    Cubic { field: FieldSpec },
}

/// Everything needed to rerun one failing case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureRecord {
    pub schema: String,
    pub suite: SuiteName,
    pub index: usize,
    pub seed: u64,
    pub budgets: Budgets,
    pub subject: Subject,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub index: usize,
    pub seed: u64,
    pub label: String,
    #[serde(flatten)]
    pub result: CaseResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: SuiteName,
    pub instances_run: usize,
    pub passes: usize,
    pub not_found: usize,
    pub skipped: usize,
    pub failures: Vec<FailureRecord>,
    pub results: Vec<InstanceResult>,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub version: String,
    pub seed: u64,
    pub config: SuiteConfig,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn failure_count(&self) -> usize {
        self.suites.iter().map(|s| s.failures.len()).sum()
    }

    pub fn passed(&self) -> bool {
        self.failure_count() == 0
    }

    pub fn suite(&self, name: SuiteName) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

struct Case<'a> {
    index: usize,
    seed: u64,
    label: String,
    subject: CaseSubject<'a>,
}

enum CaseSubject<'a> {
    Algebra(&'a GridPoint, &'a AnyAlgebra),
    Cubic(&'a FieldSpec),
}

fn algebra_doc(a: &AnyAlgebra) -> AlgebraDoc {
    match a {
        AnyAlgebra::Finite(a) => a.to_doc(),
        AnyAlgebra::Rational(a) => a.to_doc(),
    }
}

fn run_case(suite: SuiteName, case: &Case, budgets: &Budgets) -> CaseResult {
    let ctx = Ctx {
        seed: case.seed,
        budgets,
    };
    match case.subject {
        CaseSubject::Algebra(_, a) => run_algebra_case(suite, a, &ctx),
        CaseSubject::Cubic(field) => run_springer_case(field, case.seed),
    }
}

fn run_one_suite(
    suite: SuiteName,
    cfg: &SuiteConfig,
    instances: &[(GridPoint, u64, AnyAlgebra)],
) -> SuiteReport {
    let start = Instant::now();
    let cases: Vec<Case> = if suite == SuiteName::Springer {
        let mut fields: Vec<&FieldSpec> = Vec::new();
        for f in &cfg.fields {
            if !fields.contains(&f) {
                fields.push(f);
            }
        }
        let per = cfg.budgets.springer as usize;
        fields
            .iter()
            .enumerate()
            .flat_map(|(fi, f)| {
                (0..per).map(move |i| {
                    let index = fi * per + i;
                    Case {
                        index,
                        seed: instance_seed(cfg.seed, index),
                        label: format!("{} planted cubic {i}", f.short_name()),
                        subject: CaseSubject::Cubic(f),
                    }
                })
            })
            .collect()
    } else {
        instances
            .iter()
            .enumerate()
            .map(|(index, (p, seed, a))| Case {
                index,
                seed: *seed,
                label: p.to_string(),
                subject: CaseSubject::Algebra(p, a),
            })
            .collect()
    };
    let results: Vec<CaseResult> = cases.par_iter().map(|c| run_case(suite, c, &cfg.budgets)).collect();
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let failures = cases
        .iter()
        .zip(&results)
        .filter(|(_, r)| r.status == Status::Fail)
        .map(|(c, r)| FailureRecord {
            schema: FAILURE_SCHEMA.into(),
            suite,
            index: c.index,
            seed: c.seed,
            budgets: cfg.budgets.clone(),
            subject: match c.subject {
                CaseSubject::Algebra(p, a) => Subject::Algebra {
                    point: p.clone(),
                    algebra: algebra_doc(a),
                },
                CaseSubject::Cubic(f) => Subject::Cubic { field: f.clone() },
            },
            detail: r.detail.clone(),
        })
        .collect();
    SuiteReport {
        suite,
        instances_run: results.len(),
        passes: count(Status::Pass),
        not_found: count(Status::NotFound),
        skipped: count(Status::Skipped),
        failures,
        results: cases
            .into_iter()
            .zip(results)
            .map(|(c, result)| InstanceResult {
                index: c.index,
                seed: c.seed,
                label: c.label,
                result,
            })
            .collect(),
        wall_time_s: start.elapsed().as_secs_f64(),
    }
}

/// Runs every configured suite over the grid.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, HarnessError> {
    cfg.validate()?;
    let grid = cfg.grid();
    let needs_algebras = cfg.suites.iter().any(|&s| s != SuiteName::Springer);
    let instances: Vec<(GridPoint, u64, AnyAlgebra)> = if needs_algebras {
        grid.into_par_iter()
            .enumerate()
            .map(|(i, p)| {
                let seed = instance_seed(cfg.seed, i);
                generate_instance(&p, seed).map(|a| (p, seed, a))
            })
            .collect::<Result<_, _>>()?
    } else {
        Vec::new()
    };
    let suites = cfg.suites.iter().map(|&s| run_one_suite(s, cfg, &instances)).collect();
    Ok(Report {
        schema: REPORT_SCHEMA.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        seed: cfg.seed,
        config: cfg.clone(),
        suites,
    })
}

/// Reruns a recorded failure.
pub fn replay(rec: &FailureRecord) -> Result<CaseResult, HarnessError> {
    let ctx = Ctx {
        seed: rec.seed,
        budgets: &rec.budgets,
    };
    Ok(match &rec.subject {
        Subject::Algebra { algebra, .. } => run_algebra_case(rec.suite, &AnyAlgebra::from_doc(algebra)?, &ctx),
        Subject::Cubic { field } => run_springer_case(field, rec.seed),
    })
}
