//! Seeded property suites over grids of algebras with involution, and the
//! reproducible JSON report they produce.

pub mod config;
pub mod error;
pub mod instance;
pub mod report;
pub mod suites;

pub use config::{Budgets, GridPoint, SuiteConfig, SuiteName, TypeName};
pub use error::HarnessError;
pub use instance::{generate_instance, instance_seed, model_spec};
pub use report::{
    replay, run_suite, FailureRecord, InstanceResult, Report, Subject, SuiteReport, FAILURE_SCHEMA, REPORT_SCHEMA,
};
pub use suites::{CaseResult, Status};
