//! Experiment harness around `dfsum-core`: a corpus of test functions,
//! identity checks, bound and convergence sweeps, kernel dumps, and their
//! CSV and SVG output.

pub mod config;
pub mod corpus;
pub mod error;
pub mod experiments;
pub mod output;
pub mod plot;
pub mod report;

pub use config::{LabConfig, OutputFormat};
pub use corpus::{default_corpus, polynomial_corpus, random_polynomial, ClassTag, TestFunction};
pub use error::{LabError, LabResult};
pub use experiments::{
    dump_kernels, run_bound_sweep, run_convergence_sweep, run_identity_suite, KernelSample,
    DOMINATION_TOL, IDENTITY_TOL,
};
pub use report::{SweepReport, SweepRow};
