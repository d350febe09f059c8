//! Enumeration, verification runs, caching and reports for the binomial
//! edge ideal predictor.

pub mod cache;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod verify;

pub use cache::{Cache, CacheEntry};
pub use enumerate::{enumerate_unicyclic, enumerate_whiskered_cycles, whiskered_cycle, GraphCase};
pub use error::HarnessError;
pub use oracle::{run_oracle, OracleConfig, OracleOutcome, OracleResult};
pub use verify::{verify_all, verify_case, Report, Verdict, VerificationRecord};
