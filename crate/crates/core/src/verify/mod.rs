//! Built-in verification suites.
//!
//! The acceptance criteria live here as library functions so the CLI
//! (`excidyn verify --tier ...`) and the integration test suite run the
//! same checks with the same pinned tolerances.

pub mod criteria;
pub mod oracle;
pub mod quad;

pub use criteria::{acceptance_criteria, run_tier, Check, Tier};
