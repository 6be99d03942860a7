//! Library side of the `dynkin-ar` command: report types, verification
//! suites and the subcommand implementations.

pub mod commands;
pub mod error;
pub mod report;
pub mod scope;
pub mod suites;

use std::str::FromStr;

pub use commands::{Format, Output};
pub use error::{CliError, CliResult};
pub use report::{PairReport, SuiteReport, VerifyReport};

/// Version of every JSON report layout.
pub const SCHEMA: u32 = 1;

/// Scalar field for the linear algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Prime(u64),
}

impl FromStr for FieldChoice {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s.trim() {
            "rational" => Ok(FieldChoice::Rational),
            other => {
                let p = other
                    .strip_prefix("prime:")
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| CliError::Usage(format!("field must be 'rational' or 'prime:P', got '{other}'")))?;
                Ok(FieldChoice::Prime(p))
            }
        }
    }
}

impl std::fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldChoice::Rational => write!(f, "rational"),
            FieldChoice::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

/// Applies `DYNKIN_AR_THREADS` to the global rayon pool, if set.
pub fn configure_threads() -> CliResult<()> {
    if let Ok(v) = std::env::var("DYNKIN_AR_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| CliError::Usage(format!("DYNKIN_AR_THREADS must be a positive integer, got '{v}'")))?;
        if n == 0 {
            return Err(CliError::Usage("DYNKIN_AR_THREADS must be positive".into()));
        }
        // a pool already built (e.g. by an earlier call) is kept
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}
