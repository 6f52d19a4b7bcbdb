//! Command-line front end: input resolution, seeded campaigns, the named
//! example suite and JSON reports.

pub mod campaign;
pub mod input;
pub mod random;
pub mod report;
pub mod reproduce;

use scx_core::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Numeric(_) => EXIT_NUMERIC,
        Error::Guard { .. } => EXIT_GUARD,
        _ => EXIT_PARSE,
    }
}
