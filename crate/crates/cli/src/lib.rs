//! Text formats and the `fpalg` command line front end for `fpalg-core`.
//!
//! [`run`] takes an argument list and returns the exit status together
//! with the exact stdout and stderr text, so the binary and the tests share
//! one code path.

mod command;
pub mod render;
pub mod syntax;

pub use command::{run, Outcome};
