//! Command-line front end and HTTP session API.
//!
//! Exit codes: 0 ok/pass, 1 fail (with witness), 2 unknown or truncated,
//! 3 usage or parse error.

pub mod api;
mod commands;

pub use commands::{run, ExitCode};
