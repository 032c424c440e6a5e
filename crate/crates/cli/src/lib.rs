//! Report building and rendering for the `qtak` binary, exposed as a library
//! so the acceptance suite can drive the exact code paths the CLI uses.

pub mod json;
pub mod report;
pub mod text;
