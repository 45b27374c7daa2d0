//! Command-line front end for `illoc-core`: file formats, JSON schemas and
//! a multi-threaded search runner.

pub mod cli;
pub mod json;
pub mod parallel;
