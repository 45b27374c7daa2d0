//! Matrix semantics for illocutionary acts.
//!
//! Two logics share one formula language ([`syntax`]):
//!
//! * [`matrix_m`]: a four-valued matrix with a single force operator;
//! * [`matrix_mb`]: a matrix over the nonstandard extension `*B`
//!   ([`hyper`]) of a finite Boolean algebra ([`boolalg`]), where act values
//!   are Boolean infinitesimals.
//!
//! [`opposition`] checks entailment and the square of opposition in either
//! matrix. All checks are exhaustive over an indexed valuation space
//! ([`search`]); the crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod boolalg;
pub mod error;
pub mod hyper;
pub mod matrix_m;
pub mod matrix_mb;
pub mod opposition;
pub mod search;
pub mod syntax;

pub use boolalg::{AlgebraSpec, Element};
pub use error::Error;
pub use hyper::{HyperValue, Representative};
pub use matrix_m::{AtomValuation2, TruthValue4, Verdict};
pub use matrix_mb::{EvalOutcome, MbMode, MbValuation};
pub use syntax::{ActDefinitions, Document, Formula, ParseError};
