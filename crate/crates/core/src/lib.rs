//! Exact computer algebra for multiple zeta values and their dagger
//! counterparts over F_q[θ].

pub mod algebra;
pub mod charzero;
pub mod cli;
pub mod error;
pub mod eval;
pub mod indices;
pub mod reduction;
pub mod report;
pub mod suites;
pub mod witness;

pub use error::{Error, Result};
