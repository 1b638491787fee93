//! Exact computation of the index of Lie algebra representations, with
//! GNIB checks for the classical symmetric pairs.

pub mod cli;
pub mod error;
pub mod exactlinalg;
pub mod gnib;
pub mod liealg;
pub mod orbits;
pub mod pairs;

pub use error::{Error, Result};
