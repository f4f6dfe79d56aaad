//! Prime-divisor character graphs: constructors for PSL₂(q), Suzuki and
//! solvable models, the n-exact test with certificates, and exhaustive
//! exponent sweeps over the extremal families.

pub mod cli;
pub mod error;
pub mod exactness;
pub mod graph;
pub mod models;
pub mod numtheory;
pub mod par;
pub mod search;

pub use error::{Error, Result};
