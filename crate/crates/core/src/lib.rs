//! Positive braids, simple braids and the D polynomial of their closures.

pub mod braid;
pub mod conjugacy;
pub mod error;
pub mod link;
pub mod oracle;
pub mod simple;
pub mod verify;

pub use braid::*;
pub use conjugacy::{
    are_conjugate, conjugate_by, find_square_conjugate, invariant_simple_set, is_conjugate_simple, is_markov_simple_bounded,
    positive_conjugacy_orbit, OrbitResult, SearchLimits, SquareWitness,
};
pub use error::{BraidError, Result};
pub use link::*;
pub use simple::*;
