//! Exact arithmetic in the group algebra KΓ of the Passman fours group, together with
//! the unit-search and chain-enumeration tooling built on top of it.

pub mod chains;
pub mod cli;
pub mod coeff_ring;
pub mod dihedral;
pub mod error;
pub mod gamma;
pub mod matrix_rep;
pub mod parse;
pub mod random;
pub mod search;
pub mod selftest;
pub mod splitting;

pub use error::{Error, Result};
