//! Promislow-set verification and bounded searches for units.

pub mod gf;
mod promislow;
mod scan;

pub use promislow::{
    expected_image, promislow_check, promislow_set, unique_product_check, PromislowEntry, PromislowReport,
    SET_A, SET_B, SET_B_PRIME, SET_C, SET_C_PRIME, SET_D_PRIME,
};
pub use scan::{unit_scan, ScanReport, SearchSpace};
