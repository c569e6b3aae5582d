//! Command-line front end for `degbern-core`, plus the CSV and JSON formats
//! it emits.

pub mod cli;
pub mod format;

pub use degbern_core as core;

use degbern_core::verify::{jobs, verify, VerifyReport};
use rayon::prelude::*;

/// Runs every registered identity in parallel. The result order matches
/// [`degbern_core::verify::verify_all`] regardless of completion order.
pub fn verify_all_parallel(n_max: usize) -> Vec<VerifyReport> {
    jobs()
        .into_par_iter()
        .map(|(id, interp)| verify(id, n_max, interp).expect("registered job"))
        .collect()
}
