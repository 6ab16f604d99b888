//! Output formats and argument parsing helpers for the `stefan` binary.

// NaN-rejecting comparisons (`!(x > 0.0)`) are deliberate in validators.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod formats;
pub mod sweep;
