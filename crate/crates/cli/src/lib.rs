//! Reusable pieces behind the `splitcubic` binary: the range scanner, the
//! output serializers, and the reference-table regression checks.

pub mod golden;
pub mod output;
pub mod scan;
pub mod tables;
