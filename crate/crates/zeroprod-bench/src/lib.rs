//! Shared fixtures for the criterion benchmarks.

use zeroprod::classify::{ClassifyOptions, OraclePolicy};
use zeroprod::Algebra;

/// The matrix-algebra fixtures the benchmarks sweep.
pub fn fixtures() -> Vec<(&'static str, Algebra)> {
    vec![
        ("mat:2:2", Algebra::matrix(2, 2).unwrap()),
        ("mat:2:5", Algebra::matrix(2, 5).unwrap()),
        ("mat:3:2", Algebra::matrix(3, 2).unwrap()),
    ]
}

/// Default options with the oracle disabled, for benching the classifier
/// alone.
pub fn no_oracle() -> ClassifyOptions {
    ClassifyOptions {
        oracle: OraclePolicy::Skip,
        ..ClassifyOptions::default()
    }
}
