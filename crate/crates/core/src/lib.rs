//! Benchmark generator and evaluation harness for time-series anomaly
//! detection with vision-language models.

// `!(x > 0.0)` style checks also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod domain;
pub mod error;
pub mod harness;
pub mod inject;
pub mod llm;
pub mod manifest;
pub mod metrics;
pub mod parse;
pub mod plan;
pub mod render;
pub mod stats;
pub mod synth;

pub use error::{Error, Result};
