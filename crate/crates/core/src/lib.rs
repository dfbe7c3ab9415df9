// `!(x > y)` is used deliberately so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod channel;
pub mod cli;
pub mod error;
pub mod numfmt;
pub mod overlap;
pub mod sweep;

pub use error::{Error, Result};
