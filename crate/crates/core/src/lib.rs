// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod dickelab;
pub mod error;
pub mod metro;
pub mod numkernel;
pub mod qstates;
pub mod rabi;

pub use error::{Error, Result};
