//! Batch front-end over `stairlr-core`: expansions, difference reports,
//! bijection traces and the finite-variable equality sweep.

pub mod commands;
pub mod sweep;
