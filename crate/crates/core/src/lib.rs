//! Skew Schur functions of staircase shapes: LR fillings, closed-form
//! expansions and a content-preserving bijection between conjugate shapes.

pub mod bijection;
pub mod error;
pub mod lr_engine;
pub mod shapes;
pub mod tableaux;
pub mod theorems;

pub use error::{Error, Result};
pub use lr_engine::{enumerate_lr_tableaux, lr_coefficient, skew_schur_expansion, SchurExpansion};
pub use shapes::{Partition, SkewShape, StaircaseSpec};
pub use tableaux::{is_lattice, Content, Tableau};
