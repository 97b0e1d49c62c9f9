//! Quantum relations on quantum sets, the correspondence with W*-morphisms,
//! and numerical checks for discrete quantum monoids and groups.

pub mod builders;
pub mod corr;
pub mod dqm;
pub mod error;
pub mod json;
pub mod numlin;
pub mod qrel;
pub mod qset;
pub mod random;
pub mod report;
pub mod states;

pub use error::{Error, Result};
