//! Exact computations in the level-one Fock space: abacus combinatorics,
//! Littlewood-Richardson coefficients, the LLT canonical basis, closed
//! formulas for canonical basis elements with small quotients, the Mullineux
//! map and Jantzen-order combinatorics.

pub mod canonical;
pub mod error;
pub mod fock_space;
pub mod jantzen;
pub mod littlewood_richardson;
pub mod partition_core;
pub mod runner;

pub use error::{Error, Result};
