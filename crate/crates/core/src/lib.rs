//! Fuzzy soft sets over finite universes: lattice operations, convexity and
//! number classification, the four arithmetic operations, profile distances,
//! (p, q)-mappings, sequence analysis and a proposition checker.
//!
//! ```
//! use fuzzysoft_core::{arith, classify, fixtures, metric};
//!
//! let f = fixtures::f_a();
//! let g = fixtures::g_a();
//! assert!(classify::is_fuzzy_soft_number(&f).verdict);
//! assert!((metric::distance(&f, &g).unwrap().get() - 0.2).abs() < 1e-9);
//! let sum = arith::add(&f, &g).unwrap();
//! assert!(sum.is_fully_defined());
//! ```

pub mod analysis;
pub mod arith;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod metric;
pub mod propcheck;
pub mod set;

pub use analysis::MappingSpec;
pub use arith::{ArithOp, ArithResult};
pub use error::{Error, Result};
pub use set::{FuzzySoftSet, Labels, ObjectProfile, SoftPoint, EQ_TOL, PRINT_TOL};
