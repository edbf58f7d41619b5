//! Exact combinatorics of m-falling partitions and their lecture hall analogues.
//!
//! - [`partition`]: partitions, conjugation, modular decomposition and statistics.
//! - [`classes`]: membership predicates and bounded enumeration of partition classes.
//! - [`bijections`]: the Stockhofe–Keith map, insertion/deletion bijections and the
//!   composite m-falling lecture hall bijection.
//! - [`series`]: truncated multivariate q-series with big-integer coefficients.
//! - [`verify`]: identity checks, bijection contracts and worked-example reproduction.

pub mod bijections;
pub mod classes;
pub mod error;
pub mod partition;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Modulus, Partition, StatVector};
