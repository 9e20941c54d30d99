//! Finite commutative rings, their ideal-based zero-divisor graphs and the
//! orientable genus of those graphs.

pub mod classify;
pub mod error;
pub mod genus;
pub mod graph;
pub mod ideal;
pub mod ring;

pub use error::{Error, Result};
