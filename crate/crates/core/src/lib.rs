//! Exact computational toolkit for degree-m homogeneous forms (m-ic forms)
//! and free m-ic lattices over orders in totally real number fields:
//! polarization, certified total positive definiteness with explicit
//! representation-search bounds, Waring-type decompositions, and
//! representation scans.

pub mod error;
pub mod field;
pub mod forms;
pub mod geometry;
pub mod interval;
pub mod poly;
pub mod posdef;
pub mod represent;
pub mod waring;

pub use error::{Error, Result};
pub use field::{define_field, AlgInt, Order};

