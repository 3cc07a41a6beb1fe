//! Exact computation of relative tensor triangular cycle and Chow groups for
//! orders and integral group rings over one-dimensional bases.
//!
//! The structure theorems for hereditary orders on curves, orders over
//! discrete valuation rings and group rings reduce these groups to
//! finitely generated abelian groups, class groups and a few opaque summands.
//! [`abgroup`] supplies the exact arithmetic, [`exactseq`] the generic
//! localization-sequence engine, and [`orders`] / [`grouprings`] evaluate the
//! structure theorems. [`algebra_lab`] is a brute-force oracle for simple
//! module counts.

pub mod abgroup;
pub mod algebra_lab;
pub mod classgroups;
mod error;
pub mod exactseq;
pub mod grouprings;
pub mod orders;
pub mod provenance;

pub use error::Error;
pub use provenance::{Derived, Rule};
