//! Exact representation theory for small finite groups.
//!
//! All arithmetic happens in the cyclotomic field Q(ζ₂₄), which holds every character
//! value and matrix entry needed for groups of exponent dividing 24.

pub mod chartheory;
pub mod clifford;
pub mod cycarith;
pub mod error;
pub mod groupalgebra;
pub mod groupcore;
pub mod reps;
pub mod verify;

pub use cycarith::{Cyc, CycMatrix, Matrix, Rational};
pub use error::{Error, Result};
pub use groupcore::{FiniteGroup, Quaternion};
