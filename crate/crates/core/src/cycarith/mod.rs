//! Exact arithmetic in Q(ζ₂₄) and exact dense linear algebra over it.

mod cyc;
mod field;
mod matrix;

pub use cyc::{Cyc, DEGREE};
pub use field::{format_rational, int, is_integer, parse_rational, rational, rational_to_f64, Field, Rational};
pub use matrix::{CycMatrix, Matrix};

use crate::error::Result;

pub fn scalar_mul(a: &Cyc, b: &Cyc) -> Cyc {
    a * b
}

pub fn scalar_inverse(a: &Cyc) -> Result<Cyc> {
    a.inv()
}

pub fn complex_conjugate(a: &Cyc) -> Cyc {
    a.conj()
}

pub fn matrix_rank(m: &CycMatrix) -> usize {
    m.rank()
}

/// `None` signals an inconsistent system.
pub fn matrix_solve(m: &CycMatrix, rhs: &CycMatrix) -> Option<CycMatrix> {
    m.solve(rhs)
}
