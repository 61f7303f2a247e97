//! Group rings ℤG, ℚG and ℚ(ζ₂₄)G: convolution, central idempotents, block dimensions,
//! integrality, and the Q8 quantum-number basis.

mod element;
mod expr;
mod idempotent;
mod q8;

pub use element::{AlgebraElement, Ring};
pub use expr::{parse_element, resolve_element};
pub use idempotent::{
    block_dimension, block_idempotents, central_idempotents, enumerate_idempotents_commutative,
    integral_idempotent_check, rational_blocks, real_block_idempotents, verify_idempotent, BlockIdempotent,
    IdempotentReport,
};
pub use q8::{q8_basis_vector, q8_decompose, q8_reconstruct, Q8Decomposition, QuantumNumbers, BASIS_NAMES};

use crate::error::Result;

pub fn algebra_mul(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.mul(b)
}
