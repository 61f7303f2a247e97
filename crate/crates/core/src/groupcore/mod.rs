//! Finite groups from quaternion, permutation, or Cayley-table input; classes, centers,
//! automorphisms and matrix closures.

mod automorphism;
mod closure;
mod closure_file;
mod group;
mod io;
mod permutation;
mod quaternion;
mod summary;

pub use automorphism::{automorphism_group, Automorphism, AutomorphismGroup, Homomorphism, MAX_AUTOMORPHISM_ORDER};
pub use closure::{closure, matrix_group_closure, GroupPayload, MatrixGroup};
pub use closure_file::{builtin_closure_set, ClosureGenerator, ClosureSet, BUILTIN_CLOSURE_SETS};
pub use group::{
    group_from_cayley, group_from_matrices, group_from_permutations, group_from_quaternions,
    named_group_from_permutations, named_group_from_quaternions, ConjugacyClass, FiniteGroup, Payload, DEFAULT_CAP,
};
pub use io::{builtin_definition, builtin_group, GroupDefinition, GroupKind, BUILTIN_NAMES};
pub use permutation::Permutation;
pub use quaternion::Quaternion;
pub use summary::{ClassSummary, GeneratorSummary, GroupSummary};

/// Conjugacy classes in canonical order.
pub fn conjugacy_data(g: &FiniteGroup) -> &[ConjugacyClass] {
    g.classes()
}

pub fn center(g: &FiniteGroup) -> Vec<usize> {
    g.center()
}
