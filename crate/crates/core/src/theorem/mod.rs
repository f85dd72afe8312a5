//! Constructive side of the group results: commutator decompositions,
//! witnesses built from them, and the verification suites.

mod construct;
mod decomposition;
mod verify;

pub use construct::{
    build_orientable_witness, build_two_var_witness, build_two_var_witness_with,
    identity_witness, orientable_witness_for,
};
pub use decomposition::{commutator_decomposition, CommutatorDecomposition, DecompositionTable};
pub use verify::{
    theorem1_bound, verify_propositions, verify_theorem1, verify_theorem2, Check, Status,
    VerificationReport,
};
