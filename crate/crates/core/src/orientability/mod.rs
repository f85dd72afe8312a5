//! Orientable equations in one and two variables: witnesses, validators
//! and bounded search.

mod search;
mod sigma;
mod witness;

pub use search::{orientable_set, search_one_var, search_two_var};
pub use sigma::{sigma_report, Exactness, SigmaPair, SigmaReport};
pub use witness::{
    validate_one_var, validate_two_var, OneVarWitness, ResolvedWitness, TwoVarWitness, Verdict,
    Violation, WitnessKind, WitnessRecord,
};

/// Default size bound for one-variable searches.
pub const DEFAULT_ONE_VAR_BOUND: usize = 4;
/// Default size bound for two-variable searches.
pub const DEFAULT_TWO_VAR_BOUND: usize = 3;
