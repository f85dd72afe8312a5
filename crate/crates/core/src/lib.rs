//! Finite semigroups and orientable equations.
//!
//! An element `g` is orientable when it solves some equation `a = b t c`
//! whose factors pair up across the equality sign; two elements are
//! orientably equivalent when they jointly solve `a t1 b = c t2 d` under the
//! same pairing rule. This crate represents such solutions as checkable
//! witnesses, searches for them exhaustively up to a size bound, and for
//! groups builds them directly from commutator decompositions, so the
//! orientable elements can be compared with the commutator subgroup and
//! orientable equivalence with the abelianization.

pub mod congruence;
pub mod error;
pub mod families;
pub mod group;
pub mod monoid;
pub mod orientability;
pub mod semigroup;
pub mod table_format;
pub mod theorem;

pub use congruence::{
    commutative_cancellative_congruence, commutative_congruence, generated_congruence, quotient,
    Congruence,
};
pub use error::{Error, NotAGroupReason, Result};
pub use families::{make_family, Family};
pub use group::{group_structure, GroupStructure};
pub use monoid::{adjoin_identity, eval_word, Monoid1, Word};
pub use semigroup::{check_associativity, Semigroup, IDENTITY_MARKER};
pub use table_format::{parse_table, serialize};
