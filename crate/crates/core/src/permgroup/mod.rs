//! Finite permutation groups: closure, conjugacy classes, structural
//! subgroups, quotients and predicates.

mod classes;
mod group;
mod perm;
mod structure;
mod subgroup;

pub use classes::ConjClasses;
pub use group::{close_group, prime_power_decomposition, Group, DEFAULT_ORDER_CAP};
pub use perm::{compose, Perm};
pub use structure::{
    center, derived_of, derived_subgroup, exponent, frattini_of_p_group, frattini_subgroup,
    is_cyclic, is_metacyclic, maximal_subgroups_by_enumeration, maximal_subgroups_of_normal,
    quotient_group, MaximalSubgroup,
};
pub use subgroup::Subgroup;

pub(crate) use group::is_prime;
