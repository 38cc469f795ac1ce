//! Rough approximations of subgroups inside quotient groups of finite groups.
//!
//! Groups are stored as Cayley tables over element indices `0..n` with the
//! identity at index 0. Subsets are fixed-width bitsets tied to their group.

pub mod approximation;
pub mod catalog;
pub mod error;
pub mod exec;
pub mod group;
pub mod group_file;
pub mod homomorphism;
pub mod perm;
pub mod quotient;
pub mod set;
pub mod subsets;
pub mod verifier;

pub use approximation::{ApproximationSpace, RoughClassification, RoughPair, RoughPairReport};
pub use catalog::{builtin_group, direct_product, standard_corpus, Builtin};
pub use error::{Axiom, Error, Result};
pub use exec::Execution;
pub use group::{FiniteGroup, GroupElement};
pub use homomorphism::{find_isomorphism, make_hom, GroupHom};
pub use perm::Permutation;
pub use quotient::{CosetPartition, QuotientGroup};
pub use set::ElementSet;
pub use subsets::Subgroup;
