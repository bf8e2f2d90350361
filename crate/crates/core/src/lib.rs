//! Desk-scale computational group theory for pronormality questions.
//!
//! Every group is a permutation group ([`perm::PermGroup`]) with a lazily
//! built stabilizer chain. Matrix groups over prime fields are converted to
//! permutations through their action on vectors or on projective points.
//! The [`pronormal`] module holds the checkers, and [`scenarios`] binds them
//! to concrete groups with machine-readable reports.

pub mod algebra;
pub mod constructors;
pub mod perm;
pub mod pronormal;
pub mod scenarios;
