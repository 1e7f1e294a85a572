//! Finite-dimensional simple Lie superalgebras built from generalized root
//! systems with isotropic roots.
//!
//! The crate realizes each irreducible generalized root system (GRS) of the
//! classical families A(m,n), B(m,n), C(n), D(m,n), D(2,1;a), F(4) and G(3)
//! in explicit coordinates, builds Chevalley-type generators `e_i`, `f_i`,
//! `h_i` acting on a vector superspace `M`, and generates the Lie
//! superalgebra they span inside `gl(M)`. Everything is computed over ℚ —
//! there is no floating point anywhere.
//!
//! Main entry points:
//!
//! - [`catalog::FamilySpec`] and [`catalog::build`] construct a [`system::GrsSystem`];
//! - [`system::GrsSystem::check_axioms`] validates the GRS axioms;
//! - [`operators`] builds the generators and the involution `ω` as exact
//!   sparse matrices;
//! - [`superalgebra::generate`] closes the generators under the super
//!   commutator and exposes root-space / triangular decompositions,
//!   structure constants, ideals and simplicity;
//! - [`verify`] re-checks the combinatorial and algebraic identities the
//!   construction relies on, instance by instance, and reports witnesses
//!   for any failure;
//! - [`quiver`] lays out the positive system by height and emits DOT.

pub mod catalog;
mod error;
pub mod export;
pub mod linalg;
pub mod operators;
pub mod quiver;
pub mod rational;
pub mod root;
pub mod space;
pub mod superalgebra;
pub mod superspace;
pub mod system;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rat;
