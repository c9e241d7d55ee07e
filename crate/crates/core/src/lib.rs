//! Exact combinatorics for simple polynomial functors on the category Ver4+ in
//! characteristic 2, together with a symbolic kernel for its commutative
//! algebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`partitions`]: 2-restricted partitions, rims, 4-segment removal.
//! * [`weights`]: GL(P) labels, odd reflections and Borel-change chains.
//! * [`mullineux`]: the map `λ ↦ M(λ)` by rim removal and by reflections.
//! * [`functors`]: functor labels, evaluation on `m𝟙 + nP`, discerning and
//!   faithful predicates, additive/exact catalogs, super vector space bounds.
//! * [`delta`]: twisted-commutative algebras over F₂ with derivation δ,
//!   determinants, the coproducts on `k[End(X)]`, primitives, Frobenius data.
//! * [`linalg`]: dense linear algebra over F₂.

pub mod delta;
pub mod error;
pub mod functors;
pub mod linalg;
pub mod mullineux;
pub mod partitions;
pub mod weights;

pub use error::{Error, Result};
pub use functors::{EvalResult, FunctorLabel, Ver4Object};
pub use mullineux::MSequence;
pub use partitions::{NodeSet, Partition};
pub use weights::{GlpLabel, ReflectionTable, Weight};
