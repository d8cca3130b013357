//! Exact combinatorics of effective torus actions on closed orientable
//! Alexandrov 4-spaces.
//!
//! Such an action is determined up to equivariant homeomorphism by its
//! weighted orbit space, recorded here as a [`WeightSystem`]: an obstruction
//! pair, an orientation, the genus of the orbit surface, boundary circles of
//! circular orbits, boundary cycles of fixed points with their determinants,
//! and Seifert invariants of exceptional orbits.
//!
//! * [`weights`]: the tuple, orbit types and legality checks
//! * [`localmodels`]: lens spaces at fixed points and their gluing matrices
//! * [`equivalence`]: canonical forms and the isomorphism decision
//! * [`surgery`]: connected sums at circular orbits and the splitting into a
//!   manifold part plus simple pieces
//! * [`constructors`]: example families and a bounded census
//! * [`document`]: the JSON interchange format

pub mod constructors;
pub mod document;
pub mod equivalence;
pub mod error;
pub mod localmodels;
pub mod par;
pub mod surgery;
pub mod weights;

pub use equivalence::{canonical_form, is_isomorphic, CanonicalForm, EquivalenceMode};
pub use error::{Error, Result};
pub use weights::{validate, FixedCycle, OrbitType, Orientation, Pair, ValidationReport, WeightSystem};
