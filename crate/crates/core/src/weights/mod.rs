//! Invariant tuples of weighted orbit spaces and their legality rules.

mod orbit;
mod pair;
mod system;
mod validate;

pub use orbit::{classify_fixed_point, orbit_types, OrbitType};
pub use pair::{det_pair, det_pair_i64, make_pair, IsotropyPair, Pair};
pub use system::{CycleEntry, FiniteIsotropyInvariant, FixedCycle, Orientation, WeightSystem};
pub use validate::{validate, Location, Rule, ValidationReport, Violation};
