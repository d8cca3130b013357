//! Example families and a bounded census of legal weight systems.

mod census;
mod families;

pub use census::{enumerate_legal, isotropy_subgroups, EnumerationBounds};
pub use families::{suspension_of_lens, weighted_projective};
