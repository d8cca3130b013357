use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::weights::system::WeightSystem;

/// Orbit types of an effective torus action on an Alexandrov 4-space.
///
/// | type | isotropy          | orbit space                 |
/// |------|-------------------|-----------------------------|
/// | P    | trivial           | interior point              |
/// | E    | finite cyclic     | isolated interior point     |
/// | C    | circle `G(m,n)`   | open boundary arc or circle |
/// | RF   | `T²`, `|f| = 1`   | boundary point, slice `S³`  |
/// | SF   | `T²`, `|f| ≥ 2`   | boundary point, lens slice  |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitType {
    P,
    E,
    C,
    RF,
    SF,
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitType::P => "P",
            OrbitType::E => "E",
            OrbitType::C => "C",
            OrbitType::RF => "RF",
            OrbitType::SF => "SF",
        })
    }
}

pub fn classify_fixed_point(f: i64) -> Result<OrbitType> {
    match f.unsigned_abs() {
        0 => Err(Error::IllegalDeterminant),
        1 => Ok(OrbitType::RF),
        _ => Ok(OrbitType::SF),
    }
}

/// Orbit types present in a space with this weight system. Principal orbits
/// always occur; arcs between fixed points are circular orbits.
pub fn orbit_types(w: &WeightSystem) -> Result<BTreeSet<OrbitType>> {
    let mut types = BTreeSet::from([OrbitType::P]);
    if w.k() > 0 {
        types.insert(OrbitType::E);
    }
    if w.boundary_components() > 0 {
        types.insert(OrbitType::C);
    }
    for c in &w.fixed_cycles {
        for f in c.f_values() {
            types.insert(classify_fixed_point(f)?);
        }
    }
    Ok(types)
}
