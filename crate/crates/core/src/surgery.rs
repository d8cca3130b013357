//! Connected sums at circular orbits, and the splitting of a weight system
//! into a manifold part plus simple pieces.
//!
//! Removing an invariant tube around a circular orbit leaves an `S²×S¹`
//! boundary; two such boundaries with the same isotropy glue equivariantly.
//! On orbit spaces this cuts a small half-disk out of a boundary component of
//! each summand and joins the two cut boundaries into one.

use std::fmt;

use crate::equivalence::{canonical_cycle, ensure_legal};
use crate::error::{Error, Result};
use crate::weights::{det_pair_i64, validate, CycleEntry, FixedCycle, Pair, WeightSystem};

/// A circular orbit chosen for a connected sum: a whole boundary circle of
/// circular orbits, or an arc of a fixed cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleSelection {
    Circle(usize),
    Arc { cycle: usize, arc: usize },
}

impl fmt::Display for CircleSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CircleSelection::Circle(i) => write!(f, "circle {i}"),
            CircleSelection::Arc { cycle, arc } => write!(f, "cycle {cycle} arc {arc}"),
        }
    }
}

/// Isotropy pair of the orbits picked out by `sel`.
pub fn selected_pair(w: &WeightSystem, sel: CircleSelection) -> Result<Pair> {
    let found = match sel {
        CircleSelection::Circle(i) => w.circle_boundaries.get(i).copied(),
        CircleSelection::Arc { cycle, arc } => {
            w.fixed_cycles.get(cycle).and_then(|c| c.entries().get(arc)).map(|e| e.pair)
        }
    };
    found.ok_or_else(|| Error::InvalidSelection(sel.to_string()))
}

/// Joins two fixed cycles at arc `a` of `first` and arc `b` of `second`.
///
/// The result runs once around `first` starting at arc `a`, enters `second`
/// through a second copy of arc `a`, and runs around `second` back to the
/// start. Both copies keep the representative of `first`'s arc, so only the
/// two determinants where `second` attaches are recomputed.
fn splice(first: &FixedCycle, a: usize, second: &FixedCycle, b: usize) -> Result<FixedCycle> {
    let head = first.rotated(a);
    let tail = second.rotated(b);
    let joint = head.entries()[0].pair;
    let tail_entries = &tail.entries()[1..];
    let (Some(enter), Some(leave)) = (tail_entries.first(), tail_entries.last()) else {
        return Err(Error::IllegalJunction(joint.to_string(), tail.entries()[0].pair.to_string()));
    };

    let f_enter = det_pair_i64(joint, enter.pair)?;
    let f_leave = det_pair_i64(leave.pair, joint)?;
    if f_enter == 0 {
        return Err(Error::IllegalJunction(joint.to_string(), enter.pair.to_string()));
    }
    if f_leave == 0 {
        return Err(Error::IllegalJunction(leave.pair.to_string(), joint.to_string()));
    }

    let mut entries: Vec<CycleEntry> = head.entries().to_vec();
    entries.push(CycleEntry::new(joint, f_enter));
    entries.extend_from_slice(tail_entries);
    entries.last_mut().expect("tail is nonempty").f = f_leave;
    Ok(FixedCycle::new(entries))
}

fn without<T: Clone>(items: &[T], skip: usize) -> Vec<T> {
    items
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != skip)
        .map(|(_, x)| x.clone())
        .collect()
}

/// Connected sum of `w1` and `w2` along the circular orbits `sel1`, `sel2`.
///
/// Components not touched by the selections are carried over, `w1`'s first.
/// The merged component keeps `w1`'s position when it stays in the same list;
/// a circle of `w1` absorbed into a cycle of `w2` is removed, and that cycle
/// follows `w1`'s cycles.
pub fn c_connected_sum(
    w1: &WeightSystem,
    sel1: CircleSelection,
    w2: &WeightSystem,
    sel2: CircleSelection,
) -> Result<WeightSystem> {
    ensure_legal(w1)?;
    ensure_legal(w2)?;
    let p1 = selected_pair(w1, sel1)?;
    let p2 = selected_pair(w2, sel2)?;
    if !p1.same_subgroup(&p2) {
        return Err(Error::IsotropyMismatch(p1.to_string(), p2.to_string()));
    }
    if w1.orientation != w2.orientation {
        return Err(Error::OrientationMismatch);
    }

    let add = |x: i64, y: i64| x.checked_add(y).ok_or(Error::Overflow("connected sum"));
    let genus = add(w1.genus, w2.genus)?;
    let obstruction = (add(w1.obstruction.0, w2.obstruction.0)?, add(w1.obstruction.1, w2.obstruction.1)?);

    let (circle_boundaries, fixed_cycles) = match (sel1, sel2) {
        (CircleSelection::Circle(_), CircleSelection::Circle(j)) => {
            let mut circles = w1.circle_boundaries.clone();
            circles.extend(without(&w2.circle_boundaries, j));
            let mut cycles = w1.fixed_cycles.clone();
            cycles.extend(w2.fixed_cycles.iter().cloned());
            (circles, cycles)
        }
        (CircleSelection::Circle(i), CircleSelection::Arc { .. }) => {
            let mut circles = without(&w1.circle_boundaries, i);
            circles.extend(w2.circle_boundaries.iter().copied());
            let mut cycles = w1.fixed_cycles.clone();
            cycles.extend(w2.fixed_cycles.iter().cloned());
            (circles, cycles)
        }
        (CircleSelection::Arc { .. }, CircleSelection::Circle(j)) => {
            let mut circles = w1.circle_boundaries.clone();
            circles.extend(without(&w2.circle_boundaries, j));
            let mut cycles = w1.fixed_cycles.clone();
            cycles.extend(w2.fixed_cycles.iter().cloned());
            (circles, cycles)
        }
        (CircleSelection::Arc { cycle: c1, arc: a1 }, CircleSelection::Arc { cycle: c2, arc: a2 }) => {
            let mut circles = w1.circle_boundaries.clone();
            circles.extend(w2.circle_boundaries.iter().copied());
            let mut cycles = w1.fixed_cycles.clone();
            cycles[c1] = splice(&w1.fixed_cycles[c1], a1, &w2.fixed_cycles[c2], a2)?;
            cycles.extend(without(&w2.fixed_cycles, c2));
            (circles, cycles)
        }
    };

    let mut exceptional = w1.exceptional.clone();
    exceptional.extend(w2.exceptional.iter().copied());

    let sum = WeightSystem {
        obstruction,
        orientation: w1.orientation,
        genus,
        circle_boundaries,
        fixed_cycles,
        exceptional,
    };
    debug_assert!(validate(&sum).is_legal(), "connected sum produced {sum}");
    Ok(sum)
}

/// True when the orbit space is a disk with one fixed cycle on its boundary
/// and no exceptional orbits.
pub fn is_simple(w: &WeightSystem) -> Result<bool> {
    ensure_legal(w)?;
    Ok(w.genus == 0 && w.obstruction == (0, 0) && w.s() == 0 && w.t() == 1 && w.k() == 0)
}

/// How simple piece `i` attaches to the manifold part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub manifold: CircleSelection,
    pub piece: CircleSelection,
}

/// A manifold part (every fixed point regular) and simple pieces, with
/// `gluings[i]` attaching `simple_pieces[i]`. Selections into the manifold
/// part index it as stored, before any gluing happens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub manifold_part: WeightSystem,
    pub simple_pieces: Vec<WeightSystem>,
    pub gluings: Vec<Gluing>,
}

/// Splits `w` into a manifold part and one simple piece per fixed cycle that
/// carries a singular fixed point.
///
/// Each such cycle is canonicalized, becomes the boundary of a simple piece,
/// and is replaced in the manifold part by a circle of circular orbits with
/// the isotropy of the canonical cycle's first arc. With `q` pieces the
/// manifold part has `s + q` circles and `t − q` fixed cycles.
pub fn decompose(w: &WeightSystem) -> Result<Decomposition> {
    ensure_legal(w)?;
    let mut manifold_part = WeightSystem {
        obstruction: w.obstruction,
        orientation: w.orientation,
        genus: w.genus,
        circle_boundaries: w.circle_boundaries.clone(),
        fixed_cycles: Vec::new(),
        exceptional: w.exceptional.clone(),
    };
    let mut simple_pieces = Vec::new();
    let mut gluings = Vec::new();
    for cycle in &w.fixed_cycles {
        if !cycle.has_singular_point() {
            manifold_part.fixed_cycles.push(cycle.clone());
            continue;
        }
        let canon = canonical_cycle(cycle)?;
        gluings.push(Gluing {
            manifold: CircleSelection::Circle(manifold_part.circle_boundaries.len()),
            piece: CircleSelection::Arc { cycle: 0, arc: 0 },
        });
        manifold_part.circle_boundaries.push(canon.entries()[0].pair);
        simple_pieces.push(WeightSystem::disk(w.orientation, canon));
    }
    Ok(Decomposition { manifold_part, simple_pieces, gluings })
}

/// Glues the pieces of `d` back onto its manifold part.
pub fn reassemble(d: &Decomposition) -> Result<WeightSystem> {
    if d.gluings.len() != d.simple_pieces.len() {
        return Err(Error::InvalidSelection(format!(
            "{} gluings for {} pieces",
            d.gluings.len(),
            d.simple_pieces.len()
        )));
    }
    let mut current = d.manifold_part.clone();
    // where each original circle / cycle of the manifold part sits now
    let mut circle_at: Vec<Option<usize>> = (0..current.s()).map(Some).collect();
    let mut cycle_spliced = vec![false; current.t()];

    for (gluing, piece) in d.gluings.iter().zip(&d.simple_pieces) {
        let stale = || Error::InvalidSelection(gluing.manifold.to_string());
        let sel = match gluing.manifold {
            CircleSelection::Circle(i) => {
                CircleSelection::Circle(circle_at.get(i).copied().flatten().ok_or_else(stale)?)
            }
            CircleSelection::Arc { cycle, arc } => {
                if cycle_spliced.get(cycle).copied().unwrap_or(true) {
                    return Err(stale());
                }
                CircleSelection::Arc { cycle, arc }
            }
        };
        current = c_connected_sum(&current, sel, piece, gluing.piece)?;
        match (sel, gluing.piece) {
            (CircleSelection::Circle(removed), CircleSelection::Arc { .. }) => {
                for slot in circle_at.iter_mut() {
                    *slot = match *slot {
                        Some(j) if j == removed => None,
                        Some(j) if j > removed => Some(j - 1),
                        other => other,
                    };
                }
            }
            (CircleSelection::Arc { cycle, .. }, CircleSelection::Arc { .. }) => {
                cycle_spliced[cycle] = true;
            }
            _ => {}
        }
    }
    Ok(current)
}
