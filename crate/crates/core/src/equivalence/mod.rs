//! Canonical forms of weight systems and the isomorphism decision.
//!
//! Two weight systems describe equivariantly homeomorphic spaces exactly when
//! their weighted orbit spaces are isomorphic: an orientation- and
//! weight-preserving homeomorphism between them. On invariant tuples that
//! means equality after forgetting the order of boundary components and
//! exceptional orbits, the starting point of each fixed cycle, and the sign
//! representative chosen for each isotropy pair ([`EquivalenceMode::Strict`]).
//!
//! [`EquivalenceMode::Weak`] also forgets the parametrization of the torus
//! (`GL(2,Z)` acting on every pair at once) and the orientation of the orbit
//! space.
//!
//! Cycles are compared up to rotation only. Reading a cycle backwards reverses
//! the boundary orientation induced by `ε`, so reflection enters only through
//! [`reverse_orientation`].

mod cycle;
mod transform;
mod weak;

use std::fmt;
use std::str::FromStr;

pub use cycle::{canonical_cycle, sign_product};
pub use transform::{apply_basis_change, reverse_orientation, reverse_seifert, BasisChange};
pub use weak::{candidates as weak_candidates, MAX_RESIDUE_MODULUS, MAX_SHEAR_PERIOD};

use crate::error::{Error, Result};
use crate::par;
use crate::weights::{validate, FiniteIsotropyInvariant, FixedCycle, IsotropyPair, Orientation, WeightSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum EquivalenceMode {
    #[default]
    Strict,
    Weak,
}

impl FromStr for EquivalenceMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "strict" => Ok(EquivalenceMode::Strict),
            "weak" => Ok(EquivalenceMode::Weak),
            other => Err(format!("unknown mode `{other}` (expected strict or weak)")),
        }
    }
}

impl fmt::Display for EquivalenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceMode::Strict => "strict",
            EquivalenceMode::Weak => "weak",
        })
    }
}

/// A weight system with every presentational choice fixed. Equal forms
/// (for the same mode) means isomorphic systems. Ordered field by field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub orientation: Orientation,
    pub obstruction: (i64, i64),
    pub genus: i64,
    pub circles: Vec<IsotropyPair>,
    pub cycles: Vec<FixedCycle>,
    pub exceptional: Vec<FiniteIsotropyInvariant>,
}

impl CanonicalForm {
    pub fn to_weight_system(&self) -> WeightSystem {
        WeightSystem {
            obstruction: self.obstruction,
            orientation: self.orientation,
            genus: self.genus,
            circle_boundaries: self.circles.iter().map(IsotropyPair::pair).collect(),
            fixed_cycles: self.cycles.clone(),
            exceptional: self.exceptional.clone(),
        }
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_weight_system().fmt(f)
    }
}

/// Maps the first system of a weak comparison onto the second: reverse the
/// orientation if `reversed`, then apply `change`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Witness {
    pub reversed: bool,
    pub change: BasisChange,
}

impl Witness {
    pub fn apply(&self, w: &WeightSystem) -> Result<WeightSystem> {
        let base = if self.reversed { reverse_orientation(w)? } else { w.clone() };
        apply_basis_change(&base, &self.change)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "orientation {}, basis change {}",
            if self.reversed { "reversed" } else { "kept" },
            self.change
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub isomorphic: bool,
    pub witness: Option<Witness>,
}

pub(crate) fn ensure_legal(w: &WeightSystem) -> Result<()> {
    let report = validate(w);
    if report.is_legal() {
        Ok(())
    } else {
        Err(Error::IllegalWeightSystem(report))
    }
}

fn strict_form(w: &WeightSystem) -> Result<CanonicalForm> {
    let mut circles = w
        .circle_boundaries
        .iter()
        .map(|p| p.isotropy())
        .collect::<Result<Vec<_>>>()?;
    circles.sort_unstable();
    let mut cycles = w.fixed_cycles.iter().map(canonical_cycle).collect::<Result<Vec<_>>>()?;
    cycles.sort_unstable();
    let mut exceptional = w.exceptional.clone();
    exceptional.sort_unstable();
    Ok(CanonicalForm {
        orientation: w.orientation,
        obstruction: w.obstruction,
        genus: w.genus,
        circles,
        cycles,
        exceptional,
    })
}

type Candidate = (CanonicalForm, bool, BasisChange);

fn weak_form(w: &WeightSystem) -> Result<Candidate> {
    let mut best: Option<Candidate> = None;
    for reversed in [false, true] {
        let base = if reversed { reverse_orientation(w)? } else { w.clone() };
        let changes = weak_candidates(&base)?;
        let forms = par::map(&changes, |a| {
            apply_basis_change(&base, a).and_then(|moved| strict_form(&moved)).map(|f| (f, reversed, *a))
        });
        for cand in forms {
            let cand = cand?;
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    Ok(best.expect("candidate set always contains at least one matrix"))
}

/// Canonical form of a legal weight system.
pub fn canonical_form(w: &WeightSystem, mode: EquivalenceMode) -> Result<CanonicalForm> {
    ensure_legal(w)?;
    match mode {
        EquivalenceMode::Strict => strict_form(w),
        EquivalenceMode::Weak => weak_form(w).map(|(form, _, _)| form),
    }
}

/// Decides whether two legal weight systems are isomorphic. In weak mode a
/// positive verdict carries a [`Witness`] taking `w1` to a strict copy of `w2`.
pub fn is_isomorphic(w1: &WeightSystem, w2: &WeightSystem, mode: EquivalenceMode) -> Result<Verdict> {
    ensure_legal(w1)?;
    ensure_legal(w2)?;
    match mode {
        EquivalenceMode::Strict => Ok(Verdict { isomorphic: strict_form(w1)? == strict_form(w2)?, witness: None }),
        EquivalenceMode::Weak => {
            let (f1, rev1, a1) = weak_form(w1)?;
            let (f2, rev2, a2) = weak_form(w2)?;
            if f1 != f2 {
                return Ok(Verdict { isomorphic: false, witness: None });
            }
            // Reversal commutes with basis changes, so w2 ≅ A2⁻¹·A1·(R1R2)·w1.
            let witness = Witness { reversed: rev1 != rev2, change: a2.inverse()?.compose(&a1)? };
            let witness = match witness.apply(w1).and_then(|moved| strict_form(&moved)) {
                Ok(moved) if moved == strict_form(w2)? => Some(witness),
                _ => None,
            };
            Ok(Verdict { isomorphic: true, witness })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{CycleEntry, Pair};

    fn suspension(a: (i64, i64), b: (i64, i64)) -> WeightSystem {
        WeightSystem::disk(Orientation::Positive, FixedCycle::from_pairs(&[a.into(), b.into()]).unwrap())
    }

    fn cycle(pairs: &[(i64, i64)]) -> FixedCycle {
        let pairs: Vec<Pair> = pairs.iter().map(|&p| p.into()).collect();
        FixedCycle::from_pairs(&pairs).unwrap()
    }

    #[test]
    fn strict_ignores_starting_point() {
        let a = suspension((1, 0), (2, 5));
        let b = suspension((2, 5), (1, 0));
        assert_eq!(
            canonical_form(&a, EquivalenceMode::Strict).unwrap(),
            canonical_form(&b, EquivalenceMode::Strict).unwrap()
        );
    }

    #[test]
    fn strict_ignores_sign_representatives() {
        let a = suspension((1, 0), (2, 5));
        let mut b = a.clone();
        b.fixed_cycles[0] = b.fixed_cycles[0].with_sign_flipped(1).unwrap();
        b.circle_boundaries.push(Pair::new(-1, -3));
        let mut a = a;
        a.circle_boundaries.push(Pair::new(1, 3));
        assert!(is_isomorphic(&a, &b, EquivalenceMode::Strict).unwrap().isomorphic);
    }

    #[test]
    fn finer_than_local_models() {
        let a = suspension((1, 0), (2, 5));
        let b = suspension((1, 0), (3, 5));
        assert!(!is_isomorphic(&a, &b, EquivalenceMode::Strict).unwrap().isomorphic);
    }

    #[test]
    fn shear_is_weakly_trivial() {
        // [[1,1],[0,1]] sends (1,0),(2,5) to (1,0),(7,5).
        let a = suspension((1, 0), (2, 5));
        let shear = BasisChange::new([[1, 1], [0, 1]]).unwrap();
        let b = apply_basis_change(&a, &shear).unwrap();
        assert_eq!(b, suspension((1, 0), (7, 5)));
        assert_ne!(
            canonical_form(&a, EquivalenceMode::Strict).unwrap(),
            canonical_form(&b, EquivalenceMode::Strict).unwrap()
        );
        assert_eq!(
            canonical_form(&a, EquivalenceMode::Weak).unwrap(),
            canonical_form(&b, EquivalenceMode::Weak).unwrap()
        );
        let verdict = is_isomorphic(&a, &b, EquivalenceMode::Weak).unwrap();
        assert!(verdict.isomorphic);
        let witness = verdict.witness.unwrap();
        assert_eq!(
            canonical_form(&witness.apply(&a).unwrap(), EquivalenceMode::Strict).unwrap(),
            canonical_form(&b, EquivalenceMode::Strict).unwrap()
        );
    }

    #[test]
    fn orientation_reversal_is_weak_only() {
        let w = WeightSystem::disk(Orientation::Positive, cycle(&[(1, 0), (1, 2), (-1, 3)]));
        let rev = reverse_orientation(&w).unwrap();
        assert!(!is_isomorphic(&w, &rev, EquivalenceMode::Strict).unwrap().isomorphic);
        let verdict = is_isomorphic(&w, &rev, EquivalenceMode::Weak).unwrap();
        assert!(verdict.isomorphic);
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn reversed_suspension() {
        // Reversal lists (m,n) first; the determinants stay det of adjacent pairs.
        let w = suspension((1, 0), (2, 5));
        let rev = reverse_orientation(&w).unwrap();
        assert_eq!(
            rev.fixed_cycles[0].entries(),
            &[CycleEntry::new(Pair::new(2, 5), -5), CycleEntry::new(Pair::new(1, 0), 5)]
        );
        let mut expected = suspension((2, 5), (1, 0));
        expected.orientation = Orientation::Negative;
        assert_eq!(
            canonical_form(&rev, EquivalenceMode::Strict).unwrap(),
            canonical_form(&expected, EquivalenceMode::Strict).unwrap()
        );
    }

    #[test]
    fn closed_systems_compare_by_obstruction_gcd() {
        let a = WeightSystem::closed((4, 6), Orientation::Positive, 1);
        let b = WeightSystem::closed((2, 0), Orientation::Positive, 1);
        let c = WeightSystem::closed((3, 0), Orientation::Positive, 1);
        assert!(is_isomorphic(&a, &b, EquivalenceMode::Weak).unwrap().isomorphic);
        assert!(!is_isomorphic(&a, &c, EquivalenceMode::Weak).unwrap().isomorphic);
        assert!(!is_isomorphic(&a, &b, EquivalenceMode::Strict).unwrap().isomorphic);
    }

    #[test]
    fn exceptional_only_systems() {
        let mut a = WeightSystem::closed((0, 0), Orientation::Positive, 0);
        a.exceptional = vec![FiniteIsotropyInvariant::new(3, 1, 0), FiniteIsotropyInvariant::new(2, 1, 1)];
        let change = BasisChange::new([[2, 1], [1, 1]]).unwrap();
        let b = apply_basis_change(&a, &change).unwrap();
        let verdict = is_isomorphic(&a, &b, EquivalenceMode::Weak).unwrap();
        assert!(verdict.isomorphic);
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn illegal_input_is_an_error() {
        let mut w = suspension((1, 0), (2, 5));
        w.genus = -1;
        assert!(matches!(canonical_form(&w, EquivalenceMode::Strict), Err(Error::IllegalWeightSystem(_))));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("weak".parse::<EquivalenceMode>(), Ok(EquivalenceMode::Weak));
        assert_eq!("STRICT".parse::<EquivalenceMode>(), Ok(EquivalenceMode::Strict));
        assert!("loose".parse::<EquivalenceMode>().is_err());
    }
}
