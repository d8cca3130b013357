use std::sync::Arc;

use itertools::Itertools;
use num_integer::Integer;

use crate::equivalence::canonical_cycle;
use crate::error::{Error, Result};
use crate::weights::{FiniteIsotropyInvariant, FixedCycle, IsotropyPair, Orientation, Pair, WeightSystem};

/// Limits for [`enumerate_legal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumerationBounds {
    pub max_genus: i64,
    /// Boundary circles made only of circular orbits.
    pub max_circles: usize,
    pub max_cycles: usize,
    pub max_cycle_length: usize,
    /// Bound on `|m|`, `|n|` of every isotropy pair and on `|b₁|`, `|b₂|`.
    pub max_weight_entry: i64,
    pub max_exceptional: usize,
    pub max_alpha: i64,
    /// Bound on the total number of fixed points, if any.
    pub max_fixed_points: Option<usize>,
}

impl Default for EnumerationBounds {
    fn default() -> Self {
        EnumerationBounds {
            max_genus: 0,
            max_circles: 0,
            max_cycles: 1,
            max_cycle_length: 2,
            max_weight_entry: 1,
            max_exceptional: 0,
            max_alpha: 2,
            max_fixed_points: None,
        }
    }
}

impl EnumerationBounds {
    pub fn check(&self) -> Result<()> {
        if self.max_genus < 0 || self.max_weight_entry < 0 || self.max_alpha < 0 {
            return Err(Error::IllegalParameters("bounds must be nonnegative".into()));
        }
        if self.max_cycles > 0 && self.max_cycle_length < 2 {
            return Err(Error::IllegalParameters("max_cycle_length must be at least 2 when cycles are allowed".into()));
        }
        if self.max_weight_entry == 0 && (self.max_cycles > 0 || self.max_circles > 0) {
            return Err(Error::IllegalParameters("isotropy pairs need max_weight_entry >= 1".into()));
        }
        Ok(())
    }
}

/// Circle subgroups `G(m,n)` with `|m|, |n| ≤ bound`, canonical representatives,
/// ascending.
pub fn isotropy_subgroups(bound: i64) -> Vec<IsotropyPair> {
    (0..=bound)
        .flat_map(|m| (-bound..=bound).map(move |n| (m, n)))
        .filter_map(|(m, n)| {
            let iso = crate::weights::make_pair(m, n).ok()?;
            (iso.pair() == Pair::new(m, n)).then_some(iso)
        })
        .collect()
}

/// True when `seq` is the lexicographically smallest of its rotations.
fn is_necklace_representative(seq: &[usize]) -> bool {
    let r = seq.len();
    (1..r).all(|k| {
        let rotated = seq[k..].iter().chain(&seq[..k]);
        seq.iter().cmp(rotated) != std::cmp::Ordering::Greater
    })
}

/// One canonical cycle per rotation class of subgroup sequences with distinct
/// neighbours. Sign flips reach every choice of representatives, so these
/// are exactly the strict classes of legal cycles. Sorted.
fn canonical_cycles(subgroups: &[IsotropyPair], max_len: usize) -> Result<Vec<FixedCycle>> {
    let k = subgroups.len();
    let mut out = Vec::new();
    for r in 2..=max_len {
        for seq in (0..r).map(|_| 0..k).multi_cartesian_product() {
            if (0..r).any(|w| seq[w] == seq[(w + 1) % r]) || !is_necklace_representative(&seq) {
                continue;
            }
            let pairs: Vec<Pair> = seq.iter().map(|&i| subgroups[i].pair()).collect();
            out.push(canonical_cycle(&FixedCycle::from_pairs(&pairs)?)?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn seifert_invariants(max_alpha: i64) -> Vec<FiniteIsotropyInvariant> {
    (2..=max_alpha)
        .flat_map(|a| (0..a).flat_map(move |g1| (0..a).map(move |g2| FiniteIsotropyInvariant::new(a, g1, g2))))
        .filter(|inv| inv.alpha.gcd(&inv.gamma1).gcd(&inv.gamma2) == 1)
        .collect()
}

/// Sorted multisets of size `0..=max_size` drawn from a sorted list.
fn multisets<T: Clone>(items: &[T], max_size: usize) -> Vec<Vec<T>> {
    (0..=max_size)
        .flat_map(|size| {
            if size == 0 {
                vec![Vec::new()]
            } else {
                (0..items.len())
                    .combinations_with_replacement(size)
                    .map(|idx| idx.into_iter().map(|i| items[i].clone()).collect())
                    .collect()
            }
        })
        .collect()
}

struct Parts {
    bounds: EnumerationBounds,
    cycles: Vec<FixedCycle>,
    circle_sets: Vec<Vec<Pair>>,
    exceptional_sets: Vec<Vec<FiniteIsotropyInvariant>>,
}

impl Parts {
    /// Index multisets of cycles, lazily, honouring the fixed-point budget.
    fn cycle_sets(self: &Arc<Self>) -> impl Iterator<Item = Vec<FixedCycle>> {
        let parts = Arc::clone(self);
        let n = parts.cycles.len();
        (0..=parts.bounds.max_cycles).flat_map(move |t| {
            let parts = Arc::clone(&parts);
            let combos: Box<dyn Iterator<Item = Vec<usize>>> = if t == 0 {
                Box::new(std::iter::once(Vec::new()))
            } else {
                Box::new((0..n).combinations_with_replacement(t))
            };
            combos.filter_map(move |idx| {
                if let Some(budget) = parts.bounds.max_fixed_points {
                    let total: usize = idx.iter().map(|&i| parts.cycles[i].len()).sum();
                    if total > budget {
                        return None;
                    }
                }
                Some(idx.into_iter().map(|i| parts.cycles[i].clone()).collect())
            })
        })
    }
}

/// Every legal weight system within `bounds`, one per strict isomorphism
/// class, in a fixed order.
///
/// Each system is produced directly in canonical form (sorted components,
/// canonical cycles and circle representatives), so distinct outputs are
/// never isomorphic and no deduplication set is needed. Orientations `+1`
/// and `−1` are both listed; the obstruction ranges over
/// `|b₁|, |b₂| ≤ max_weight_entry` when the orbit space is closed.
pub fn enumerate_legal(bounds: &EnumerationBounds) -> Result<impl Iterator<Item = WeightSystem>> {
    bounds.check()?;
    let subgroups = isotropy_subgroups(bounds.max_weight_entry);
    let cycles = if bounds.max_cycles > 0 { canonical_cycles(&subgroups, bounds.max_cycle_length)? } else { Vec::new() };
    let circles: Vec<Pair> = subgroups.iter().map(IsotropyPair::pair).collect();
    let parts = Arc::new(Parts {
        bounds: *bounds,
        cycles,
        circle_sets: multisets(&circles, bounds.max_circles),
        exceptional_sets: multisets(&seifert_invariants(bounds.max_alpha), bounds.max_exceptional),
    });

    let b = bounds.max_weight_entry;
    let obstructions: Arc<Vec<(i64, i64)>> =
        Arc::new((-b..=b).flat_map(|b1| (-b..=b).map(move |b2| (b1, b2))).collect());

    let outer: Vec<(i64, Orientation, usize, usize)> = (0..=bounds.max_genus)
        .flat_map(|g| [Orientation::Positive, Orientation::Negative].map(|o| (g, o)))
        .cartesian_product(0..parts.exceptional_sets.len())
        .cartesian_product(0..parts.circle_sets.len())
        .map(|(((g, o), e), c)| (g, o, e, c))
        .collect();

    Ok(outer.into_iter().flat_map(move |(genus, orientation, e, c)| {
        let parts_inner = Arc::clone(&parts);
        let obstructions = Arc::clone(&obstructions);
        parts.cycle_sets().flat_map(move |fixed_cycles| {
            let circle_boundaries = parts_inner.circle_sets[c].clone();
            let exceptional = parts_inner.exceptional_sets[e].clone();
            let closed = circle_boundaries.is_empty() && fixed_cycles.is_empty();
            let obs: Vec<(i64, i64)> = if closed { obstructions.to_vec() } else { vec![(0, 0)] };
            obs.into_iter().map(move |obstruction| WeightSystem {
                obstruction,
                orientation,
                genus,
                circle_boundaries: circle_boundaries.clone(),
                fixed_cycles: fixed_cycles.clone(),
                exceptional: exceptional.clone(),
            })
        })
    }))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::equivalence::{canonical_form, EquivalenceMode};
    use crate::weights::{det_pair, validate};

    #[test]
    fn subgroups_with_small_entries() {
        assert_eq!(isotropy_subgroups(1).len(), 4); // (0,1), (1,-1), (1,0), (1,1)
        assert_eq!(isotropy_subgroups(3).len(), 16);
    }

    #[test]
    fn closed_only_census() {
        let bounds = EnumerationBounds {
            max_genus: 1,
            max_cycles: 0,
            max_weight_entry: 1,
            ..Default::default()
        };
        let all: Vec<WeightSystem> = enumerate_legal(&bounds).unwrap().collect();
        // (b₁, b₂) ∈ [-1,1]², ε = ±1, g ∈ {0, 1}
        assert_eq!(all.len(), 9 * 2 * 2);
        assert!(all.iter().all(WeightSystem::is_closed));
    }

    /// Independent count: ordered pairs of coprime vectors with entries in
    /// [-2, 2], nonzero determinant, up to sign of each vector and swapping.
    #[test]
    fn two_point_cycle_count_matches_double_loop() {
        let vectors: Vec<Pair> = (-2i64..=2)
            .flat_map(|m| (-2i64..=2).map(move |n| Pair::new(m, n)))
            .filter(Pair::is_coprime)
            .collect();
        let mut classes = HashSet::new();
        for &a in &vectors {
            for &b in &vectors {
                if det_pair(a, b) == 0 {
                    continue;
                }
                let (a, b) = (a.isotropy().unwrap(), b.isotropy().unwrap());
                classes.insert(if a < b { (a, b) } else { (b, a) });
            }
        }
        let bounds = EnumerationBounds { max_cycles: 1, max_cycle_length: 2, max_weight_entry: 2, ..Default::default() };
        let count = enumerate_legal(&bounds).unwrap().filter(|w| w.t() == 1).count();
        assert_eq!(count, classes.len() * 2);
    }

    #[test]
    fn census_is_legal_canonical_and_duplicate_free() {
        let bounds = EnumerationBounds {
            max_genus: 1,
            max_circles: 1,
            max_cycles: 2,
            max_cycle_length: 3,
            max_weight_entry: 1,
            max_exceptional: 1,
            max_alpha: 2,
            max_fixed_points: Some(4),
        };
        let all: Vec<WeightSystem> = enumerate_legal(&bounds).unwrap().collect();
        assert!(!all.is_empty());
        let mut seen = HashSet::new();
        for w in &all {
            assert!(validate(w).is_legal(), "{w}");
            let form = canonical_form(w, EquivalenceMode::Strict).unwrap();
            assert_eq!(&form.to_weight_system(), w);
            assert!(seen.insert(form), "duplicate {w}");
        }
        let again: Vec<WeightSystem> = enumerate_legal(&bounds).unwrap().collect();
        assert_eq!(all, again);
    }

    #[test]
    fn fixed_point_budget() {
        let bounds = EnumerationBounds {
            max_cycles: 2,
            max_cycle_length: 3,
            max_weight_entry: 1,
            max_fixed_points: Some(4),
            ..Default::default()
        };
        assert!(enumerate_legal(&bounds).unwrap().all(|w| w.fixed_point_count() <= 4));
    }

    #[test]
    fn rejects_bad_bounds() {
        let bounds = EnumerationBounds { max_cycles: 1, max_cycle_length: 1, ..Default::default() };
        assert!(enumerate_legal(&bounds).is_err());
    }
}
