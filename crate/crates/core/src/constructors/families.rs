use num_integer::Integer;

use crate::error::{Error, Result};
use crate::weights::{det_pair, FixedCycle, Orientation, Pair, WeightSystem};

/// Suspension of the lens space whose torus action has isotropies `first`
/// and `second`: a disk with two fixed points and the cycle
/// `[(first, r), (second, −r)]`, `r = det(first, second)`.
pub fn suspension_of_lens(first: Pair, second: Pair, orientation: Orientation) -> Result<WeightSystem> {
    for p in [first, second] {
        if !p.is_coprime() {
            return Err(Error::NotCoprime(p.m, p.n));
        }
    }
    if det_pair(first, second) == 0 {
        return Err(Error::IllegalDeterminant);
    }
    Ok(WeightSystem::disk(orientation, FixedCycle::from_pairs(&[first, second])?))
}

/// Search order for a free integer: 0, 1, −1, 2, −2, …
fn centered(bound: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k]))
}

/// Torus action on the weighted projective space `WP(r₁, r₂, r₃)`: a disk
/// with three fixed points and cycle `[(m₁,n₁), r₂, (m₂,n₂), −r₃, (m₃,n₃), r₁]`.
///
/// The pairs solve `m₁n₂ − m₂n₁ = r₂`, `m₂n₃ − m₃n₂ = −r₃`,
/// `m₃n₁ − m₁n₃ = r₁` with `(m₁,n₁) = (1,0)`, which forces `n₂ = r₂` and
/// `n₃ = −r₁`. The search scans `m₂` in the order 0, 1, −1, 2, … with all
/// entries bounded by `4·max(rᵢ)` and returns the first solution.
pub fn weighted_projective(r1: i64, r2: i64, r3: i64) -> Result<WeightSystem> {
    let rs = [r1, r2, r3];
    if rs.iter().any(|&r| r <= 0) {
        return Err(Error::IllegalParameters(format!("weights {rs:?} must be positive")));
    }
    for (i, j) in [(0, 1), (1, 2), (0, 2)] {
        if rs[i].gcd(&rs[j]) != 1 {
            return Err(Error::IllegalParameters(format!("weights {rs:?} are not pairwise coprime")));
        }
    }
    let bound = rs
        .iter()
        .max()
        .and_then(|m| m.checked_mul(4))
        .ok_or(Error::Overflow("search bound"))?;

    let first = Pair::new(1, 0);
    let n2 = r2;
    let n3 = -r1;
    for m2 in centered(bound) {
        let numerator = r3 as i128 - m2 as i128 * r1 as i128;
        if numerator % r2 as i128 != 0 {
            continue;
        }
        let m3 = numerator / r2 as i128;
        if m3.abs() > bound as i128 {
            continue;
        }
        let second = Pair::new(m2, n2);
        let third = Pair::new(m3 as i64, n3);
        if !second.is_coprime() || !third.is_coprime() {
            continue;
        }
        if det_pair(first, second) == r2 as i128
            && det_pair(second, third) == -(r3 as i128)
            && det_pair(third, first) == r1 as i128
        {
            let cycle = FixedCycle::from_pairs(&[first, second, third])?;
            return Ok(WeightSystem::disk(Orientation::Positive, cycle));
        }
    }
    Err(Error::NoSolutionInBound(bound))
}
