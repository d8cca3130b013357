//! Finite candidate sets for minimizing over torus reparametrizations.
//!
//! `GL(2,Z)` is infinite, so the search is anchored. For every subgroup `P`
//! in the system (either sign) there is a matrix `A₀` with `A₀·P = (1,0)`;
//! the matrices doing the same are `S·A₀` with `S = [[1,t],[0,±1]]`. The shear
//! `t` is pinned by any other pair `Q` with `A₀·Q = (a,b)`, `b ≠ 0`: it is the
//! unique `t` putting `a + t·b` in `[0, |b|)`. Every choice is made from data
//! that moves along with the system, so the candidate set of `B·W` is the
//! candidate set of `W` times `B⁻¹`, and the minimum over it is an invariant.
//!
//! When no second direction exists the shear only acts on exceptional-orbit
//! data, which is periodic modulo `L = lcm(α)`. When the system has no pairs
//! and no obstruction at all, the search runs over the finite group of
//! residue matrices modulo `L` with determinant `±1`, lifted to `GL(2,Z)`.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::equivalence::transform::BasisChange;
use crate::error::{Error, Result};
use crate::localmodels::bezout_complement;
use crate::weights::{Pair, WeightSystem};

/// Largest `lcm(α)` for which shears are enumerated.
pub const MAX_SHEAR_PERIOD: i64 = 100_000;
/// Largest `lcm(α)` for which the residue-group search runs.
pub const MAX_RESIDUE_MODULUS: i64 = 60;

fn lcm_alpha(w: &WeightSystem) -> i64 {
    w.exceptional
        .iter()
        .map(|e| e.alpha.max(1))
        .fold(1i64, |acc, a| acc.lcm(&a))
}

/// Matrix with determinant 1 sending the primitive vector `v` to `(1, 0)`.
fn to_first_axis(v: Pair) -> Result<BasisChange> {
    let (p, q) = bezout_complement(v)?;
    // rows (−q, p), (−n, m): −q·m + p·n = 1
    BasisChange::new([[neg(q)?, p], [neg(v.n)?, v.m]])
}

fn neg(x: i64) -> Result<i64> {
    x.checked_neg().ok_or(Error::Overflow("basis search"))
}

fn distinct_directions(w: &WeightSystem) -> Result<Vec<Pair>> {
    let mut set = BTreeSet::new();
    for p in w.circle_boundaries.iter().copied().chain(w.fixed_cycles.iter().flat_map(|c| c.pairs())) {
        let iso = p.isotropy()?.pair();
        set.insert(iso);
        set.insert(iso.negate()?);
    }
    Ok(set.into_iter().collect())
}

fn shears(anchor: &BasisChange, others: &[Pair], period: i64) -> Result<Vec<i64>> {
    let mut ts = BTreeSet::new();
    for &q in others {
        let image = anchor.apply(q)?;
        if image.n == 0 {
            continue;
        }
        let (a, b) = (image.m as i128, image.n as i128);
        let t = (a.rem_euclid(b.abs()) - a) / b;
        ts.insert(i64::try_from(t).map_err(|_| Error::Overflow("basis search"))?);
    }
    if ts.is_empty() {
        if period > MAX_SHEAR_PERIOD {
            return Err(Error::IllegalParameters(format!(
                "lcm of exceptional orders {period} exceeds {MAX_SHEAR_PERIOD}"
            )));
        }
        ts.extend(0..period);
    }
    Ok(ts.into_iter().collect())
}

fn anchored(anchors: &[Pair], others: &[Pair], period: i64) -> Result<Vec<BasisChange>> {
    let mut out = BTreeSet::new();
    for &p in anchors {
        let a0 = to_first_axis(p)?;
        for t in shears(&a0, others, period)? {
            for e in [1, -1] {
                let s = BasisChange::new([[1, t], [0, e]])?;
                out.insert(s.compose(&a0)?);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Integer matrix with determinant `±1` reducing to `[[a,b],[c,d]]` mod `n`.
pub(crate) fn lift_residue(rows: [[i64; 2]; 2], n: i64) -> Result<BasisChange> {
    let [[a, b], [c, d]] = rows;
    let det = (a as i128 * d as i128 - b as i128 * c as i128).rem_euclid(n as i128);
    if n == 1 {
        return Ok(BasisChange::IDENTITY);
    }
    if det != 1 {
        if det != (n - 1) as i128 {
            return Err(Error::NotUnimodular(det));
        }
        // flip the second row, lift, flip back
        let lifted = lift_residue([[a, b], [(n - c) % n, (n - d) % n]], n)?;
        return BasisChange::new([[1, 0], [0, -1]])?.compose(&lifted);
    }
    let c1 = if c % n == 0 { n } else { c };
    let mut d1 = d;
    while c1.gcd(&d1) != 1 {
        d1 += n;
    }
    // a1·d1 − b1·c1 = 1
    let (x, y) = bezout_complement(Pair::new(-c1, d1))?;
    // x·d1 − y·(−c1) = 1, i.e. x·d1 + y·c1 = 1
    let (a1, b1) = (x, -y);
    let (u, v) = bezout_complement(Pair::new(-d1, c1))?;
    // u·c1 + v·d1 = 1
    let k = ((a - a1) as i128 * u as i128 + (b - b1) as i128 * v as i128).rem_euclid(n as i128) as i64;
    let top = [a1 + k * c1, b1 + k * d1];
    BasisChange::new([top, [c1, d1]])
}

fn residue_group(n: i64) -> Result<Vec<BasisChange>> {
    if n > MAX_RESIDUE_MODULUS {
        return Err(Error::IllegalParameters(format!(
            "lcm of exceptional orders {n} exceeds {MAX_RESIDUE_MODULUS}"
        )));
    }
    if n == 1 {
        return Ok(vec![BasisChange::IDENTITY]);
    }
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let det = (a * d - b * c).rem_euclid(n);
                    if det == 1 || det == n - 1 {
                        out.push(lift_residue([[a, b], [c, d]], n)?);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Candidate reparametrizations for the weak canonical form of `w`.
pub fn candidates(w: &WeightSystem) -> Result<Vec<BasisChange>> {
    let period = lcm_alpha(w);
    let directions = distinct_directions(w)?;
    if !directions.is_empty() {
        return anchored(&directions, &directions, period);
    }
    let (b1, b2) = w.obstruction;
    if (b1, b2) != (0, 0) {
        let g = (b1 as i128).gcd(&(b2 as i128)) as i64;
        let u = Pair::new(b1 / g, b2 / g);
        return anchored(&[u], &[], period);
    }
    residue_group(period)
}
