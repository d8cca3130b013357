use crate::error::{Error, Result};
use crate::weights::{CycleEntry, FixedCycle};

fn neg(x: i64) -> Result<i64> {
    x.checked_neg().ok_or(Error::Overflow("cycle canonicalization"))
}

/// Smallest presentation of `entries` (already rotated) over all sign flips.
///
/// Entries compare by `(|f|, f, m, n)`. Flip bit `x_w` negates pair `w` and
/// `f_w` changes sign by `(−1)^{x_w + x_{w+1}}`. Entry 0 can always be given
/// a negative `f` whatever `x_0` is, so `x_0` is decided by the smaller sign
/// of pair 0; each later `x_{w+1}` is then forced by making `f_w` negative.
/// The last determinant's sign is whatever remains.
fn best_signs(entries: &[CycleEntry]) -> Result<Vec<CycleEntry>> {
    let r = entries.len();
    let mut out = Vec::with_capacity(r);
    let first = entries[0].pair;
    // (−m, −n) < (m, n) exactly when m > 0, or m = 0 and n > 0
    let mut flip = first.m > 0 || (first.m == 0 && first.n > 0);
    let flip0 = flip;
    for w in 0..r {
        let e = entries[w];
        let pair = if flip { e.pair.negate()? } else { e.pair };
        let next_flip = if w + 1 < r {
            // choose x_{w+1} so that the stored f_w ends up ≤ 0
            let parity_needed = e.f > 0;
            flip ^ parity_needed
        } else {
            flip0
        };
        let f = if flip ^ next_flip { neg(e.f)? } else { e.f };
        out.push(CycleEntry::new(pair, f));
        flip = next_flip;
    }
    Ok(out)
}

/// Lexicographically smallest presentation of `c` over all rotations and
/// all per-entry sign flips, entries ordered by `(|f|, f, m, n)`.
///
/// Runs in `O(r²)`.
pub fn canonical_cycle(c: &FixedCycle) -> Result<FixedCycle> {
    let entries = c.entries();
    let r = entries.len();
    if r == 0 {
        return Ok(c.clone());
    }
    let mut best: Option<Vec<CycleEntry>> = None;
    let mut rotated = entries.to_vec();
    for _ in 0..r {
        let candidate = best_signs(&rotated)?;
        if best.as_ref().map_or(true, |b| candidate < *b) {
            best = Some(candidate);
        }
        rotated.rotate_left(1);
    }
    Ok(FixedCycle::new(best.expect("nonempty cycle")))
}

/// Product of the signs of all `f_w`; unchanged by rotations and sign flips.
pub fn sign_product(c: &FixedCycle) -> i64 {
    c.f_values().map(i64::signum).product()
}
