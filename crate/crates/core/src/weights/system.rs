use std::fmt;

use crate::error::{Error, Result};
use crate::weights::pair::{det_pair_i64, Pair};

/// The orientation `ε` of the orbit space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Negative,
    Positive,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl TryFrom<i64> for Orientation {
    type Error = i64;

    fn try_from(value: i64) -> std::result::Result<Self, i64> {
        match value {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            other => Err(other),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+1",
            Orientation::Negative => "-1",
        })
    }
}

/// Oriented Seifert invariant `(α; γ₁, γ₂)` of an exceptional orbit with
/// isotropy `Z_α`. Normal form: `α ≥ 2`, `0 ≤ γᵢ < α`, `gcd(α, γ₁, γ₂) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteIsotropyInvariant {
    pub alpha: i64,
    pub gamma1: i64,
    pub gamma2: i64,
}

impl FiniteIsotropyInvariant {
    pub const fn new(alpha: i64, gamma1: i64, gamma2: i64) -> Self {
        FiniteIsotropyInvariant { alpha, gamma1, gamma2 }
    }
}

impl fmt::Display for FiniteIsotropyInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};{},{})", self.alpha, self.gamma1, self.gamma2)
    }
}

/// One arc of a fixed cycle: the isotropy of the arc, and the determinant `f`
/// at the fixed point that ends it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleEntry {
    pub pair: Pair,
    pub f: i64,
}

impl CycleEntry {
    pub const fn new(pair: Pair, f: i64) -> Self {
        CycleEntry { pair, f }
    }

    /// Comparison key `(|f|, f, m, n)` used by cycle canonicalization.
    pub fn key(&self) -> (u64, i64, i64, i64) {
        (self.f.unsigned_abs(), self.f, self.pair.m, self.pair.n)
    }
}

impl PartialOrd for CycleEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycleEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// A boundary component of the orbit space carrying fixed points.
///
/// Entry `w` holds the isotropy pair of the `w`-th arc and
/// `f_w = det(pair_w, pair_{w+1})`, indices taken cyclically. The fixed point
/// between arcs `w` and `w+1` is topologically regular iff `|f_w| = 1`.
///
/// Entries are stored as given; nothing here checks legality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FixedCycle {
    entries: Vec<CycleEntry>,
}

impl FixedCycle {
    pub fn new(entries: Vec<CycleEntry>) -> Self {
        FixedCycle { entries }
    }

    /// Builds a cycle from arc isotropies, filling in every `f_w`.
    pub fn from_pairs(pairs: &[Pair]) -> Result<Self> {
        let r = pairs.len();
        let entries = (0..r)
            .map(|w| {
                let f = det_pair_i64(pairs[w], pairs[(w + 1) % r])?;
                Ok(CycleEntry::new(pairs[w], f))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FixedCycle { entries })
    }

    pub fn entries(&self) -> &[CycleEntry] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<CycleEntry> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = Pair> + '_ {
        self.entries.iter().map(|e| e.pair)
    }

    pub fn f_values(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().map(|e| e.f)
    }

    /// True when some fixed point on the cycle is topologically singular.
    pub fn has_singular_point(&self) -> bool {
        self.f_values().any(|f| f.unsigned_abs() != 1)
    }

    /// Starts the cycle at entry `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut entries = self.entries.clone();
        if !entries.is_empty() {
            entries.rotate_left(k % self.entries.len());
        }
        FixedCycle { entries }
    }

    /// Replaces the representative of arc `w` by its negative. Negates
    /// `f_{w-1}` and `f_w`; for `r = 2` these are both entries.
    pub fn with_sign_flipped(&self, w: usize) -> Result<Self> {
        let r = self.entries.len();
        let mut entries = self.entries.clone();
        let prev = (w + r - 1) % r;
        entries[w].pair = entries[w].pair.negate()?;
        for i in [prev, w] {
            entries[i].f = entries[i]
                .f
                .checked_neg()
                .ok_or(Error::Overflow("f negation"))?;
        }
        Ok(FixedCycle { entries })
    }

    /// The same boundary traversed backwards. Pairs are listed in reverse and
    /// every determinant is negated, so stored values stay consistent.
    pub fn reversed(&self) -> Result<Self> {
        let r = self.entries.len();
        // New arc i is old arc r-1-i; its fixed point joins it to old arc
        // r-2-i, whose link was old f_{r-2-i} (taken cyclically).
        let entries = (0..r)
            .map(|i| {
                let old = r - 1 - i;
                let link = (old + r - 1) % r;
                let f = self.entries[link]
                    .f
                    .checked_neg()
                    .ok_or(Error::Overflow("f negation"))?;
                Ok(CycleEntry::new(self.entries[old].pair, f))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FixedCycle { entries })
    }
}

impl fmt::Display for FixedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{},{}", e.pair, e.f)?;
        }
        f.write_str("]")
    }
}

/// The full invariant tuple `{(b₁,b₂); ε; g; circles; fixed cycles; exceptional}`
/// attached to a weighted orbit space.
///
/// Fields are public plain data; [`crate::validate`] decides legality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    pub obstruction: (i64, i64),
    pub orientation: Orientation,
    pub genus: i64,
    pub circle_boundaries: Vec<Pair>,
    pub fixed_cycles: Vec<FixedCycle>,
    pub exceptional: Vec<FiniteIsotropyInvariant>,
}

impl WeightSystem {
    /// Closed orbit space of genus `g` with nothing on it.
    pub fn closed(obstruction: (i64, i64), orientation: Orientation, genus: i64) -> Self {
        WeightSystem {
            obstruction,
            orientation,
            genus,
            circle_boundaries: Vec::new(),
            fixed_cycles: Vec::new(),
            exceptional: Vec::new(),
        }
    }

    /// Disk orbit space whose single boundary circle is `cycle`.
    pub fn disk(orientation: Orientation, cycle: FixedCycle) -> Self {
        WeightSystem {
            obstruction: (0, 0),
            orientation,
            genus: 0,
            circle_boundaries: Vec::new(),
            fixed_cycles: vec![cycle],
            exceptional: Vec::new(),
        }
    }

    /// `s`, boundary circles made of circular orbits only.
    pub fn s(&self) -> usize {
        self.circle_boundaries.len()
    }

    /// `t`, boundary circles carrying fixed points.
    pub fn t(&self) -> usize {
        self.fixed_cycles.len()
    }

    /// `k`, exceptional orbits.
    pub fn k(&self) -> usize {
        self.exceptional.len()
    }

    /// `m = s + t`, all boundary components.
    pub fn boundary_components(&self) -> usize {
        self.s() + self.t()
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_components() == 0
    }

    pub fn fixed_point_count(&self) -> usize {
        self.fixed_cycles.iter().map(FixedCycle::len).sum()
    }

    pub fn has_singular_point(&self) -> bool {
        self.fixed_cycles.iter().any(FixedCycle::has_singular_point)
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{({},{}); {}; {}; ",
            self.obstruction.0, self.obstruction.1, self.orientation, self.genus
        )?;
        if self.circle_boundaries.is_empty() {
            f.write_str("-")?;
        } else {
            let items: Vec<String> = self.circle_boundaries.iter().map(|p| format!("<{},{}>", p.m, p.n)).collect();
            write!(f, "{{{}}}", items.join(", "))?;
        }
        f.write_str("; ")?;
        if self.fixed_cycles.is_empty() {
            f.write_str("-")?;
        } else {
            let items: Vec<String> = self.fixed_cycles.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(", "))?;
        }
        f.write_str("; ")?;
        if self.exceptional.is_empty() {
            f.write_str("-")?;
        } else {
            let items: Vec<String> = self.exceptional.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(", "))?;
        }
        f.write_str("}")
    }
}
