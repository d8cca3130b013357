use std::fmt;

use num_integer::Integer;

use crate::weights::pair::{det_pair, Pair};
use crate::weights::system::WeightSystem;

/// A legality rule for weight systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    /// Every isotropy pair has coprime entries.
    CoprimePair,
    /// Stored `f_w` equals the determinant of the adjacent stored pairs.
    DeterminantMatches,
    /// Every `f_w` is non-zero (legally weighted).
    NonzeroDeterminant,
    /// A fixed cycle has at least two fixed points.
    CycleLength,
    /// A cycle with two fixed points has `f_1 = -f_2`.
    TwoPointCycle,
    /// `(b₁, b₂)` may be non-zero only when the orbit space is closed.
    ObstructionOnlyWhenClosed,
    /// Genus is non-negative.
    GenusNonNegative,
    /// `α ≥ 2`, `0 ≤ γᵢ < α`, `gcd(α, γ₁, γ₂) = 1`.
    SeifertInvariant,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::CoprimePair => "coprime-pair",
            Rule::DeterminantMatches => "determinant-matches",
            Rule::NonzeroDeterminant => "nonzero-determinant",
            Rule::CycleLength => "cycle-length",
            Rule::TwoPointCycle => "two-point-cycle",
            Rule::ObstructionOnlyWhenClosed => "obstruction-only-when-closed",
            Rule::GenusNonNegative => "genus-nonnegative",
            Rule::SeifertInvariant => "seifert-invariant",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where a violation sits inside the weight system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    System,
    Circle(usize),
    Cycle(usize),
    CycleEntry { cycle: usize, entry: usize },
    Exceptional(usize),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::System => f.write_str("system"),
            Location::Circle(i) => write!(f, "circle_boundaries[{i}]"),
            Location::Cycle(c) => write!(f, "fixed_cycles[{c}]"),
            Location::CycleEntry { cycle, entry } => write!(f, "fixed_cycles[{cycle}][{entry}]"),
            Location::Exceptional(j) => write!(f, "exceptional[{j}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Violation {
    pub rule: Rule,
    pub location: Location,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.rule, self.location, self.detail)
    }
}

/// Every violated rule, in a fixed order (system-level, circles, cycles,
/// exceptional orbits). Empty means legal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_legal(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    fn push(&mut self, rule: Rule, location: Location, detail: String) {
        self.violations.push(Violation { rule, location, detail });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_legal() {
            return f.write_str("legal");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn check_pair(report: &mut ValidationReport, pair: Pair, location: Location) {
    if !pair.is_coprime() {
        report.push(Rule::CoprimePair, location, format!("gcd of {pair} is not 1"));
    }
}

/// Checks every combinatorial legality condition on `w`.
pub fn validate(w: &WeightSystem) -> ValidationReport {
    let mut report = ValidationReport::default();

    if w.genus < 0 {
        report.push(Rule::GenusNonNegative, Location::System, format!("genus {} < 0", w.genus));
    }
    if w.obstruction != (0, 0) && !w.is_closed() {
        report.push(
            Rule::ObstructionOnlyWhenClosed,
            Location::System,
            format!(
                "obstruction ({},{}) with {} boundary component(s)",
                w.obstruction.0,
                w.obstruction.1,
                w.boundary_components()
            ),
        );
    }

    for (i, &p) in w.circle_boundaries.iter().enumerate() {
        check_pair(&mut report, p, Location::Circle(i));
    }

    for (c, cycle) in w.fixed_cycles.iter().enumerate() {
        let entries = cycle.entries();
        let r = entries.len();
        if r < 2 {
            report.push(Rule::CycleLength, Location::Cycle(c), format!("{r} fixed point(s), need at least 2"));
        }
        for (i, e) in entries.iter().enumerate() {
            let location = Location::CycleEntry { cycle: c, entry: i };
            check_pair(&mut report, e.pair, location);
            if e.f == 0 {
                report.push(Rule::NonzeroDeterminant, location, "f = 0".to_string());
            }
            if r >= 2 {
                let expected = det_pair(e.pair, entries[(i + 1) % r].pair);
                if expected != e.f as i128 {
                    report.push(
                        Rule::DeterminantMatches,
                        location,
                        format!(
                            "stored f = {} but det({}, {}) = {expected}",
                            e.f,
                            e.pair,
                            entries[(i + 1) % r].pair
                        ),
                    );
                }
            }
        }
        if r == 2 && entries[0].f as i128 != -(entries[1].f as i128) {
            report.push(
                Rule::TwoPointCycle,
                Location::Cycle(c),
                format!("two fixed points need f_1 = -f_2, got f_1 = {}, f_2 = {}", entries[0].f, entries[1].f),
            );
        }
    }

    for (j, inv) in w.exceptional.iter().enumerate() {
        let (a, g1, g2) = (inv.alpha, inv.gamma1, inv.gamma2);
        let in_range = a >= 2 && (0..a).contains(&g1) && (0..a).contains(&g2);
        if !in_range || (a as i128).gcd(&(g1 as i128)).gcd(&(g2 as i128)) != 1 {
            report.push(
                Rule::SeifertInvariant,
                Location::Exceptional(j),
                format!("{inv} needs alpha >= 2, 0 <= gamma < alpha, gcd(alpha, gamma1, gamma2) = 1"),
            );
        }
    }

    report
}
