use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A signed integer pair `(m, n)` naming the circle subgroup
/// `{(φ, θ) : mφ + nθ = 0}` of the torus.
///
/// `Pair` keeps whatever sign representative it was built with. Determinants
/// of adjacent pairs on a fixed cycle depend on that choice, so documents
/// carry it verbatim. Use [`IsotropyPair`] when only the subgroup matters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Pair {
    pub m: i64,
    pub n: i64,
}

impl Pair {
    pub const fn new(m: i64, n: i64) -> Self {
        Pair { m, n }
    }

    pub fn is_coprime(&self) -> bool {
        (self.m as i128).gcd(&(self.n as i128)) == 1
    }

    pub fn negate(&self) -> Result<Pair> {
        match (self.m.checked_neg(), self.n.checked_neg()) {
            (Some(m), Some(n)) => Ok(Pair { m, n }),
            _ => Err(Error::Overflow("pair negation")),
        }
    }

    /// The subgroup this representative names.
    pub fn isotropy(&self) -> Result<IsotropyPair> {
        make_pair(self.m, self.n)
    }

    /// True when both pairs name the same circle subgroup.
    pub fn same_subgroup(&self, other: &Pair) -> bool {
        (self.m == other.m && self.n == other.n)
            || (self.m as i128 == -(other.m as i128) && self.n as i128 == -(other.n as i128))
    }
}

impl From<[i64; 2]> for Pair {
    fn from([m, n]: [i64; 2]) -> Self {
        Pair { m, n }
    }
}

impl From<Pair> for [i64; 2] {
    fn from(p: Pair) -> Self {
        [p.m, p.n]
    }
}

impl From<(i64, i64)> for Pair {
    fn from((m, n): (i64, i64)) -> Self {
        Pair { m, n }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A circle subgroup `G(m, n)` stored by its canonical representative:
/// `m > 0`, or `m = 0` and `n = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsotropyPair(Pair);

impl IsotropyPair {
    pub fn m(&self) -> i64 {
        self.0.m
    }

    pub fn n(&self) -> i64 {
        self.0.n
    }

    pub fn pair(&self) -> Pair {
        self.0
    }
}

impl fmt::Display for IsotropyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.0.m, self.0.n)
    }
}

/// Builds the canonical representative of `G(m, n)`.
pub fn make_pair(m: i64, n: i64) -> Result<IsotropyPair> {
    let p = Pair::new(m, n);
    if !p.is_coprime() {
        return Err(Error::NotCoprime(m, n));
    }
    if m < 0 || (m == 0 && n < 0) {
        Ok(IsotropyPair(p.negate()?))
    } else {
        Ok(IsotropyPair(p))
    }
}

/// `a.m * b.n - a.n * b.m`, the determinant of the matrix with columns `a`, `b`.
///
/// Computed in 128 bits; no pair of `i64` inputs can overflow it.
pub fn det_pair(a: Pair, b: Pair) -> i128 {
    a.m as i128 * b.n as i128 - a.n as i128 * b.m as i128
}

/// [`det_pair`] narrowed back to `i64`.
pub fn det_pair_i64(a: Pair, b: Pair) -> Result<i64> {
    i64::try_from(det_pair(a, b)).map_err(|_| Error::Overflow("pair determinant"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_pair_examples() {
        assert_eq!(make_pair(2, -5).unwrap().pair(), Pair::new(2, -5));
        assert_eq!(make_pair(-1, 0).unwrap().pair(), Pair::new(1, 0));
        assert_eq!(make_pair(0, -1).unwrap().pair(), Pair::new(0, 1));
        assert_eq!(make_pair(2, 4), Err(Error::NotCoprime(2, 4)));
        assert_eq!(make_pair(0, 0), Err(Error::NotCoprime(0, 0)));
        assert_eq!(make_pair(0, 2), Err(Error::NotCoprime(0, 2)));
    }

    #[test]
    fn make_pair_overflow_is_loud() {
        // gcd(i64::MIN, 1) = 1 but the sign flip does not fit.
        assert_eq!(make_pair(i64::MIN, 1), Err(Error::Overflow("pair negation")));
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_pair(Pair::new(1, 0), Pair::new(0, 1)), 1);
        assert_eq!(det_pair(Pair::new(1, 0), Pair::new(7, 3)), 3);
        assert_eq!(det_pair(Pair::new(1, 0), Pair::new(2, 5)), 5);
        assert_eq!(
            det_pair(Pair::new(i64::MIN, i64::MIN), Pair::new(i64::MAX, i64::MIN)),
            (i64::MIN as i128) * (i64::MIN as i128) - (i64::MIN as i128) * (i64::MAX as i128)
        );
        assert!(det_pair_i64(Pair::new(i64::MAX, 0), Pair::new(0, 2)).is_err());
    }

    #[test]
    fn same_subgroup_ignores_sign() {
        assert!(Pair::new(2, -5).same_subgroup(&Pair::new(-2, 5)));
        assert!(!Pair::new(2, -5).same_subgroup(&Pair::new(2, 5)));
    }
}
