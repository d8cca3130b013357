use std::fmt;

use crate::error::{Error, Result};
use crate::weights::{CycleEntry, FiniteIsotropyInvariant, FixedCycle, Pair, WeightSystem};

/// An integer 2×2 matrix `[[a, b], [c, d]]` with determinant ±1, acting on the
/// lattice of circle subgroups by reparametrizing the torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisChange {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl BasisChange {
    pub const IDENTITY: BasisChange = BasisChange { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(rows: [[i64; 2]; 2]) -> Result<Self> {
        let [[a, b], [c, d]] = rows;
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det.abs() != 1 {
            return Err(Error::NotUnimodular(det));
        }
        Ok(BasisChange { a, b, c, d })
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> i64 {
        (self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128) as i64
    }

    pub fn inverse(&self) -> Result<Self> {
        let e = self.det();
        let scale = |x: i64| x.checked_mul(e).ok_or(Error::Overflow("matrix inverse"));
        let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("matrix inverse"));
        Ok(BasisChange {
            a: scale(self.d)?,
            b: scale(neg(self.b)?)?,
            c: scale(neg(self.c)?)?,
            d: scale(self.a)?,
        })
    }

    /// `self · other`
    pub fn compose(&self, other: &BasisChange) -> Result<Self> {
        let mul = |x: i64, y: i64, z: i64, w: i64| {
            i64::try_from(x as i128 * y as i128 + z as i128 * w as i128)
                .map_err(|_| Error::Overflow("matrix product"))
        };
        Ok(BasisChange {
            a: mul(self.a, other.a, self.b, other.c)?,
            b: mul(self.a, other.b, self.b, other.d)?,
            c: mul(self.c, other.a, self.d, other.c)?,
            d: mul(self.c, other.b, self.d, other.d)?,
        })
    }

    fn apply_i128(&self, x: i64, y: i64) -> (i128, i128) {
        (
            self.a as i128 * x as i128 + self.b as i128 * y as i128,
            self.c as i128 * x as i128 + self.d as i128 * y as i128,
        )
    }

    pub fn apply(&self, p: Pair) -> Result<Pair> {
        let (x, y) = self.apply_i128(p.m, p.n);
        match (i64::try_from(x), i64::try_from(y)) {
            (Ok(m), Ok(n)) => Ok(Pair::new(m, n)),
            _ => Err(Error::Overflow("basis change")),
        }
    }

    /// Exceptional-orbit data transforms as a vector modulo `α`.
    pub fn apply_seifert(&self, inv: FiniteIsotropyInvariant) -> FiniteIsotropyInvariant {
        let (x, y) = self.apply_i128(inv.gamma1, inv.gamma2);
        let alpha = inv.alpha as i128;
        if alpha <= 0 {
            return inv;
        }
        FiniteIsotropyInvariant::new(inv.alpha, x.rem_euclid(alpha) as i64, y.rem_euclid(alpha) as i64)
    }
}

impl fmt::Display for BasisChange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Reparametrizes the torus by `change`: pairs `P ↦ A·P`, determinants
/// `f ↦ det(A)·f`, obstruction `b ↦ A·b`, Seifert data `γ ↦ A·γ mod α`.
pub fn apply_basis_change(w: &WeightSystem, change: &BasisChange) -> Result<WeightSystem> {
    let det = change.det();
    let circle_boundaries = w
        .circle_boundaries
        .iter()
        .map(|p| change.apply(*p))
        .collect::<Result<Vec<_>>>()?;
    let fixed_cycles = w
        .fixed_cycles
        .iter()
        .map(|c| {
            c.entries()
                .iter()
                .map(|e| {
                    let f = e.f.checked_mul(det).ok_or(Error::Overflow("basis change"))?;
                    Ok(CycleEntry::new(change.apply(e.pair)?, f))
                })
                .collect::<Result<Vec<_>>>()
                .map(FixedCycle::new)
        })
        .collect::<Result<Vec<_>>>()?;
    let ob = change.apply(Pair::new(w.obstruction.0, w.obstruction.1))?;
    Ok(WeightSystem {
        obstruction: (ob.m, ob.n),
        orientation: w.orientation,
        genus: w.genus,
        circle_boundaries,
        fixed_cycles,
        exceptional: w.exceptional.iter().map(|&inv| change.apply_seifert(inv)).collect(),
    })
}

/// `γ ↦ (α − γ) mod α` on both coordinates. This is the only place the
/// orientation convention for exceptional-orbit data is fixed.
pub fn reverse_seifert(inv: FiniteIsotropyInvariant) -> FiniteIsotropyInvariant {
    if inv.alpha <= 0 {
        return inv;
    }
    FiniteIsotropyInvariant::new(
        inv.alpha,
        (inv.alpha - inv.gamma1).rem_euclid(inv.alpha),
        (inv.alpha - inv.gamma2).rem_euclid(inv.alpha),
    )
}

/// Reverses the orientation of the orbit space: `ε` flips, each fixed cycle
/// is traversed backwards (determinants negate), Seifert data is reflected
/// and the obstruction negated.
pub fn reverse_orientation(w: &WeightSystem) -> Result<WeightSystem> {
    let neg = |x: i64| x.checked_neg().ok_or(Error::Overflow("orientation reversal"));
    Ok(WeightSystem {
        obstruction: (neg(w.obstruction.0)?, neg(w.obstruction.1)?),
        orientation: w.orientation.reversed(),
        genus: w.genus,
        circle_boundaries: w.circle_boundaries.clone(),
        fixed_cycles: w.fixed_cycles.iter().map(FixedCycle::reversed).collect::<Result<Vec<_>>>()?,
        exceptional: w.exceptional.iter().map(|&inv| reverse_seifert(inv)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{validate, Orientation};

    fn suspension(a: (i64, i64), b: (i64, i64)) -> WeightSystem {
        WeightSystem::disk(Orientation::Positive, FixedCycle::from_pairs(&[a.into(), b.into()]).unwrap())
    }

    #[test]
    fn rejects_non_unimodular() {
        assert_eq!(BasisChange::new([[2, 0], [0, 1]]), Err(Error::NotUnimodular(2)));
        assert!(BasisChange::new([[2, 1], [1, 1]]).is_ok());
        assert!(BasisChange::new([[0, 1], [1, 0]]).is_ok());
    }

    #[test]
    fn identity_is_noop() {
        let w = suspension((1, 0), (2, 5));
        assert_eq!(apply_basis_change(&w, &BasisChange::IDENTITY).unwrap(), w);
    }

    #[test]
    fn swap_negates_determinants() {
        let swap = BasisChange::new([[0, 1], [1, 0]]).unwrap();
        let w = suspension((1, 0), (2, 5));
        let out = apply_basis_change(&w, &swap).unwrap();
        assert_eq!(out.fixed_cycles[0].entries()[0].pair, Pair::new(0, 1));
        assert_eq!(out.fixed_cycles[0].f_values().collect::<Vec<_>>(), vec![-5, 5]);
        assert!(validate(&out).is_legal());
    }

    #[test]
    fn inverse_and_compose() {
        let a = BasisChange::new([[2, 1], [5, 3]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.compose(&inv).unwrap(), BasisChange::IDENTITY);
        let b = BasisChange::new([[0, 1], [1, 0]]).unwrap();
        assert_eq!(b.inverse().unwrap(), b);
    }

    #[test]
    fn reversal_is_an_involution() {
        let mut w = WeightSystem::disk(
            Orientation::Negative,
            FixedCycle::from_pairs(&[Pair::new(1, 0), Pair::new(1, 2), Pair::new(-1, 3)]).unwrap(),
        );
        w.exceptional.push(FiniteIsotropyInvariant::new(5, 2, 0));
        let rev = reverse_orientation(&w).unwrap();
        assert!(validate(&rev).is_legal());
        assert_eq!(rev.exceptional[0], FiniteIsotropyInvariant::new(5, 3, 0));
        assert_eq!(reverse_orientation(&rev).unwrap(), w);
    }

    #[test]
    fn seifert_data_moves_under_basis_change() {
        let shear = BasisChange::new([[1, 1], [0, 1]]).unwrap();
        let inv = FiniteIsotropyInvariant::new(5, 3, 4);
        assert_eq!(shear.apply_seifert(inv), FiniteIsotropyInvariant::new(5, 2, 4));
    }
}
