//! Spaces of directions at fixed points.
//!
//! A fixed point between arcs with isotropies `(m,n)` (left) and `(m',n')`
//! (right) has a neighbourhood that is the cone over a lens space `L(r, s)`,
//! obtained by gluing two solid tori. With `(p,q)` chosen so that
//! `p·n − q·m = 1`:
//!
//! * `r = |m·n' − m'·n|`
//! * `s = p·n' − q·m'  (mod r)`
//!
//! and then `m·s ≡ m'`, `n·s ≡ n' (mod r)`. Changing `(p,q)` by a multiple of
//! `(m,n)` moves `s` by a multiple of `r`, so the class does not depend on it.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::weights::{det_pair, Pair};

/// The lens space `L(r, s)` with `0 ≤ s < r`. `L(1, 0)` is the 3-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LensClass {
    r: i64,
    s: i64,
}

impl LensClass {
    /// Reduces `s` modulo `r`. Requires `r ≥ 1` and `gcd(r, s) = 1`.
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r < 1 {
            return Err(Error::IllegalParameters(format!("lens space order {r} < 1")));
        }
        let s = s.rem_euclid(r);
        if r > 1 && s.gcd(&r) != 1 {
            return Err(Error::NotCoprime(r, s));
        }
        Ok(LensClass { r, s })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn is_sphere(&self) -> bool {
        self.r == 1
    }

    /// `min(s, r − s)`: the representative picked out by [`lens_equivalent`].
    pub fn sign_representative(&self) -> LensClass {
        LensClass { r: self.r, s: self.s.min((self.r - self.s) % self.r) }
    }
}

impl fmt::Display for LensClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.r, self.s)
    }
}

/// The matrix `[[u, v], [r, s]]` of the boundary torus map gluing the two
/// solid tori of a local model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    pub u: i64,
    pub v: i64,
    pub r: i64,
    pub s: i64,
}

impl GluingMatrix {
    pub fn det(&self) -> i128 {
        self.u as i128 * self.s as i128 - self.v as i128 * self.r as i128
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.u, self.v], [self.r, self.s]]
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.u, self.v, self.r, self.s)
    }
}

fn narrow(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

/// `(p, q)` with `p·n − q·m = 1`.
///
/// The solutions form the line `(p + t·m, q + t·n)`; this returns the one with
/// `|p|` minimal, ties going to `p ≥ 0`. When `m = 0` the first coordinate is
/// forced (`p = n`) and `q = 0` is returned.
pub fn bezout_complement(pair: Pair) -> Result<(i64, i64)> {
    if !pair.is_coprime() {
        return Err(Error::NotCoprime(pair.m, pair.n));
    }
    let (m, n) = (pair.m as i128, pair.n as i128);
    if m == 0 {
        return Ok((narrow(n, "Bezout complement")?, 0));
    }
    let eg = n.extended_gcd(&m);
    // x·n + y·m = ±1
    let sign = eg.gcd.signum();
    let p0 = (eg.x * sign).rem_euclid(m.abs());
    let p = if p0 * 2 > m.abs() { p0 - m.abs() } else { p0 };
    let q = (p * n - 1) / m;
    debug_assert_eq!(p * n - q * m, 1);
    Ok((narrow(p, "Bezout complement")?, narrow(q, "Bezout complement")?))
}

/// `L(r, s)` computed from an explicit complement `(p, q)` of `left`.
pub fn lens_from_complement(left: Pair, right: Pair, complement: (i64, i64)) -> Result<LensClass> {
    let (p, q) = (complement.0 as i128, complement.1 as i128);
    if p * left.n as i128 - q * left.m as i128 != 1 {
        return Err(Error::IllegalParameters(format!(
            "({p},{q}) is not a complement of {left}"
        )));
    }
    let det = det_pair(left, right);
    if det == 0 {
        return Err(Error::IllegalDeterminant);
    }
    let r = narrow(det.abs(), "lens order")?;
    let s = p
        .checked_mul(right.n as i128)
        .zip(q.checked_mul(right.m as i128))
        .and_then(|(a, b)| a.checked_sub(b))
        .ok_or(Error::Overflow("lens parameter"))?;
    let lens = LensClass { r, s: narrow(s.rem_euclid(r as i128), "lens parameter")? };
    debug_assert_eq!(congruence_sign(left, right, &lens), Some(1));
    Ok(lens)
}

/// The lens space `Σ_x X` at the fixed point between arcs `left` and `right`.
pub fn space_of_directions(left: Pair, right: Pair) -> Result<LensClass> {
    if det_pair(left, right) == 0 {
        return Err(Error::IllegalDeterminant);
    }
    lens_from_complement(left, right, bezout_complement(left)?)
}

/// `Some(σ)` when `m·s ≡ σ·m'` and `n·s ≡ σ·n' (mod r)` for one `σ ∈ {1, −1}`
/// (1 preferred when both hold, as for `r ≤ 2`).
pub fn congruence_sign(left: Pair, right: Pair, lens: &LensClass) -> Option<i64> {
    let r = lens.r as i128;
    let s = lens.s as i128;
    let holds = |sigma: i128| {
        (left.m as i128 * s - sigma * right.m as i128).rem_euclid(r) == 0
            && (left.n as i128 * s - sigma * right.n as i128).rem_euclid(r) == 0
    };
    if holds(1) {
        Some(1)
    } else if holds(-1) {
        Some(-1)
    } else {
        None
    }
}

/// `L(r, s₁) ≅ L(r, s₂)` iff `s₁ ≡ ±s₂ (mod r)`.
pub fn lens_equivalent(a: &LensClass, b: &LensClass) -> bool {
    a.r == b.r && ((a.s - b.s) % a.r == 0 || (a.s + b.s) % a.r == 0)
}

/// The full homeomorphism classification of lens spaces: additionally allows
/// `s₁·s₂ ≡ ±1 (mod r)`.
pub fn lens_equivalent_classical(a: &LensClass, b: &LensClass) -> bool {
    if lens_equivalent(a, b) {
        return true;
    }
    let r = a.r as i128;
    let prod = (a.s as i128 * b.s as i128).rem_euclid(r);
    a.r == b.r && (prod == 1 % r || prod == r - 1)
}

/// Gluing matrix of the local model at the fixed point between `left = (m,n)`
/// and `right = (m',n')`.
///
/// With `(p,q)` a complement of `(m,n)` (`p·n − q·m = 1`) and `(p',q')`
/// satisfying `p'·n' − q'·m' = −1`:
///
/// * `r = m·n' − m'·n`, `s = p·n' − q·m'`
/// * `u = q'·m − p'·n`, `v = p·q' − p'·q`
///
/// `u` carries the sign that makes `u·s − v·r = 1`; with the opposite sign the
/// determinant is `1 − 2·v·r`. The map relates the two chart actions
/// `N = [[p,q],[m,n]]` and `N' = [[p',q'],[m',n']]` by
/// `G · diag(1, −1) · N = −N'`.
pub fn gluing_matrix(left: Pair, right: Pair) -> Result<GluingMatrix> {
    let det = det_pair(left, right);
    if det == 0 {
        return Err(Error::IllegalDeterminant);
    }
    let (p, q) = bezout_complement(left)?;
    let (pr, qr) = bezout_complement(right)?;
    let (p, q) = (p as i128, q as i128);
    let (pp, qp) = (-(pr as i128), -(qr as i128));
    let (m, n) = (left.m as i128, left.n as i128);
    let (mp, np) = (right.m as i128, right.n as i128);

    let s = p * np - q * mp;
    let u = qp * m - pp * n;
    let v = p * qp - pp * q;
    let g = GluingMatrix {
        u: narrow(u, "gluing matrix")?,
        v: narrow(v, "gluing matrix")?,
        r: narrow(det, "gluing matrix")?,
        s: narrow(s, "gluing matrix")?,
    };
    assert_eq!(g.det(), 1, "gluing matrix {g} for {left}, {right} is not unimodular");
    Ok(g)
}
