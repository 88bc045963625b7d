use std::cmp::Ordering;
use std::fmt;

use crate::circle::{QuadExt, Theta};
use crate::error::{Error, Result};

use super::GroupElement;

/// A dihedral action on a Cantor space, presented through an exact Boolean
/// algebra of clopen sets.
pub trait DihedralSystem {
    type Set: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn empty(&self) -> Self::Set;
    fn full(&self) -> Self::Set;
    fn union(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn intersection(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn difference(&self, a: &Self::Set, b: &Self::Set) -> Self::Set;
    fn is_empty(&self, a: &Self::Set) -> bool;

    /// Image under `φᵏ`.
    fn phi_pow(&self, a: &Self::Set, k: i64) -> Self::Set;
    /// Image under `σ`.
    fn sigma(&self, a: &Self::Set) -> Self::Set;

    /// Invariant probability measure of a set.
    fn measure(&self, a: &Self::Set) -> QuadExt;

    /// An upper bound on first-return times to `y` under `φ`.
    fn return_time_bound(&self, y: &Self::Set) -> Result<u64>;

    /// A `σ`-invariant clopen neighbourhood that shrinks as `window` grows.
    fn symmetric_neighbourhood(&self, window: i64) -> Result<Self::Set>;

    fn set_to_json(&self, a: &Self::Set) -> serde_json::Value;
    fn set_from_json(&self, v: &serde_json::Value) -> Result<Self::Set>;

    /// Image under `φⁿσˢ`.
    fn act(&self, g: GroupElement, a: &Self::Set) -> Self::Set {
        if g.s {
            self.phi_pow(&self.sigma(a), g.n)
        } else {
            self.phi_pow(a, g.n)
        }
    }

    fn is_disjoint(&self, a: &Self::Set, b: &Self::Set) -> bool {
        self.is_empty(&self.intersection(a, b))
    }

    fn is_full(&self, a: &Self::Set) -> bool {
        self.is_empty(&self.difference(&self.full(), a))
    }

    /// Pairwise disjoint with union everything.
    fn is_partition(&self, sets: &[Self::Set]) -> bool {
        let mut acc = self.empty();
        for s in sets {
            if !self.is_disjoint(&acc, s) {
                return false;
            }
            acc = self.union(&acc, s);
        }
        self.is_full(&acc)
    }
}

/// `min(frac(x), 1 − frac(x))`.
fn circle_norm(theta: &Theta, x: &QuadExt) -> QuadExt {
    let f = theta.frac(x);
    let g = &QuadExt::integer(1) - &f;
    if theta.cmp(&f, &g) == Ordering::Greater {
        g
    } else {
        f
    }
}

/// Every orbit of rotation by `±θ` enters any arc of length `ell` within the
/// returned number of steps: with `q` the first index where `δ = ‖qθ‖ < ell`,
/// the points `x + kqθ` march around the circle in steps of `δ`.
pub fn rotation_return_bound(theta: &Theta, ell: &QuadExt) -> Result<u64> {
    const SEARCH: i64 = 10_000_000;
    if theta.sign(ell) != Ordering::Greater {
        return Err(Error::InvalidParameter("empty return target".into()));
    }
    let mut q = 1;
    let delta = loop {
        let d = circle_norm(theta, &QuadExt::from_ints(0, q));
        if theta.cmp(&d, ell) == Ordering::Less {
            break d;
        }
        q += 1;
        if q > SEARCH {
            return Err(Error::IterationCap { cap: SEARCH as u64 });
        }
    };
    let one = QuadExt::integer(1);
    let covers = |t: i64| {
        let s = delta.scale(&num_rational::BigRational::from_integer(t.into()));
        theta.cmp(&s, &one) != Ordering::Less
    };
    let mut t = (1.0 / delta.approx(theta)).ceil().max(1.0) as i64;
    while !covers(t) {
        t += 1;
    }
    while t > 1 && covers(t - 1) {
        t -= 1;
    }
    Ok((q as u64) * (t as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_bound_covers_known_returns() {
        let th = Theta::golden();
        // ell = 2θ − 1
        let b = rotation_return_bound(&th, &QuadExt::from_ints(-1, 2)).unwrap();
        assert!(b >= 5, "{b}");
        assert!(b <= 30);
    }
}
