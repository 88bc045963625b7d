use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::circle::{ClopenSet, ClopenSetJson, QuadExt, Theta};
use crate::error::{Error, Result};

use super::action::{rotation_return_bound, DihedralSystem};
use super::denjoy::{neighbourhood_of_half, DenjoyFlip};
use super::GroupElement;

/// Two copies of the rotation on the doubled circle: `φ` turns sheet 0 by
/// `+θ` and sheet 1 by `−θ`, and `σ` swaps the sheets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DoubledSystem {
    pub theta: Theta,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubledSet {
    pub sheets: [ClopenSet; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DoubledSetJson {
    sheet0: ClopenSetJson,
    sheet1: ClopenSetJson,
}

impl fmt::Display for DoubledSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} × {{0}} ∪ {} × {{1}}", self.sheets[0], self.sheets[1])
    }
}

impl DoubledSystem {
    pub fn new(theta: Theta) -> Self {
        DoubledSystem { theta }
    }

    pub fn set(&self, sheet0: ClopenSet, sheet1: ClopenSet) -> DoubledSet {
        DoubledSet { sheets: [sheet0, sheet1] }
    }

    /// `Y × {0}`: `φ`-invariant, and `σ` moves it onto its complement.
    pub fn splitting(&self) -> DoubledSet {
        self.set(ClopenSet::full(self.theta), ClopenSet::empty(self.theta))
    }

    /// Fixed points as `(y, sheet)`. Reflections swap the sheets; rotations
    /// act on each sheet by `±nθ`.
    pub fn fixed_points(&self, g: GroupElement) -> Result<Vec<(QuadExt, u8)>> {
        if g.is_identity() {
            return Err(Error::IdentityElement);
        }
        if g.s {
            return Ok(Vec::new());
        }
        let base = DenjoyFlip::new(self.theta);
        let mut out = Vec::new();
        for (sheet, n) in [(0u8, g.n), (1u8, -g.n)] {
            for y in base.fixed_points(GroupElement::new(n, false))? {
                out.push((y, sheet));
            }
        }
        Ok(out)
    }

    fn map2(&self, a: &DoubledSet, b: &DoubledSet, f: impl Fn(&ClopenSet, &ClopenSet) -> ClopenSet) -> DoubledSet {
        DoubledSet { sheets: [f(&a.sheets[0], &b.sheets[0]), f(&a.sheets[1], &b.sheets[1])] }
    }
}

impl DihedralSystem for DoubledSystem {
    type Set = DoubledSet;

    fn empty(&self) -> DoubledSet {
        self.set(ClopenSet::empty(self.theta), ClopenSet::empty(self.theta))
    }
    fn full(&self) -> DoubledSet {
        self.set(ClopenSet::full(self.theta), ClopenSet::full(self.theta))
    }
    fn union(&self, a: &DoubledSet, b: &DoubledSet) -> DoubledSet {
        self.map2(a, b, ClopenSet::union)
    }
    fn intersection(&self, a: &DoubledSet, b: &DoubledSet) -> DoubledSet {
        self.map2(a, b, ClopenSet::intersection)
    }
    fn difference(&self, a: &DoubledSet, b: &DoubledSet) -> DoubledSet {
        self.map2(a, b, ClopenSet::difference)
    }
    fn is_empty(&self, a: &DoubledSet) -> bool {
        a.sheets.iter().all(ClopenSet::is_empty)
    }
    fn phi_pow(&self, a: &DoubledSet, k: i64) -> DoubledSet {
        self.set(a.sheets[0].rotate(k), a.sheets[1].rotate(-k))
    }
    fn sigma(&self, a: &DoubledSet) -> DoubledSet {
        self.set(a.sheets[1].clone(), a.sheets[0].clone())
    }
    fn measure(&self, a: &DoubledSet) -> QuadExt {
        (&a.sheets[0].measure() + &a.sheets[1].measure()).scale(&BigRational::new(1.into(), 2.into()))
    }
    fn return_time_bound(&self, y: &DoubledSet) -> Result<u64> {
        if y.sheets.iter().any(ClopenSet::is_empty) {
            return Err(Error::InvalidParameter("set misses a sheet; some orbits never return".into()));
        }
        if y.sheets.iter().all(ClopenSet::is_full) {
            return Ok(1);
        }
        let th = self.theta;
        let ell = y.sheets.iter().map(ClopenSet::max_arc_length).min_by(|a, b| th.cmp(a, b)).expect("two sheets");
        rotation_return_bound(&th, &ell)
    }
    fn symmetric_neighbourhood(&self, window: i64) -> Result<DoubledSet> {
        let a = match neighbourhood_of_half(&self.theta, window) {
            Some((l, r)) => ClopenSet::arc(self.theta, l, r)?,
            None => ClopenSet::full(self.theta),
        };
        Ok(self.set(a.clone(), a))
    }
    fn set_to_json(&self, a: &DoubledSet) -> serde_json::Value {
        serde_json::to_value(DoubledSetJson { sheet0: a.sheets[0].to_json(), sheet1: a.sheets[1].to_json() })
            .expect("clopen sets serialize")
    }
    fn set_from_json(&self, v: &serde_json::Value) -> Result<DoubledSet> {
        let raw: DoubledSetJson = serde_json::from_value(v.clone())?;
        Ok(self.set(ClopenSet::from_json(self.theta, &raw.sheet0)?, ClopenSet::from_json(self.theta, &raw.sheet1)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_and_splitting() {
        let sys = DoubledSystem::new(Theta::golden());
        let a = sys
            .set(ClopenSet::arc_by_index(sys.theta, 0, 1).unwrap(), ClopenSet::arc_by_index(sys.theta, 2, -1).unwrap());
        assert_eq!(sys.sigma(&sys.sigma(&a)), a);
        let lhs = sys.sigma(&sys.phi_pow(&sys.sigma(&a), 1));
        assert_eq!(lhs, sys.phi_pow(&a, -1));
        let y = sys.splitting();
        assert_eq!(sys.phi_pow(&y, 1), y);
        assert!(sys.is_partition(&[y.clone(), sys.sigma(&y)]));
        assert_eq!(sys.measure(&y), QuadExt::rational(1, 2));
    }

    #[test]
    fn free_action() {
        let sys = DoubledSystem::new(Theta::golden());
        for n in -20..=20 {
            for s in [false, true] {
                let g = GroupElement::new(n, s);
                if !g.is_identity() {
                    assert!(sys.fixed_points(g).unwrap().is_empty());
                }
            }
        }
    }
}
