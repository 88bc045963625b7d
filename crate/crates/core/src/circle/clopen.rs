//! Cut points of `Z + θZ`, half-open arcs `[s⁺, t⁺)` and their Boolean algebra
//! on the doubled circle.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::quad::{QuadExt, Theta};
use crate::error::{Error, Result};

/// The point `m + nθ ∈ [0, 1)`; `m` is determined by `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CutPoint {
    pub m: i64,
    pub n: i64,
}

impl CutPoint {
    /// The representative of `nθ` modulo one.
    pub fn of(theta: &Theta, n: i64) -> Self {
        CutPoint { m: -theta.floor_mul(n), n }
    }

    /// Validates that `(m, n)` is in canonical form.
    pub fn checked(theta: &Theta, m: i64, n: i64) -> Result<Self> {
        let c = CutPoint::of(theta, n);
        if c.m != m {
            return Err(Error::InvalidParameter(format!("cut point ({m}, {n}) is not reduced to [0, 1)")));
        }
        Ok(c)
    }

    pub fn value(&self) -> QuadExt {
        QuadExt::from_ints(self.m, self.n)
    }

    pub fn rotate(&self, theta: &Theta, k: i64) -> Self {
        CutPoint::of(theta, self.n + k)
    }

    pub fn negate(&self, theta: &Theta) -> Self {
        CutPoint::of(theta, -self.n)
    }
}

pub fn cmp_cut(theta: &Theta, a: &CutPoint, b: &CutPoint) -> Ordering {
    if a.n == b.n {
        return Ordering::Equal;
    }
    theta.sign_int(a.m - b.m, a.n - b.n)
}

/// A point of the doubled circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CirclePoint {
    /// A point of `[0, 1)` outside `Z + θZ`.
    Interior(QuadExt),
    Plus(CutPoint),
    Minus(CutPoint),
}

impl CirclePoint {
    pub fn interior(theta: &Theta, x: QuadExt) -> Result<Self> {
        if x.is_cut_value() {
            return Err(Error::InvalidParameter(format!("{x} lies in Z + θZ")));
        }
        Ok(CirclePoint::Interior(theta.frac(&x)))
    }

    pub fn rotate(&self, theta: &Theta, k: i64) -> Self {
        match self {
            CirclePoint::Interior(x) => CirclePoint::Interior(theta.frac(&(x + &QuadExt::from_ints(0, k)))),
            CirclePoint::Plus(c) => CirclePoint::Plus(c.rotate(theta, k)),
            CirclePoint::Minus(c) => CirclePoint::Minus(c.rotate(theta, k)),
        }
    }

    /// `x ↦ −x`, exchanging the two copies of each cut point.
    pub fn flip(&self, theta: &Theta) -> Self {
        match self {
            CirclePoint::Interior(x) => CirclePoint::Interior(theta.frac(&-x)),
            CirclePoint::Plus(c) => CirclePoint::Minus(c.negate(theta)),
            CirclePoint::Minus(c) => CirclePoint::Plus(c.negate(theta)),
        }
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Interior(x) => write!(f, "{x}"),
            CirclePoint::Plus(c) => write!(f, "({})+", c.value()),
            CirclePoint::Minus(c) => write!(f, "({})-", c.value()),
        }
    }
}

/// The clopen arc `[left⁺, right⁺)`: everything strictly between the two
/// cut points, together with `left⁺` and `right⁻`. May wrap through zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Arc {
    pub left: CutPoint,
    pub right: CutPoint,
}

impl Arc {
    fn wraps(&self, theta: &Theta) -> bool {
        cmp_cut(theta, &self.left, &self.right) == Ordering::Greater
    }

    fn contains_plus(&self, theta: &Theta, c: &CutPoint) -> bool {
        let ge_left = cmp_cut(theta, c, &self.left) != Ordering::Less;
        let lt_right = cmp_cut(theta, c, &self.right) == Ordering::Less;
        if self.wraps(theta) {
            ge_left || lt_right
        } else {
            ge_left && lt_right
        }
    }

    fn contains_point(&self, theta: &Theta, x: &CirclePoint) -> bool {
        let wraps = self.wraps(theta);
        let (after_left, before_right) = match x {
            CirclePoint::Interior(v) => (
                theta.cmp(v, &self.left.value()) == Ordering::Greater,
                theta.cmp(v, &self.right.value()) == Ordering::Less,
            ),
            CirclePoint::Plus(c) => {
                (cmp_cut(theta, c, &self.left) != Ordering::Less, cmp_cut(theta, c, &self.right) == Ordering::Less)
            }
            CirclePoint::Minus(c) => (
                cmp_cut(theta, c, &self.left) == Ordering::Greater,
                cmp_cut(theta, c, &self.right) != Ordering::Greater,
            ),
        };
        if wraps {
            after_left || before_right
        } else {
            after_left && before_right
        }
    }

    pub fn length(&self, theta: &Theta) -> QuadExt {
        theta.frac(&(&self.right.value() - &self.left.value()))
    }
}

/// A clopen subset of the doubled circle in normal form: disjoint,
/// non-adjacent arcs sorted by left endpoint, or the whole circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClopenSet {
    theta: Theta,
    arcs: Vec<Arc>,
    full: bool,
}

/// Wire form of a [`ClopenSet`]; the ambient `θ` travels separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClopenSetJson {
    pub full: bool,
    pub arcs: Vec<Arc>,
}

impl ClopenSet {
    pub fn empty(theta: Theta) -> Self {
        ClopenSet { theta, arcs: Vec::new(), full: false }
    }

    pub fn full(theta: Theta) -> Self {
        ClopenSet { theta, arcs: Vec::new(), full: true }
    }

    /// The arc `[left⁺, right⁺)`; `left = right` is rejected.
    pub fn arc(theta: Theta, left: CutPoint, right: CutPoint) -> Result<Self> {
        if left.n == right.n {
            return Err(Error::InvalidParameter("degenerate arc".into()));
        }
        Ok(ClopenSet { theta, arcs: vec![Arc { left, right }], full: false })
    }

    /// Arc between the cut points `frac(iθ)` and `frac(jθ)`.
    pub fn arc_by_index(theta: Theta, i: i64, j: i64) -> Result<Self> {
        ClopenSet::arc(theta, CutPoint::of(&theta, i), CutPoint::of(&theta, j))
    }

    /// Union of arbitrary (possibly overlapping) arcs.
    pub fn from_arcs(theta: Theta, arcs: &[Arc]) -> Result<Self> {
        let mut acc = ClopenSet::empty(theta);
        for a in arcs {
            let s = ClopenSet::arc(theta, a.left, a.right)?;
            acc = acc.union(&s);
        }
        Ok(acc)
    }

    pub fn from_json(theta: Theta, json: &ClopenSetJson) -> Result<Self> {
        if json.full {
            if !json.arcs.is_empty() {
                return Err(Error::InvalidParameter("full set with arcs".into()));
            }
            return Ok(ClopenSet::full(theta));
        }
        for a in &json.arcs {
            CutPoint::checked(&theta, a.left.m, a.left.n)?;
            CutPoint::checked(&theta, a.right.m, a.right.n)?;
        }
        let set = ClopenSet::from_arcs(theta, &json.arcs)?;
        if set.arcs != json.arcs {
            return Err(Error::InvalidParameter("arc list is not in normal form".into()));
        }
        Ok(set)
    }

    pub fn to_json(&self) -> ClopenSetJson {
        ClopenSetJson { full: self.full, arcs: self.arcs.clone() }
    }

    pub fn theta(&self) -> &Theta {
        &self.theta
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        !self.full && self.arcs.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    /// All arc endpoints, sorted and without repetition.
    pub fn endpoints(&self) -> Vec<CutPoint> {
        let mut pts: Vec<CutPoint> = self.arcs.iter().flat_map(|a| [a.left, a.right]).collect();
        sort_cuts(&self.theta, &mut pts);
        pts
    }

    /// Whether `c⁺` belongs to the set.
    pub fn contains_plus(&self, c: &CutPoint) -> bool {
        if self.full {
            return true;
        }
        if self.arcs.is_empty() {
            return false;
        }
        let th = &self.theta;
        let idx = self.arcs.partition_point(|a| cmp_cut(th, &a.left, c) != Ordering::Greater);
        let cand = if idx == 0 { self.arcs.last().unwrap() } else { &self.arcs[idx - 1] };
        cand.contains_plus(th, c)
    }

    pub fn contains(&self, x: &CirclePoint) -> bool {
        self.full || self.arcs.iter().any(|a| a.contains_point(&self.theta, x))
    }

    fn combine(&self, other: &ClopenSet, op: impl Fn(bool, bool) -> bool) -> ClopenSet {
        assert_eq!(self.theta, other.theta, "sets over different rotation numbers");
        let th = self.theta;
        let mut cuts: Vec<CutPoint> =
            self.arcs.iter().chain(other.arcs.iter()).flat_map(|a| [a.left, a.right]).collect();
        sort_cuts(&th, &mut cuts);
        if cuts.is_empty() {
            let v = op(self.full, other.full);
            return if v { ClopenSet::full(th) } else { ClopenSet::empty(th) };
        }
        let bits: Vec<bool> = cuts.iter().map(|c| op(self.contains_plus(c), other.contains_plus(c))).collect();
        ClopenSet::from_cells(th, &cuts, &bits)
    }

    /// Assembles the union of the elementary arcs `[c_i⁺, c_{i+1}⁺)` flagged in
    /// `bits`; `cuts` must be sorted and distinct.
    pub(crate) fn from_cells(theta: Theta, cuts: &[CutPoint], bits: &[bool]) -> ClopenSet {
        let k = cuts.len();
        if bits.iter().all(|&b| b) {
            return ClopenSet::full(theta);
        }
        if bits.iter().all(|&b| !b) {
            return ClopenSet::empty(theta);
        }
        let mut arcs = Vec::new();
        for i in 0..k {
            let prev = bits[(i + k - 1) % k];
            if bits[i] && !prev {
                let mut j = (i + 1) % k;
                while bits[j] {
                    j = (j + 1) % k;
                }
                arcs.push(Arc { left: cuts[i], right: cuts[j] });
            }
        }
        ClopenSet { theta, arcs, full: false }
    }

    pub fn union(&self, other: &ClopenSet) -> ClopenSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &ClopenSet) -> ClopenSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &ClopenSet) -> ClopenSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &ClopenSet) -> ClopenSet {
        self.combine(other, |a, b| a != b)
    }

    pub fn complement(&self) -> ClopenSet {
        self.combine(&ClopenSet::empty(self.theta), |a, _| !a)
    }

    pub fn is_subset(&self, other: &ClopenSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &ClopenSet) -> bool {
        self.intersection(other).is_empty()
    }

    fn rebuild(&self, arcs: Vec<Arc>) -> ClopenSet {
        let th = self.theta;
        let mut arcs = arcs;
        arcs.sort_by(|a, b| cmp_cut(&th, &a.left, &b.left));
        ClopenSet { theta: th, arcs, full: self.full }
    }

    /// Image under `x ↦ x + kθ`.
    pub fn rotate(&self, k: i64) -> ClopenSet {
        if k == 0 {
            return self.clone();
        }
        let th = self.theta;
        self.rebuild(
            self.arcs.iter().map(|a| Arc { left: a.left.rotate(&th, k), right: a.right.rotate(&th, k) }).collect(),
        )
    }

    /// Image under `x ↦ −x`: `[s⁺, t⁺) ↦ [(−t)⁺, (−s)⁺)`.
    pub fn flip(&self) -> ClopenSet {
        let th = self.theta;
        self.rebuild(self.arcs.iter().map(|a| Arc { left: a.right.negate(&th), right: a.left.negate(&th) }).collect())
    }

    /// Lebesgue measure, as an element of `Q + Qθ`.
    pub fn measure(&self) -> QuadExt {
        if self.full {
            return QuadExt::integer(1);
        }
        self.arcs.iter().fold(QuadExt::zero(), |acc, a| &acc + &a.length(&self.theta))
    }

    pub fn max_arc_length(&self) -> QuadExt {
        if self.full {
            return QuadExt::integer(1);
        }
        let th = self.theta;
        self.arcs.iter().map(|a| a.length(&th)).max_by(|x, y| th.cmp(x, y)).unwrap_or_else(QuadExt::zero)
    }
}

pub(crate) fn sort_cuts(theta: &Theta, cuts: &mut Vec<CutPoint>) {
    cuts.sort_by(|a, b| cmp_cut(theta, a, b));
    cuts.dedup_by(|a, b| a.n == b.n);
}

/// True iff the sets are pairwise disjoint and cover the circle.
pub fn is_partition(sets: &[ClopenSet]) -> bool {
    let Some(first) = sets.first() else {
        return false;
    };
    let mut acc = ClopenSet::empty(first.theta);
    for s in sets {
        if !acc.is_disjoint(s) {
            return false;
        }
        acc = acc.union(s);
    }
    acc.is_full()
}

impl fmt::Display for ClopenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.full {
            return write!(f, "X");
        }
        if self.arcs.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> =
            self.arcs.iter().map(|a| format!("[({})+,({})+)", a.left.value(), a.right.value())).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn th() -> Theta {
        Theta::golden()
    }

    fn arc(i: i64, j: i64) -> ClopenSet {
        ClopenSet::arc_by_index(th(), i, j).unwrap()
    }

    #[test]
    fn complement_of_basic_arc() {
        let a = arc(0, 1);
        assert_eq!(a.complement(), arc(1, 0));
    }

    #[test]
    fn basic_pair_partitions() {
        assert!(is_partition(&[arc(0, 1), arc(1, 0)]));
        assert!(arc(0, 1).intersection(&arc(1, 0)).is_empty());
        assert!(arc(0, 1).union(&arc(1, 0)).is_full());
    }

    #[test]
    fn adjacent_arcs_merge() {
        // 0 < 1-θ < θ
        let u = arc(0, -1).union(&arc(-1, 1));
        assert_eq!(u, arc(0, 1));
        assert_eq!(u.arcs().len(), 1);
    }

    #[test]
    fn wrap_membership_at_zero() {
        let th = th();
        let zero = CutPoint::of(&th, 0);
        let wrap = arc(1, 0); // [θ⁺, 0⁺) holds 0⁻ but not 0⁺
        assert!(!wrap.contains_plus(&zero));
        assert!(wrap.contains(&CirclePoint::Minus(zero)));
        assert!(!wrap.contains(&CirclePoint::Plus(zero)));
        let a = arc(0, 1);
        assert!(a.contains(&CirclePoint::Plus(zero)));
        assert!(!a.contains(&CirclePoint::Minus(zero)));
    }

    #[test]
    fn flip_maps_endpoints() {
        // σ[(1-θ)⁺, θ⁺) = [(-θ)⁺, (θ-1)⁺) = same arc
        let y = arc(-1, 1);
        assert_eq!(y.flip(), y);
        assert_eq!(arc(0, 1).flip(), arc(-1, 0));
    }

    #[test]
    fn measure_of_complementary_arcs() {
        let t = th();
        let total = &arc(0, 1).measure() + &arc(1, 0).measure();
        assert_eq!(t.cmp(&total, &QuadExt::integer(1)), Ordering::Equal);
    }

    #[test]
    fn json_roundtrip_and_rejects_non_normal() {
        let t = th();
        let s = arc(0, 2).union(&arc(3, -1));
        let j = serde_json::to_string(&s.to_json()).unwrap();
        let back = ClopenSet::from_json(t, &serde_json::from_str(&j).unwrap()).unwrap();
        assert_eq!(back, s);
        assert_eq!(serde_json::to_string(&back.to_json()).unwrap(), j);
        let bad = ClopenSetJson {
            full: false,
            arcs: vec![
                Arc { left: CutPoint::of(&t, 0), right: CutPoint::of(&t, -1) },
                Arc { left: CutPoint::of(&t, -1), right: CutPoint::of(&t, 1) },
            ],
        };
        assert!(ClopenSet::from_json(t, &bad).is_err());
        let noncanon = ClopenSetJson {
            full: false,
            arcs: vec![Arc { left: CutPoint { m: 1, n: 0 }, right: CutPoint::of(&t, 1) }],
        };
        assert!(ClopenSet::from_json(t, &noncanon).is_err());
    }
}
