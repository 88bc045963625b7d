use std::cmp::Ordering;

use crate::circle::{CirclePoint, ClopenSet, ClopenSetJson, CutPoint, QuadExt, Theta};
use crate::error::{Error, Result};

use super::action::{rotation_return_bound, DihedralSystem};
use super::partition::WindowPartition;
use super::GroupElement;

/// Rotation by `θ` together with the flip `x ↦ −x` on the doubled circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenjoyFlip {
    pub theta: Theta,
}

/// Cells of the level-`N` windows and the generator actions on them.
#[derive(Clone, Debug)]
pub struct LevelPartition {
    pub level: i64,
    /// Cut window `[−N, N]`, invariant under `σ`.
    pub cells: WindowPartition,
    pub sigma: Vec<usize>,
    /// Cut window `[1 − N, N]`, invariant under `φσ`.
    pub phi_sigma_cells: WindowPartition,
    pub phi_sigma: Vec<usize>,
    /// `1_C ↦ 1_{φC}` from level `N` into level `N + 1`.
    pub phi: crate::abgroups::IntMatrix,
}

impl DenjoyFlip {
    pub fn new(theta: Theta) -> Self {
        DenjoyFlip { theta }
    }

    pub fn golden() -> Self {
        DenjoyFlip::new(Theta::golden())
    }

    pub fn arc(&self, i: i64, j: i64) -> Result<ClopenSet> {
        ClopenSet::arc_by_index(self.theta, i, j)
    }

    /// Exact image of a point under `φⁿσˢ`.
    pub fn act_point(&self, g: GroupElement, x: &CirclePoint) -> CirclePoint {
        let y = if g.s { x.flip(&self.theta) } else { x.clone() };
        y.rotate(&self.theta, g.n)
    }

    /// Solutions of `x = (−1)ˢx + nθ`, sorted. Solutions in `Z + θZ` are
    /// dropped because the flip exchanges the two copies of a cut point.
    pub fn fixed_points(&self, g: GroupElement) -> Result<Vec<QuadExt>> {
        if g.is_identity() {
            return Err(Error::IdentityElement);
        }
        if !g.s {
            return Ok(Vec::new());
        }
        let half_n = QuadExt::from_ints(0, g.n).half();
        let mut out: Vec<QuadExt> = [half_n.clone(), &half_n + &QuadExt::rational(1, 2)]
            .into_iter()
            .filter(|x| !x.is_cut_value())
            .map(|x| self.theta.frac(&x))
            .collect();
        out.sort_by(|a, b| self.theta.cmp(a, b));
        for x in &out {
            let p = CirclePoint::interior(&self.theta, x.clone())?;
            if self.act_point(g, &p) != p {
                return Err(Error::Verification(format!("{x} is not fixed by {g}")));
            }
        }
        Ok(out)
    }

    pub fn level_partition(&self, level: i64) -> Result<LevelPartition> {
        if level < 0 {
            return Err(Error::InvalidParameter("level must be non-negative".into()));
        }
        let cells = WindowPartition::new(self.theta, -level, level);
        let phi_sigma_cells = WindowPartition::new(self.theta, 1 - level, level);
        let next = WindowPartition::new(self.theta, -level - 1, level + 1);
        let sigma = cells.involution(GroupElement::sigma())?;
        let phi_sigma = phi_sigma_cells.involution(GroupElement::phi_sigma())?;
        let phi = cells.push_matrix(GroupElement::phi(), &next)?;
        Ok(LevelPartition { level, cells, sigma, phi_sigma_cells, phi_sigma, phi })
    }
}

/// Endpoints of `[c⁺, (−c)⁺)`, where `c` is the largest of `frac(nθ)`,
/// `|n| ≤ window`, lying below `½`.
pub(crate) fn neighbourhood_of_half(theta: &Theta, window: i64) -> Option<(CutPoint, CutPoint)> {
    let half = QuadExt::rational(1, 2);
    let mut best: Option<CutPoint> = None;
    for n in -window..=window {
        let c = CutPoint::of(theta, n);
        if theta.cmp(&c.value(), &half) != Ordering::Less {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => crate::circle::cmp_cut(theta, &c, b) == Ordering::Greater,
        };
        if better {
            best = Some(c);
        }
    }
    let c = best?;
    if c.n == 0 {
        return None;
    }
    Some((c, c.negate(theta)))
}

impl DihedralSystem for DenjoyFlip {
    type Set = ClopenSet;

    fn empty(&self) -> ClopenSet {
        ClopenSet::empty(self.theta)
    }
    fn full(&self) -> ClopenSet {
        ClopenSet::full(self.theta)
    }
    fn union(&self, a: &ClopenSet, b: &ClopenSet) -> ClopenSet {
        a.union(b)
    }
    fn intersection(&self, a: &ClopenSet, b: &ClopenSet) -> ClopenSet {
        a.intersection(b)
    }
    fn difference(&self, a: &ClopenSet, b: &ClopenSet) -> ClopenSet {
        a.difference(b)
    }
    fn is_empty(&self, a: &ClopenSet) -> bool {
        a.is_empty()
    }
    fn phi_pow(&self, a: &ClopenSet, k: i64) -> ClopenSet {
        a.rotate(k)
    }
    fn sigma(&self, a: &ClopenSet) -> ClopenSet {
        a.flip()
    }
    fn measure(&self, a: &ClopenSet) -> QuadExt {
        a.measure()
    }
    fn return_time_bound(&self, y: &ClopenSet) -> Result<u64> {
        if y.is_full() {
            return Ok(1);
        }
        rotation_return_bound(&self.theta, &y.max_arc_length())
    }
    fn symmetric_neighbourhood(&self, window: i64) -> Result<ClopenSet> {
        match neighbourhood_of_half(&self.theta, window) {
            Some((l, r)) => ClopenSet::arc(self.theta, l, r),
            None => Ok(self.full()),
        }
    }
    fn set_to_json(&self, a: &ClopenSet) -> serde_json::Value {
        serde_json::to_value(a.to_json()).expect("clopen sets serialize")
    }
    fn set_from_json(&self, v: &serde_json::Value) -> Result<ClopenSet> {
        let raw: ClopenSetJson = serde_json::from_value(v.clone())?;
        ClopenSet::from_json(self.theta, &raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_fixed_points() {
        let sys = DenjoyFlip::golden();
        let s: Vec<String> = sys.fixed_points(GroupElement::sigma()).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["1/2"]);
        let ps: Vec<String> =
            sys.fixed_points(GroupElement::phi_sigma()).unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(ps, vec!["θ/2", "(1+θ)/2"]);
        assert!(sys.fixed_points(GroupElement::phi()).unwrap().is_empty());
        assert!(matches!(sys.fixed_points(GroupElement::IDENTITY), Err(Error::IdentityElement)));
    }

    #[test]
    fn even_shift_keeps_one_fixed_point() {
        let sys = DenjoyFlip::golden();
        assert_eq!(sys.fixed_points(GroupElement::new(4, true)).unwrap().len(), 1);
        assert_eq!(sys.fixed_points(GroupElement::new(-3, true)).unwrap().len(), 2);
    }

    #[test]
    fn flip_invariant_arc() {
        let sys = DenjoyFlip::golden();
        // [(1−θ)⁺, θ⁺)
        let y = sys.arc(-1, 1).unwrap();
        assert_eq!(sys.sigma(&y), y);
        let a = sys.arc(0, 1).unwrap();
        assert_eq!(sys.act(GroupElement::phi(), &a), sys.arc(1, 2).unwrap());
        assert_eq!(sys.act(GroupElement::IDENTITY, &a), a);
    }

    #[test]
    fn level_one_cells() {
        let sys = DenjoyFlip::golden();
        let lp = sys.level_partition(1).unwrap();
        assert_eq!(lp.cells.len(), 3);
        let fixed: Vec<usize> = (0..3).filter(|&i| lp.sigma[i] == i).collect();
        assert_eq!(fixed.len(), 1);
        let half = CirclePoint::interior(&sys.theta, QuadExt::rational(1, 2)).unwrap();
        assert!(lp.cells.cell(fixed[0]).contains(&half));
        let lp0 = sys.level_partition(0).unwrap();
        assert_eq!(lp0.cells.len(), 1);
        assert_eq!(lp0.sigma, vec![0]);
    }

    #[test]
    fn neighbourhood_is_flip_invariant_and_shrinks() {
        let sys = DenjoyFlip::golden();
        let mut prev = sys.full();
        for w in [1, 2, 4, 8, 16] {
            let y = sys.symmetric_neighbourhood(w).unwrap();
            assert_eq!(sys.sigma(&y), y);
            assert!(y.is_subset(&prev));
            prev = y;
        }
    }
}
