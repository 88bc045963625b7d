use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abgroups::IntMatrix;
use crate::circle::{cmp_cut, ClopenSet, CutPoint, Theta};
use crate::error::{Error, Result};

use super::GroupElement;

/// The cells cut out of the doubled circle by `frac(nθ)`, `lo ≤ n ≤ hi`.
/// Cell `i` is `[cᵢ⁺, cᵢ₊₁⁺)` in circular order; with fewer than two cut
/// points the only cell is the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowPartition {
    theta: Theta,
    lo: i64,
    hi: i64,
    cuts: Vec<CutPoint>,
}

impl WindowPartition {
    pub fn new(theta: Theta, lo: i64, hi: i64) -> Self {
        let mut cuts: Vec<CutPoint> = (lo..=hi).map(|n| CutPoint::of(&theta, n)).collect();
        cuts.sort_by(|a, b| cmp_cut(&theta, a, b));
        WindowPartition { theta, lo, hi, cuts }
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn len(&self) -> usize {
        self.cuts.len().max(1)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cuts(&self) -> &[CutPoint] {
        &self.cuts
    }

    pub fn cell(&self, i: usize) -> ClopenSet {
        if self.cuts.len() < 2 {
            return ClopenSet::full(self.theta);
        }
        let k = self.cuts.len();
        ClopenSet::arc(self.theta, self.cuts[i], self.cuts[(i + 1) % k]).expect("distinct cuts")
    }

    pub fn cells(&self) -> Vec<ClopenSet> {
        (0..self.len()).map(|i| self.cell(i)).collect()
    }

    /// Short labels such as `[θ, 1−θ)`.
    pub fn labels(&self) -> Vec<String> {
        if self.cuts.len() < 2 {
            return vec!["X".into()];
        }
        let k = self.cuts.len();
        (0..k).map(|i| format!("[{}, {})", self.cuts[i].value(), self.cuts[(i + 1) % k].value())).collect()
    }

    fn position(&self, c: &CutPoint) -> Option<usize> {
        self.cuts.binary_search_by(|x| cmp_cut(&self.theta, x, c)).ok()
    }

    fn in_window(&self, c: &CutPoint) -> bool {
        self.lo <= c.n && c.n <= self.hi
    }

    /// Indicator vector of a set that is a union of cells.
    pub fn vector_of(&self, set: &ClopenSet) -> Result<Vec<BigInt>> {
        if set.is_full() {
            return Ok(vec![BigInt::one(); self.len()]);
        }
        if set.is_empty() {
            return Ok(vec![BigInt::zero(); self.len()]);
        }
        if !set.endpoints().iter().all(|c| self.in_window(c)) {
            return Err(Error::NotMeasurable);
        }
        Ok(self.cuts.iter().map(|c| if set.contains_plus(c) { BigInt::one() } else { BigInt::zero() }).collect())
    }

    /// The set whose indicator vector is `v`, for a 0/1 vector.
    pub fn set_of(&self, v: &[bool]) -> ClopenSet {
        let mut acc = ClopenSet::empty(self.theta);
        for (i, &b) in v.iter().enumerate() {
            if b {
                acc = acc.union(&self.cell(i));
            }
        }
        acc
    }

    /// Cell permutation induced by a reflection `x ↦ nθ − x`, which must
    /// preserve the window.
    pub fn involution(&self, g: GroupElement) -> Result<Vec<usize>> {
        if !g.s {
            return Err(Error::InvalidParameter(format!("{g} is not a reflection")));
        }
        if self.cuts.len() < 2 {
            return Ok(vec![0]);
        }
        if self.lo + self.hi != g.n {
            return Err(Error::InvalidParameter(format!(
                "window [{}, {}] is not invariant under {g}",
                self.lo, self.hi
            )));
        }
        let k = self.cuts.len();
        (0..k)
            .map(|i| {
                let image_left = CutPoint::of(&self.theta, g.n - self.cuts[(i + 1) % k].n);
                self.position(&image_left).ok_or_else(|| Error::Verification("reflected cut left the window".into()))
            })
            .collect()
    }

    /// Matrix of `1_C ↦ 1_{gC}` from these cells into the cells of `target`.
    pub fn push_matrix(&self, g: GroupElement, target: &WindowPartition) -> Result<IntMatrix> {
        let mut cols = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let c = self.cell(i);
            let img = if g.s { c.flip().rotate(g.n) } else { c.rotate(g.n) };
            cols.push(target.vector_of(&img)?);
        }
        Ok(IntMatrix::from_columns(&cols, target.len()))
    }

    /// Inclusion of cell indicators into a finer partition.
    pub fn refinement(&self, finer: &WindowPartition) -> Result<IntMatrix> {
        self.push_matrix(GroupElement::IDENTITY, finer)
    }
}

/// `e_i ↦ e_{perm[i]}`.
pub fn permutation_matrix(perm: &[usize]) -> IntMatrix {
    let n = perm.len();
    IntMatrix::from_fn(n, n, |i, j| if perm[j] == i { BigInt::one() } else { BigInt::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells_partition_and_refine() {
        let th = Theta::golden();
        for n in 0..6 {
            let p = WindowPartition::new(th, -n, n);
            assert!(crate::circle::is_partition(&p.cells()));
            let q = WindowPartition::new(th, -n - 1, n + 1);
            let r = p.refinement(&q).unwrap();
            for (i, c) in p.cells().iter().enumerate() {
                let bits: Vec<bool> = r.column(i).iter().map(|x| x.is_one()).collect();
                assert_eq!(&q.set_of(&bits), c);
            }
        }
    }

    #[test]
    fn coarse_sets_rejected() {
        let th = Theta::golden();
        let p = WindowPartition::new(th, -1, 1);
        let a = ClopenSet::arc_by_index(th, 0, 2).unwrap();
        assert!(matches!(p.vector_of(&a), Err(Error::NotMeasurable)));
    }
}
