//! Homology from the splitting `D∞ = ⟨σ⟩ * ⟨φσ⟩` over finite cell modules.

use crate::abgroups::{AbHom, DirectSystem, FGAbGroup, IntMatrix, Limit, Presentation};
use crate::error::{Error, Result};
use crate::systems::{DenjoyFlip, WindowPartition};

use super::InvolutionModule;

/// Two involution modules and a common module mapping into both.
#[derive(Clone, Debug)]
pub struct FreeProductLevel {
    pub sigma: InvolutionModule,
    pub phi_sigma: InvolutionModule,
    /// `common → sigma`.
    pub iota_sigma: IntMatrix,
    /// `common → phi_sigma`.
    pub iota_phi_sigma: IntMatrix,
}

impl FreeProductLevel {
    pub fn new(
        sigma: InvolutionModule,
        phi_sigma: InvolutionModule,
        iota_sigma: IntMatrix,
        iota_phi_sigma: IntMatrix,
    ) -> Result<Self> {
        let c = iota_sigma.cols();
        if iota_sigma.rows() != sigma.dim() || iota_phi_sigma.shape() != (phi_sigma.dim(), c) {
            return Err(Error::Dimension("common module maps do not match the involution modules".into()));
        }
        Ok(FreeProductLevel { sigma, phi_sigma, iota_sigma, iota_phi_sigma })
    }

    /// One point with trivial action: `Z`, `Z/2 ⊕ Z/2`, `0`, ….
    pub fn trivial() -> Self {
        let one = || InvolutionModule::unlabelled(IntMatrix::identity(1)).expect("identity");
        FreeProductLevel::new(one(), one(), IntMatrix::identity(1), IntMatrix::identity(1)).expect("shapes")
    }

    pub fn common_dim(&self) -> usize {
        self.iota_sigma.cols()
    }

    /// Generators `Mσ ⊕ Mφσ`; relations `(σ − 1)`, `(φσ − 1)` and `(ι_σ c, −ι_φσ c)`.
    pub fn h0_presentation(&self) -> Presentation {
        let (a, b) = (self.sigma.dim(), self.phi_sigma.dim());
        let blocks = self.sigma.a_minus_i().block_diag(&self.phi_sigma.a_minus_i());
        let common = self.iota_sigma.vstack(&self.iota_phi_sigma.neg());
        Presentation::new(a + b, blocks.hstack(&common)).expect("row count")
    }

    pub fn h0(&self) -> FGAbGroup {
        self.h0_presentation().group()
    }

    pub fn h1(&self) -> FGAbGroup {
        self.odd()
    }

    pub fn odd(&self) -> FGAbGroup {
        self.sigma.h_odd().direct_sum(&self.phi_sigma.h_odd())
    }

    pub fn even(&self) -> FGAbGroup {
        self.sigma.h_even().direct_sum(&self.phi_sigma.h_even())
    }

    /// Whether `c ↦ ([ι_σ c], −[ι_φσ c])` into the coinvariants is injective.
    pub fn corestriction_injective(&self) -> Result<bool> {
        let target = self.sigma.coinvariant_presentation().direct_sum(&self.phi_sigma.coinvariant_presentation());
        let m = self.iota_sigma.vstack(&self.iota_phi_sigma.neg());
        Ok(AbHom::new(Presentation::free(self.common_dim()), target, m)?.is_injective())
    }

    /// When `ι_φσ` is the identity: `H₀` maps isomorphically onto
    /// `Mσ / ((σ − 1)Mσ + ι_σ(φσ − 1)M_c)` by `(x, y) ↦ x + ι_σ y`.
    pub fn middle_exact(&self) -> Result<bool> {
        if self.iota_phi_sigma != IntMatrix::identity(self.phi_sigma.dim()) {
            return Err(Error::InvalidParameter("needs ι_φσ = identity".into()));
        }
        let rel = self.sigma.a_minus_i().hstack(&self.iota_sigma.mul(&self.phi_sigma.a_minus_i()));
        let quotient = Presentation::new(self.sigma.dim(), rel)?;
        let m = IntMatrix::identity(self.sigma.dim()).hstack(&self.iota_sigma);
        Ok(AbHom::new(self.h0_presentation(), quotient, m)?.is_iso())
    }
}

fn sigma_window(sys: &DenjoyFlip, level: i64) -> WindowPartition {
    WindowPartition::new(sys.theta, -level, level)
}

fn phi_sigma_window(sys: &DenjoyFlip, level: i64) -> WindowPartition {
    WindowPartition::new(sys.theta, 1 - level, level)
}

/// Level `N`: `Mσ` on cut window `[−N, N]`, `Mφσ = M_c` on `[1 − N, N]`.
pub fn denjoy_level(sys: &DenjoyFlip, level: i64) -> Result<FreeProductLevel> {
    if level < 1 {
        return Err(Error::InvalidParameter("free product levels start at 1".into()));
    }
    let lp = sys.level_partition(level)?;
    let sigma = InvolutionModule::from_permutation(lp.cells.labels(), &lp.sigma)?;
    let phi_sigma = InvolutionModule::from_permutation(lp.phi_sigma_cells.labels(), &lp.phi_sigma)?;
    let iota_sigma = lp.phi_sigma_cells.refinement(&lp.cells)?;
    let iota_phi_sigma = IntMatrix::identity(lp.phi_sigma_cells.len());
    FreeProductLevel::new(sigma, phi_sigma, iota_sigma, iota_phi_sigma)
}

/// Free-product homology of the flip system over levels `1..=max_level`.
#[derive(Clone, Debug)]
pub struct FreeProductHomology {
    pub h0_limit: Limit,
    pub h1: FGAbGroup,
    pub odd: FGAbGroup,
    pub even: FGAbGroup,
    /// Levels at which `(cor, −cor)` is injective and the middle map is an iso.
    pub exact_levels: Vec<usize>,
}

pub fn denjoy_free_product(sys: &DenjoyFlip, max_level: usize) -> Result<FreeProductHomology> {
    if max_level < 3 {
        return Err(Error::InvalidParameter("needs at least 3 levels".into()));
    }
    let levels = (1..=max_level as i64).map(|n| denjoy_level(sys, n)).collect::<Result<Vec<_>>>()?;
    let stages = levels.iter().map(FreeProductLevel::h0_presentation).collect();
    let maps = (1..max_level as i64)
        .map(|n| {
            let s = sigma_window(sys, n).refinement(&sigma_window(sys, n + 1))?;
            let p = phi_sigma_window(sys, n).refinement(&phi_sigma_window(sys, n + 1))?;
            Ok(s.block_diag(&p))
        })
        .collect::<Result<Vec<_>>>()?;
    let h0_limit = DirectSystem::new(1, stages, maps)?.limit()?;
    let last = levels.last().expect("nonempty");
    let (odd, even) = (last.odd(), last.even());
    if levels.iter().any(|l| l.odd() != odd || l.even() != even) {
        return Err(Error::NotStabilized { level: max_level });
    }
    let mut exact_levels = Vec::new();
    for (i, l) in levels.iter().enumerate() {
        if l.corestriction_injective()? && l.middle_exact()? {
            exact_levels.push(i + 1);
        }
    }
    Ok(FreeProductHomology { h0_limit, h1: odd.clone(), odd, even, exact_levels })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_with_trivial_action() {
        let l = FreeProductLevel::trivial();
        assert_eq!(l.h0(), FGAbGroup::free(1));
        assert_eq!(l.h1(), FGAbGroup::elementary_two(2));
        assert!(l.even().is_trivial());
        assert!(l.corestriction_injective().unwrap());
        assert!(l.middle_exact().unwrap());
    }

    #[test]
    fn golden_levels() {
        let sys = DenjoyFlip::golden();
        let fp = denjoy_free_product(&sys, 5).unwrap();
        assert_eq!(fp.h0_limit, Limit::Stabilized { group: FGAbGroup::free(2), level: 1 });
        assert_eq!(fp.odd, FGAbGroup::elementary_two(3));
        assert!(fp.even.is_trivial());
        assert_eq!(fp.exact_levels, vec![1, 2, 3, 4, 5]);
    }
}
