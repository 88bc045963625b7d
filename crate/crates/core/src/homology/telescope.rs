//! `H₀(Z, C(X, Z)) = lim coker(ι − φ)` computed from finite cell partitions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abgroups::{unimodular_inverse, AbHom, DirectSystem, FGAbGroup, IntMatrix, Limit, Presentation};
use crate::circle::{ClopenSet, CutPoint, Theta};
use crate::error::{Error, Result};
use crate::systems::{permutation_matrix, GroupElement, Odometer, WindowPartition};

use super::GroupValue;

/// Largest level partition the odometer telescope will build.
pub const ODOMETER_CELL_CAP: u64 = 512;

/// Stage `T` is the cells of the cut window `[−T, T]` modulo `[C] − [φC]` for
/// the cells `C` of window `[−T, T − 1]`, the ones with `C` and `φC` both
/// unions of stage cells.
#[derive(Clone, Debug)]
pub struct RotationTelescope {
    pub theta: Theta,
    pub system: DirectSystem,
    pub limit: Limit,
    /// `σ` as an endomorphism of each stage.
    sigma_maps: Vec<AbHom>,
}

fn window(theta: Theta, t: i64) -> WindowPartition {
    WindowPartition::new(theta, -t, t)
}

fn rotation_stage(theta: Theta, t: i64) -> Result<Presentation> {
    let coarse = WindowPartition::new(theta, -t, t - 1);
    let fine = window(theta, t);
    let rel = coarse.refinement(&fine)?.sub(&coarse.push_matrix(GroupElement::phi(), &fine)?);
    Presentation::new(fine.len(), rel)
}

pub fn rotation_telescope(theta: Theta, max_level: usize) -> Result<RotationTelescope> {
    if max_level < 3 {
        return Err(Error::InvalidParameter("the telescope needs at least 3 levels".into()));
    }
    let top = max_level as i64;
    let stages = (1..=top).map(|t| rotation_stage(theta, t)).collect::<Result<Vec<_>>>()?;
    let maps = (1..top).map(|t| window(theta, t).refinement(&window(theta, t + 1))).collect::<Result<Vec<_>>>()?;
    let sigma_maps = (1..=top)
        .map(|t| {
            let w = window(theta, t);
            let p = stages[(t - 1) as usize].clone();
            AbHom::new(p.clone(), p, w.push_matrix(GroupElement::sigma(), &w)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let system = DirectSystem::new(1, stages, maps)?;
    let limit = system.limit()?;
    Ok(RotationTelescope { theta, system, limit, sigma_maps })
}

impl RotationTelescope {
    pub fn last_level(&self) -> usize {
        self.system.last_level()
    }

    pub fn partition(&self, level: usize) -> WindowPartition {
        window(self.theta, level as i64)
    }

    pub fn h0(&self) -> Result<GroupValue> {
        match &self.limit {
            Limit::Stabilized { group, .. } => Ok(GroupValue::Finite(group.clone())),
            Limit::Localization(d) => Ok(GroupValue::Localized { descriptor: d.clone(), torsion: Vec::new() }),
            Limit::Undetermined { level } => Err(Error::NotStabilized { level: *level }),
        }
    }

    fn stable_free_rank(&self) -> Result<usize> {
        match &self.limit {
            Limit::Stabilized { group, .. } if group.torsion.is_empty() => Ok(group.rank),
            Limit::Stabilized { .. } => {
                Err(Error::Verification("σ_* is only computed for a torsion-free limit".into()))
            }
            _ => Err(Error::NotStabilized { level: self.last_level() }),
        }
    }

    /// `σ_*` on the limit in the canonical coordinates of the last stage.
    pub fn sigma_star(&self) -> Result<IntMatrix> {
        self.stable_free_rank()?;
        let s = self.sigma_maps[self.last_level() - 1].canonical_matrix();
        if unimodular_inverse(&s).is_none() {
            return Err(Error::Verification("σ_* is not invertible".into()));
        }
        Ok(s)
    }

    /// `(1 + σ_*)H₀`.
    pub fn one_plus_sigma(&self) -> Result<FGAbGroup> {
        let r = self.stable_free_rank()?;
        let s = self.sigma_star()?;
        let h = AbHom::new(Presentation::free(r), Presentation::free(r), IntMatrix::identity(r).add(&s))?;
        Ok(h.image())
    }

    /// Canonical coordinates at the last level of the class of a set.
    pub fn class_coords(&self, set: &ClopenSet) -> Result<Vec<BigInt>> {
        let level = self.last_level();
        let v = self.partition(level).vector_of(set)?;
        Ok(self.system.stage(level).canonical().coords(&v))
    }

    /// Whether `[0⁺, θ⁺)` and `[θ⁺, 1⁺)` form a basis of the limit.
    pub fn generators_check(&self) -> Result<bool> {
        let r = self.stable_free_rank()?;
        if r != 2 {
            return Ok(false);
        }
        let zero = CutPoint::of(&self.theta, 0);
        let one = CutPoint::of(&self.theta, 1);
        let a = ClopenSet::arc(self.theta, zero, one)?;
        let b = ClopenSet::arc(self.theta, one, zero)?;
        let cols = vec![self.class_coords(&a)?, self.class_coords(&b)?];
        Ok(unimodular_inverse(&IntMatrix::from_columns(&cols, 2)).is_some())
    }
}

/// Stage `i` is `Z^{nᵢ}` modulo `e_x − e_{x+1}`; the connecting maps send a
/// residue class to the sum of the residues above it.
#[derive(Clone, Debug)]
pub struct OdometerTelescope {
    pub system: DirectSystem,
    pub limit: Limit,
    /// `σ_*` on each stage, `±1` on the generator.
    pub sigma_signs: Vec<i64>,
}

fn odometer_stage(od: &Odometer, level: usize) -> Result<(Presentation, Vec<usize>)> {
    let n = od.modulus(level)? as usize;
    let (phi, sigma) = od.level_permutations(level)?;
    let rel = IntMatrix::identity(n).sub(&permutation_matrix(&phi));
    Ok((Presentation::new(n, rel)?, sigma))
}

pub fn odometer_telescope(od: &Odometer, max_level: usize) -> Result<OdometerTelescope> {
    let mut top = 0;
    for level in 1..=max_level.min(od.levels()) {
        if od.modulus(level)? > ODOMETER_CELL_CAP {
            break;
        }
        top = level;
    }
    if top < 3 {
        return Err(Error::NotStabilized { level: top });
    }
    let mut stages = Vec::new();
    let mut sigma_signs = Vec::new();
    for level in 1..=top {
        let (p, sigma) = odometer_stage(od, level)?;
        let h = AbHom::new(p.clone(), p.clone(), permutation_matrix(&sigma))?;
        let c = h.canonical_matrix();
        if c.shape() != (1, 1) {
            return Err(Error::Verification(format!("level {level} coinvariants are not cyclic")));
        }
        let sign = if c[(0, 0)].is_one() {
            1
        } else if c[(0, 0)] == -BigInt::one() {
            -1
        } else {
            return Err(Error::Verification("σ_* is not ±1".into()));
        };
        sigma_signs.push(sign);
        stages.push(p);
    }
    let maps = (1..top)
        .map(|level| {
            let (coarse, fine) = (od.modulus(level)? as usize, od.modulus(level + 1)? as usize);
            Ok(IntMatrix::from_fn(fine, coarse, |y, x| if y % coarse == x { BigInt::one() } else { BigInt::zero() }))
        })
        .collect::<Result<Vec<_>>>()?;
    let system = DirectSystem::new(1, stages, maps)?;
    let limit = system.limit()?;
    Ok(OdometerTelescope { system, limit, sigma_signs })
}

impl OdometerTelescope {
    pub fn h0(&self) -> Result<GroupValue> {
        match &self.limit {
            Limit::Stabilized { group, .. } => Ok(GroupValue::Finite(group.clone())),
            Limit::Localization(d) => Ok(GroupValue::Localized { descriptor: d.clone(), torsion: Vec::new() }),
            Limit::Undetermined { level } => Err(Error::NotStabilized { level: *level }),
        }
    }

    /// `(1 + σ_*)H₀`: all of `H₀` when `σ_* = 1`, zero when `σ_* = −1`.
    pub fn one_plus_sigma(&self) -> Result<GroupValue> {
        if self.sigma_signs.iter().all(|&s| s == 1) {
            self.h0()
        } else if self.sigma_signs.iter().all(|&s| s == -1) {
            Ok(GroupValue::trivial())
        } else {
            Err(Error::Verification("σ_* changes sign along the telescope".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_telescope_is_rank_two() {
        let t = rotation_telescope(Theta::golden(), 5).unwrap();
        assert_eq!(t.h0().unwrap(), GroupValue::Finite(FGAbGroup::free(2)));
        assert_eq!(t.sigma_star().unwrap(), IntMatrix::identity(2));
        assert_eq!(t.one_plus_sigma().unwrap(), FGAbGroup::free(2));
        assert!(t.generators_check().unwrap());
    }

    #[test]
    fn odometer_telescope_localizes() {
        let t = odometer_telescope(&Odometer::geometric(3, 5).unwrap(), 5).unwrap();
        match t.h0().unwrap() {
            GroupValue::Localized { descriptor, .. } => assert_eq!(descriptor.localization, "Z[1/3]"),
            other => panic!("{other:?}"),
        }
        assert!(t.sigma_signs.iter().all(|&s| s == 1));
    }
}
