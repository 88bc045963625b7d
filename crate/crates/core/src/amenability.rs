//! The transversal Følner sets `F_m` of `Z ⋊ Z₂`, their invariance ratios,
//! and single-tower castles for dihedral odometers.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::systems::{GroupElement, Odometer};

/// Even `m`: `[−m/2, −1] × {1} ∪ [0, m/2) × {0}`.
/// Odd `m`: `[−(m−1)/2, −1] × {1} ∪ [0, (m−1)/2] × {0}`.
pub fn folner(m: i64) -> Result<Vec<GroupElement>> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!("folner set needs m ≥ 1, got {m}")));
    }
    let (flips, shifts) = if m % 2 == 0 { (m / 2, m / 2) } else { ((m - 1) / 2, (m + 1) / 2) };
    let mut out: Vec<GroupElement> = (-flips..0).map(|n| GroupElement::new(n, true)).collect();
    out.extend((0..shifts).map(|n| GroupElement::new(n, false)));
    Ok(out)
}

/// Whether the first coordinates hit every residue mod `m` exactly once.
pub fn is_transversal(f: &[GroupElement], m: i64) -> bool {
    if m < 1 || f.len() as i64 != m {
        return false;
    }
    let mut seen = vec![false; m as usize];
    for g in f {
        let r = g.n.rem_euclid(m) as usize;
        if seen[r] {
            return false;
        }
        seen[r] = true;
    }
    true
}

/// `|KF Δ F| / |F|`.
pub fn folner_ratio(f: &[GroupElement], k: &[GroupElement]) -> Result<Ratio<i64>> {
    let fs: BTreeSet<GroupElement> = f.iter().copied().collect();
    if fs.is_empty() {
        return Err(Error::InvalidParameter("empty Følner set".into()));
    }
    let kf: BTreeSet<GroupElement> = k.iter().flat_map(|a| fs.iter().map(move |b| a.mul(*b))).collect();
    let sym = kf.symmetric_difference(&fs).count() as i64;
    Ok(Ratio::new(sym, fs.len() as i64))
}

/// `{e, φ, σ}`.
pub fn standard_k() -> Vec<GroupElement> {
    vec![GroupElement::IDENTITY, GroupElement::phi(), GroupElement::sigma()]
}

/// One tower in `Z/n_j`: the residues `≡ 0 mod nₙ`, moved by `F_{nₙ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OdometerCastle {
    /// Level of the base cylinder.
    pub base_level: usize,
    /// Level at which the partition is checked.
    pub level: usize,
    pub modulus: u64,
    pub base: Vec<u64>,
    pub shape: Vec<GroupElement>,
}

impl OdometerCastle {
    /// Base `U(n, Γₙ)` realized in `Z/n_j`, shape `F_{nₙ}`.
    pub fn build(od: &Odometer, n: usize, j: usize) -> Result<Self> {
        if j < n {
            return Err(Error::InvalidParameter(format!("level {j} is coarser than base level {n}")));
        }
        let nn = od.modulus(n)?;
        let nj = od.modulus(j)?;
        let base: Vec<u64> = (0..nj / nn).map(|t| t * nn).collect();
        let shape = folner(nn as i64)?;
        let castle = OdometerCastle { base_level: n, level: j, modulus: nj, base, shape };
        if !castle.is_partition() {
            return Err(Error::Verification("odometer tower does not partition the level".into()));
        }
        Ok(castle)
    }

    /// All translates `g·x`, `g ∈ shape`, `x ∈ base`, hit each residue once.
    pub fn is_partition(&self) -> bool {
        let m = self.modulus as i128;
        let mut hit = vec![false; self.modulus as usize];
        for g in &self.shape {
            for &x in &self.base {
                let y = if g.s { -(x as i128) } else { x as i128 };
                let r = (g.n as i128 + y).rem_euclid(m) as usize;
                if hit[r] {
                    return false;
                }
                hit[r] = true;
            }
        }
        hit.iter().all(|&b| b)
    }
}
