//! Direct systems `G₁ → G₂ → …` of finitely presented groups and detection of
//! their limit from a finite window.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::group::{AbHom, FGAbGroup, Presentation};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct DirectSystem {
    first_level: usize,
    stages: Vec<Presentation>,
    maps: Vec<AbHom>,
}

/// Finite description of a rank-one limit `Z →×k₁ Z →×k₂ …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizationDescriptor {
    /// Printable iso type such as `Z[1/6]`.
    pub localization: String,
    pub primes: Vec<u64>,
    pub multipliers: Vec<u64>,
    /// Shortest repeating block of the multiplier sequence, when one repeats.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<Vec<u64>>,
}

impl LocalizationDescriptor {
    pub fn from_multipliers(multipliers: Vec<u64>) -> Self {
        let mut primes: Vec<u64> = multipliers.iter().flat_map(|&k| prime_factors(k)).collect();
        primes.sort_unstable();
        primes.dedup();
        let localization =
            if primes.is_empty() { "Z".to_string() } else { format!("Z[1/{}]", primes.iter().product::<u64>()) };
        let period = (1..=multipliers.len() / 2)
            .find(|&p| (p..multipliers.len()).all(|i| multipliers[i] == multipliers[i - p]))
            .map(|p| multipliers[..p].to_vec());
        LocalizationDescriptor { localization, primes, multipliers, period }
    }

    /// Same iso type: the same set of inverted primes.
    pub fn same_type(&self, other: &LocalizationDescriptor) -> bool {
        self.primes == other.primes
    }
}

fn prime_factors(mut k: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            out.push(p);
            while k.is_multiple_of(p) {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Limit {
    /// All connecting maps from `level` on are isomorphisms onto `group`.
    Stabilized {
        group: FGAbGroup,
        level: usize,
    },
    Localization(LocalizationDescriptor),
    Undetermined {
        level: usize,
    },
}

impl DirectSystem {
    /// `maps[t]` goes from `stages[t]` to `stages[t + 1]`; stage `t` sits at
    /// level `first_level + t`.
    pub fn new(first_level: usize, stages: Vec<Presentation>, maps: Vec<IntMatrix>) -> Result<Self> {
        if stages.is_empty() || maps.len() + 1 != stages.len() {
            return Err(Error::Dimension(format!(
                "{} stages need {} maps, got {}",
                stages.len(),
                stages.len().saturating_sub(1),
                maps.len()
            )));
        }
        let homs = maps
            .into_iter()
            .enumerate()
            .map(|(t, m)| AbHom::new(stages[t].clone(), stages[t + 1].clone(), m))
            .collect::<Result<Vec<_>>>()?;
        Ok(DirectSystem { first_level, stages, maps: homs })
    }

    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    pub fn first_level(&self) -> usize {
        self.first_level
    }

    pub fn last_level(&self) -> usize {
        self.first_level + self.stages.len() - 1
    }

    pub fn stage(&self, level: usize) -> &Presentation {
        &self.stages[level - self.first_level]
    }

    pub fn map_from(&self, level: usize) -> &AbHom {
        &self.maps[level - self.first_level]
    }

    pub fn groups(&self) -> Vec<FGAbGroup> {
        self.stages.iter().map(Presentation::group).collect()
    }

    /// Drops the first `k` stages.
    pub fn drop_prefix(&self, k: usize) -> DirectSystem {
        DirectSystem {
            first_level: self.first_level + k,
            stages: self.stages[k..].to_vec(),
            maps: self.maps[k..].to_vec(),
        }
    }

    /// Reads off the limit. Stabilization needs at least two consecutive
    /// isomorphisms at the end of the computed range.
    pub fn limit(&self) -> Result<Limit> {
        if self.stages.len() < 3 {
            return Err(Error::InvalidParameter("limit needs at least 3 stages".into()));
        }
        let iso: Vec<bool> = self.maps.iter().map(AbHom::is_iso).collect();
        let tail = iso.iter().rev().take_while(|&&b| b).count();
        if tail >= 2 {
            let t = iso.len() - tail;
            return Ok(Limit::Stabilized { group: self.stages[t].group(), level: self.first_level + t });
        }
        let groups = self.groups();
        if groups.iter().all(|g| *g == FGAbGroup::free(1)) {
            let multipliers = self
                .maps
                .iter()
                .map(|h| {
                    let k = h.canonical_matrix()[(0, 0)].abs();
                    k.to_u64().ok_or_else(|| Error::InvalidParameter("multiplier too large".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            if multipliers.iter().all(|&k| k != 0) {
                return Ok(Limit::Localization(LocalizationDescriptor::from_multipliers(multipliers)));
            }
        }
        Ok(Limit::Undetermined { level: self.last_level() })
    }
}

/// Inverse of a unimodular square matrix, if it is one.
pub fn unimodular_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    if m.rows() != m.cols() {
        return None;
    }
    let r = super::snf::snf(m);
    if r.rank != m.rows() || (0..r.rank).any(|i| !r.s[(i, i)].is_one()) {
        return None;
    }
    // u m v = I  =>  m^-1 = v u
    Some(r.v.mul(&r.u))
}

/// Scalar helper used in tests and stage construction.
pub fn scalar(k: i64) -> IntMatrix {
    IntMatrix::from_fn(1, 1, |_, _| BigInt::from(k))
}
