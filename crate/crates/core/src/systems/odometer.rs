use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

use super::GroupElement;

/// The dihedral odometer along `Γᵢ = nᵢZ ⋊ Z₂`. Level `i` is `Z/nᵢ`, on
/// which `(k, s)` acts by `x ↦ k + (−1)ˢx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Odometer {
    chain: Vec<u64>,
}

/// Limit count of compatible threads of level-wise fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ThreadCount {
    pub count: u64,
    pub stabilized_at: usize,
    /// Number of level-`i` residues reached by fixed points of the top level.
    #[serde(skip)]
    pub per_level: Vec<u64>,
}

enum Solutions {
    All,
    Some(Vec<u64>),
}

impl Odometer {
    /// `chain[i − 1] = nᵢ`; must be strictly increasing with `nᵢ | nᵢ₊₁`.
    pub fn new(chain: Vec<u64>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidParameter("empty chain".into()));
        }
        if chain[0] == 0 {
            return Err(Error::InvalidParameter("chain entries must be positive".into()));
        }
        for w in chain.windows(2) {
            if w[1] <= w[0] || w[1] % w[0] != 0 {
                return Err(Error::InvalidParameter(format!(
                    "chain must increase strictly by divisibility, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Odometer { chain })
    }

    /// `nᵢ = baseⁱ` for `i = 1..=levels`.
    pub fn geometric(base: u64, levels: usize) -> Result<Self> {
        if base < 2 || levels == 0 {
            return Err(Error::InvalidParameter("geometric chain needs base ≥ 2 and levels ≥ 1".into()));
        }
        let mut chain = Vec::with_capacity(levels);
        let mut n = 1u64;
        for _ in 0..levels {
            n = n.checked_mul(base).ok_or_else(|| Error::InvalidParameter("chain entry overflows u64".into()))?;
            chain.push(n);
        }
        Odometer::new(chain)
    }

    pub fn chain(&self) -> &[u64] {
        &self.chain
    }

    pub fn levels(&self) -> usize {
        self.chain.len()
    }

    /// `nᵢ` for a 1-based level.
    pub fn modulus(&self, level: usize) -> Result<u64> {
        if level == 0 || level > self.chain.len() {
            return Err(Error::InvalidParameter(format!("level {level} outside 1..={}", self.chain.len())));
        }
        Ok(self.chain[level - 1])
    }

    pub fn act(&self, g: GroupElement, level: usize, x: u64) -> Result<u64> {
        let n = self.modulus(level)?;
        Ok(act_mod(g, n, x))
    }

    fn solutions(g: GroupElement, n: u64) -> Solutions {
        let n128 = n as i128;
        let k = (g.n as i128).rem_euclid(n128);
        if !g.s {
            return if k == 0 { Solutions::All } else { Solutions::Some(Vec::new()) };
        }
        // 2x ≡ k (mod n)
        if n % 2 == 1 {
            let x = (k * ((n128 + 1) / 2)).rem_euclid(n128);
            Solutions::Some(vec![x as u64])
        } else if k % 2 == 0 {
            let x = k / 2;
            Solutions::Some(vec![x as u64, ((x + n128 / 2) % n128) as u64])
        } else {
            Solutions::Some(Vec::new())
        }
    }

    pub fn fixed_count(&self, g: GroupElement, level: usize) -> Result<u64> {
        let n = self.modulus(level)?;
        Ok(match Odometer::solutions(g, n) {
            Solutions::All => n,
            Solutions::Some(v) => v.len() as u64,
        })
    }

    /// `|{x ∈ Z/nᵢ : gx = x}| / nᵢ`.
    pub fn fixed_fraction(&self, g: GroupElement, level: usize) -> Result<Ratio<u64>> {
        let n = self.modulus(level)?;
        Ok(Ratio::new(self.fixed_count(g, level)?, n))
    }

    /// Counts threads `(xᵢ)` of fixed points compatible under reduction. The
    /// count seen at level `i` is the number of residues mod `nᵢ` hit by fixed
    /// points at `max_level`; it is reported once the last two agree.
    pub fn stable_fixed_count(&self, g: GroupElement, max_level: usize) -> Result<ThreadCount> {
        if g.is_identity() {
            return Err(Error::IdentityElement);
        }
        if max_level < 2 {
            return Err(Error::InvalidParameter("max level must be at least 2".into()));
        }
        let top = self.modulus(max_level)?;
        let sols = Odometer::solutions(g, top);
        let per_level: Vec<u64> = (1..max_level)
            .map(|i| {
                let n = self.chain[i - 1];
                match &sols {
                    Solutions::All => n,
                    Solutions::Some(v) => v.iter().map(|x| x % n).collect::<BTreeSet<_>>().len() as u64,
                }
            })
            .collect();
        let k = per_level.len();
        if k < 2 || per_level[k - 1] != per_level[k - 2] {
            return Err(Error::NotStabilized { level: max_level });
        }
        let last = per_level[k - 1];
        let run = per_level.iter().rev().take_while(|&&c| c == last).count();
        Ok(ThreadCount { count: last, stabilized_at: k - run + 1, per_level })
    }

    /// Checks that `(k, s)Γᵢ ↦ k mod nᵢ` is well defined and injective, over
    /// all `0 ≤ k < 2nᵢ`.
    pub fn coset_bijection_holds(&self, level: usize) -> Result<bool> {
        let n = self.modulus(level)? as i64;
        let elems: Vec<GroupElement> =
            (0..2 * n).flat_map(|k| [GroupElement::new(k, false), GroupElement::new(k, true)]).collect();
        for a in &elems {
            for b in &elems {
                let same_coset = a.inverse().mul(*b).n.rem_euclid(n) == 0;
                let same_residue = (a.n - b.n).rem_euclid(n) == 0;
                if same_coset != same_residue {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Reduction `Z/nᵢ₊₁ → Z/nᵢ` commutes with both generators.
    pub fn projection_equivariant(&self, level: usize) -> Result<bool> {
        let n = self.modulus(level)?;
        let m = self.modulus(level + 1)?;
        for x in 0..m {
            for g in [GroupElement::phi(), GroupElement::sigma()] {
                if act_mod(g, m, x) % n != act_mod(g, n, x % n) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Cell permutations of `φ` and `σ` at a level.
    pub fn level_permutations(&self, level: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        let n = self.modulus(level)?;
        let phi = (0..n).map(|x| act_mod(GroupElement::phi(), n, x) as usize).collect();
        let sigma = (0..n).map(|x| act_mod(GroupElement::sigma(), n, x) as usize).collect();
        Ok((phi, sigma))
    }
}

fn act_mod(g: GroupElement, n: u64, x: u64) -> u64 {
    let n = n as i128;
    let x = x as i128;
    let y = if g.s { -x } else { x };
    (g.n as i128 + y).rem_euclid(n) as u64
}

/// For `γ = (0, 1)`, the only non-identity element of `⋂Γᵢ`, looks for
/// `b ∈ Γⱼ` with `b⁻¹γb ∉ ⋂Γᵢ` at every level `j ≤ max_level`.
pub fn top_freeness_check(chain: &[u64], max_level: usize) -> Result<bool> {
    let od = Odometer::new(chain.to_vec())?;
    let gamma = GroupElement::sigma();
    for j in 1..=max_level {
        let nj = od.modulus(j)? as i64;
        let found = (1..=4i64)
            .flat_map(|m| [GroupElement::new(nj * m, false), GroupElement::new(nj * m, true)])
            .any(|b| gamma.conjugate_by(b).n != 0);
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate_fixed(g: GroupElement, n: u64) -> u64 {
        (0..n).filter(|&x| act_mod(g, n, x) == x).count() as u64
    }

    #[test]
    fn fraction_matches_enumeration() {
        let od = Odometer::new(vec![2, 6, 12, 24, 120]).unwrap();
        for level in 1..=5 {
            let n = od.modulus(level).unwrap();
            for k in -7..=7 {
                for s in [false, true] {
                    let g = GroupElement::new(k, s);
                    assert_eq!(od.fixed_count(g, level).unwrap(), enumerate_fixed(g, n), "{g} {n}");
                }
            }
        }
        let od = Odometer::new(vec![12]).unwrap();
        assert_eq!(od.fixed_fraction(GroupElement::sigma(), 1).unwrap(), Ratio::new(1, 6));
        assert_eq!(od.fixed_fraction(GroupElement::phi_sigma(), 1).unwrap(), Ratio::new(0, 1));
        assert_eq!(od.fixed_fraction(GroupElement::new(12, false), 1).unwrap(), Ratio::new(1, 1));
    }

    #[test]
    fn thread_counts() {
        let three = Odometer::geometric(3, 8).unwrap();
        let two = Odometer::geometric(2, 8).unwrap();
        let c = three.stable_fixed_count(GroupElement::sigma(), 8).unwrap();
        assert_eq!((c.count, c.stabilized_at), (1, 1));
        assert_eq!(two.stable_fixed_count(GroupElement::sigma(), 8).unwrap().count, 1);
        assert_eq!(three.stable_fixed_count(GroupElement::phi_sigma(), 8).unwrap().count, 1);
        assert_eq!(two.stable_fixed_count(GroupElement::phi_sigma(), 8).unwrap().count, 0);
        // φ^{n_top} fixes the whole top level
        let g = GroupElement::new(3i64.pow(8), false);
        assert!(matches!(three.stable_fixed_count(g, 8), Err(Error::NotStabilized { .. })));
    }

    #[test]
    fn coset_and_projection_checks() {
        let od = Odometer::new(vec![2, 4, 12, 48]).unwrap();
        for level in 1..=3 {
            assert!(od.coset_bijection_holds(level).unwrap());
            assert!(od.projection_equivariant(level).unwrap());
        }
    }

    #[test]
    fn freeness_witnesses() {
        let chain: Vec<u64> = (1..=6).map(|i| 2 * 3u64.pow(i)).collect();
        assert!(top_freeness_check(&chain, 6).unwrap());
        let mut f = 1u64;
        let fact: Vec<u64> = (1..=6)
            .map(|i| {
                f *= i;
                2 * f
            })
            .collect();
        assert!(top_freeness_check(&fact, 6).unwrap());
        assert!(top_freeness_check(&[4, 4, 4], 3).is_err());
    }
}
