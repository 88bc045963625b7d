use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::amenability::folner;
use crate::error::{Error, Result};
use crate::systems::{DihedralSystem, GroupElement};

#[derive(Clone, Debug, PartialEq)]
pub struct Tower<S> {
    pub base: S,
    /// Return time of every point of the base.
    pub j: u64,
    pub shape: Vec<GroupElement>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Castle<S> {
    pub towers: Vec<Tower<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CastleReport {
    pub disjoint: bool,
    pub covers: bool,
    pub sigma_compatible: bool,
}

impl CastleReport {
    pub fn all(&self) -> bool {
        self.disjoint && self.covers && self.sigma_compatible
    }
}

impl<S> Castle<S> {
    pub fn return_times(&self) -> Vec<u64> {
        self.towers.iter().map(|t| t.j).collect()
    }
}

/// Splits a `σ`-invariant `Y` by first-return time under `φ` and stacks each
/// piece `Yᵢ` into a tower of height `Jᵢ` with shape `F_{Jᵢ}`.
pub fn first_return_castle<Sys: DihedralSystem>(sys: &Sys, y: &Sys::Set) -> Result<Castle<Sys::Set>> {
    if sys.is_empty(y) {
        return Err(Error::InvalidParameter("empty base".into()));
    }
    if sys.sigma(y) != *y {
        return Err(Error::NotSigmaInvariant);
    }
    let cap = sys.return_time_bound(y)?;
    let mut remainder = y.clone();
    let mut towers = Vec::new();
    let mut k = 0u64;
    while !sys.is_empty(&remainder) {
        k += 1;
        if k > cap {
            return Err(Error::IterationCap { cap });
        }
        let back = sys.phi_pow(y, -(k as i64));
        let piece = sys.intersection(&remainder, &back);
        if sys.is_empty(&piece) {
            continue;
        }
        remainder = sys.difference(&remainder, &piece);
        towers.push(Tower { base: piece, j: k, shape: folner(k as i64)? });
    }
    let castle = Castle { towers };
    let report = verify_castle(sys, &castle);
    if !report.all() {
        return Err(Error::Verification(format!("first-return castle failed its checks: {report:?}")));
    }
    let levels: Vec<Sys::Set> =
        castle.towers.iter().flat_map(|t| (0..t.j as i64).map(|i| sys.phi_pow(&t.base, i))).collect();
    if !sys.is_partition(&levels) {
        return Err(Error::Verification("φ-levels do not partition the space".into()));
    }
    Ok(castle)
}

/// Exact check of disjointness, coverage and `σφ^{Jᵢ}(Yᵢ) = Yᵢ`.
pub fn verify_castle<Sys: DihedralSystem>(sys: &Sys, castle: &Castle<Sys::Set>) -> CastleReport {
    let mut acc = sys.empty();
    let mut disjoint = true;
    for t in &castle.towers {
        for g in &t.shape {
            let piece = sys.act(*g, &t.base);
            if !sys.is_disjoint(&acc, &piece) {
                disjoint = false;
            }
            acc = sys.union(&acc, &piece);
        }
    }
    let covers = sys.is_full(&acc);
    let sigma_compatible = castle.towers.iter().all(|t| sys.sigma(&sys.phi_pow(&t.base, t.j as i64)) == t.base);
    CastleReport { disjoint, covers, sigma_compatible }
}

pub fn castle_to_json<Sys: DihedralSystem>(sys: &Sys, castle: &Castle<Sys::Set>) -> Value {
    let towers: Vec<Value> =
        castle.towers.iter().map(|t| json!({ "base": sys.set_to_json(&t.base), "J": t.j, "shape": t.shape })).collect();
    json!({ "towers": towers, "verified": verify_castle(sys, castle) })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TowerJson {
    base: Value,
    #[serde(rename = "J")]
    j: u64,
    shape: Vec<GroupElement>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CastleJson {
    towers: Vec<TowerJson>,
    #[allow(dead_code)]
    verified: Option<CastleReport>,
}

/// Rebuilds a castle; the recorded verification flags are ignored.
pub fn castle_from_json<Sys: DihedralSystem>(sys: &Sys, v: &Value) -> Result<Castle<Sys::Set>> {
    let raw: CastleJson = serde_json::from_value(v.clone())?;
    let towers = raw
        .towers
        .into_iter()
        .map(|t| Ok(Tower { base: sys.set_from_json(&t.base)?, j: t.j, shape: t.shape }))
        .collect::<Result<Vec<_>>>()?;
    Ok(Castle { towers })
}
