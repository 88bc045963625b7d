use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::amenability::{folner, folner_ratio, OdometerCastle};
use crate::error::{Error, Result};
use crate::systems::{DihedralSystem, GroupElement, Odometer, System, SystemSpec};

use super::castle::{castle_from_json, castle_to_json, first_return_castle, verify_castle, Castle, CastleReport};

const SHRINK_BUDGET: u32 = 40;

/// A partitioning castle whose shapes are `(K, ε)`-invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate<S> {
    pub k: Vec<GroupElement>,
    pub eps: Ratio<i64>,
    /// Every return time is at least this.
    pub min_height: u64,
    /// Cut window used for the base.
    pub window: i64,
    pub castle: Castle<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CertificateReport {
    #[serde(flatten)]
    pub castle: CastleReport,
    pub shapes_are_folner: bool,
    pub heights_at_least_min: bool,
    pub shapes_invariant: bool,
}

impl CertificateReport {
    pub fn all(&self) -> bool {
        self.castle.all() && self.shapes_are_folner && self.heights_at_least_min && self.shapes_invariant
    }
}

/// Smallest `N` such that `F_m` is `(K, ε)`-invariant for every scanned
/// `m ≥ N`; the scan runs to four times the first passing size.
pub fn invariance_threshold(k: &[GroupElement], eps: Ratio<i64>) -> Result<u64> {
    if eps <= Ratio::from_integer(0) {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    const LIMIT: i64 = 1 << 16;
    let passes = |m: i64| -> Result<bool> { Ok(folner_ratio(&folner(m)?, k)? < eps) };
    let mut first = None;
    for m in 1..=LIMIT {
        if passes(m)? {
            first = Some(m);
            break;
        }
    }
    let first = first.ok_or_else(|| Error::InvalidParameter(format!("no F_m with m ≤ {LIMIT} is invariant enough")))?;
    let mut n = first;
    for m in first + 1..=4 * first + 16 {
        if !passes(m)? {
            n = m + 1;
        }
    }
    Ok(n as u64)
}

pub fn almost_finite_certificate<Sys: DihedralSystem>(
    sys: &Sys,
    k: &[GroupElement],
    eps: Ratio<i64>,
) -> Result<Certificate<Sys::Set>> {
    let n = invariance_threshold(k, eps)?;
    let mut window = 1i64;
    let mut attempts = 0;
    let y = loop {
        attempts += 1;
        if attempts > SHRINK_BUDGET {
            return Err(Error::ShrinkBudget { attempts: SHRINK_BUDGET });
        }
        let y = sys.symmetric_neighbourhood(window)?;
        if !sys.is_full(&y) && disjoint_orbit_segment(sys, &y, n) {
            break y;
        }
        window *= 2;
    };
    let castle = first_return_castle(sys, &y)?;
    let cert = Certificate { k: k.to_vec(), eps, min_height: n, window, castle };
    let report = verify_certificate(sys, &cert)?;
    if !report.all() {
        return Err(Error::Verification(format!("certificate failed its checks: {report:?}")));
    }
    Ok(cert)
}

/// `Y, φY, …, φ^{n−1}Y` pairwise disjoint.
fn disjoint_orbit_segment<Sys: DihedralSystem>(sys: &Sys, y: &Sys::Set, n: u64) -> bool {
    let mut acc = sys.empty();
    for i in 0..n as i64 {
        let p = sys.phi_pow(y, i);
        if !sys.is_disjoint(&acc, &p) {
            return false;
        }
        acc = sys.union(&acc, &p);
    }
    true
}

pub fn verify_certificate<Sys: DihedralSystem>(sys: &Sys, cert: &Certificate<Sys::Set>) -> Result<CertificateReport> {
    let castle = verify_castle(sys, &cert.castle);
    let mut shapes_are_folner = true;
    let mut shapes_invariant = true;
    for t in &cert.castle.towers {
        if t.shape != folner(t.j as i64)? {
            shapes_are_folner = false;
        }
        if folner_ratio(&t.shape, &cert.k)? >= cert.eps {
            shapes_invariant = false;
        }
    }
    let heights_at_least_min = cert.castle.towers.iter().all(|t| t.j >= cert.min_height);
    Ok(CertificateReport { castle, shapes_are_folner, heights_at_least_min, shapes_invariant })
}

pub fn certificate_to_json<Sys: DihedralSystem>(
    spec: &SystemSpec,
    sys: &Sys,
    cert: &Certificate<Sys::Set>,
) -> Result<Value> {
    let report = verify_certificate(sys, cert)?;
    let ratios: Vec<String> = cert
        .castle
        .towers
        .iter()
        .map(|t| folner_ratio(&t.shape, &cert.k).map(|r| r.to_string()))
        .collect::<Result<_>>()?;
    Ok(json!({
        "system": spec,
        "K": cert.k,
        "eps": cert.eps.to_string(),
        "N": cert.min_height,
        "window": cert.window,
        "castle": castle_to_json(sys, &cert.castle),
        "ratios": ratios,
        "verified": report,
    }))
}

/// Odometer version: the coarsest base level whose shape is `(K, ε)`-invariant,
/// realized at the finest level of the chain.
pub fn odometer_certificate(od: &Odometer, k: &[GroupElement], eps: Ratio<i64>) -> Result<OdometerCastle> {
    if eps <= Ratio::from_integer(0) {
        return Err(Error::InvalidParameter("eps must be positive".into()));
    }
    for n in 1..=od.levels() {
        if folner_ratio(&folner(od.modulus(n)? as i64)?, k)? < eps {
            let castle = OdometerCastle::build(od, n, od.levels())?;
            let report = verify_odometer_certificate(od, k, eps, &castle)?;
            if !report.all() {
                return Err(Error::Verification(format!("certificate failed its checks: {report:?}")));
            }
            return Ok(castle);
        }
    }
    Err(Error::InvalidParameter("no level of the chain gives an invariant enough shape".into()))
}

pub fn verify_odometer_certificate(
    od: &Odometer,
    k: &[GroupElement],
    eps: Ratio<i64>,
    c: &OdometerCastle,
) -> Result<CertificateReport> {
    if c.level < c.base_level || c.modulus != od.modulus(c.level)? {
        return Err(Error::Verification("castle levels do not match the chain".into()));
    }
    let nn = od.modulus(c.base_level)?;
    let m = c.modulus as i128;
    let mut hits = vec![0u32; c.modulus as usize];
    for g in &c.shape {
        for &x in &c.base {
            let y = if g.s { -(x as i128) } else { x as i128 };
            hits[(g.n as i128 + y).rem_euclid(m) as usize] += 1;
        }
    }
    let base: BTreeSet<u64> = c.base.iter().copied().collect();
    let expected: BTreeSet<u64> = (0..c.modulus / nn).map(|t| t * nn).collect();
    let flipped: BTreeSet<u64> = c.base.iter().map(|&x| (nn as i128 - x as i128).rem_euclid(m) as u64).collect();
    let castle = CastleReport {
        disjoint: hits.iter().all(|&h| h <= 1),
        covers: hits.iter().all(|&h| h >= 1) && base == expected,
        sigma_compatible: flipped == base,
    };
    Ok(CertificateReport {
        castle,
        shapes_are_folner: c.shape == folner(nn as i64)?,
        heights_at_least_min: c.shape.len() as u64 >= nn,
        shapes_invariant: folner_ratio(&c.shape, k)? < eps,
    })
}

pub fn odometer_certificate_to_json(
    spec: &SystemSpec,
    od: &Odometer,
    k: &[GroupElement],
    eps: Ratio<i64>,
    castle: &OdometerCastle,
) -> Result<Value> {
    let report = verify_odometer_certificate(od, k, eps, castle)?;
    Ok(json!({
        "system": spec,
        "K": k,
        "eps": eps.to_string(),
        "N": od.modulus(castle.base_level)?,
        "castle": castle,
        "ratios": [folner_ratio(&castle.shape, k)?.to_string()],
        "verified": report,
    }))
}

#[derive(Deserialize)]
struct CertificateHeader {
    system: SystemSpec,
    #[serde(rename = "K")]
    k: Vec<GroupElement>,
    eps: String,
    #[serde(rename = "N")]
    n: u64,
    #[serde(default)]
    window: i64,
    castle: Value,
}

fn parse_eps(s: &str) -> Result<Ratio<i64>> {
    s.parse::<Ratio<i64>>().map_err(|_| Error::Config(format!("bad rational {s:?}")))
}

/// Re-runs every check using only the certificate's own JSON.
pub fn verify_certificate_json(v: &Value) -> Result<CertificateReport> {
    let h: CertificateHeader = serde_json::from_value(v.clone())?;
    let eps = parse_eps(&h.eps)?;
    match h.system.build()? {
        System::DenjoyFlip(sys) => {
            let castle = castle_from_json(&sys, &h.castle)?;
            verify_certificate(&sys, &Certificate { k: h.k, eps, min_height: h.n, window: h.window, castle })
        }
        System::Doubled(sys) => {
            let castle = castle_from_json(&sys, &h.castle)?;
            verify_certificate(&sys, &Certificate { k: h.k, eps, min_height: h.n, window: h.window, castle })
        }
        System::Odometer(od) => {
            let castle: OdometerCastle = serde_json::from_value(h.castle)?;
            if od.modulus(castle.base_level)? != h.n {
                return Err(Error::Verification("N does not match the base level".into()));
            }
            verify_odometer_certificate(&od, &h.k, eps, &castle)
        }
    }
}
