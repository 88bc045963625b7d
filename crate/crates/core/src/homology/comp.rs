//! Homology tables from fixed-point counts, a splitting and `H₀` data.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abgroups::{FGAbGroup, IntMatrix, Limit};
use crate::error::{Error, Result};
use crate::systems::{DenjoyFlip, DihedralSystem, DoubledSystem, GroupElement, Odometer, System};

use super::freeproduct::denjoy_free_product;
use super::telescope::{odometer_telescope, rotation_telescope};
use super::transfer::{check_witness, denjoy_transfer, transfer_report};
use super::{GroupValue, HomologyTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// `X = Y ⊔ σY` with `φY = Y`.
    #[serde(rename = "i")]
    Split,
    /// Free action, no such splitting.
    #[serde(rename = "ii")]
    Free,
    /// Some reflection has fixed points.
    #[serde(rename = "iii")]
    NonFree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseEvidence {
    pub case: Case,
    pub fix_sigma: u64,
    pub fix_phi_sigma: u64,
    /// A splitting `X = Y ⊔ σY`, `φY = Y` was exhibited.
    pub splitting: bool,
    /// Case (i): `H₀(Z, C(Y, Z))`. Otherwise `(1 + σ_*)H₀(Z, C(X, Z))`.
    pub h0: GroupValue,
}

pub fn theorem_comp(ev: &CaseEvidence) -> Result<HomologyTable> {
    let fixed = ev.fix_sigma + ev.fix_phi_sigma;
    let consistent = match ev.case {
        Case::Split => ev.splitting && fixed == 0,
        Case::Free => !ev.splitting && fixed == 0,
        Case::NonFree => !ev.splitting && fixed > 0,
    };
    if !consistent {
        return Err(Error::Evidence(format!(
            "case {:?} with splitting = {} and {fixed} fixed points",
            ev.case, ev.splitting
        )));
    }
    let zero = FGAbGroup::trivial();
    Ok(match ev.case {
        Case::Split => HomologyTable { h0: ev.h0.clone(), h1: FGAbGroup::free(1), odd: zero.clone(), even: zero },
        Case::Free => HomologyTable {
            h0: ev.h0.plus(&FGAbGroup::elementary_two(1)),
            h1: zero.clone(),
            odd: zero.clone(),
            even: zero,
        },
        Case::NonFree => {
            let odd = FGAbGroup::elementary_two(fixed as usize);
            HomologyTable { h0: ev.h0.clone(), h1: odd.clone(), odd, even: zero }
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Comp,
    FreeProduct,
    Both,
}

#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub table: HomologyTable,
    pub evidence: Option<CaseEvidence>,
    /// How each entry was obtained.
    pub provenance: Value,
}

impl HomologyReport {
    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(&self.table).expect("table serializes");
        v["provenance"] = self.provenance.clone();
        v
    }
}

fn rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

fn denjoy_comp(sys: &DenjoyFlip, max_level: usize) -> Result<(CaseEvidence, Value)> {
    let fix_sigma = sys.fixed_points(GroupElement::sigma())?.len() as u64;
    let fix_phi_sigma = sys.fixed_points(GroupElement::phi_sigma())?.len() as u64;
    let tele = rotation_telescope(sys.theta, max_level)?;
    let sigma_star = tele.sigma_star()?;
    let h0 = GroupValue::Finite(tele.one_plus_sigma()?);
    let tr = denjoy_transfer(sys, max_level as i64 - 1)?;
    let report = transfer_report(&tr, false, None)?;
    let ev = CaseEvidence { case: Case::NonFree, fix_sigma, fix_phi_sigma, splitting: false, h0 };
    let prov = json!({
        "fixSigma": fix_sigma,
        "fixPhiSigma": fix_phi_sigma,
        "telescope": tele.limit,
        "sigmaStar": rows(&sigma_star),
        "generatorsCheck": tele.generators_check()?,
        "transferKernel": report.kernel,
    });
    Ok((ev, prov))
}

fn doubled_comp(sys: &DoubledSystem, max_level: usize) -> Result<(CaseEvidence, Value)> {
    let fix_sigma = sys.fixed_points(GroupElement::sigma())?.len() as u64;
    let fix_phi_sigma = sys.fixed_points(GroupElement::phi_sigma())?.len() as u64;
    let y = sys.splitting();
    let splitting = sys.phi_pow(&y, 1) == y && check_witness(sys, "K", &y, GroupElement::sigma()).is_ok();
    check_witness(sys, "L", &y, GroupElement::phi_sigma())?;
    let tele = rotation_telescope(sys.theta, max_level)?;
    let ev = CaseEvidence { case: Case::Split, fix_sigma, fix_phi_sigma, splitting, h0: tele.h0()? };
    let prov = json!({
        "fixSigma": fix_sigma,
        "fixPhiSigma": fix_phi_sigma,
        "splitting": sys.set_to_json(&y),
        "telescope": tele.limit,
    });
    Ok((ev, prov))
}

fn odometer_comp(od: &Odometer, max_level: usize) -> Result<(CaseEvidence, Value)> {
    let top = max_level.min(od.levels());
    let ts = od.stable_fixed_count(GroupElement::sigma(), top)?;
    let tp = od.stable_fixed_count(GroupElement::phi_sigma(), top)?;
    let tele = odometer_telescope(od, max_level)?;
    let fixed = ts.count + tp.count;
    let case = if fixed > 0 { Case::NonFree } else { Case::Free };
    let ev = CaseEvidence {
        case,
        fix_sigma: ts.count,
        fix_phi_sigma: tp.count,
        splitting: false,
        h0: tele.one_plus_sigma()?,
    };
    let prov = json!({
        "fixSigma": ts,
        "fixPhiSigma": tp,
        "telescope": tele.limit,
        "sigmaSigns": tele.sigma_signs,
    });
    Ok((ev, prov))
}

fn case_name(c: Case) -> Value {
    serde_json::to_value(c).expect("case serializes")
}

fn comp_path(system: &System, max_level: usize) -> Result<(HomologyTable, CaseEvidence, Value)> {
    let (ev, prov) = match system {
        System::DenjoyFlip(s) => denjoy_comp(s, max_level)?,
        System::Doubled(s) => doubled_comp(s, max_level)?,
        System::Odometer(o) => odometer_comp(o, max_level)?,
    };
    Ok((theorem_comp(&ev)?, ev, prov))
}

fn free_product_path(system: &System, max_level: usize) -> Result<(HomologyTable, Value)> {
    let System::DenjoyFlip(s) = system else {
        return Err(Error::Config("the free-product method is available for denjoy_flip systems".into()));
    };
    let fp = denjoy_free_product(s, max_level)?;
    let h0 = match &fp.h0_limit {
        Limit::Stabilized { group, .. } => GroupValue::Finite(group.clone()),
        _ => return Err(Error::NotStabilized { level: max_level }),
    };
    if fp.exact_levels.len() != max_level {
        return Err(Error::Verification("corestriction is not injective at every level".into()));
    }
    let table = HomologyTable { h0, h1: fp.h1.clone(), odd: fp.odd.clone(), even: fp.even.clone() };
    Ok((table, json!({ "limit": fp.h0_limit, "exactLevels": fp.exact_levels })))
}

pub fn compute_homology(system: &System, max_level: usize, method: Method) -> Result<HomologyReport> {
    let (table, evidence, provenance) = match method {
        Method::Comp => {
            let (t, ev, p) = comp_path(system, max_level)?;
            let prov = json!({ "method": "comp", "case": case_name(ev.case), "comp": p });
            (t, Some(ev), prov)
        }
        Method::FreeProduct => {
            let (t, p) = free_product_path(system, max_level)?;
            (t, None, json!({ "method": "freeproduct", "freeproduct": p }))
        }
        Method::Both => {
            let (t, ev, p) = comp_path(system, max_level)?;
            let (u, q) = free_product_path(system, max_level)?;
            let diff = t.differences(&u);
            if !diff.is_empty() {
                return Err(Error::Verification(format!("methods disagree in degrees {diff:?}")));
            }
            let prov = json!({
                "method": "both",
                "case": case_name(ev.case),
                "comp": p,
                "freeproduct": q,
                "disagreements": diff,
            });
            (t, Some(ev), prov)
        }
    };
    let mut provenance = provenance;
    provenance["maxLevel"] = json!(max_level);
    Ok(HomologyReport { table, evidence, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::systems::SystemSpec;

    fn ev(case: Case, fs: u64, fp: u64, splitting: bool) -> CaseEvidence {
        CaseEvidence { case, fix_sigma: fs, fix_phi_sigma: fp, splitting, h0: GroupValue::Finite(FGAbGroup::free(2)) }
    }

    #[test]
    fn three_cases() {
        let t = theorem_comp(&ev(Case::Split, 0, 0, true)).unwrap();
        assert_eq!(t.h1, FGAbGroup::free(1));
        assert!(t.odd.is_trivial() && t.even.is_trivial());
        let t = theorem_comp(&ev(Case::Free, 0, 0, false)).unwrap();
        assert_eq!(t.h0, GroupValue::Finite(FGAbGroup::free(2).direct_sum(&FGAbGroup::elementary_two(1))));
        assert!(t.h1.is_trivial());
        let t = theorem_comp(&ev(Case::NonFree, 1, 2, false)).unwrap();
        assert_eq!(t.degree(5), GroupValue::Finite(FGAbGroup::elementary_two(3)));
        assert!(t.degree(4).is_trivial());
    }

    #[test]
    fn inconsistent_evidence() {
        assert!(matches!(theorem_comp(&ev(Case::Split, 1, 0, true)), Err(Error::Evidence(_))));
        assert!(matches!(theorem_comp(&ev(Case::NonFree, 0, 0, false)), Err(Error::Evidence(_))));
        assert!(matches!(theorem_comp(&ev(Case::Free, 0, 0, true)), Err(Error::Evidence(_))));
    }

    #[test]
    fn golden_both_methods_agree() {
        let sys = SystemSpec::golden_denjoy().build().unwrap();
        let r = compute_homology(&sys, 4, Method::Both).unwrap();
        assert_eq!(r.table.h0, GroupValue::Finite(FGAbGroup::free(2)));
        assert_eq!(r.table.h1, FGAbGroup::elementary_two(3));
        let v = r.to_json();
        assert_eq!(v["H0"], json!({"rank": 2, "torsion": []}));
        assert_eq!(v["tail"]["from"], json!(2));
    }
}
