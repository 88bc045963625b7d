//! Command-line front end. Every command prints one JSON document.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::amenability::{folner, folner_ratio, is_transversal, OdometerCastle};
use crate::error::{Error, Result};
use crate::homology::{compute_homology, oracle_check, Method};
use crate::systems::{DihedralSystem, GroupElement, System, SystemSpec};
use crate::towers::{
    almost_finite_certificate, castle_to_json, certificate_to_json, first_return_castle, odometer_certificate,
    odometer_certificate_to_json, verify_certificate_json,
};

#[derive(Debug, Parser)]
#[command(name = "cantor-dihedral", version, about = "Exact dynamics and homology for dihedral Cantor systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed points of group elements, or stable thread counts for odometers.
    FixedPoints {
        #[arg(long)]
        system: PathBuf,
        /// JSON list of `[n, s]` pairs.
        #[arg(long, default_value = "[[0,1],[1,1]]")]
        elements: String,
        #[arg(long, default_value_t = 8)]
        max_level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The Følner set `F_m`.
    Folner {
        #[arg(long)]
        m: i64,
        #[arg(long)]
        check_transversal: bool,
        /// JSON list of `[n, s]` pairs.
        #[arg(long)]
        ratio: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// First-return castle over a flip-invariant base.
    Castle {
        #[arg(long)]
        system: PathBuf,
        /// Base set as JSON; defaults to the smallest neighbourhood of the flip fixed point.
        #[arg(long)]
        base: Option<String>,
        /// Base level for odometer castles.
        #[arg(long, default_value_t = 1)]
        level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Almost-finiteness certificate, or re-verification of one.
    Certify {
        #[arg(long, required_unless_present = "verify")]
        system: Option<PathBuf>,
        #[arg(long, default_value = "1/2")]
        eps: String,
        #[arg(long = "K", default_value = "[[0,0],[1,0],[0,1]]")]
        k: String,
        /// Certificate JSON to check instead of producing one.
        #[arg(long, conflicts_with = "system")]
        verify: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Homology table `H_n(Z ⋊ Z₂, C(X, Z))`.
    Homology {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_level: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Comp)]
        method: MethodArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bar-complex homology against the closed formulas on random modules.
    OracleCheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Comp,
    Freeproduct,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Comp => Method::Comp,
            MethodArg::Freeproduct => Method::FreeProduct,
            MethodArg::Both => Method::Both,
        }
    }
}

/// 0 ok, 2 bad input, 3 no stabilization, 4 failed verification.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NotStabilized { .. } => 3,
        Error::Verification(_)
        | Error::Witness { .. }
        | Error::Evidence(_)
        | Error::Containment
        | Error::IllDefinedHom
        | Error::NotInvolution
        | Error::IterationCap { .. }
        | Error::ShrinkBudget { .. } => 4,
        _ => 2,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))
}

fn load_system(path: &Path) -> Result<(SystemSpec, System)> {
    let spec = SystemSpec::from_json(&read(path)?)?;
    let sys = spec.build()?;
    Ok((spec, sys))
}

fn parse_elements(text: &str) -> Result<Vec<GroupElement>> {
    serde_json::from_str(text).map_err(|e| Error::Config(format!("group elements: {e}")))
}

fn parse_eps(text: &str) -> Result<Ratio<i64>> {
    text.parse::<Ratio<i64>>().map_err(|_| Error::Config(format!("eps must be P/Q, got {text:?}")))
}

fn fixed_points(sys: &System, elements: &[GroupElement], max_level: usize) -> Result<Value> {
    let mut out = BTreeMap::new();
    for &g in elements {
        if g.is_identity() {
            return Err(Error::IdentityElement);
        }
        let v = match sys {
            System::DenjoyFlip(s) => json!(s.fixed_points(g)?.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            System::Doubled(s) => json!(s
                .fixed_points(g)?
                .iter()
                .map(|(x, sheet)| json!({ "point": x.to_string(), "sheet": sheet }))
                .collect::<Vec<_>>()),
            System::Odometer(o) => json!(o.stable_fixed_count(g, max_level.min(o.levels()))?),
        };
        out.insert(g.to_string(), v);
    }
    Ok(json!(out))
}

fn castle_json<S: DihedralSystem>(sys: &S, base: Option<&str>) -> Result<Value> {
    let y = match base {
        Some(text) => sys.set_from_json(&serde_json::from_str(text)?)?,
        None => sys.symmetric_neighbourhood(1)?,
    };
    let castle = first_return_castle(sys, &y)?;
    let mut v = castle_to_json(sys, &castle);
    v["returnTimes"] = json!(castle.return_times());
    Ok(v)
}

fn certify<S: DihedralSystem>(spec: &SystemSpec, sys: &S, k: &[GroupElement], eps: Ratio<i64>) -> Result<Value> {
    let cert = almost_finite_certificate(sys, k, eps)?;
    certificate_to_json(spec, sys, &cert)
}

pub fn run(cli: &Cli) -> Result<Value> {
    match &cli.command {
        Command::FixedPoints { system, elements, max_level, .. } => {
            let (_, sys) = load_system(system)?;
            fixed_points(&sys, &parse_elements(elements)?, *max_level)
        }
        Command::Folner { m, check_transversal, ratio, .. } => {
            let f = folner(*m)?;
            let mut v = json!({ "m": m, "size": f.len(), "elements": f });
            if *check_transversal {
                v["transversal"] = json!(is_transversal(&f, *m));
            }
            if let Some(k) = ratio {
                v["ratio"] = json!(folner_ratio(&f, &parse_elements(k)?)?.to_string());
            }
            Ok(v)
        }
        Command::Castle { system, base, level, .. } => match load_system(system)?.1 {
            System::DenjoyFlip(s) => castle_json(&s, base.as_deref()),
            System::Doubled(s) => castle_json(&s, base.as_deref()),
            System::Odometer(o) => {
                let c = OdometerCastle::build(&o, *level, o.levels())?;
                let mut v = serde_json::to_value(&c)?;
                v["verified"] = json!(c.is_partition());
                Ok(v)
            }
        },
        Command::Certify { system, eps, k, verify, .. } => {
            if let Some(path) = verify {
                let v: Value = serde_json::from_str(&read(path)?)?;
                let report = verify_certificate_json(&v)?;
                if !report.all() {
                    return Err(Error::Verification(format!("certificate does not verify: {report:?}")));
                }
                return Ok(json!({ "verified": report }));
            }
            let path = system.as_ref().ok_or_else(|| Error::Config("--system is required".into()))?;
            let (spec, sys) = load_system(path)?;
            let k = parse_elements(k)?;
            let eps = parse_eps(eps)?;
            match &sys {
                System::DenjoyFlip(s) => certify(&spec, s, &k, eps),
                System::Doubled(s) => certify(&spec, s, &k, eps),
                System::Odometer(o) => {
                    let c = odometer_certificate(o, &k, eps)?;
                    odometer_certificate_to_json(&spec, o, &k, eps, &c)
                }
            }
        }
        Command::Homology { system, max_level, method, .. } => {
            let (spec, sys) = load_system(system)?;
            let report = compute_homology(&sys, *max_level, (*method).into())?;
            let mut v = report.to_json();
            v["system"] = serde_json::to_value(&spec)?;
            Ok(v)
        }
        Command::OracleCheck { seed, count, .. } => {
            let report = oracle_check(*seed, *count)?;
            if !report.mismatches.is_empty() {
                return Err(Error::Verification(format!("{} oracle mismatches", report.mismatches.len())));
            }
            Ok(serde_json::to_value(&report)?)
        }
    }
}

fn out_path(cli: &Cli) -> Option<&Path> {
    match &cli.command {
        Command::FixedPoints { out, .. }
        | Command::Folner { out, .. }
        | Command::Castle { out, .. }
        | Command::Certify { out, .. }
        | Command::Homology { out, .. }
        | Command::OracleCheck { out, .. } => out.as_deref(),
    }
}

/// Runs a parsed command, writes its JSON and returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    let result = run(cli).and_then(|v| {
        let text = serde_json::to_string_pretty(&v)? + "\n";
        match out_path(cli) {
            Some(p) => fs::write(p, text)?,
            None => print!("{text}"),
        }
        Ok(())
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("cantor-dihedral").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn folner_command() {
        let v = run(&parse(&["folner", "--m", "4", "--check-transversal", "--ratio", "[[0,0],[1,0],[0,1]]"])).unwrap();
        assert_eq!(v["size"], json!(4));
        assert_eq!(v["transversal"], json!(true));
        assert_eq!(v["ratio"], json!("1/2"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Config("x".into())), 2);
        assert_eq!(exit_code(&Error::IdentityElement), 2);
        assert_eq!(exit_code(&Error::NotStabilized { level: 2 }), 3);
        assert_eq!(exit_code(&Error::Verification("x".into())), 4);
    }

    #[test]
    fn missing_system_file_is_config_error() {
        let e = run(&parse(&["homology", "--system", "/nonexistent/sys.json"])).unwrap_err();
        assert_eq!(exit_code(&e), 2);
    }

    #[test]
    fn certify_needs_system_or_verify() {
        assert!(Cli::try_parse_from(["cantor-dihedral", "certify"]).is_err());
    }
}
