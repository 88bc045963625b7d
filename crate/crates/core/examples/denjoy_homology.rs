//! Homology of the golden Denjoy flip through both computation paths.

use cantor_dihedral::homology::{compute_homology, Method};
use cantor_dihedral::systems::SystemSpec;

fn main() -> cantor_dihedral::Result<()> {
    let sys = SystemSpec::golden_denjoy().build()?;
    let report = compute_homology(&sys, 12, Method::Both)?;
    println!("{}", report.table);
    println!("{}", serde_json::to_string_pretty(&report.provenance)?);
    Ok(())
}
