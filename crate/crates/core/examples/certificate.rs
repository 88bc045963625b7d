//! Build an almost-finiteness certificate, serialize it, and check it again
//! from the JSON alone.

use cantor_dihedral::amenability::standard_k;
use cantor_dihedral::systems::{DenjoyFlip, SystemSpec};
use cantor_dihedral::towers::{almost_finite_certificate, certificate_to_json, verify_certificate_json};
use num_rational::Ratio;

fn main() -> cantor_dihedral::Result<()> {
    let sys = DenjoyFlip::golden();
    let cert = almost_finite_certificate(&sys, &standard_k(), Ratio::new(1, 10))?;
    let json = certificate_to_json(&SystemSpec::golden_denjoy(), &sys, &cert)?;
    println!("N = {}, return times {:?}, ratios {}", cert.min_height, cert.castle.return_times(), json["ratios"]);
    println!("{:?}", verify_certificate_json(&json)?);
    Ok(())
}
