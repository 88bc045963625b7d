//! Følner transversals and their invariance ratios for `K = {e, φ, σ}`.

use cantor_dihedral::amenability::{folner, folner_ratio, is_transversal, standard_k};

fn main() -> cantor_dihedral::Result<()> {
    let k = standard_k();
    for m in [1, 2, 3, 4, 7, 10, 21, 100] {
        let f = folner(m)?;
        println!("m = {m:3}  transversal = {}  ratio = {}", is_transversal(&f, m), folner_ratio(&f, &k)?);
    }
    println!("F_4 = {:?}", folner(4)?.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    Ok(())
}
