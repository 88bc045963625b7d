//! Compare bar-complex homology with the closed formulas on one permutation
//! module, then on a batch of random ones.

use cantor_dihedral::homology::{bar_homology, oracle_check, InvolutionModule};

fn main() -> cantor_dihedral::Result<()> {
    let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
    let m = InvolutionModule::from_permutation(labels, &[1, 0, 2, 3])?;
    for (n, g) in bar_homology(&m, 4)?.iter().enumerate() {
        println!("H_{n} = {g}");
    }
    println!("coinvariants {}, odd {}, even {}", m.coinvariants(), m.h_odd(), m.h_even());
    let r = oracle_check(7, 20)?;
    println!("{} random modules, {} mismatches", r.modules, r.mismatches.len());
    Ok(())
}
