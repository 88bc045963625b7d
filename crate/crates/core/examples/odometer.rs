//! Dihedral odometers: fixed fractions, thread counts and homology.

use cantor_dihedral::homology::{compute_homology, Method};
use cantor_dihedral::systems::{GroupElement, Odometer, System};

fn main() -> cantor_dihedral::Result<()> {
    for base in [2, 3] {
        let od = Odometer::geometric(base, 6)?;
        for i in 1..=3 {
            println!("{base}^i level {i}: σ fixes {}", od.fixed_fraction(GroupElement::sigma(), i)?);
        }
        let threads = od.stable_fixed_count(GroupElement::sigma(), 6)?;
        println!("σ threads: {}", serde_json::to_string(&threads)?);
        let r = compute_homology(&System::Odometer(od), 6, Method::Comp)?;
        println!("{}", r.table);
    }
    Ok(())
}
