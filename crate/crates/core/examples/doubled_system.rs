//! The two-sheet system, where `σ` swaps sheets and homology is `Z²`, `Z`, 0.

use cantor_dihedral::circle::Theta;
use cantor_dihedral::homology::{compute_homology, Method};
use cantor_dihedral::systems::{DihedralSystem, DoubledSystem, GroupElement, System};

fn main() -> cantor_dihedral::Result<()> {
    let sys = DoubledSystem::new(Theta::golden());
    let y = sys.splitting();
    println!("φY = Y: {}", sys.phi_pow(&y, 1) == y);
    println!("σ fixed points: {:?}", sys.fixed_points(GroupElement::sigma())?);
    let r = compute_homology(&System::Doubled(sys), 8, Method::Comp)?;
    println!("{}", r.table);
    Ok(())
}
