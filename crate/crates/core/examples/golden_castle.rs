//! First-return castle over the arc `[-θ, θ)` for the golden rotation.

use cantor_dihedral::systems::{DenjoyFlip, DihedralSystem};
use cantor_dihedral::towers::{first_return_castle, verify_castle};

fn main() -> cantor_dihedral::Result<()> {
    let sys = DenjoyFlip::golden();
    let y = sys.arc(-1, 1)?;
    let castle = first_return_castle(&sys, &y)?;
    for t in &castle.towers {
        println!(
            "J = {}  |Y| = {}  base = {}",
            t.j,
            sys.measure(&t.base),
            serde_json::to_string(&sys.set_to_json(&t.base))?
        );
    }
    println!("{:?}", verify_castle(&sys, &castle));
    Ok(())
}
