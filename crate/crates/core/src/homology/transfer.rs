//! The transfer `C_N → H₀(Z, C(X, Z))`, `f ↦ f + σf`, and witnesses for
//! splittings `X = K ⊔ gK`.

use num_bigint::BigInt;

use crate::abgroups::{AbHom, FGAbGroup, IntMatrix, Presentation};
use crate::error::{Error, Result};
use crate::systems::{DenjoyFlip, DihedralSystem, GroupElement, WindowPartition};

use super::InvolutionModule;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferReport {
    pub kernel: FGAbGroup,
    /// Order of the witness class in the source, when one was given.
    pub witness_order: Option<BigInt>,
}

/// For a non-free action the kernel must vanish. For a free action it must
/// be `Z/2`, generated by `witness`.
pub fn transfer_report(tr: &AbHom, free: bool, witness: Option<&[BigInt]>) -> Result<TransferReport> {
    let kernel = tr.kernel();
    if !free {
        if !kernel.is_trivial() {
            return Err(Error::Verification(format!("transfer kernel is {kernel}, expected 0")));
        }
        return Ok(TransferReport { kernel, witness_order: None });
    }
    if kernel != FGAbGroup::elementary_two(1) {
        return Err(Error::Verification(format!("transfer kernel is {kernel}, expected Z/2")));
    }
    let Some(w) = witness else {
        return Ok(TransferReport { kernel, witness_order: None });
    };
    if w.len() != tr.source.gens {
        return Err(Error::Dimension("witness length".into()));
    }
    if !tr.target.is_zero_class(&tr.matrix.mul_vec(w)) {
        return Err(Error::Verification("witness is not in the transfer kernel".into()));
    }
    let order = tr.source.canonical().order(w);
    if order != Some(BigInt::from(2)) {
        return Err(Error::Verification("witness does not have order 2".into()));
    }
    Ok(TransferReport { kernel, witness_order: order })
}

/// `C_N = Mσ / ((σ − 1)Mσ + ι(φσ − 1)Mφσ)` into stage `N + 1` of the
/// rotation telescope, `f ↦ ι(f + σf)`.
pub fn denjoy_transfer(sys: &DenjoyFlip, level: i64) -> Result<AbHom> {
    let lp = sys.level_partition(level)?;
    let sigma = InvolutionModule::from_permutation(lp.cells.labels(), &lp.sigma)?;
    let phi_sigma = InvolutionModule::from_permutation(lp.phi_sigma_cells.labels(), &lp.phi_sigma)?;
    let iota = lp.phi_sigma_cells.refinement(&lp.cells)?;
    let rel = sigma.a_minus_i().hstack(&iota.mul(&phi_sigma.a_minus_i()));
    let source = Presentation::new(sigma.dim(), rel)?;

    let t = level + 1;
    let fine = WindowPartition::new(sys.theta, -t, t);
    let coarse = WindowPartition::new(sys.theta, -t, t - 1);
    let target_rel = coarse.refinement(&fine)?.sub(&coarse.push_matrix(GroupElement::phi(), &fine)?);
    let target = Presentation::new(fine.len(), target_rel)?;

    let up = lp.cells.refinement(&fine)?;
    let matrix = up.mul(&IntMatrix::identity(sigma.dim()).add(sigma.matrix()));
    AbHom::new(source, target, matrix)
}

/// Checks `X = K ⊔ gK`.
pub fn check_witness<S: DihedralSystem>(sys: &S, which: &'static str, k: &S::Set, g: GroupElement) -> Result<()> {
    let gk = sys.act(g, k);
    let overlap = sys.intersection(k, &gk);
    let uncovered = sys.difference(&sys.full(), &sys.union(k, &gk));
    if sys.is_empty(&overlap) && sys.is_empty(&uncovered) {
        Ok(())
    } else {
        Err(Error::Witness { which, overlap: overlap.to_string(), uncovered: uncovered.to_string() })
    }
}
