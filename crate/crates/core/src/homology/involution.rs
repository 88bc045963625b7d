use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abgroups::{cokernel, lattice_equal, subquotient, FGAbGroup, IntMatrix, Presentation};
use crate::error::{Error, Result};
use crate::systems::permutation_matrix;

/// `Z^cells` with an action `A`, `A² = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionModule {
    labels: Vec<String>,
    a: IntMatrix,
}

impl InvolutionModule {
    pub fn new(labels: Vec<String>, a: IntMatrix) -> Result<Self> {
        if a.rows() != a.cols() || a.rows() != labels.len() {
            return Err(Error::Dimension(format!("{} labels for a {}x{} action", labels.len(), a.rows(), a.cols())));
        }
        if a.mul(&a) != IntMatrix::identity(a.rows()) {
            return Err(Error::NotInvolution);
        }
        Ok(InvolutionModule { labels, a })
    }

    pub fn from_permutation(labels: Vec<String>, perm: &[usize]) -> Result<Self> {
        if perm.iter().any(|&p| p >= perm.len()) {
            return Err(Error::InvalidParameter("permutation index out of range".into()));
        }
        InvolutionModule::new(labels, permutation_matrix(perm))
    }

    /// Unlabelled module, cells named by index.
    pub fn unlabelled(a: IntMatrix) -> Result<Self> {
        let labels = (0..a.rows()).map(|i| i.to_string()).collect();
        InvolutionModule::new(labels, a)
    }

    pub fn dim(&self) -> usize {
        self.a.rows()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    fn shifted(&self, sign: i64) -> IntMatrix {
        let id = IntMatrix::identity(self.dim());
        if sign > 0 {
            self.a.add(&id)
        } else {
            self.a.sub(&id)
        }
    }

    /// The underlying permutation, if `A` is a permutation matrix.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        let n = self.dim();
        let mut perm = vec![usize::MAX; n];
        for j in 0..n {
            for i in 0..n {
                let x = &self.a[(i, j)];
                if x.is_one() {
                    if perm[j] != usize::MAX {
                        return None;
                    }
                    perm[j] = i;
                } else if !x.is_zero() {
                    return None;
                }
            }
            if perm[j] == usize::MAX {
                return None;
            }
        }
        Some(perm)
    }

    pub fn fixed_cells(&self) -> Option<Vec<usize>> {
        self.permutation().map(|p| (0..p.len()).filter(|&i| p[i] == i).collect())
    }

    /// `ker(A − I) / im(A + I)`.
    pub fn h_odd(&self) -> FGAbGroup {
        subquotient(&self.shifted(-1), &self.shifted(1)).expect("A² = I")
    }

    /// `ker(A + I) / im(A − I)`.
    pub fn h_even(&self) -> FGAbGroup {
        subquotient(&self.shifted(1), &self.shifted(-1)).expect("A² = I")
    }

    /// `coker(A − I)`.
    pub fn coinvariants(&self) -> FGAbGroup {
        cokernel(&self.shifted(-1))
    }

    pub fn coinvariant_presentation(&self) -> Presentation {
        Presentation::new(self.dim(), self.shifted(-1)).expect("square")
    }

    /// `A − I`, the relation matrix of the coinvariants.
    pub fn a_minus_i(&self) -> IntMatrix {
        self.shifted(-1)
    }

    /// For a permutation module: `[f] ↦ f + fA` is injective on coinvariants
    /// and its image is spanned by `2e_i` for fixed cells and `e_i + e_j` for
    /// swapped pairs.
    pub fn psi_check(&self) -> Result<bool> {
        let perm =
            self.permutation().ok_or_else(|| Error::InvalidParameter("psi check needs a permutation module".into()))?;
        let n = self.dim();
        let mut cols: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..n {
            let j = perm[i];
            if j < i {
                continue;
            }
            let mut v = vec![BigInt::zero(); n];
            if j == i {
                v[i] = BigInt::from(2);
            } else {
                v[i] = BigInt::one();
                v[j] = BigInt::one();
            }
            cols.push(v);
        }
        let expected = IntMatrix::from_columns(&cols, n);
        let image_ok = lattice_equal(&self.shifted(1), &expected);
        Ok(image_ok && self.h_even().is_trivial())
    }
}
