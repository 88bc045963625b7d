use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::abgroups::{elementary_divisors, FGAbGroup, IntMatrix};
use crate::error::{Error, Result};

use super::InvolutionModule;

pub const MAX_DEGREE: usize = 6;
pub const MAX_CELLS: usize = 8;

/// `H_n(Z₂, M)` for `n = 0..=max_degree` from the unnormalized bar complex
/// `C_k = M ⊗ Z[Z₂^k]`.
pub fn bar_homology(m: &InvolutionModule, max_degree: usize) -> Result<Vec<FGAbGroup>> {
    if max_degree > MAX_DEGREE || m.dim() > MAX_CELLS {
        return Err(Error::SizeGuard(format!("bar complex limited to degree ≤ {MAX_DEGREE} and ≤ {MAX_CELLS} cells")));
    }
    let dims: Vec<usize> = (0..=max_degree + 1).map(|k| m.dim() << k).collect();
    // ranks[k] and divisors[k] describe d_k : C_k → C_{k−1}
    let mut ranks = vec![0usize; max_degree + 2];
    let mut divisors: Vec<Vec<BigInt>> = vec![Vec::new(); max_degree + 2];
    for k in 1..=max_degree + 1 {
        let d = differential(m, k);
        let divs = elementary_divisors(&d);
        ranks[k] = divs.len();
        divisors[k] = divs;
    }
    Ok((0..=max_degree)
        .map(|n| {
            let free = dims[n] - ranks[n] - ranks[n + 1];
            let torsion: Vec<BigInt> = divisors[n + 1].iter().filter(|d| !d.is_one()).cloned().collect();
            FGAbGroup { rank: free, torsion }
        })
        .collect())
}

pub fn bar_oracle(m: &InvolutionModule, n: usize) -> Result<FGAbGroup> {
    Ok(bar_homology(m, n)?.pop().expect("degree list is nonempty"))
}

/// Basis of `C_k`: `e_c ⊗ [g₁|…|g_k]`, indexed by `bits · dim + c` where bit
/// `i − 1` of `bits` is `gᵢ`.
fn differential(m: &InvolutionModule, k: usize) -> IntMatrix {
    let dim = m.dim();
    let a = m.matrix();
    let mut d = IntMatrix::zeros(dim << (k - 1), dim << k);
    let bit = |bits: usize, i: usize| (bits >> (i - 1)) & 1;
    for bits in 0..1usize << k {
        for c in 0..dim {
            let col = bits * dim + c;
            // m·g₁ ⊗ [g₂|…|g_k]
            let rest = bits >> 1;
            if bit(bits, 1) == 1 {
                for r in 0..dim {
                    let x = &a[(r, c)];
                    if !x.is_zero() {
                        d[(rest * dim + r, col)] += x;
                    }
                }
            } else {
                d[(rest * dim + c, col)] += 1;
            }
            // inner faces, gᵢgᵢ₊₁
            for i in 1..k {
                let low = bits & ((1 << (i - 1)) - 1);
                let prod = bit(bits, i) ^ bit(bits, i + 1);
                let high = bits >> (i + 1);
                let merged = low | (prod << (i - 1)) | (high << i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                d[(merged * dim + c, col)] += sign;
            }
            // drop g_k
            let front = bits & ((1 << (k - 1)) - 1);
            let sign = if k.is_multiple_of(2) { 1 } else { -1 };
            d[(front * dim + c, col)] += sign;
        }
    }
    d
}
