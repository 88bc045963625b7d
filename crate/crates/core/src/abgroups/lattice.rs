//! Sublattices of `Z^n` given by spanning columns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::snf::snf;

/// Basis (as columns) of `{x : m x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let r = snf(m);
    let idx: Vec<usize> = (r.rank..m.cols()).collect();
    r.v.select_columns(&idx)
}

/// Basis (as columns) of the column span of `m`.
pub fn image_basis(m: &IntMatrix) -> IntMatrix {
    let r = snf(m);
    let mut b = r.u_inv.select_columns(&(0..r.rank).collect::<Vec<_>>());
    for j in 0..r.rank {
        let d = r.s[(j, j)].clone();
        for i in 0..b.rows() {
            b[(i, j)] *= &d;
        }
    }
    b
}

/// Integer solution `x` of `basis · x = y`, where `basis` has independent
/// columns; `None` if some column of `y` is outside the lattice.
pub fn solve(basis: &IntMatrix, y: &IntMatrix) -> Option<IntMatrix> {
    assert_eq!(basis.rows(), y.rows());
    let k = basis.cols();
    let r = snf(basis);
    assert_eq!(r.rank, k, "solve expects independent basis columns");
    let z = r.u.mul(y);
    let mut w = IntMatrix::zeros(k, y.cols());
    for c in 0..y.cols() {
        for i in 0..z.rows() {
            let zi = &z[(i, c)];
            if i < k {
                let d = &r.s[(i, i)];
                let (q, rem) = zi.div_rem(d);
                if !rem.is_zero() {
                    return None;
                }
                w[(i, c)] = q;
            } else if !zi.is_zero() {
                return None;
            }
        }
    }
    Some(r.v.mul(&w))
}

/// Rank of the column span.
pub fn rank(m: &IntMatrix) -> usize {
    super::snf::elementary_divisors(m).len()
}

pub fn vector(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_sum_map() {
        let m = IntMatrix::from_i64(&[&[1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solve_detects_non_members() {
        let b = IntMatrix::from_i64(&[&[2], &[0]]);
        assert!(solve(&b, &IntMatrix::from_i64(&[&[4], &[0]])).is_some());
        assert!(solve(&b, &IntMatrix::from_i64(&[&[3], &[0]])).is_none());
        assert!(solve(&b, &IntMatrix::from_i64(&[&[2], &[1]])).is_none());
    }

    #[test]
    fn image_basis_spans_same_lattice() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6], &[0, 3, 3]]);
        let b = image_basis(&m);
        assert_eq!(b.cols(), 2);
        assert!(solve(&b, &m).is_some());
    }
}
