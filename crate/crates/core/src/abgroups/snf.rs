//! Smith normal form over the integers.
//!
//! Pivoting always picks the nonzero entry of smallest absolute value in the
//! active submatrix, first in row-major order, so results are reproducible.
//! The elimination is generic so that a checked `i64` pass can be tried before
//! falling back to arbitrary precision.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use super::matrix::{IntMatrix, Matrix};

pub trait SnfScalar:
    Clone + Zero + One + Signed + Integer + CheckedAdd + CheckedSub + CheckedMul + fmt::Display
{
}

impl<T> SnfScalar for T where
    T: Clone + Zero + One + Signed + Integer + CheckedAdd + CheckedSub + CheckedMul + fmt::Display
{
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// `u · m · v = s`, with `s` diagonal and `s[i][i] | s[i+1][i+1]`.
#[derive(Clone)]
pub struct Snf<T> {
    pub s: Matrix<T>,
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub v_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: SnfScalar> Snf<T> {
    /// The nonzero diagonal entries.
    pub fn divisors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.s[(i, i)].clone()).collect()
    }
}

struct Calc<T> {
    a: Matrix<T>,
    track: bool,
    u: Matrix<T>,
    u_inv: Matrix<T>,
    v: Matrix<T>,
    v_inv: Matrix<T>,
}

fn axpy<T: SnfScalar>(x: &T, q: &T, y: &T) -> Result<T, Overflow> {
    // x - q*y
    let p = q.checked_mul(y).ok_or(Overflow)?;
    x.checked_sub(&p).ok_or(Overflow)
}

impl<T: SnfScalar> Calc<T> {
    fn new(a: Matrix<T>, track: bool) -> Self {
        let (m, n) = a.shape();
        let (u, u_inv, v, v_inv) = if track {
            (Matrix::identity(m), Matrix::identity(m), Matrix::identity(n), Matrix::identity(n))
        } else {
            (Matrix::zeros(0, 0), Matrix::zeros(0, 0), Matrix::zeros(0, 0), Matrix::zeros(0, 0))
        };
        Calc { a, track, u, u_inv, v, v_inv }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if self.track {
            self.u.swap_rows(i, j);
            self.u_inv.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if self.track {
            self.v.swap_cols(i, j);
            self.v_inv.swap_rows(i, j);
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &T) -> Result<(), Overflow> {
        for j in 0..self.a.cols() {
            let nv = axpy(&self.a[(i, j)], q, &self.a[(t, j)])?;
            self.a[(i, j)] = nv;
        }
        if self.track {
            for j in 0..self.u.cols() {
                let nv = axpy(&self.u[(i, j)], q, &self.u[(t, j)])?;
                self.u[(i, j)] = nv;
            }
            // u_inv: col_t += q * col_i
            let nq = -q.clone();
            for r in 0..self.u_inv.rows() {
                let nv = axpy(&self.u_inv[(r, t)], &nq, &self.u_inv[(r, i)])?;
                self.u_inv[(r, t)] = nv;
            }
        }
        Ok(())
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &T) -> Result<(), Overflow> {
        for i in 0..self.a.rows() {
            let nv = axpy(&self.a[(i, j)], q, &self.a[(i, t)])?;
            self.a[(i, j)] = nv;
        }
        if self.track {
            for i in 0..self.v.rows() {
                let nv = axpy(&self.v[(i, j)], q, &self.v[(i, t)])?;
                self.v[(i, j)] = nv;
            }
            // v_inv: row_t += q * row_j
            let nq = -q.clone();
            for c in 0..self.v_inv.cols() {
                let nv = axpy(&self.v_inv[(t, c)], &nq, &self.v_inv[(j, c)])?;
                self.v_inv[(t, c)] = nv;
            }
        }
        Ok(())
    }

    fn negate_row(&mut self, t: usize) {
        for j in 0..self.a.cols() {
            self.a[(t, j)] = -self.a[(t, j)].clone();
        }
        if self.track {
            for j in 0..self.u.cols() {
                self.u[(t, j)] = -self.u[(t, j)].clone();
            }
            for r in 0..self.u_inv.rows() {
                self.u_inv[(r, t)] = -self.u_inv[(r, t)].clone();
            }
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, T)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Moves the smallest nonzero entry of row `t` / column `t` to the pivot.
    fn repivot_line(&mut self, t: usize) {
        let mut best: Option<(bool, usize, T)> = None;
        for i in t + 1..self.a.rows() {
            let x = &self.a[(i, t)];
            if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                best = Some((true, i, x.abs()));
            }
        }
        for j in t + 1..self.a.cols() {
            let x = &self.a[(t, j)];
            if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                best = Some((false, j, x.abs()));
            }
        }
        if let Some((is_row, k, ax)) = best {
            if ax < self.a[(t, t)].abs() {
                if is_row {
                    self.swap_rows(t, k);
                } else {
                    self.swap_cols(t, k);
                }
            }
        }
    }

    fn run(&mut self) -> Result<usize, Overflow> {
        let (m, n) = self.a.shape();
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = self.find_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].clone() / self.a[(t, t)].clone();
                    if !q.is_zero() {
                        self.row_sub(i, t, &q)?;
                    }
                    if !self.a[(i, t)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    self.repivot_line(t);
                    continue;
                }
                for j in t + 1..n {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].clone() / self.a[(t, t)].clone();
                    if !q.is_zero() {
                        self.col_sub(j, t, &q)?;
                    }
                    if !self.a[(t, j)].is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    self.repivot_line(t);
                    continue;
                }
                let p = self.a[(t, t)].clone();
                let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.a[(i, j)].is_multiple_of(&p)));
                match bad_row {
                    Some(i) => {
                        // row_t += row_i
                        self.row_sub(t, i, &-T::one())?;
                    }
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        Ok(t)
    }
}

fn snf_generic<T: SnfScalar>(m: &Matrix<T>, track: bool) -> Result<Snf<T>, Overflow> {
    let mut calc = Calc::new(m.clone(), track);
    let rank = calc.run()?;
    Ok(Snf { s: calc.a, u: calc.u, u_inv: calc.u_inv, v: calc.v, v_inv: calc.v_inv, rank })
}

/// Full Smith normal form with unimodular transforms and their inverses.
pub fn snf(m: &IntMatrix) -> Snf<BigInt> {
    if let Some(small) = m.try_map(|x| x.to_i64()) {
        if let Ok(r) = snf_generic(&small, true) {
            let up = |x: &Matrix<i64>| x.map(|v| BigInt::from(*v));
            return Snf {
                s: up(&r.s),
                u: up(&r.u),
                u_inv: up(&r.u_inv),
                v: up(&r.v),
                v_inv: up(&r.v_inv),
                rank: r.rank,
            };
        }
    }
    snf_generic(m, true).expect("arbitrary precision cannot overflow")
}

/// Nonzero invariant factors only, without transforms.
pub fn elementary_divisors(m: &IntMatrix) -> Vec<BigInt> {
    if let Some(small) = m.try_map(|x| x.to_i64()) {
        if let Ok(r) = snf_generic(&small, false) {
            return r.divisors().into_iter().map(BigInt::from).collect();
        }
    }
    snf_generic(m, false).expect("arbitrary precision cannot overflow").divisors()
}
