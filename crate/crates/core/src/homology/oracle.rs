//! Seeded comparison of the bar complex against the closed formulas.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::abgroups::{FGAbGroup, IntMatrix};
use crate::error::Result;

use super::{bar_homology, InvolutionModule, MAX_CELLS};

/// Highest degree compared.
pub const ORACLE_DEGREE: usize = 5;

/// A signed permutation involution on at most `max_cells` cells, conjugated
/// by a few elementary matrices half of the time.
pub fn random_module<R: Rng>(rng: &mut R, max_cells: usize) -> InvolutionModule {
    let n = rng.gen_range(1..=max_cells);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let pairs = rng.gen_range(0..=n / 2);
    let mut a = IntMatrix::zeros(n, n);
    for p in 0..pairs {
        let (i, j) = (idx[2 * p], idx[2 * p + 1]);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        a[(j, i)] = BigInt::from(e);
        a[(i, j)] = BigInt::from(e);
    }
    for &i in &idx[2 * pairs..] {
        a[(i, i)] = BigInt::from(if rng.gen_bool(0.75) { 1 } else { -1 });
    }
    if n > 1 && rng.gen_bool(0.5) {
        let mut u = IntMatrix::identity(n);
        let mut u_inv = IntMatrix::identity(n);
        for _ in 0..rng.gen_range(1..=3) {
            let i = rng.gen_range(0..n);
            let j = (i + rng.gen_range(1..n)) % n;
            let c = BigInt::from(rng.gen_range(-2i64..=2));
            let mut e = IntMatrix::identity(n);
            e[(i, j)] = c.clone();
            let mut e_inv = IntMatrix::identity(n);
            e_inv[(i, j)] = -c;
            u = e.mul(&u);
            u_inv = u_inv.mul(&e_inv);
        }
        a = u.mul(&a).mul(&u_inv);
    }
    InvolutionModule::unlabelled(a).expect("conjugate of an involution")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleMismatch {
    pub module: usize,
    pub degree: usize,
    pub bar: FGAbGroup,
    pub formula: FGAbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub seed: u64,
    pub modules: usize,
    pub degrees: usize,
    pub mismatches: Vec<OracleMismatch>,
}

/// Formula value of `H_n(Z₂, M)`.
pub fn formula_homology(m: &InvolutionModule, n: usize) -> FGAbGroup {
    match n {
        0 => m.coinvariants(),
        n if n % 2 == 1 => m.h_odd(),
        _ => m.h_even(),
    }
}

pub fn oracle_check(seed: u64, count: usize) -> Result<OracleReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for i in 0..count {
        let m = random_module(&mut rng, MAX_CELLS);
        let bar = bar_homology(&m, ORACLE_DEGREE)?;
        for (n, g) in bar.into_iter().enumerate() {
            let f = formula_homology(&m, n);
            if g != f {
                mismatches.push(OracleMismatch { module: i, degree: n, bar: g, formula: f });
            }
        }
    }
    Ok(OracleReport { seed, modules: count, degrees: ORACLE_DEGREE, mismatches })
}
