use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntegerMatrix;

/// Invariant factors `d_1 | d_2 | ... | d_r` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

/// Position of the nonzero entry of least absolute value in the block
/// `[t.., t..]`, restricted to row `t` and column `t` when `cross_only`.
fn min_entry(m: &IntegerMatrix, t: usize, cross_only: bool) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut consider = |i: usize, j: usize| {
        let v = m.get(i, j);
        if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m.get(bi, bj).abs()) {
            best = Some((i, j));
        }
    };
    if cross_only {
        (t..m.rows()).for_each(|i| consider(i, t));
        (t + 1..m.cols()).for_each(|j| consider(t, j));
    } else {
        for i in t..m.rows() {
            for j in t..m.cols() {
                consider(i, j);
            }
        }
    }
    best
}

/// Smith normal form by elementary row and column operations, always pivoting
/// on the entry of least absolute value.
pub fn smith_normal_form(matrix: &IntegerMatrix) -> SmithForm {
    let mut m = matrix.clone();
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < m.rows().min(m.cols()) {
        let Some((i, j)) = min_entry(&m, t, false) else { break };
        m.swap_rows(t, i);
        m.swap_cols(t, j);
        loop {
            let pivot = m.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..m.rows() {
                if !m.get(i, t).is_zero() {
                    let q = m.get(i, t).div_floor(&pivot);
                    m.sub_row(i, t, &q);
                    dirty |= !m.get(i, t).is_zero();
                }
            }
            for j in t + 1..m.cols() {
                if !m.get(t, j).is_zero() {
                    let q = m.get(t, j).div_floor(&pivot);
                    m.sub_col(j, t, &q);
                    dirty |= !m.get(t, j).is_zero();
                }
            }
            if dirty {
                let (i, j) = min_entry(&m, t, true).expect("a remainder is nonzero");
                m.swap_rows(t, i);
                m.swap_cols(t, j);
                continue;
            }
            // Row and column are clear; enforce divisibility on the rest.
            let offender = (t + 1..m.rows())
                .find(|&i| (t + 1..m.cols()).any(|j| !m.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => m.sub_row(t, i, &-BigInt::one()),
                None => break,
            }
        }
        diagonal.push(m.get(t, t).abs());
        t += 1;
    }
    SmithForm { diagonal }
}
