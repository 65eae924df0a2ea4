use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Arithmetic in a coefficient field.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn from_int(&self, v: &BigInt) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn from_int(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
}

/// `ℤ/p` for a prime `p`, elements stored as residues in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// `None` unless `p` is prime and below 2^32 (so products fit in u64).
    pub fn new(p: u64) -> Option<Self> {
        (is_prime(p) && p < 1 << 32).then_some(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

impl Field for PrimeField {
    type Elem = u64;

    fn from_int(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (*a, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

/// A dense matrix over a field, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone> FieldMatrix<E> {
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        let data = (0..rows).map(|i| columns.iter().map(|c| c[i].clone()).collect()).collect();
        Self { rows, cols: columns.len(), data }
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        self.data.iter().map(|r| r[j].clone()).collect()
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: Field>(field: &F, m: &mut FieldMatrix<F::Elem>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !field.is_zero(&m.data[i][c])) else {
            continue;
        };
        m.data.swap(r, p);
        let inv = field.inv(&m.data[r][c]);
        for x in m.data[r].iter_mut() {
            *x = field.mul(x, &inv);
        }
        for i in 0..m.rows {
            if i != r && !field.is_zero(&m.data[i][c]) {
                let factor = m.data[i][c].clone();
                for j in 0..m.cols {
                    let d = field.mul(&factor, &m.data[r][j]);
                    m.data[i][j] = field.sub(&m.data[i][j], &d);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &FieldMatrix<F::Elem>) -> usize {
    rref(field, &mut m.clone()).len()
}

/// A basis of the null space `{x | m x = 0}`, one vector per free column.
pub fn kernel<F: Field>(field: &F, m: &FieldMatrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut r = m.clone();
    let pivots = rref(field, &mut r);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![field.zero(); m.cols];
            x[f] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = field.sub(&field.zero(), &r.data[row][f]);
            }
            x
        })
        .collect()
}

/// Coordinates of `target` in the span of `columns`, if it lies there.
/// The columns must be linearly independent.
pub fn solve<F: Field>(field: &F, columns: &[Vec<F::Elem>], target: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let rows = target.len();
    let mut augmented: Vec<Vec<F::Elem>> = columns.to_vec();
    augmented.push(target.to_vec());
    let mut m = FieldMatrix::from_columns(rows, &augmented);
    let pivots = rref(field, &mut m);
    let n = columns.len();
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![field.zero(); n];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = m.data[row][n].clone();
    }
    Some(x)
}
