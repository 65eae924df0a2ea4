//! Simplicial homology over ℤ, ℚ and ℤ/p, reduced or not, and the maps
//! induced on homology by simplicial maps (field coefficients only).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::complex::{SimplicialComplex, SimplicialMap};

pub mod chain;
pub mod field;
pub mod matrix;
pub mod smith;

pub use chain::{chain_map, ChainComplex};
pub use field::{Field, FieldMatrix, PrimeField, Rationals};
pub use matrix::IntegerMatrix;
pub use smith::{smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("invalid coefficients `{0}`: expected z, q, or p:<prime>")]
    InvalidCoefficients(String),
    #[error("induced maps need field coefficients (q or p:<prime>)")]
    IntegerInducedMap,
}

/// Coefficient ring.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Coefficients {
    #[default]
    Integers,
    Rationals,
    ModP(PrimeField),
}

impl FromStr for Coefficients {
    type Err = HomologyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || HomologyError::InvalidCoefficients(s.to_string());
        match s.trim() {
            "z" | "Z" => Ok(Coefficients::Integers),
            "q" | "Q" => Ok(Coefficients::Rationals),
            other => {
                let p = other.strip_prefix("p:").ok_or_else(bad)?;
                let p: u64 = p.parse().map_err(|_| bad())?;
                PrimeField::new(p).map(Coefficients::ModP).ok_or_else(bad)
            }
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("z"),
            Coefficients::Rationals => f.write_str("q"),
            Coefficients::ModP(p) => write!(f, "p:{}", p.modulus()),
        }
    }
}

/// `ℤ^free_rank ⊕ ℤ/d_1 ⊕ ... ⊕ ℤ/d_r`, or a vector space of dimension
/// `free_rank` over a field.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    /// Each entry exceeds one and divides the next.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

fn field_matrix<F: Field>(field: &F, m: &IntegerMatrix) -> FieldMatrix<F::Elem> {
    FieldMatrix {
        rows: m.rows(),
        cols: m.cols(),
        data: (0..m.rows()).map(|i| (0..m.cols()).map(|j| field.from_int(m.get(i, j))).collect()).collect(),
    }
}

fn field_ranks<F: Field>(field: &F, chains: &ChainComplex) -> Vec<usize> {
    (0..=chains.top_degree() + 1)
        .map(|q| field::rank(field, &field_matrix(field, chains.boundary(q))))
        .collect()
}

/// Homology in degrees `0..=dim c`; degrees above the dimension are zero.
///
/// Over ℤ the free rank in degree `q` is `#q-faces − rank ∂_q − rank ∂_{q+1}`
/// and the torsion is read off the Smith form of `∂_{q+1}`.
pub fn homology(c: &SimplicialComplex, reduced: bool, coefficients: Coefficients) -> Vec<HomologyGroup> {
    let chains = ChainComplex::new(c, reduced);
    let top = chains.top_degree();
    let free = |ranks: &[usize]| -> Vec<usize> { (0..=top).map(|q| chains.rank(q) - ranks[q] - ranks[q + 1]).collect() };
    match coefficients {
        Coefficients::Integers => {
            let forms: Vec<SmithForm> = (0..=top + 1).map(|q| smith_normal_form(chains.boundary(q))).collect();
            let ranks: Vec<usize> = forms.iter().map(SmithForm::rank).collect();
            free(&ranks)
                .into_iter()
                .enumerate()
                .map(|(q, free_rank)| HomologyGroup { free_rank, torsion: forms[q + 1].torsion() })
                .collect()
        }
        Coefficients::Rationals => free(&field_ranks(&Rationals, &chains)).into_iter().map(HomologyGroup::free).collect(),
        Coefficients::ModP(p) => free(&field_ranks(&p, &chains)).into_iter().map(HomologyGroup::free).collect(),
    }
}

/// Homology in a single degree, zero above the dimension.
pub fn homology_in_degree(c: &SimplicialComplex, q: usize, reduced: bool, coefficients: Coefficients) -> HomologyGroup {
    homology(c, reduced, coefficients).into_iter().nth(q).unwrap_or_default()
}

/// Chosen bases: cycles representing homology classes, completed by a basis
/// of the boundaries.
struct HomologyBasis<E> {
    boundaries: Vec<Vec<E>>,
    representatives: Vec<Vec<E>>,
}

fn homology_basis<F: Field>(field: &F, chains: &ChainComplex, q: usize) -> HomologyBasis<F::Elem> {
    let d_q = field_matrix(field, chains.boundary(q));
    let d_next = field_matrix(field, chains.boundary(q + 1));
    let mut span: Vec<Vec<F::Elem>> = Vec::new();
    let dim = chains.rank(q);
    let independent = |span: &Vec<Vec<F::Elem>>, v: &Vec<F::Elem>| {
        let mut cols = span.clone();
        cols.push(v.clone());
        field::rank(field, &FieldMatrix::from_columns(dim, &cols)) == cols.len()
    };
    for j in 0..d_next.cols {
        let col = d_next.column(j);
        if independent(&span, &col) {
            span.push(col);
        }
    }
    let boundaries = span.clone();
    let mut representatives = Vec::new();
    for z in field::kernel(field, &d_q) {
        if independent(&span, &z) {
            span.push(z.clone());
            representatives.push(z);
        }
    }
    HomologyBasis { boundaries, representatives }
}

/// The matrix of `H_q(f)` against chosen bases, with its rank.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMap<E> {
    /// `matrix[i][j]`: coefficient of target class `i` in the image of source class `j`.
    pub matrix: Vec<Vec<E>>,
    pub rank: usize,
}

/// `H_q(f) : H_q(domain) → H_q(codomain)` over a field.
pub fn induced_map<F: Field>(
    field: &F,
    f: &SimplicialMap,
    domain: &SimplicialComplex,
    codomain: &SimplicialComplex,
    q: usize,
    reduced: bool,
) -> InducedMap<F::Elem> {
    let src = ChainComplex::new(domain, reduced);
    let dst = ChainComplex::new(codomain, reduced);
    if q > src.top_degree() || q > dst.top_degree() {
        let rows = if q > dst.top_degree() { 0 } else { homology_basis(field, &dst, q).representatives.len() };
        let cols = if q > src.top_degree() { 0 } else { homology_basis(field, &src, q).representatives.len() };
        return InducedMap { matrix: vec![vec![field.zero(); cols]; rows], rank: 0 };
    }
    let f_q = chain_map(f, &src, &dst, q);
    if q >= 1 {
        let lhs = dst.boundary(q).mul(&f_q);
        let rhs = chain_map(f, &src, &dst, q - 1).mul(src.boundary(q));
        assert_eq!(lhs, rhs, "chain map does not commute with ∂_{q}");
    }
    let f_q = field_matrix(field, &f_q);
    let from = homology_basis(field, &src, q);
    let to = homology_basis(field, &dst, q);
    let mut columns: Vec<Vec<F::Elem>> = to.boundaries.clone();
    columns.extend(to.representatives.iter().cloned());
    let offset = to.boundaries.len();
    let mut matrix = vec![Vec::with_capacity(from.representatives.len()); to.representatives.len()];
    for z in &from.representatives {
        let image: Vec<F::Elem> = (0..f_q.rows)
            .map(|i| (0..f_q.cols).fold(field.zero(), |acc, j| field.add(&acc, &field.mul(&f_q.data[i][j], &z[j]))))
            .collect();
        let coords = field::solve(field, &columns, &image).expect("images of cycles are cycles");
        for (i, row) in matrix.iter_mut().enumerate() {
            row.push(coords[offset + i].clone());
        }
    }
    let rank = if matrix.is_empty() || matrix[0].is_empty() {
        0
    } else {
        field::rank(field, &FieldMatrix { rows: matrix.len(), cols: matrix[0].len(), data: matrix.clone() })
    };
    InducedMap { matrix, rank }
}

/// Rank of the induced map, dispatching on the coefficient field.
pub fn induced_rank(
    f: &SimplicialMap,
    domain: &SimplicialComplex,
    codomain: &SimplicialComplex,
    q: usize,
    reduced: bool,
    coefficients: Coefficients,
) -> Result<usize, HomologyError> {
    match coefficients {
        Coefficients::Integers => Err(HomologyError::IntegerInducedMap),
        Coefficients::Rationals => Ok(induced_map(&Rationals, f, domain, codomain, q, reduced).rank),
        Coefficients::ModP(p) => Ok(induced_map(&p, f, domain, codomain, q, reduced).rank),
    }
}
