use num_bigint::BigInt;
use num_traits::One;

use super::matrix::IntegerMatrix;
use crate::complex::{SimplicialComplex, SimplicialMap};
use crate::graph::VertexSet;

/// The simplicial chain complex of a complex over ℤ, optionally augmented by
/// a rank-one module in degree −1.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// `bases[q]` lists the `q`-faces in lexicographic order.
    bases: Vec<Vec<VertexSet>>,
    /// `boundaries[q]` is `∂_q : C_q → C_{q−1}`, for `q = 0..=dim + 1`.
    boundaries: Vec<IntegerMatrix>,
    augmented: bool,
}

/// `∂_q` on ascending simplices: deleting the `i`-th vertex carries `(−1)^i`.
fn boundary(source: &[VertexSet], target: &[VertexSet]) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(target.len(), source.len());
    for (j, simplex) in source.iter().enumerate() {
        let s = simplex.as_slice();
        for i in 0..s.len() {
            let face: VertexSet = s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
            let row = target.binary_search(&face).expect("faces of faces are faces");
            m.set(row, j, BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

impl ChainComplex {
    pub fn new(c: &SimplicialComplex, augmented: bool) -> Self {
        let dim = c.dimension();
        let bases: Vec<Vec<VertexSet>> = (0..=dim).map(|q| c.faces(q)).collect();
        let mut boundaries = Vec::with_capacity(dim + 2);
        let n0 = bases[0].len();
        boundaries.push(if augmented {
            let mut eps = IntegerMatrix::zeros(1, n0);
            for j in 0..n0 {
                eps.set(0, j, BigInt::one());
            }
            eps
        } else {
            IntegerMatrix::zeros(0, n0)
        });
        for q in 1..=dim {
            boundaries.push(boundary(&bases[q], &bases[q - 1]));
        }
        boundaries.push(IntegerMatrix::zeros(bases[dim].len(), 0));
        let complex = Self { bases, boundaries, augmented };
        complex.assert_boundary_squares_to_zero();
        complex
    }

    fn assert_boundary_squares_to_zero(&self) {
        for q in 1..self.boundaries.len() {
            let square = self.boundaries[q - 1].mul(&self.boundaries[q]);
            assert!(square.is_zero(), "∂_{} ∘ ∂_{} ≠ 0", q - 1, q);
        }
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, q: usize) -> &[VertexSet] {
        &self.bases[q]
    }

    pub fn rank(&self, q: usize) -> usize {
        self.bases.get(q).map_or(0, Vec::len)
    }

    /// `∂_q` for `q = 0..=top_degree + 1`.
    pub fn boundary(&self, q: usize) -> &IntegerMatrix {
        &self.boundaries[q]
    }
}

/// The matrix of `f_# : C_q(domain) → C_q(codomain)`. A simplex whose image
/// has fewer vertices goes to zero; otherwise it goes to its image with the
/// sign of the sorting permutation.
pub fn chain_map(f: &SimplicialMap, domain: &ChainComplex, codomain: &ChainComplex, q: usize) -> IntegerMatrix {
    let rows = codomain.rank(q);
    let cols = domain.rank(q);
    let mut m = IntegerMatrix::zeros(rows, cols);
    if q > domain.top_degree() {
        return m;
    }
    for (j, simplex) in domain.basis(q).iter().enumerate() {
        let image: Vec<usize> = simplex.iter().map(|v| f.apply(v)).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() < image.len() {
            continue;
        }
        let inversions = (0..image.len())
            .flat_map(|a| (a + 1..image.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| image[a] > image[b])
            .count();
        let row = codomain
            .basis(q)
            .binary_search(&VertexSet::from(sorted))
            .expect("simplicial maps send faces to faces");
        m.set(row, j, BigInt::from(if inversions % 2 == 0 { 1 } else { -1 }));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(n, facets.iter().map(|f| VertexSet::new(f.iter().copied()))).unwrap()
    }

    #[test]
    fn hollow_triangle_boundary() {
        let c = ChainComplex::new(&complex(3, &[&[0, 1], &[1, 2], &[0, 2]]), false);
        let d1 = c.boundary(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        for j in 0..3 {
            let sum: BigInt = d1.column(j).iter().sum();
            assert_eq!(sum, BigInt::from(0));
        }
        assert_eq!(d1, &IntegerMatrix::from_rows(&[[-1, -1, 0], [1, 0, -1], [0, 1, 1]]));
    }

    #[test]
    fn full_simplex_signs() {
        let c = ChainComplex::new(&complex(3, &[&[0, 1, 2]]), true);
        // Edges in order {0,1}, {0,2}, {1,2}.
        assert_eq!(c.boundary(2).column(0), vec![BigInt::from(1), BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(c.boundary(0), &IntegerMatrix::from_rows(&[[1, 1, 1]]));
    }

    #[test]
    fn augmented_point() {
        let c = ChainComplex::new(&complex(1, &[&[0]]), true);
        assert_eq!(c.boundary(0), &IntegerMatrix::from_rows(&[[1]]));
        assert!(c.is_augmented());
    }
}
