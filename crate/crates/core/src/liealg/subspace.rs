use crate::exactalg::{Matrix, Scalar};

use super::Vector;

/// A linear subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon form. Two subspaces are equal iff their stored matrices are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(0, n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
            pivots: (0..n).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(n: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Subspace::zero(n);
        }
        Self::from_matrix(&Matrix::from_rows(n, vectors))
    }

    /// Row space of a matrix.
    pub fn from_matrix(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let rows: Vec<Vector> = (0..pivots.len()).map(|i| r.row_vec(i)).collect();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_rows(m.cols(), &rows),
            pivots,
        }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vector> = indices
            .iter()
            .map(|&i| crate::exactalg::unit_vector(n, i))
            .collect();
        Self::span(n, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis matrix, one row per basis vector.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis.to_rows()
    }

    /// Coordinates of `v` with respect to the canonical rref basis, if `v`
    /// lies in the subspace. Because the basis is reduced, the candidate
    /// coordinates are the entries of `v` at the pivot columns.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (row, c) in coords.iter().enumerate() {
            crate::exactalg::axpy(&mut rest, &-c, self.basis.row(row));
        }
        crate::exactalg::is_zero_vector(&rest).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// Linear functionals vanishing on the subspace, as a basis of row vectors.
    pub fn annihilator(&self) -> Vec<Vector> {
        if self.is_zero() {
            return Subspace::full(self.ambient_dim).basis();
        }
        self.basis.kernel_basis()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let n = self.ambient_dim;
        let mut equations = self.annihilator();
        equations.extend(other.annihilator());
        if equations.is_empty() {
            return Subspace::full(n);
        }
        let k = Matrix::from_rows(n, &equations).kernel_basis();
        Subspace::span(n, &k)
    }

    /// Vectors extending `start` (assumed to be independent vectors of `self`)
    /// to a basis of `self`, drawn greedily from the canonical rows.
    pub fn complement_vectors(&self, start: &[Vector]) -> Vec<Vector> {
        let mut current = Subspace::span(self.ambient_dim, start);
        let mut added = Vec::new();
        for row in self.basis() {
            if !current.contains(&row) {
                current = current.sum(&Subspace::span(self.ambient_dim, std::slice::from_ref(&row)));
                added.push(row);
            }
        }
        added
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}): ", self.dim(), self.ambient_dim)?;
        let rows: Vec<String> = self
            .basis()
            .iter()
            .map(|r| format!("({})", r.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}
