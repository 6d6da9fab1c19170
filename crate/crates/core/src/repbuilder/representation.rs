use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::liealg::{LieAlgebra, Vector};

/// A linear map from a Lie algebra to `gl_N`, given by the images of the
/// basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    algebra: String,
    labels: Vec<String>,
    module_basis: Vec<String>,
    matrices: Vec<Matrix>,
}

/// A basis pair on which `rho([u, v]) = [rho(u), rho(v)]` fails.
#[derive(Clone, Debug, PartialEq)]
pub struct HomomorphismFailure {
    pub i: usize,
    pub j: usize,
    pub defect: Matrix,
}

impl std::fmt::Display for HomomorphismFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let nonzero = self.defect.entries().iter().filter(|s| !s.is_zero()).count();
        write!(
            f,
            "homomorphism law fails on basis pair ({}, {}); defect has {} nonzero entries",
            self.i, self.j, nonzero
        )
    }
}

impl Representation {
    pub fn new(algebra: &LieAlgebra, module_basis: Vec<String>, matrices: Vec<Matrix>) -> Self {
        let n = module_basis.len();
        assert_eq!(matrices.len(), algebra.dim(), "one matrix per basis vector");
        assert!(matrices.iter().all(|m| m.rows() == n && m.cols() == n), "matrices must be N x N");
        Representation {
            algebra: algebra.name().to_string(),
            labels: algebra.labels().to_vec(),
            module_basis,
            matrices,
        }
    }

    /// The zero map of degree `n`.
    pub fn zero(algebra: &LieAlgebra, n: usize) -> Self {
        let basis = (0..n).map(|i| format!("v{i}")).collect();
        Self::new(algebra, basis, vec![Matrix::zeros(n, n); algebra.dim()])
    }

    /// The adjoint representation in the algebra's own basis.
    pub fn adjoint(algebra: &LieAlgebra) -> Self {
        let d = algebra.dim();
        let matrices = (0..d)
            .map(|i| algebra.adjoint(&crate::exactalg::unit_vector(d, i)))
            .collect();
        Self::new(algebra, algebra.labels().iter().map(|l| format!("ad:{l}")).collect(), matrices)
    }

    pub fn degree(&self) -> usize {
        self.module_basis.len()
    }

    pub fn algebra_name(&self) -> &str {
        &self.algebra
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn module_basis(&self) -> &[String] {
        &self.module_basis
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// `rho(v) = sum_i v_i rho(x_i)`.
    pub fn image(&self, v: &[Scalar]) -> Matrix {
        assert_eq!(v.len(), self.matrices.len());
        let n = self.degree();
        let mut out = Matrix::zeros(n, n);
        for (c, m) in v.iter().zip(&self.matrices) {
            out.add_scaled(c, m);
        }
        out
    }

    fn check_shape(&self, algebra: &LieAlgebra) {
        assert_eq!(self.matrices.len(), algebra.dim(), "representation/algebra dimension mismatch");
    }

    /// Checks `rho([x_i, x_j]) = rho(x_i) rho(x_j) - rho(x_j) rho(x_i)` on all
    /// basis pairs `i < j`.
    pub fn verify_homomorphism(&self, algebra: &LieAlgebra) -> std::result::Result<(), HomomorphismFailure> {
        self.check_shape(algebra);
        let d = algebra.dim();
        for i in 0..d {
            for j in i + 1..d {
                let (a, b) = (&self.matrices[i], &self.matrices[j]);
                let commutator = a.mul(b).sub(&b.mul(a));
                let mut defect = commutator;
                for (k, c) in algebra.bracket_terms(i, j) {
                    defect.add_scaled(&-c, &self.matrices[*k]);
                }
                if !defect.is_zero() {
                    return Err(HomomorphismFailure { i, j, defect });
                }
            }
        }
        Ok(())
    }

    /// `Ok` iff the matrices are linearly independent; otherwise a basis of
    /// the kernel, as coordinate vectors of the algebra.
    pub fn verify_faithful(&self, algebra: &LieAlgebra) -> std::result::Result<(), Vec<Vector>> {
        self.check_shape(algebra);
        let d = algebra.dim();
        let kernel = self.kernel_basis();
        if kernel.is_empty() {
            Ok(())
        } else {
            debug_assert!(kernel.len() <= d);
            Err(kernel)
        }
    }

    /// Kernel of `x -> rho(x)`. Only matrix positions that are nonzero in some
    /// image contribute equations.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let d = self.matrices.len();
        if d == 0 {
            return Vec::new();
        }
        let n = self.degree();
        let mut rows: Vec<Vector> = Vec::new();
        for pos in 0..n * n {
            if self.matrices.iter().any(|m| !m.entries()[pos].is_zero()) {
                rows.push(self.matrices.iter().map(|m| m.entries()[pos].clone()).collect());
            }
        }
        if rows.is_empty() {
            return (0..d).map(|i| crate::exactalg::unit_vector(d, i)).collect();
        }
        Matrix::from_rows(d, &rows).kernel_basis()
    }

    /// Block-diagonal sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.algebra != other.algebra || self.labels != other.labels {
            return Err(Error::IncompatibleAlgebras(self.algebra.clone(), other.algebra.clone()));
        }
        let (na, nb) = (self.degree(), other.degree());
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = Matrix::zeros(na + nb, na + nb);
                for r in 0..na {
                    for c in 0..na {
                        m[(r, c)] = a[(r, c)].clone();
                    }
                }
                for r in 0..nb {
                    for c in 0..nb {
                        m[(na + r, na + c)] = b[(r, c)].clone();
                    }
                }
                m
            })
            .collect();
        let mut module_basis = self.module_basis.clone();
        module_basis.extend(other.module_basis.iter().cloned());
        Ok(Representation {
            algebra: self.algebra.clone(),
            labels: self.labels.clone(),
            module_basis,
            matrices,
        })
    }

    /// Composes with a linear map `target -> source algebra`, where row `k`
    /// of `map` holds the source coordinates of the image of `target.x_k`.
    /// The result is a representation of `target` when `map` is a
    /// homomorphism.
    pub fn pull_back(&self, target: &LieAlgebra, map: &Matrix) -> Representation {
        assert_eq!(map.rows(), target.dim());
        assert_eq!(map.cols(), self.matrices.len());
        let matrices = (0..target.dim()).map(|k| self.image(map.row(k))).collect();
        Representation {
            algebra: target.name().to_string(),
            labels: target.labels().to_vec(),
            module_basis: self.module_basis.clone(),
            matrices,
        }
    }

    pub fn to_json(&self) -> RepresentationJson {
        RepresentationJson {
            degree: self.degree(),
            algebra: self.algebra.clone(),
            module_basis: self.module_basis.clone(),
            matrices: self
                .labels
                .iter()
                .zip(&self.matrices)
                .map(|(l, m)| (l.clone(), m.to_rows()))
                .collect(),
        }
    }

    /// Reads a stored representation, matching matrices to `algebra`'s basis
    /// labels.
    pub fn from_json(json: &RepresentationJson, algebra: &LieAlgebra) -> Result<Representation> {
        let n = json.degree;
        if json.module_basis.len() != n {
            return Err(Error::Parse(format!(
                "degree {n} but {} module basis labels",
                json.module_basis.len()
            )));
        }
        if json.matrices.len() != algebra.dim() {
            return Err(Error::Parse(format!(
                "{} matrices for an algebra of dimension {}",
                json.matrices.len(),
                algebra.dim()
            )));
        }
        let mut matrices = Vec::with_capacity(algebra.dim());
        for label in algebra.labels() {
            let rows = json
                .matrices
                .get(label)
                .ok_or_else(|| Error::Parse(format!("no matrix for basis vector {label:?}")))?;
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Parse(format!("matrix for {label:?} is not {n} x {n}")));
            }
            matrices.push(Matrix::from_rows(n, rows));
        }
        Ok(Representation {
            algebra: json.algebra.clone(),
            labels: algebra.labels().to_vec(),
            module_basis: json.module_basis.clone(),
            matrices,
        })
    }
}

/// File form of a [`Representation`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RepresentationJson {
    pub degree: usize,
    pub algebra: String,
    pub module_basis: Vec<String>,
    pub matrices: BTreeMap<String, Vec<Vec<Scalar>>>,
}

/// Faithful representation of the `k`-dimensional abelian algebra of degree
/// `k + 1`: generator `i` maps to the matrix unit `E_{i+1, 0}`.
pub fn abelian_rep(k: usize) -> Representation {
    let algebra = LieAlgebra::abelian(k);
    let matrices = (0..k)
        .map(|i| {
            let mut m = Matrix::zeros(k + 1, k + 1);
            m[(i + 1, 0)] = Scalar::one();
            m
        })
        .collect();
    Representation::new(&algebra, (0..=k).map(|i| format!("e{i}")).collect(), matrices)
}
