use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::liealg::{LieAlgebra, Subspace, Vector};

/// `g = p ⋉ m` together with a nilpotent ideal `h ⊆ m` of `g`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    algebra: LieAlgebra,
    p: Subspace,
    m: Subspace,
    h: Subspace,
    /// Inverse of the matrix whose rows are the bases of `p` then `m`.
    splitter: Matrix,
}

impl Decomposition {
    /// Validates the decomposition; `h` defaults to `m`.
    pub fn new(algebra: LieAlgebra, p: Subspace, m: Subspace, h: Option<Subspace>) -> Result<Self> {
        let d = algebra.dim();
        let h = h.unwrap_or_else(|| m.clone());
        for s in [&p, &m, &h] {
            if s.ambient_dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: s.ambient_dim(),
                });
            }
        }
        if p.dim() + m.dim() != d || !p.intersection(&m).is_zero() {
            return Err(Error::InvalidDecomposition(format!(
                "p (dim {}) and m (dim {}) are not complementary in dimension {d}",
                p.dim(),
                m.dim()
            )));
        }
        if !algebra.is_ideal(&m) {
            return Err(Error::InvalidDecomposition("m is not an ideal".into()));
        }
        if !algebra.is_nilpotent_subalgebra(&m) {
            return Err(Error::InvalidDecomposition("m is not nilpotent".into()));
        }
        if !algebra.is_subalgebra(&p) {
            return Err(Error::InvalidDecomposition("p is not a subalgebra".into()));
        }
        if !m.contains_subspace(&h) {
            return Err(Error::InvalidDecomposition("h is not contained in m".into()));
        }
        if !algebra.is_ideal(&h) {
            return Err(Error::InvalidDecomposition("h is not an ideal of g".into()));
        }
        if !algebra.is_nilpotent_subalgebra(&h) {
            return Err(Error::InvalidDecomposition("h is not nilpotent".into()));
        }
        let stacked = p.basis_matrix().vstack(m.basis_matrix());
        let splitter = stacked.inverse().expect("p and m are complementary");
        Ok(Decomposition {
            algebra,
            p,
            m,
            h,
            splitter,
        })
    }

    /// `p = 0`, `m = g`; `h` defaults to `g`.
    pub fn nilpotent(algebra: LieAlgebra, h: Option<Subspace>) -> Result<Self> {
        let d = algebra.dim();
        Self::new(algebra, Subspace::zero(d), Subspace::full(d), h)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn p(&self) -> &Subspace {
        &self.p
    }

    pub fn m(&self) -> &Subspace {
        &self.m
    }

    pub fn h(&self) -> &Subspace {
        &self.h
    }

    pub fn class_m(&self) -> usize {
        self.algebra.nilpotency_class(&self.m).expect("validated nilpotent")
    }

    pub fn class_h(&self) -> usize {
        self.algebra.nilpotency_class(&self.h).expect("validated nilpotent")
    }

    /// Same `p` and `m`, different ideal.
    pub fn with_ideal(&self, h: Subspace) -> Result<Self> {
        Self::new(self.algebra.clone(), self.p.clone(), self.m.clone(), Some(h))
    }

    /// Splits `v = v_p + v_m`.
    pub fn split_vector(&self, v: &[Scalar]) -> (Vector, Vector) {
        let d = self.algebra.dim();
        assert_eq!(v.len(), d);
        // coefficients c with v = c^T [p; m]
        let coeffs = self.splitter.transpose().mul_vec(v);
        let mut vp = vec![Scalar::zero(); d];
        let mut vm = vec![Scalar::zero(); d];
        let np = self.p.dim();
        for (r, c) in coeffs.iter().enumerate() {
            if r < np {
                crate::exactalg::axpy(&mut vp, c, self.p.basis_matrix().row(r));
            } else {
                crate::exactalg::axpy(&mut vm, c, self.m.basis_matrix().row(r - np));
            }
        }
        (vp, vm)
    }
}
