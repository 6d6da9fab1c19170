use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::filtration::{adapt_two_flags, ideal_filtration, weights_from_filtration, Filtration, WeightVector};
use crate::liealg::{LieAlgebra, Vector};
use crate::pbw::{enumerate_bounded, Derivation, EnvelopingAlgebra, Monomial, Truncation, UElement};

use super::{Decomposition, Representation};

/// The finite quotient `U(m) / (U^k1(omega_(m,m)) + U^k2(omega_(m,h)))` with
/// everything needed to write down the action of `g = p ⋉ m` on it.
pub struct QuotientModule {
    decomposition: Decomposition,
    m_basis: Vec<Vector>,
    filtration_mm: Filtration,
    filtration_mh: Filtration,
    w1: WeightVector,
    w2: WeightVector,
    k1: u64,
    k2: u64,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    engine: EnvelopingAlgebra,
}

impl QuotientModule {
    pub fn new(decomposition: &Decomposition, k1: u64, k2: u64) -> Result<Self> {
        if k1 == 0 || k2 == 0 {
            return Err(Error::InconsistentDims("truncation levels k1, k2 must be at least 1".into()));
        }
        let g = decomposition.algebra();
        let m = decomposition.m();
        let filtration_mm = ideal_filtration(g, m, m)?;
        let filtration_mh = ideal_filtration(g, m, decomposition.h())?;
        let m_basis = adapt_two_flags(filtration_mm.spaces(), filtration_mh.spaces())?;
        let w1 = weights_from_filtration(&filtration_mm, &m_basis)?;
        let w2 = weights_from_filtration(&filtration_mh, &m_basis)?;
        let m_algebra = g.restrict_to_basis(&m_basis, &format!("{}/m", g.name()))?;
        let basis = enumerate_bounded(&w1, k1 - 1, &w2, k2 - 1)?;
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let engine = EnvelopingAlgebra::truncated(
            m_algebra,
            Truncation {
                w1: w1.clone(),
                k1,
                w2: w2.clone(),
                k2,
            },
        );
        Ok(QuotientModule {
            decomposition: decomposition.clone(),
            m_basis,
            filtration_mm,
            filtration_mh,
            w1,
            w2,
            k1,
            k2,
            basis,
            index,
            engine,
        })
    }

    /// Default thresholds `k1 = c(m) + 1`, `k2 = c(h) + 1`.
    pub fn with_defaults(decomposition: &Decomposition) -> Result<Self> {
        let k1 = decomposition.class_m() as u64 + 1;
        let k2 = decomposition.class_h() as u64 + 1;
        Self::new(decomposition, k1, k2)
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    /// Basis of `m` weakly adapted to both filtrations, in `g` coordinates.
    pub fn m_basis(&self) -> &[Vector] {
        &self.m_basis
    }

    pub fn filtration_mm(&self) -> &Filtration {
        &self.filtration_mm
    }

    pub fn filtration_mh(&self) -> &Filtration {
        &self.filtration_mh
    }

    pub fn weights_mm(&self) -> &WeightVector {
        &self.w1
    }

    pub fn weights_mh(&self) -> &WeightVector {
        &self.w2
    }

    pub fn thresholds(&self) -> (u64, u64) {
        (self.k1, self.k2)
    }

    /// Kept standard monomials, in graded-lexicographic order.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The truncating `U(m)` engine, in the adapted basis of `m`.
    pub fn engine(&self) -> &EnvelopingAlgebra {
        &self.engine
    }

    pub fn m_algebra(&self) -> &LieAlgebra {
        self.engine.lie_algebra()
    }

    /// Coordinates of a vector of `m` in the adapted basis.
    pub fn m_coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        let g = self.decomposition.algebra();
        if self.m_basis.is_empty() {
            return crate::exactalg::is_zero_vector(v).then(Vec::new);
        }
        Matrix::from_rows(g.dim(), &self.m_basis).transpose().solve(v)
    }

    /// Action of `v in g` on the quotient: the `p` part by derivation, the
    /// `m` part by left multiplication.
    pub fn act(&self, v: &[Scalar], x: &UElement) -> Result<UElement> {
        let (vp, vm) = self.decomposition.split_vector(v);
        let coeffs = self.m_coordinates(&vm).expect("m part lies in m");
        let der = Derivation::from_adjoint(self.decomposition.algebra(), &self.m_basis, &vp)?;
        Ok(self.act_with(&coeffs, &der, x))
    }

    fn act_with(&self, coeffs: &[Scalar], der: &Derivation, x: &UElement) -> UElement {
        let mut out = self.engine.left_mult(coeffs, x);
        if !der.is_zero() {
            out = out.add(&self.engine.derive(der, x));
        }
        out
    }

    /// Matrix of `v` acting on the monomial basis; column `a` is the image
    /// of the `a`-th monomial.
    pub fn action_matrix(&self, v: &[Scalar]) -> Result<Matrix> {
        let (vp, vm) = self.decomposition.split_vector(v);
        let coeffs = self.m_coordinates(&vm).expect("m part lies in m");
        let der = Derivation::from_adjoint(self.decomposition.algebra(), &self.m_basis, &vp)?;
        let columns: Vec<UElement> = self
            .basis
            .par_iter()
            .map(|mono| self.act_with(&coeffs, &der, &UElement::monomial(mono.clone())))
            .collect();
        let n = self.dim();
        let mut mat = Matrix::zeros(n, n);
        for (col, image) in columns.iter().enumerate() {
            for (mono, c) in image.terms() {
                let row = *self
                    .index
                    .get(mono)
                    .expect("truncated image stays in the kept basis");
                mat[(row, col)] = c.clone();
            }
        }
        Ok(mat)
    }

    /// The representation of all of `g` on the quotient. Its kernel contains
    /// the kernel of the action of `p` on `m`.
    pub fn representation(&self) -> Result<Representation> {
        let g = self.decomposition.algebra();
        let d = g.dim();
        let matrices = (0..d)
            .map(|i| self.action_matrix(&crate::exactalg::unit_vector(d, i)))
            .collect::<Result<Vec<_>>>()?;
        let labels = self.basis.iter().map(|m| m.to_string()).collect();
        Ok(Representation::new(g, labels, matrices))
    }
}

/// Faithful representation of `p ⋉ m` on the truncated enveloping algebra.
/// Requires `p` to act faithfully on `m` (see [`super::split_p0`]).
pub fn build_quotient_rep(decomposition: &Decomposition, k1: u64, k2: u64) -> Result<Representation> {
    let kernel = decomposition
        .algebra()
        .action_kernel(decomposition.p(), decomposition.m());
    if !kernel.is_zero() {
        return Err(Error::PNotFaithful { kernel });
    }
    QuotientModule::new(decomposition, k1, k2)?.representation()
}

/// [`build_quotient_rep`] with `k1 = c(m) + 1`, `k2 = c(h) + 1`.
pub fn build_quotient_rep_default(decomposition: &Decomposition) -> Result<Representation> {
    let k1 = decomposition.class_m() as u64 + 1;
    let k2 = decomposition.class_h() as u64 + 1;
    build_quotient_rep(decomposition, k1, k2)
}
