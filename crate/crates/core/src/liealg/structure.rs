//! Structural computations: products of subspaces, ideals, central series,
//! centers and the Killing-form radical.

use crate::error::{Error, Result};
use crate::exactalg::{dot, Matrix, Scalar};

use super::{LieAlgebra, Subspace, Vector};

impl LieAlgebra {
    /// `[A, B]`: span of the brackets of the basis vectors.
    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient_dim(), self.dim());
        assert_eq!(b.ambient_dim(), self.dim());
        let (ab, bb) = (a.basis(), b.basis());
        let mut out = Vec::with_capacity(ab.len() * bb.len());
        for u in &ab {
            for v in &bb {
                out.push(self.bracket_unchecked(u, v));
            }
        }
        Subspace::span(self.dim(), &out)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    pub fn is_subalgebra(&self, a: &Subspace) -> bool {
        a.contains_subspace(&self.product_space(a, a))
    }

    pub fn is_ideal(&self, a: &Subspace) -> bool {
        a.contains_subspace(&self.product_space(&self.full_space(), a))
    }

    /// `[h_1 = H, h_2 = [H, h_1], ...]`, stopping at the first term equal to
    /// its predecessor (which is not repeated). Ends with the zero subspace
    /// exactly when `H` is nilpotent.
    pub fn lower_central_series(&self, h: &Subspace) -> Result<Vec<Subspace>> {
        if !self.is_subalgebra(h) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.descending_series(h, |cur| self.product_space(h, cur)))
    }

    /// `[H, [H,H], [[H,H],[H,H]], ...]` with the same stopping rule.
    pub fn derived_series(&self, h: &Subspace) -> Result<Vec<Subspace>> {
        if !self.is_subalgebra(h) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.descending_series(h, |cur| self.product_space(cur, cur)))
    }

    fn descending_series(&self, start: &Subspace, next: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut series = vec![start.clone()];
        for _ in 0..2 * self.dim() + 1 {
            let cur = series.last().expect("nonempty");
            if cur.is_zero() {
                break;
            }
            let n = next(cur);
            if &n == cur {
                break;
            }
            series.push(n);
        }
        series
    }

    /// Largest `i` with `h_i != 0`; 0 for the zero subspace.
    pub fn nilpotency_class(&self, h: &Subspace) -> Result<usize> {
        let series = self.lower_central_series(h)?;
        let last = series.last().expect("nonempty");
        if !last.is_zero() {
            return Err(Error::NotNilpotent { stable_dim: last.dim() });
        }
        Ok(series.len() - 1)
    }

    pub fn is_nilpotent_subalgebra(&self, h: &Subspace) -> bool {
        self.nilpotency_class(h).is_ok()
    }

    pub fn is_solvable_subalgebra(&self, h: &Subspace) -> bool {
        self.derived_series(h)
            .map(|s| s.last().is_some_and(Subspace::is_zero))
            .unwrap_or(false)
    }

    /// `{a in A : [a, b] in C for all b in B}`.
    pub fn bracket_preimage(&self, a: &Subspace, b: &Subspace, c: &Subspace) -> Subspace {
        let d = self.dim();
        let a_basis = a.basis();
        if a_basis.is_empty() {
            return Subspace::zero(d);
        }
        let functionals = c.annihilator();
        // One linear equation in the coordinates t of a = sum t_r a_r for each
        // pair (basis vector of B, functional vanishing on C).
        let mut equations: Vec<Vector> = Vec::new();
        for bv in b.basis() {
            let images: Vec<Vector> = a_basis.iter().map(|av| self.bracket_unchecked(av, &bv)).collect();
            for f in &functionals {
                equations.push(images.iter().map(|img| dot(f, img)).collect());
            }
        }
        if equations.is_empty() {
            return a.clone();
        }
        let kernel = Matrix::from_rows(a_basis.len(), &equations).kernel_basis();
        let vectors: Vec<Vector> = kernel
            .iter()
            .map(|t| {
                let mut v = vec![Scalar::zero(); d];
                for (coef, av) in t.iter().zip(&a_basis) {
                    crate::exactalg::axpy(&mut v, coef, av);
                }
                v
            })
            .collect();
        Subspace::span(d, &vectors)
    }

    /// `{x : [x, g] = 0}`.
    pub fn center(&self) -> Subspace {
        let full = self.full_space();
        self.bracket_preimage(&full, &full, &Subspace::zero(self.dim()))
    }

    /// Center of the subalgebra `s`: `{x in s : [x, s] = 0}`.
    pub fn center_of(&self, s: &Subspace) -> Subspace {
        self.bracket_preimage(s, s, &Subspace::zero(self.dim()))
    }

    /// Upper central series of the subalgebra `s`: `z_1 = Z(s)`,
    /// `z_{i+1} = {x in s : [x, s] in z_i}`, until it stabilizes.
    pub fn upper_central_series(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = vec![self.center_of(s)];
        loop {
            let cur = series.last().expect("nonempty");
            let next = self.bracket_preimage(s, s, cur);
            if &next == cur {
                break;
            }
            series.push(next);
        }
        series
    }

    /// `{p in P : [p, M] = 0}`.
    pub fn action_kernel(&self, p: &Subspace, m: &Subspace) -> Subspace {
        self.bracket_preimage(p, m, &Subspace::zero(self.dim()))
    }

    /// Gram matrix of the Killing form `tr(ad x_i ad x_j)`.
    pub fn killing_form(&self) -> Matrix {
        let d = self.dim();
        let ads: Vec<Matrix> = (0..d)
            .map(|i| self.adjoint(&crate::exactalg::unit_vector(d, i)))
            .collect();
        let mut k = Matrix::zeros(d, d);
        for i in 0..d {
            for j in i..d {
                let t = ads[i].mul(&ads[j]).trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// The solvable radical, computed as `{x : kappa(x, [g, g]) = 0}`.
    pub fn killing_radical(&self) -> Subspace {
        let d = self.dim();
        let derived = self.product_space(&self.full_space(), &self.full_space());
        let kappa = self.killing_form();
        let equations: Vec<Vector> = derived.basis().iter().map(|b| kappa.mul_vec(b)).collect();
        let radical = if equations.is_empty() {
            self.full_space()
        } else {
            Subspace::span(d, &Matrix::from_rows(d, &equations).kernel_basis())
        };
        debug_assert!(self.is_ideal(&radical), "Killing radical is not an ideal");
        debug_assert!(self.is_solvable_subalgebra(&radical), "Killing radical is not solvable");
        radical
    }
}
