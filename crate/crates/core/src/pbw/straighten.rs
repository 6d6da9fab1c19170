use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::filtration::{Weight, WeightVector};
use crate::liealg::{LieAlgebra, Vector};

use super::{Monomial, UElement};

/// Keeps the standard monomials with `omega1 < k1` and `omega2 < k2`.
///
/// The discarded monomials span `U^k1(omega1) + U^k2(omega2)`, a left ideal
/// of `U(m)` stable under derivations that preserve both filtrations, so
/// dropping them after every left multiplication computes the action on the
/// quotient exactly.
#[derive(Clone, Debug)]
pub struct Truncation {
    pub w1: WeightVector,
    pub k1: u64,
    pub w2: WeightVector,
    pub k2: u64,
}

impl Truncation {
    pub fn keeps(&self, m: &Monomial) -> bool {
        m.weight(&self.w1) < Weight::Finite(self.k1) && m.weight(&self.w2) < Weight::Finite(self.k2)
    }
}

/// A derivation of `m`, extended to `U(m)` by the Leibniz rule. Stored as
/// the images `D(x_j) = sum_k c_k x_k` of the generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Derivation {
    images: Vec<Vec<(usize, Scalar)>>,
}

impl Derivation {
    pub fn from_images(images: Vec<Vec<(usize, Scalar)>>) -> Self {
        Derivation { images }
    }

    pub fn zero(d: usize) -> Self {
        Derivation {
            images: vec![Vec::new(); d],
        }
    }

    /// `ad delta` restricted to the span of `m_basis` (vectors of `g`),
    /// written in that basis.
    pub fn from_adjoint(g: &LieAlgebra, m_basis: &[Vector], delta: &[Scalar]) -> Result<Self> {
        if delta.len() != g.dim() {
            return Err(Error::DimensionMismatch {
                expected: g.dim(),
                found: delta.len(),
            });
        }
        let columns = if m_basis.is_empty() {
            Matrix::zeros(g.dim(), 0)
        } else {
            Matrix::from_rows(g.dim(), m_basis).transpose()
        };
        let mut images = Vec::with_capacity(m_basis.len());
        for (j, b) in m_basis.iter().enumerate() {
            let image = g.bracket(delta, b)?;
            let coords = columns.solve(&image).ok_or(Error::BracketLeavesM { generator: j })?;
            images.push(
                coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            );
        }
        Ok(Derivation { images })
    }

    pub fn image(&self, j: usize) -> &[(usize, Scalar)] {
        &self.images[j]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Vec::is_empty)
    }
}

/// Arithmetic in `U(m)` in the PBW basis of the ordered basis of `m`,
/// optionally reduced modulo the monomials rejected by a [`Truncation`].
///
/// Products `x_i * X^alpha` are memoized; the cache is shared behind a mutex
/// and only ever holds fully computed values.
pub struct EnvelopingAlgebra {
    algebra: LieAlgebra,
    truncation: Option<Truncation>,
    memo: Mutex<HashMap<(usize, Monomial), UElement>>,
}

impl EnvelopingAlgebra {
    pub fn new(algebra: LieAlgebra) -> Self {
        EnvelopingAlgebra {
            algebra,
            truncation: None,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn truncated(algebra: LieAlgebra, truncation: Truncation) -> Self {
        assert_eq!(truncation.w1.len(), algebra.dim());
        assert_eq!(truncation.w2.len(), algebra.dim());
        EnvelopingAlgebra {
            algebra,
            truncation: Some(truncation),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn lie_algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn truncation(&self) -> Option<&Truncation> {
        self.truncation.as_ref()
    }

    fn keeps(&self, m: &Monomial) -> bool {
        self.truncation.as_ref().is_none_or(|t| t.keeps(m))
    }

    fn kept_monomial(&self, m: Monomial) -> UElement {
        if self.keeps(&m) {
            UElement::monomial(m)
        } else {
            UElement::zero()
        }
    }

    /// PBW normal form of `x_i * X^alpha`.
    ///
    /// If `alpha` starts with `x_j`, `j < i`, then
    /// `x_i x_j R = x_j (x_i R) + [x_i, x_j] R`; both recursive products
    /// have a shorter right factor or a shorter result, so this terminates.
    pub fn generator_times_monomial(&self, i: usize, alpha: &Monomial) -> UElement {
        assert!(i < self.dim(), "generator index out of range");
        if !self.keeps(alpha) {
            return UElement::zero();
        }
        let j = match alpha.first_index() {
            Some(j) if j < i => j,
            _ => return self.kept_monomial(alpha.times_generator(i)),
        };
        let key = (i, alpha.clone());
        if let Some(hit) = self.memo.lock().expect("memo poisoned").get(&key) {
            return hit.clone();
        }
        let rest = alpha.without_generator(j);
        let inner = self.generator_times_monomial(i, &rest);
        let mut out = self.straighten_mult(j, &inner);
        for (k, c) in self.algebra.bracket_terms(i, j) {
            out.add_scaled(c, &self.generator_times_monomial(*k, &rest));
        }
        self.memo
            .lock()
            .expect("memo poisoned")
            .insert(key, out.clone());
        out
    }

    /// `x_i * X` in normal form.
    pub fn straighten_mult(&self, i: usize, x: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in x.terms() {
            out.add_scaled(c, &self.generator_times_monomial(i, m));
        }
        out
    }

    /// Left multiplication by the element `sum_i coeffs[i] x_i` of `m`.
    pub fn left_mult(&self, coeffs: &[Scalar], x: &UElement) -> UElement {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = UElement::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(c, &self.straighten_mult(i, x));
            }
        }
        out
    }

    /// `sum_k c_k x_k * X` for a sparse element of `m`.
    fn left_mult_sparse(&self, terms: &[(usize, Scalar)], x: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (k, c) in terms {
            out.add_scaled(c, &self.straighten_mult(*k, x));
        }
        out
    }

    /// Product `a * b` in `U(m)`.
    pub fn mul(&self, a: &UElement, b: &UElement) -> UElement {
        let mut out = UElement::zero();
        for (m, c) in a.terms() {
            let mut acc = b.clone();
            for &g in m.word().iter().rev() {
                acc = self.straighten_mult(g, &acc);
            }
            out.add_scaled(c, &acc);
        }
        out
    }

    /// Leibniz extension of `der` applied to `X`:
    /// `D(x_{i1} ... x_{it}) = sum_j x_{i1} ... D(x_{ij}) ... x_{it}`.
    pub fn derive(&self, der: &Derivation, x: &UElement) -> UElement {
        let d = self.dim();
        let mut out = UElement::zero();
        for (m, c) in x.terms() {
            if !self.keeps(m) {
                continue;
            }
            let word = m.word();
            for (p, &g) in word.iter().enumerate() {
                let image = der.image(g);
                if image.is_empty() {
                    continue;
                }
                let suffix = UElement::monomial(Monomial::from_sorted_word(d, &word[p + 1..]));
                let mut acc = self.left_mult_sparse(image, &suffix);
                for &q in word[..p].iter().rev() {
                    if acc.is_zero() {
                        break;
                    }
                    acc = self.straighten_mult(q, &acc);
                }
                out.add_scaled(c, &acc);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::examples::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn ordered_product_is_direct() {
        let u = EnvelopingAlgebra::new(heisenberg3());
        let got = u.straighten_mult(1, &UElement::monomial(mono(&[1, 0, 0])));
        // y * x = xy - z
        let mut want = UElement::monomial(mono(&[1, 1, 0]));
        want.add_term(mono(&[0, 0, 1]), -Scalar::one());
        assert_eq!(got, want);
        let got = u.straighten_mult(0, &UElement::monomial(mono(&[0, 1, 0])));
        assert_eq!(got, UElement::monomial(mono(&[1, 1, 0])));
    }

    #[test]
    fn abelian_is_commutative() {
        let u = EnvelopingAlgebra::new(crate::LieAlgebra::abelian(3));
        let got = u.straighten_mult(0, &UElement::monomial(mono(&[0, 2, 1])));
        assert_eq!(got, UElement::monomial(mono(&[1, 2, 1])));
    }

    #[test]
    fn higher_power_commutator() {
        // y * x^2 = x^2 y - 2 x z in h3
        let u = EnvelopingAlgebra::new(heisenberg3());
        let got = u.straighten_mult(1, &UElement::monomial(mono(&[2, 0, 0])));
        let mut want = UElement::monomial(mono(&[2, 1, 0]));
        want.add_term(mono(&[1, 0, 1]), Scalar::from_int(-2));
        assert_eq!(got, want);
    }

    #[test]
    fn derivation_examples() {
        let s = solvable2();
        let m_basis = vec![vec![Scalar::zero(), Scalar::one()]];
        let delta = vec![Scalar::one(), Scalar::zero()];
        let der = Derivation::from_adjoint(&s, &m_basis, &delta).unwrap();
        let m_alg = crate::LieAlgebra::abelian(1);
        let u = EnvelopingAlgebra::new(m_alg);
        let x2 = UElement::monomial(mono(&[2]));
        assert_eq!(u.derive(&der, &x2), x2.scaled(&Scalar::from_int(2)));
        assert!(u.derive(&der, &UElement::one(1)).is_zero());
        assert!(u.derive(&Derivation::zero(1), &x2).is_zero());
    }

    #[test]
    fn derivation_must_preserve_m() {
        let s = solvable2();
        // m = span{d} is not preserved by ad x: [x, d] = -x
        let m_basis = vec![vec![Scalar::one(), Scalar::zero()]];
        let delta = vec![Scalar::zero(), Scalar::one()];
        assert!(matches!(
            Derivation::from_adjoint(&s, &m_basis, &delta),
            Err(Error::BracketLeavesM { generator: 0 })
        ));
    }

    #[test]
    fn truncation_drops_heavy_terms() {
        let t = Truncation {
            w1: WeightVector::from_finite(&[1, 1, 2]),
            k1: 2,
            w2: WeightVector::from_finite(&[1, 1, 2]),
            k2: 2,
        };
        let u = EnvelopingAlgebra::truncated(heisenberg3(), t);
        // z * 1 = z has weight 2 >= k1
        assert!(u.straighten_mult(2, &UElement::one(3)).is_zero());
        assert_eq!(
            u.straighten_mult(0, &UElement::one(3)),
            UElement::monomial(mono(&[1, 0, 0]))
        );
    }

    #[test]
    fn general_product() {
        let u = EnvelopingAlgebra::new(heisenberg3());
        let x = UElement::monomial(mono(&[1, 0, 0]));
        let y = UElement::monomial(mono(&[0, 1, 0]));
        let z = UElement::monomial(mono(&[0, 0, 1]));
        // xy - yx = z
        assert_eq!(u.mul(&x, &y).sub(&u.mul(&y, &x)), z);
    }
}
