use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{axpy, is_zero_vector, Matrix, Scalar};

use super::{Subspace, Vector};

/// One structure-constant term `(k, c)`: `c` times basis vector `k`.
pub type Term = (usize, Scalar);
/// A [`Term`] with an integer coefficient.
pub type IntTerm = (usize, i64);

/// A finite-dimensional Lie algebra given by structure constants
/// `[x_i, x_j] = sum_k c_ij^k x_k`.
///
/// Only pairs `i < j` are supplied; the table for `j > i` is filled in by
/// antisymmetry when the algebra is built, so antisymmetry cannot fail.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    /// Row-major `dim x dim` table of sparse bracket results.
    table: Vec<Vec<(usize, Scalar)>>,
}

/// First Jacobi failure found by [`LieAlgebra::validate`].
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub defect: Vector,
}

impl std::fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let defect: Vec<String> = self.defect.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "Jacobi identity fails for basis triple ({}, {}, {}); defect [{}]",
            self.i,
            self.j,
            self.k,
            defect.join(", ")
        )
    }
}

impl LieAlgebra {
    /// Builds an algebra from the brackets `[x_i, x_j]` with `i < j`.
    /// Zero coefficients are dropped; repeated `k` entries are summed.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<Term>)],
    ) -> Result<Self> {
        let d = labels.len();
        let mut table = vec![Vec::new(); d * d];
        for (i, j, terms) in brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= d {
                return Err(Error::InvalidStructure(format!(
                    "bracket ({i}, {j}) must satisfy i < j < {d}"
                )));
            }
            let mut dense = vec![Scalar::zero(); d];
            for (k, c) in terms {
                if *k >= d {
                    return Err(Error::InvalidStructure(format!("term index {k} out of range")));
                }
                dense[*k] += c;
            }
            if !table[i * d + j].is_empty() {
                return Err(Error::InvalidStructure(format!("bracket ({i}, {j}) given twice")));
            }
            table[i * d + j] = sparse(&dense);
            table[j * d + i] = sparse(&dense.iter().map(|c| -c).collect::<Vec<_>>());
        }
        Ok(LieAlgebra {
            name: name.into(),
            labels,
            table,
        })
    }

    /// Builds an algebra from integer brackets, labelling basis vectors with `labels`.
    pub fn from_int_brackets(
        name: &str,
        labels: &[&str],
        brackets: &[(usize, usize, &[IntTerm])],
    ) -> Result<Self> {
        let brackets: Vec<_> = brackets
            .iter()
            .map(|(i, j, t)| (*i, *j, t.iter().map(|(k, c)| (*k, Scalar::from_int(*c))).collect()))
            .collect();
        Self::new(name, labels.iter().map(|s| s.to_string()).collect(), &brackets)
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("a{i}")).collect();
        Self::new(format!("abelian{n}"), labels, &[]).expect("abelian algebra")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sparse `[x_i, x_j]`.
    pub fn bracket_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    /// Dense `[x_i, x_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let mut v = vec![Scalar::zero(); self.dim()];
        for (k, c) in self.bracket_terms(i, j) {
            v[*k] = c.clone();
        }
        v
    }

    fn check_len(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.bracket_unchecked(u, v))
    }

    pub(crate) fn bracket_unchecked(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let terms = self.bracket_terms(i, j);
                if terms.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in terms {
                    out[*k] += &(&ab * c);
                }
            }
        }
        out
    }

    /// Matrix of `ad u` in the given basis: column `j` holds `[u, x_j]`.
    pub fn adjoint(&self, u: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let col = self.bracket_unchecked(u, &crate::exactalg::unit_vector(d, j));
            for (i, c) in col.into_iter().enumerate() {
                m[(i, j)] = c;
            }
        }
        m
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn validate(&self) -> std::result::Result<(), JacobiViolation> {
        let d = self.dim();
        let unit = |i| crate::exactalg::unit_vector(d, i);
        for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (xi, xj, xk) = (unit(i), unit(j), unit(k));
                    let mut defect = self.bracket_unchecked(&xi, &self.bracket_unchecked(&xj, &xk));
                    let t2 = self.bracket_unchecked(&xj, &self.bracket_unchecked(&xk, &xi));
                    let t3 = self.bracket_unchecked(&xk, &self.bracket_unchecked(&xi, &xj));
                    axpy(&mut defect, &Scalar::one(), &t2);
                    axpy(&mut defect, &Scalar::one(), &t3);
                    if !is_zero_vector(&defect) {
                        return Err(JacobiViolation { i, j, k, defect });
                    }
                }
            }
        }
        Ok(())
    }

    /// The subalgebra `s` as an algebra in its own right, in the canonical
    /// basis of `s`. Fails if `s` is not closed under the bracket.
    pub fn subalgebra(&self, s: &Subspace, name: &str) -> Result<LieAlgebra> {
        self.restrict_to_basis(&s.basis(), name)
    }

    /// Structure constants of the span of `basis` (assumed independent and
    /// closed under the bracket) with respect to that basis.
    pub fn restrict_to_basis(&self, basis: &[Vector], name: &str) -> Result<LieAlgebra> {
        let n = basis.len();
        let columns = Matrix::from_rows(self.dim(), basis).transpose();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket_unchecked(&basis[i], &basis[j]);
                if is_zero_vector(&b) {
                    continue;
                }
                let coords = columns.solve(&b).ok_or(Error::NotASubalgebra)?;
                let terms: Vec<(usize, Scalar)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                brackets.push((i, j, terms));
            }
        }
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        LieAlgebra::new(name, labels, &brackets)
    }

    /// Brackets with `i < j` and nonzero result, in index order.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, &[Term])> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let t = self.bracket_terms(i, j);
                if !t.is_empty() {
                    out.push((i, j, t));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LieAlgebra({}, dim {})", self.name, self.dim())
    }
}

fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    k: usize,
    c: Scalar,
}

#[derive(Serialize, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct LieAlgebraJson {
    name: String,
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<BracketJson>,
}

impl Serialize for LieAlgebra {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let brackets = self
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, t)| BracketJson {
                i,
                j,
                terms: t.iter().map(|(k, c)| TermJson { k: *k, c: c.clone() }).collect(),
            })
            .collect();
        LieAlgebraJson {
            name: self.name.clone(),
            dim: self.dim(),
            basis: self.labels.clone(),
            brackets,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LieAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = LieAlgebraJson::deserialize(deserializer)?;
        if raw.basis.len() != raw.dim {
            return Err(serde::de::Error::custom(format!(
                "dim is {} but {} basis labels given",
                raw.dim,
                raw.basis.len()
            )));
        }
        let brackets: Vec<_> = raw
            .brackets
            .into_iter()
            .map(|b| (b.i, b.j, b.terms.into_iter().map(|t| (t.k, t.c)).collect()))
            .collect();
        LieAlgebra::new(raw.name, raw.basis, &brackets).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::examples::*;

    #[test]
    fn heisenberg_is_valid() {
        assert!(heisenberg3().validate().is_ok());
        assert!(LieAlgebra::abelian(5).validate().is_ok());
        assert!(sl2().validate().is_ok());
    }

    #[test]
    fn planted_jacobi_failure() {
        let bad = LieAlgebra::from_int_brackets(
            "bad",
            &["x1", "x2", "x3"],
            &[(0, 1, &[(2, 1)]), (0, 2, &[(0, 1)])],
        )
        .unwrap();
        let v = bad.validate().unwrap_err();
        assert_eq!((v.i, v.j, v.k), (0, 1, 2));
        assert_eq!(v.defect, vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
    }

    #[test]
    fn bracket_values() {
        let h = heisenberg3();
        let e = |i| crate::exactalg::unit_vector(3, i);
        assert_eq!(h.bracket(&e(0), &e(1)).unwrap(), e(2));
        assert!(is_zero_vector(&h.bracket(&e(0), &e(0)).unwrap()));
        let a = LieAlgebra::abelian(3);
        assert!(is_zero_vector(&a.bracket(&e(0), &e(1)).unwrap()));
        assert!(matches!(
            h.bracket(&e(0), &[Scalar::one()]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_bad_indices() {
        let r = LieAlgebra::from_int_brackets("x", &["a", "b"], &[(1, 0, &[(0, 1)])]);
        assert!(matches!(r, Err(Error::InvalidStructure(_))));
        let r = LieAlgebra::from_int_brackets("x", &["a", "b"], &[(0, 1, &[(2, 1)])]);
        assert!(matches!(r, Err(Error::InvalidStructure(_))));
    }

    #[test]
    fn json_round_trip() {
        let h = sl2();
        let text = serde_json::to_string(&h).unwrap();
        let back: LieAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(back, h);
        assert!(text.contains("\"c\":\"-2\""));
    }
}
