//! Filtrations of a Lie algebra, weights of basis vectors, and bases weakly
//! adapted to a pair of flags.

use std::fmt;

use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, Subspace, Vector};

/// Value of a weight function: a natural number or `+inf`.
///
/// `Finite` orders below `Infinite`; addition saturates at `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Finite(u64),
    Infinite,
}

impl Weight {
    pub fn finite(self) -> Option<u64> {
        match self {
            Weight::Finite(w) => Some(w),
            Weight::Infinite => None,
        }
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        match (self, rhs) {
            (Weight::Finite(a), Weight::Finite(b)) => Weight::Finite(a + b),
            _ => Weight::Infinite,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(w) => write!(f, "{w}"),
            Weight::Infinite => write!(f, "inf"),
        }
    }
}

/// Weights `omega(x_j)` of an ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Weight>);

impl WeightVector {
    pub fn from_finite(ws: &[u64]) -> Self {
        WeightVector(ws.iter().map(|&w| Weight::Finite(w)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, j: usize) -> Weight {
        self.0[j]
    }

    pub fn min(&self) -> Option<Weight> {
        self.0.iter().copied().min()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|w| w.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A descending flag `F(0) ⊇ F(1) ⊇ ...` of subspaces of a Lie algebra.
/// Beyond the last stored index, `F(t)` is the last stored space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    spaces: Vec<Subspace>,
}

impl Filtration {
    /// Checks that `spaces` is descending and satisfies `[F(i), F(j)] ⊆ F(i+j)`.
    pub fn new(algebra: &LieAlgebra, spaces: Vec<Subspace>) -> Result<Self> {
        let f = Self::flag(spaces)?;
        f.check_bracket_condition(algebra)?;
        Ok(f)
    }

    /// A descending flag with no bracket condition imposed.
    pub fn flag(spaces: Vec<Subspace>) -> Result<Self> {
        assert!(!spaces.is_empty(), "empty flag");
        check_descending(&spaces)?;
        Ok(Filtration { spaces })
    }

    pub fn space(&self, t: usize) -> &Subspace {
        &self.spaces[t.min(self.spaces.len() - 1)]
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn is_positive(&self) -> bool {
        self.space(0) == self.space(1)
    }

    pub fn terminates_at_zero(&self) -> bool {
        self.spaces.last().is_some_and(Subspace::is_zero)
    }

    fn check_bracket_condition(&self, algebra: &LieAlgebra) -> Result<()> {
        let n = self.spaces.len();
        for i in 0..n {
            for j in i..n {
                let prod = algebra.product_space(&self.spaces[i], &self.spaces[j]);
                if !self.space(i + j).contains_subspace(&prod) {
                    return Err(Error::FiltrationViolation { i, j });
                }
            }
        }
        Ok(())
    }

    /// `sup {t : v ∈ F(t)}`; `None` if `v ∉ F(0)`. Vectors in a nonzero
    /// terminal space (and the zero vector) have infinite weight.
    pub fn weight_of(&self, v: &[crate::Scalar]) -> Option<Weight> {
        if !self.spaces[0].contains(v) {
            return None;
        }
        let last = self.spaces.len() - 1;
        if self.spaces[last].contains(v) {
            return Some(Weight::Infinite);
        }
        let t = (0..last)
            .rev()
            .find(|&t| self.spaces[t].contains(v))
            .expect("v lies in F(0)");
        Some(Weight::Finite(t as u64))
    }
}

fn check_descending(spaces: &[Subspace]) -> Result<()> {
    for (t, w) in spaces.windows(2).enumerate() {
        if w[0].ambient_dim() != w[1].ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: w[0].ambient_dim(),
                found: w[1].ambient_dim(),
            });
        }
        if !w[0].contains_subspace(&w[1]) {
            return Err(Error::FlagNotDescending { index: t + 1 });
        }
    }
    Ok(())
}

/// The `(G, H)`-filtration: `F(0) = G`, `F(1) = H`, `F(i) = H_i` (the lower
/// central series of `H`) for `i >= 2`.
pub fn ideal_filtration(algebra: &LieAlgebra, g: &Subspace, h: &Subspace) -> Result<Filtration> {
    if !g.contains_subspace(h) {
        return Err(Error::NotContained("G"));
    }
    if !h.contains_subspace(&algebra.product_space(g, h)) {
        return Err(Error::NotAnIdeal);
    }
    let mut spaces = vec![g.clone()];
    spaces.extend(algebra.lower_central_series(h)?);
    Filtration::new(algebra, spaces)
}

/// The trivial flag `[M, M, 0]` whose weight is the length of a monomial.
pub fn length_filtration(m: &Subspace) -> Filtration {
    let spaces = vec![m.clone(), m.clone(), Subspace::zero(m.ambient_dim())];
    Filtration::flag(spaces).expect("trivially descending")
}

/// Weights of `basis` for the filtration, after checking that the basis is
/// weakly adapted: for every `t`, the members lying in `F(t)` span `F(t)`.
pub fn weights_from_filtration(f: &Filtration, basis: &[Vector]) -> Result<WeightVector> {
    for (t, space) in f.spaces().iter().enumerate() {
        let inside: Vec<Vector> = basis.iter().filter(|b| space.contains(b)).cloned().collect();
        if Subspace::span(space.ambient_dim(), &inside) != *space {
            return Err(Error::BasisNotAdapted { level: t });
        }
    }
    basis
        .iter()
        .enumerate()
        .map(|(t, b)| f.weight_of(b).ok_or(Error::BasisNotAdapted { level: t }))
        .collect::<Result<Vec<_>>>()
        .map(WeightVector)
}

/// A basis of the common top space `A_0 = B_0` that is weakly adapted to
/// both flags.
///
/// Pairs `(i, j)` are swept by decreasing `i + j`, ties by decreasing `i`.
/// At each pair the vectors collected so far that lie in `A_i ∩ B_j` span
/// `(A_{i+1} ∩ B_j) + (A_i ∩ B_{j+1})`, and they are extended to a basis of
/// `A_i ∩ B_j`. Each flag is treated as ending with the zero subspace.
/// The result lists the groups from the last pair swept to the first, so
/// vectors deep in both flags come last.
pub fn adapt_two_flags(flag_a: &[Subspace], flag_b: &[Subspace]) -> Result<Vec<Vector>> {
    let (Some(a0), Some(b0)) = (flag_a.first(), flag_b.first()) else {
        return Err(Error::FlagTopMismatch);
    };
    let n = a0.ambient_dim();
    if b0.ambient_dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b0.ambient_dim(),
        });
    }
    if a0 != b0 {
        return Err(Error::FlagTopMismatch);
    }
    check_descending(flag_a)?;
    check_descending(flag_b)?;

    let mut a = flag_a.to_vec();
    a.push(Subspace::zero(n));
    let mut b = flag_b.to_vec();
    b.push(Subspace::zero(n));

    let mut pairs: Vec<(usize, usize)> = (0..a.len())
        .flat_map(|i| (0..b.len()).map(move |j| (i, j)))
        .collect();
    pairs.sort_by_key(|x| std::cmp::Reverse((x.0 + x.1, x.0)));

    let mut collected: Vec<Vector> = Vec::new();
    let mut groups: Vec<Vec<Vector>> = Vec::new();
    for (i, j) in pairs {
        let w = a[i].intersection(&b[j]);
        if w.is_zero() {
            continue;
        }
        let inside: Vec<Vector> = collected.iter().filter(|v| w.contains(v)).cloned().collect();
        let new = w.complement_vectors(&inside);
        if !new.is_empty() {
            collected.extend(new.iter().cloned());
            groups.push(new);
        }
    }
    Ok(groups.into_iter().rev().flatten().collect())
}
