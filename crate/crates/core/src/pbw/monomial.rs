use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::Scalar;
use crate::filtration::{Weight, WeightVector};

/// Standard monomial `x_1^a_1 ... x_d^a_d`, identified with its exponents.
///
/// Ordered graded-lexicographically: by total degree first, then with
/// larger exponents of earlier generators first (`x1^2 < x1*x2 < x2^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(d: usize) -> Self {
        Monomial(vec![0; d])
    }

    pub fn generator(d: usize, i: usize) -> Self {
        let mut e = vec![0; d];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_generators(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Index of the first generator with positive exponent.
    pub fn first_index(&self) -> Option<usize> {
        self.0.iter().position(|&a| a > 0)
    }

    pub fn times_generator(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// Removes one factor `x_i`; panics if absent.
    pub fn without_generator(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        assert!(e[i] > 0, "generator not present");
        e[i] -= 1;
        Monomial(e)
    }

    /// Generator indices of the ordered word, e.g. `x1^2 x3 -> [0, 0, 2]`.
    pub fn word(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i, a as usize))
            .collect()
    }

    /// The standard monomial of a nondecreasing word.
    pub fn from_sorted_word(d: usize, word: &[usize]) -> Monomial {
        let mut e = vec![0; d];
        for &i in word {
            e[i] += 1;
        }
        Monomial(e)
    }

    /// `sum_j a_j * omega(x_j)`.
    pub fn weight(&self, w: &WeightVector) -> Weight {
        assert_eq!(w.len(), self.0.len(), "weight vector length mismatch");
        self.0
            .iter()
            .zip(&w.0)
            .filter(|(&a, _)| a > 0)
            .fold(Weight::Finite(0), |acc, (&a, &wj)| match wj {
                Weight::Finite(x) => acc + Weight::Finite(x * a as u64),
                Weight::Infinite => Weight::Infinite,
            })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| {
                if a == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, a)
                }
            })
            .collect();
        write!(f, "{}", factors.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of `U(m)`: a finite linear combination of standard monomials.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UElement {
    terms: BTreeMap<Monomial, Scalar>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut e = UElement::zero();
        e.add_term(m, c);
        e
    }

    pub fn one(d: usize) -> Self {
        Self::monomial(Monomial::one(d))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &UElement) {
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            self.add_term(m.clone(), c * a);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> UElement {
        let mut out = UElement::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn add(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(&Scalar::one(), other);
        out
    }

    pub fn sub(&self, other: &UElement) -> UElement {
        let mut out = self.clone();
        out.add_scaled(&-Scalar::one(), other);
        out
    }

    /// `min_j omega(X^{alpha_j})`, and `Infinite` for zero.
    pub fn weight(&self, w: &WeightVector) -> Weight {
        self.terms
            .keys()
            .map(|m| m.weight(w))
            .min()
            .unwrap_or(Weight::Infinite)
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn retain(&mut self, mut keep: impl FnMut(&Monomial) -> bool) {
        self.terms.retain(|m, _| keep(m));
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if c.is_one() {
                    m.to_string()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
