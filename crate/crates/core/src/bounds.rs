//! Counting functions and the degree bounds built from them.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::filtration::adapt_two_flags;
use crate::liealg::{LieAlgebra, Subspace};

/// Number of solutions `a in N^p` of `sum a_i m_i = t`.
pub fn denumerant(t: u64, parts: &[u64]) -> Result<BigUint> {
    if parts.contains(&0) {
        return Err(Error::NonpositivePart);
    }
    let t = t as usize;
    let mut ways = vec![BigUint::zero(); t + 1];
    ways[0] = BigUint::one();
    for &m in parts {
        let m = m as usize;
        for s in m..=t {
            let prev = ways[s - m].clone();
            ways[s] += prev;
        }
    }
    Ok(ways.swap_remove(t))
}

/// `binom(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `binom(p + t - 1, t - 1)`, or 1 at `t = 0` where only the empty
/// partition exists.
pub fn denumerant_bound(t: u64, p: u64) -> BigUint {
    if t == 0 {
        return BigUint::one();
    }
    binomial(p + t - 1, t - 1)
}

/// `binom(p + t - 1, t)`, the number of `a in N^p` with `sum a_i = t`.
/// Every `M`-partition of `t` has `sum a_i <= t`, and this count is attained
/// when all parts are 1.
pub fn denumerant_bound_exact(t: u64, p: u64) -> BigUint {
    if p == 0 {
        return BigUint::from(u64::from(t == 0));
    }
    binomial(p + t - 1, t)
}

/// `binom(dim m + codim h, codim h) * binom(dim m + c(h), c(h))`.
pub fn prop_bound(dim_m: u64, codim_h: u64, class_h: u64) -> BigUint {
    binomial(dim_m + codim_h, codim_h) * binomial(dim_m + class_h, class_h)
}

/// `d - n + binom(r + e1, e1) * binom(r + e2, e2)`; requires `n <= r <= d`.
pub fn theorem_bound(d: u64, n: u64, r: u64, e1: u64, e2: u64) -> Result<BigUint> {
    if n > r || r > d {
        return Err(Error::InconsistentDims(format!(
            "need n <= r <= d, got n = {n}, r = {r}, d = {d}"
        )));
    }
    Ok(BigUint::from(d - n) + binomial(r + e1, e1) * binomial(r + e2, e2))
}

/// `d + (d + e)(d + e - 1)...(d + 1) / (floor(e/2)! ceil(e/2)!)`.
pub fn p_epsilon(e: u64, d: u64) -> BigUint {
    let rising = ((d + 1)..=(d + e)).fold(BigUint::one(), |acc, i| acc * i);
    let denom = factorial(e / 2) * factorial(e.div_ceil(2));
    BigUint::from(d) + rising / denom
}

/// `1 + d + ... + d^c`, the size of the truncated tensor algebra.
pub fn birkhoff_dim(d: u64, c: u64) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::InconsistentDims("birkhoff_dim needs d >= 1".into()));
    }
    let mut term = BigUint::one();
    let mut sum = BigUint::zero();
    for _ in 0..=c {
        sum += &term;
        term *= d;
    }
    Ok(sum)
}

/// `dim(R / H) + c(H)` for a nilpotent ideal `H` of `L` inside `R`.
pub fn nil_defect_of_ideal(algebra: &LieAlgebra, r: &Subspace, h: &Subspace) -> Result<usize> {
    if !r.contains_subspace(h) {
        return Err(Error::NotContained("ideal is not inside the radical"));
    }
    if !algebra.is_ideal(h) {
        return Err(Error::NotAnIdeal);
    }
    let class = algebra.nilpotency_class(h)?;
    Ok(r.dim() - h.dim() + class)
}

/// Smallest nil-defect over a finite family of nilpotent ideals of `L`
/// inside `R`, with the first ideal attaining it. This is an upper bound
/// for the nil-defect of `R`.
///
/// Candidates, in order: the lower central and derived series of `R`, its
/// upper central series, `R`, the zero ideal, then the spans of all subsets
/// of a basis adapted to both series that omit at most `max_subset`
/// vectors.
pub fn nil_defect_search(algebra: &LieAlgebra, r: &Subspace, max_subset: usize) -> Result<(usize, Subspace)> {
    let n = algebra.dim();
    let lcs = algebra.lower_central_series(r)?;
    let derived = algebra.derived_series(r)?;
    let mut candidates: Vec<Subspace> = Vec::new();
    candidates.extend(lcs.iter().cloned());
    candidates.extend(derived.iter().cloned());
    candidates.extend(algebra.upper_central_series(r));
    candidates.push(r.clone());
    candidates.push(Subspace::zero(n));

    let basis = adapt_two_flags(&lcs, &derived)?;
    let k = basis.len();
    for omit in 1..=max_subset.min(k) {
        for_each_subset(k, omit, &mut |dropped| {
            let kept: Vec<_> = (0..k)
                .filter(|i| !dropped.contains(i))
                .map(|i| basis[i].clone())
                .collect();
            candidates.push(Subspace::span(n, &kept));
        });
    }

    let mut best: Option<(usize, Subspace)> = None;
    for c in candidates {
        if !r.contains_subspace(&c) || !algebra.is_ideal(&c) || !algebra.is_nilpotent_subalgebra(&c) {
            continue;
        }
        let eps = nil_defect_of_ideal(algebra, r, &c)?;
        if best.as_ref().is_none_or(|(b, _)| eps < *b) {
            best = Some((eps, c));
        }
    }
    Ok(best.expect("the zero ideal is always a candidate"))
}

fn for_each_subset(n: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, f);
            cur.pop();
        }
    }
    rec(0, n, size, &mut Vec::new(), f);
}

fn big_as_number<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    integer_json(v).serialize(s)
}

/// A JSON number when the value fits in `u64`, otherwise its decimal string.
pub fn integer_json(v: &BigUint) -> serde_json::Value {
    match v.to_u64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

/// Achieved degree next to the bounds that apply to it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub achieved_degree: usize,
    #[serde(serialize_with = "big_as_number")]
    pub prop_bound: BigUint,
    #[serde(serialize_with = "big_as_number")]
    pub theorem_bound: BigUint,
    #[serde(serialize_with = "big_as_number")]
    pub birkhoff: BigUint,
    pub d: u64,
    pub n: u64,
    pub r: u64,
    pub e1: u64,
    pub e2: u64,
    pub class_m: u64,
    pub class_h: u64,
}

/// Inputs gathered from an algebra and decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundInputs {
    pub d: u64,
    pub n: u64,
    pub r: u64,
    pub dim_m: u64,
    pub dim_h: u64,
    pub class_m: u64,
    pub class_h: u64,
}

impl BoundReport {
    /// `e1 = c(h)` and `e2 = r - dim h` feed the theorem bound; the
    /// quotient factor is compared against `prop_bound(dim m, codim h, c(h))`.
    pub fn new(achieved_degree: usize, inputs: BoundInputs) -> Result<Self> {
        let BoundInputs {
            d,
            n,
            r,
            dim_m,
            dim_h,
            class_m,
            class_h,
        } = inputs;
        if dim_h > r {
            return Err(Error::InconsistentDims(format!(
                "ideal of dim {dim_h} does not fit in a radical of dim {r}"
            )));
        }
        let e1 = class_h;
        let e2 = r - dim_h;
        Ok(BoundReport {
            achieved_degree,
            prop_bound: prop_bound(dim_m, dim_m - dim_h, class_h),
            theorem_bound: theorem_bound(d, n, r, e1, e2)?,
            birkhoff: birkhoff_dim(dim_m.max(1), class_m)?,
            d,
            n,
            r,
            e1,
            e2,
            class_m,
            class_h,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::examples::*;
    use proptest::prelude::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn denumerant_examples() {
        assert_eq!(denumerant(0, &[3, 5]).unwrap(), big(1));
        assert_eq!(denumerant(4, &[1, 2, 3]).unwrap(), big(4));
        for t in 0..=10 {
            assert_eq!(denumerant(t, &[1, 1]).unwrap(), big(t + 1));
        }
        assert!(matches!(denumerant(3, &[1, 0]), Err(Error::NonpositivePart)));
        assert_eq!(denumerant(5, &[]).unwrap(), big(0));
    }

    #[test]
    fn denumerant_bound_examples() {
        assert_eq!(denumerant_bound(2, 2), big(3));
        assert_eq!(denumerant(2, &[1, 1]).unwrap(), denumerant_bound(2, 2));
        assert_eq!(denumerant_bound(4, 3), big(20));
        assert_eq!(denumerant_bound(0, 4), big(1));
    }

    #[test]
    fn literal_lemma_bound_fails_for_repeated_ones() {
        // two ways to write 1 with parts {1, 1}, but binom(2, 0) = 1
        assert_eq!(denumerant(1, &[1, 1]).unwrap(), big(2));
        assert_eq!(denumerant_bound(1, 2), big(1));
        assert_eq!(denumerant_bound_exact(1, 2), big(2));
    }

    #[test]
    fn exact_bound_is_tight_on_ones() {
        for p in 0..6u64 {
            for t in 0..10 {
                let ones = vec![1; p as usize];
                assert_eq!(denumerant(t, &ones).unwrap(), denumerant_bound_exact(t, p));
            }
        }
    }

    #[test]
    fn prop_bound_examples() {
        assert_eq!(prop_bound(3, 0, 2), big(10));
        assert_eq!(prop_bound(3, 2, 1), big(40));
        assert_eq!(prop_bound(0, 0, 0), big(1));
    }

    #[test]
    fn theorem_bound_examples() {
        assert_eq!(theorem_bound(3, 3, 3, 2, 0).unwrap(), big(10));
        assert_eq!(theorem_bound(1, 1, 1, 1, 0).unwrap(), big(2));
        for d in 0..10 {
            assert_eq!(theorem_bound(d, 0, 0, 0, 0).unwrap(), big(d + 1));
        }
        assert!(theorem_bound(3, 4, 3, 0, 0).is_err());
        assert!(theorem_bound(3, 1, 4, 0, 0).is_err());
    }

    #[test]
    fn p_epsilon_examples() {
        assert_eq!(p_epsilon(0, 7), big(8));
        assert_eq!(p_epsilon(2, 3), big(23));
        assert_eq!(p_epsilon(3, 2), big(32));
    }

    #[test]
    fn birkhoff_examples() {
        assert_eq!(birkhoff_dim(1, 5).unwrap(), big(6));
        assert_eq!(birkhoff_dim(3, 2).unwrap(), big(13));
        assert_eq!(birkhoff_dim(2, 3).unwrap(), big(15));
        assert!(birkhoff_dim(0, 2).is_err());
    }

    #[test]
    fn nil_defect_examples() {
        let h = heisenberg3();
        let full = h.full_space();
        assert_eq!(nil_defect_of_ideal(&h, &full, &full).unwrap(), 2);
        assert_eq!(nil_defect_of_ideal(&h, &full, &Subspace::coordinate(3, &[2])).unwrap(), 3);
        assert!(matches!(
            nil_defect_of_ideal(&h, &full, &Subspace::coordinate(3, &[0])),
            Err(Error::NotAnIdeal)
        ));
        for d in 4..=9 {
            let f = standard_filiform(d);
            let idx: Vec<usize> = (1..d).collect();
            let eps = nil_defect_of_ideal(&f, &f.full_space(), &Subspace::coordinate(d, &idx)).unwrap();
            assert_eq!(eps, 2);
        }
    }

    #[test]
    fn nil_defect_search_examples() {
        let h = heisenberg3();
        assert_eq!(nil_defect_search(&h, &h.full_space(), 2).unwrap(), (2, h.full_space()));
        let a = LieAlgebra::abelian(3);
        assert_eq!(nil_defect_search(&a, &a.full_space(), 2).unwrap(), (1, a.full_space()));
        for d in 4..=9 {
            let f = standard_filiform(d);
            let idx: Vec<usize> = (1..d).collect();
            let (eps, witness) = nil_defect_search(&f, &f.full_space(), 2).unwrap();
            assert_eq!(eps, 2);
            assert_eq!(witness, Subspace::coordinate(d, &idx));
        }
    }

    #[test]
    fn solvable_radical_search() {
        // the nilradical span{a, x, y, z} has codim 1 and class 2
        let s = solvable5();
        let got = nil_defect_search(&s, &s.full_space(), 2).unwrap();
        assert_eq!(got, (3, Subspace::coordinate(5, &[0, 2, 3, 4])));
    }

    proptest! {
        #[test]
        fn denumerant_within_exact_bound(t in 0u64..=12, parts in prop::collection::vec(1u64..=6, 1..=6)) {
            let got = denumerant(t, &parts).unwrap();
            prop_assert!(got <= denumerant_bound_exact(t, parts.len() as u64));
        }

        #[test]
        fn distinct_parts_within_lemma_bound(t in 1u64..=12, parts in prop::collection::btree_set(1u64..=6, 1..=6)) {
            let parts: Vec<u64> = parts.into_iter().collect();
            let got = denumerant(t, &parts).unwrap();
            prop_assert!(got <= denumerant_bound(t, parts.len() as u64));
        }

        #[test]
        fn cumulative_count(t_max in 0u64..=12, parts in prop::collection::vec(1u64..=6, 0..=6)) {
            let total = (0..=t_max).fold(BigUint::zero(), |acc, t| acc + denumerant(t, &parts).unwrap());
            let p = parts.len() as u64;
            prop_assert!(total <= binomial(p + t_max, t_max));
        }

        #[test]
        fn corollary_chain(e1 in 0u64..=8, e2 in 0u64..=8, r in 0u64..=12) {
            let e = e1 + e2;
            let lhs = binomial(r + e1, e1) * binomial(r + e2, e2);
            let rhs = factorial(r + e) / (factorial(r) * factorial(e / 2) * factorial(e.div_ceil(2)));
            prop_assert!(lhs <= rhs);
        }

        #[test]
        fn pascal_rule(n in 1u64..40, k in 1u64..40) {
            prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
}
