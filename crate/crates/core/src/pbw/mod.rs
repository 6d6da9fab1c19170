//! The universal enveloping algebra `U(m)` in its PBW basis, with the
//! actions of `p ⋉ m`: `m` by left multiplication, `p` by derivations.

mod monomial;
mod straighten;

pub use monomial::{Monomial, UElement};
pub use straighten::{Derivation, EnvelopingAlgebra, Truncation};

use crate::error::{Error, Result};
use crate::filtration::{Weight, WeightVector};

pub fn mono_weight(w: &WeightVector, alpha: &Monomial) -> Weight {
    alpha.weight(w)
}

pub fn elem_weight(w: &WeightVector, x: &UElement) -> Weight {
    x.weight(w)
}

/// All standard monomials with `omega1 <= b1` and `omega2 <= b2`, in
/// graded-lexicographic order.
///
/// Depth-first over exponent positions, pruning on the remaining budget of
/// both weights. `w1` must be positive everywhere so the set is finite.
pub fn enumerate_bounded(w1: &WeightVector, b1: u64, w2: &WeightVector, b2: u64) -> Result<Vec<Monomial>> {
    assert_eq!(w1.len(), w2.len(), "weight vectors of different length");
    let cost = |w: Weight| w.finite();
    let mut c1 = Vec::with_capacity(w1.len());
    let mut c2 = Vec::with_capacity(w1.len());
    for j in 0..w1.len() {
        match w1.get(j) {
            Weight::Finite(0) => return Err(Error::NonpositiveWeight { index: j }),
            w => c1.push(cost(w)),
        }
        c2.push(cost(w2.get(j)));
    }

    fn rec(
        pos: usize,
        r1: u64,
        r2: u64,
        c1: &[Option<u64>],
        c2: &[Option<u64>],
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if pos == c1.len() {
            out.push(Monomial::from_exponents(current.clone()));
            return;
        }
        let mut a: u32 = 0;
        loop {
            let need1 = c1[pos].map(|c| c * a as u64);
            let need2 = c2[pos].map(|c| c * a as u64);
            // an infinite weight admits only the zero exponent
            let fits1 = if a == 0 { Some(0) } else { need1 };
            let fits2 = if a == 0 { Some(0) } else { need2 };
            match (fits1, fits2) {
                (Some(n1), Some(n2)) if n1 <= r1 && n2 <= r2 => {
                    current[pos] = a;
                    rec(pos + 1, r1 - n1, r2 - n2, c1, c2, current, out);
                    a += 1;
                }
                _ => break,
            }
        }
        current[pos] = 0;
    }

    let mut out = Vec::new();
    let mut current = vec![0; w1.len()];
    rec(0, b1, b2, &c1, &c2, &mut current, &mut out);
    out.sort();
    Ok(out)
}
