//! Small named algebras used by the catalog and the tests.

use super::LieAlgebra;

/// `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_int_brackets("heisenberg3", &["x", "y", "z"], &[(0, 1, &[(2, 1)])])
        .expect("heisenberg3")
}

/// `[x1, y1] = [x2, y2] = z`, basis order `x1, x2, y1, y2, z`.
pub fn heisenberg5() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "heisenberg5",
        &["x1", "x2", "y1", "y2", "z"],
        &[(0, 2, &[(4, 1)]), (1, 3, &[(4, 1)])],
    )
    .expect("heisenberg5")
}

/// Standard filiform algebra of dimension `d >= 2`: `[e1, e_i] = e_{i+1}` for `2 <= i < d`.
pub fn standard_filiform(d: usize) -> LieAlgebra {
    let labels: Vec<String> = (1..=d).map(|i| format!("e{i}")).collect();
    let brackets: Vec<_> = (1..d.saturating_sub(1))
        .map(|i| (0, i, vec![(i + 1, crate::exactalg::Scalar::one())]))
        .collect();
    LieAlgebra::new(format!("filiform{d}"), labels, &brackets).expect("filiform")
}

/// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "sl2",
        &["h", "e", "f"],
        &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
    )
    .expect("sl2")
}

/// `sl2` plus a one-dimensional center `z`.
pub fn sl2_plus_center() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "sl2_plus_center",
        &["h", "e", "f", "z"],
        &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
    )
    .expect("sl2_plus_center")
}

/// The two-dimensional nonabelian algebra `[d, x] = x`.
pub fn solvable2() -> LieAlgebra {
    LieAlgebra::from_int_brackets("solvable2", &["d", "x"], &[(0, 1, &[(1, 1)])]).expect("solvable2")
}

/// `a (+) heisenberg3` with `a` central; basis `a, x, y, z`.
pub fn abelian_plus_heisenberg3() -> LieAlgebra {
    LieAlgebra::from_int_brackets("a1_plus_heisenberg3", &["a", "x", "y", "z"], &[(1, 2, &[(3, 1)])])
        .expect("a1_plus_heisenberg3")
}

/// `a (+) (<d> x| heisenberg3)` where `d` acts diagonally with weights
/// `x -> x`, `y -> y`, `z -> 2z`; basis `a, d, x, y, z`.
pub fn solvable5() -> LieAlgebra {
    LieAlgebra::from_int_brackets(
        "solvable5",
        &["a", "d", "x", "y", "z"],
        &[
            (1, 2, &[(2, 1)]),
            (1, 3, &[(3, 1)]),
            (1, 4, &[(4, 2)]),
            (2, 3, &[(4, 1)]),
        ],
    )
    .expect("solvable5")
}
