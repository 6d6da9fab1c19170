use crate::error::{Error, Result};
use crate::exactalg::{Matrix, Scalar};
use crate::liealg::{LieAlgebra, Subspace, Vector};

use super::quotient::QuotientModule;
use super::{abelian_rep, Decomposition, Representation};

/// `p0 = ker(p -> der(m))` and a complement `p_eff` of it in `p`.
///
/// When `g` splits as `p0 ⊕ I` with `I ⊇ m` an ideal, `p_eff = I ∩ p` is
/// returned. `I` is built inside the centralizer `C` of `p0`: it contains
/// `[C, C]` and `m` and misses `C ∩ p0`. If that is impossible the greedy
/// complement of `p0` in `p` is returned instead.
pub fn split_p0(decomposition: &Decomposition) -> (Subspace, Subspace) {
    let g = decomposition.algebra();
    let d = g.dim();
    let (p, m) = (decomposition.p(), decomposition.m());
    let p0 = g.action_kernel(p, m);
    if p0.is_zero() {
        return (p0, p.clone());
    }
    let greedy = Subspace::span(d, &p.complement_vectors(&p0.basis()));
    let full = g.full_space();
    let centralizer = g.bracket_preimage(&full, &p0, &Subspace::zero(d));
    let z0 = centralizer.intersection(&p0);
    if centralizer.dim() + p0.dim() - z0.dim() != d {
        return (p0, greedy);
    }
    let start = g.product_space(&centralizer, &centralizer).sum(m);
    if !start.intersection(&z0).is_zero() {
        return (p0, greedy);
    }
    let mut seed = start.basis();
    seed.extend(z0.basis());
    let within_p = centralizer.intersection(p);
    let extra = within_p.complement_vectors(&seed);
    let ideal = start.sum(&Subspace::span(d, &extra));
    (p0, ideal.intersection(p))
}

/// Faithful representation of the subalgebra `p0`, assumed reductive:
/// `ad` on `[p0, p0]` plus [`abelian_rep`] of the center on the projection
/// along `[p0, p0]`. The represented algebra is `p0` in its canonical basis.
///
/// Degree `dim p0`, plus one when the center is nonzero.
pub fn reductive_rep(algebra: &LieAlgebra, p0: &Subspace) -> Result<Representation> {
    let s = algebra.subalgebra(p0, &format!("{}/p0", algebra.name()))?;
    let n = s.dim();
    if n == 0 {
        return Ok(Representation::zero(&s, 0));
    }
    let full = s.full_space();
    let derived = s.product_space(&full, &full);
    let center = s.center();
    if !derived.intersection(&center).is_zero() || derived.dim() + center.dim() != n {
        return Err(Error::NotReductive(format!(
            "[p0, p0] has dim {} and the center of p0 has dim {} in dim {n}",
            derived.dim(),
            center.dim()
        )));
    }
    let derived_basis = derived.basis();
    let center_basis = center.basis();
    let mut stacked = derived_basis.clone();
    stacked.extend(center_basis.iter().cloned());
    let to_split = Matrix::from_rows(n, &stacked).inverse().expect("complementary");
    let derived_cols = if derived_basis.is_empty() {
        Matrix::zeros(n, 0)
    } else {
        Matrix::from_rows(n, &derived_basis).transpose()
    };

    let kd = derived_basis.len();
    let kz = center_basis.len();
    let mut module_basis: Vec<String> = (0..kd).map(|i| format!("ad{i}")).collect();
    let block = if kz == 0 { None } else { Some(abelian_rep(kz)) };
    if let Some(b) = &block {
        module_basis.extend(b.module_basis().iter().cloned());
    }
    let degree = module_basis.len();

    let matrices = (0..n)
        .map(|i| {
            let mut mat = Matrix::zeros(degree, degree);
            let x = crate::exactalg::unit_vector(n, i);
            for (c, b) in derived_basis.iter().enumerate() {
                let image = s.bracket(&x, b)?;
                let coords = derived_cols.solve(&image).expect("[p0, p0] is an ideal");
                for (r, v) in coords.into_iter().enumerate() {
                    mat[(r, c)] = v;
                }
            }
            if let Some(b) = &block {
                let coeffs = to_split.row(i);
                let zpart: Vector = coeffs[kd..].to_vec();
                let img = b.image(&zpart);
                for r in 0..=kz {
                    for c in 0..=kz {
                        mat[(kd + r, kd + c)] = img[(r, c)].clone();
                    }
                }
            }
            Ok(mat)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Representation::new(&s, module_basis, matrices))
}

/// A faithful representation of all of `g`, with its pieces.
#[derive(Clone, Debug)]
pub struct Assembly {
    pub representation: Representation,
    pub p0: Subspace,
    pub p_eff: Subspace,
    pub reductive_degree: usize,
    pub quotient_degree: usize,
}

/// `reductive_rep(p0)` composed with the projection `g -> p0` along
/// `p_eff ⊕ m`, summed with the quotient module of `g`, on which `p0` acts
/// trivially.
pub fn assemble_full(decomposition: &Decomposition, k1: u64, k2: u64) -> Result<Assembly> {
    let g = decomposition.algebra();
    let d = g.dim();
    let (p0, p_eff) = split_p0(decomposition);
    let quotient = QuotientModule::new(decomposition, k1, k2)?.representation()?;
    if p0.is_zero() {
        let quotient_degree = quotient.degree();
        return Ok(Assembly {
            representation: quotient,
            p0,
            p_eff,
            reductive_degree: 0,
            quotient_degree,
        });
    }
    let ideal = p_eff.sum(decomposition.m());
    if !g.is_ideal(&ideal) {
        return Err(Error::InvalidDecomposition(
            "no ideal complement p_eff ⊕ m of p0 exists".into(),
        ));
    }
    let reductive = reductive_rep(g, &p0)?;

    let mut stacked = p0.basis();
    stacked.extend(ideal.basis());
    let splitter = Matrix::from_rows(d, &stacked).inverse().expect("p0 ⊕ ideal = g");
    let k = p0.dim();
    let projection_rows: Vec<Vec<Scalar>> = (0..d).map(|i| splitter.row(i)[..k].to_vec()).collect();
    let projection = Matrix::from_rows(k, &projection_rows);
    let lifted = reductive.pull_back(g, &projection);

    let representation = lifted.direct_sum(&quotient)?;
    Ok(Assembly {
        reductive_degree: lifted.degree(),
        quotient_degree: quotient.degree(),
        representation,
        p0,
        p_eff,
    })
}
