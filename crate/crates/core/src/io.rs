//! Algebra files: a [`LieAlgebra`] in its JSON form, optionally followed by
//! a `"decomposition"` object giving `p`, `m` (and possibly `h`) as row
//! vectors.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundInputs;
use crate::error::{Error, Result};
use crate::liealg::{LieAlgebra, Subspace, Vector};
use crate::repbuilder::Decomposition;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionSpec {
    pub p: Vec<Vector>,
    pub m: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nilradical_dim: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: LieAlgebra,
    pub decomposition: Option<DecompositionSpec>,
}

#[derive(Serialize)]
struct AlgebraFileOut<'a> {
    #[serde(flatten)]
    algebra: &'a LieAlgebra,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: &'a Option<DecompositionSpec>,
}

/// Which nilpotent ideal `h ⊆ m` to use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealSelector {
    /// `h = m`.
    Full,
    /// `h = Z(m)`.
    Center,
    /// Span of the listed basis vectors (0-based).
    Span(Vec<usize>),
}

impl FromStr for IdealSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(IdealSelector::Full),
            "center" => Ok(IdealSelector::Center),
            _ => {
                let list = s
                    .strip_prefix("span:")
                    .ok_or_else(|| Error::Parse(format!("unknown ideal selector {s:?}")))?;
                let idx = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Parse(format!("bad index {t:?} in ideal selector: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(IdealSelector::Span(idx))
            }
        }
    }
}

fn check_rows(rows: &[Vector], d: usize, what: &str) -> Result<Subspace> {
    if let Some(r) = rows.iter().find(|r| r.len() != d) {
        return Err(Error::Parse(format!(
            "{what} has a row of length {} in dimension {d}",
            r.len()
        )));
    }
    Ok(Subspace::span(d, rows))
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let algebra = LieAlgebra::deserialize(&value).map_err(|e| Error::Parse(e.to_string()))?;
        let decomposition = match value.get("decomposition") {
            None | Some(serde_json::Value::Null) => None,
            Some(v) => Some(DecompositionSpec::deserialize(v).map_err(|e| Error::Parse(e.to_string()))?),
        };
        Ok(AlgebraFile { algebra, decomposition })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_json_string(&self) -> String {
        let out = AlgebraFileOut {
            algebra: &self.algebra,
            decomposition: &self.decomposition,
        };
        serde_json::to_string_pretty(&out).expect("serializable")
    }

    /// The decomposition in the file, or `p = 0, m = g`; `h` follows the
    /// selector, then the file, then defaults to `m`.
    pub fn decomposition(&self, selector: Option<&IdealSelector>) -> Result<Decomposition> {
        let g = &self.algebra;
        let d = g.dim();
        let (p, m, file_h) = match &self.decomposition {
            Some(spec) => {
                let p = check_rows(&spec.p, d, "p")?;
                let m = check_rows(&spec.m, d, "m")?;
                let h = spec.h.as_ref().map(|h| check_rows(h, d, "h")).transpose()?;
                (p, m, h)
            }
            None => (Subspace::zero(d), Subspace::full(d), None),
        };
        let h = match selector {
            None => file_h,
            Some(IdealSelector::Full) => None,
            Some(IdealSelector::Center) => Some(g.center_of(&m)),
            Some(IdealSelector::Span(idx)) => {
                if let Some(&bad) = idx.iter().find(|&&i| i >= d) {
                    return Err(Error::Parse(format!("basis index {bad} out of range for dimension {d}")));
                }
                Some(Subspace::coordinate(d, idx))
            }
        };
        Decomposition::new(g.clone(), p, m, h)
    }

    /// Declared nilradical dimension, or `dim g` for nilpotent `g`.
    pub fn nilradical_dim(&self) -> Option<usize> {
        self.decomposition
            .as_ref()
            .and_then(|s| s.nilradical_dim)
            .or_else(|| self.algebra.is_nilpotent_subalgebra(&self.algebra.full_space()).then(|| self.algebra.dim()))
    }

    /// Inputs for the bound report. Without a known nilradical, `dim m` is
    /// used for `n`, which can only enlarge the theorem bound.
    pub fn bound_inputs(&self, decomposition: &Decomposition) -> BoundInputs {
        let g = &self.algebra;
        let n = self.nilradical_dim().unwrap_or(decomposition.m().dim());
        BoundInputs {
            d: g.dim() as u64,
            n: n as u64,
            r: g.killing_radical().dim() as u64,
            dim_m: decomposition.m().dim() as u64,
            dim_h: decomposition.h().dim() as u64,
            class_m: decomposition.class_m() as u64,
            class_h: decomposition.class_h() as u64,
        }
    }
}

fn unit_rows(d: usize, idx: &[usize]) -> Vec<Vector> {
    idx.iter().map(|&i| crate::exactalg::unit_vector(d, i)).collect()
}

fn with_split(algebra: LieAlgebra, p: &[usize], m: &[usize], nilradical_dim: Option<usize>) -> AlgebraFile {
    let d = algebra.dim();
    AlgebraFile {
        algebra,
        decomposition: Some(DecompositionSpec {
            p: unit_rows(d, p),
            m: unit_rows(d, m),
            h: None,
            nilradical_dim,
        }),
    }
}

/// The fixed fixtures shipped in `catalog/`, in file order.
pub fn builtin_catalog() -> Vec<AlgebraFile> {
    use crate::liealg::examples::*;
    let plain = |algebra| AlgebraFile {
        algebra,
        decomposition: None,
    };
    let mut out: Vec<AlgebraFile> = (1..=4).map(|n| plain(LieAlgebra::abelian(n))).collect();
    out.push(plain(heisenberg3()));
    out.push(plain(heisenberg5()));
    out.extend((4..=9).map(|d| plain(standard_filiform(d))));
    out.push(with_split(solvable2(), &[0], &[1], Some(1)));
    out.push(with_split(sl2(), &[0, 1, 2], &[], Some(0)));
    out.push(with_split(sl2_plus_center(), &[0, 1, 2], &[3], Some(1)));
    out.push(with_split(abelian_plus_heisenberg3(), &[0], &[1, 2, 3], Some(4)));
    out.push(with_split(solvable5(), &[0, 1], &[2, 3, 4], Some(4)));
    out
}
