//! Point types over `F_{q²}` for the twisted group.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::subspaces::seventeen_space;
use crate::albert::{Albert, AlbertVector};
use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::group::{hermitian_form, sesquilinear, HermitianVariant};
use crate::linalg;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwoE6PointType {
    Emerald,
    IsotropicBrilliant,
    NonIsotropic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoE6Analysis {
    pub point_type: TwoE6PointType,
    pub h1: Fe,
    pub space_dim: usize,
    /// Dimension of the radical of `H1` on the 17-space.
    pub radical_dim: usize,
    pub radical: Vec<AlbertVector>,
}

impl TwoE6Analysis {
    pub fn to_json(&self, alb: &Albert) -> Value {
        json!({
            "type": self.point_type,
            "h1": alb.field().coeffs(self.h1),
            "space_dim": self.space_dim,
            "radical_dim": self.radical_dim,
        })
    }
}

/// Radical of the `H1` pairing restricted to the span of `basis`.
pub fn h1_radical(alb: &Albert, basis: &[AlbertVector]) -> Result<Vec<AlbertVector>> {
    let f = alb.field();
    let n = basis.len();
    let mut gram_t = vec![vec![Fe::ZERO; n]; n];
    for (i, x) in basis.iter().enumerate() {
        for (j, y) in basis.iter().enumerate() {
            gram_t[j][i] = sesquilinear(alb, x, y, HermitianVariant::H1)?;
        }
    }
    // r = sum μ_i k_i is radical iff S(r, k_j) = sum_i μ_i S(k_i, k_j) = 0
    Ok(linalg::nullspace(f, &gram_t, n)
        .iter()
        .map(|mu| {
            let mut out = alb.zero();
            for (&m, k) in mu.iter().zip(basis) {
                out = alb.add(&out, &alb.scale(m, k));
            }
            out
        })
        .collect())
}

pub fn two_e6_point_type(alb: &Albert, v: &AlbertVector) -> Result<TwoE6Analysis> {
    let f = alb.field();
    if !f.is_quadratic() {
        return Err(Error::NotQuadratic);
    }
    let space = seventeen_space(alb, v)?;
    let radical = h1_radical(alb, &space)?;
    let rows: Vec<Vec<Fe>> = radical.iter().map(|r| r.coords().to_vec()).collect();
    let h1 = hermitian_form(alb, v, HermitianVariant::H1)?;
    let point_type = if !rows.is_empty() && linalg::in_span(f, &rows, &v.coords()) {
        TwoE6PointType::Emerald
    } else if h1.is_zero() {
        TwoE6PointType::IsotropicBrilliant
    } else {
        TwoE6PointType::NonIsotropic
    };
    Ok(TwoE6Analysis {
        point_type,
        h1,
        space_dim: space.len(),
        radical_dim: radical.len(),
        radical,
    })
}
