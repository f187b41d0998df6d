//! Hermitian forms on the Albert space over `F_{q²}`.

use super::OctMatrix3;
use crate::albert::{Albert, AlbertVector, DIM};
use crate::error::{Error, Result};
use crate::gf::Fe;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermitianVariant {
    /// `aa' + bb' + cc' + Tr(AĀ' + BB̄' + CC̄')`.
    H1,
    /// Canonical basis orthonormal.
    Aschbacher,
}

/// Coordinate paired with `u`: diagonal coordinates with themselves,
/// octonion coordinate `i` with `−i` for `H1`.
pub fn partner(variant: HermitianVariant, u: usize) -> usize {
    match variant {
        HermitianVariant::Aschbacher => u,
        HermitianVariant::H1 if u < 3 => u,
        HermitianVariant::H1 => {
            let k = (u - 3) / 8;
            let i = (u - 3) % 8;
            3 + 8 * k + (i + 4) % 8
        }
    }
}

/// `S(X, Y) = sum_u X_u · Y_{σ(u)}^q`; linear in `X`, semilinear in `Y`.
pub fn sesquilinear(
    alb: &Albert,
    x: &AlbertVector,
    y: &AlbertVector,
    variant: HermitianVariant,
) -> Result<Fe> {
    let f = alb.field();
    if !f.is_quadratic() {
        return Err(Error::NotQuadratic);
    }
    let (cx, cy) = (x.coords(), y.coords());
    Ok(f.sum((0..DIM).map(|u| f.mul(cx[u], f.conj_unchecked(cy[partner(variant, u)])))))
}

pub fn hermitian_form(alb: &Albert, x: &AlbertVector, variant: HermitianVariant) -> Result<Fe> {
    sesquilinear(alb, x, x, variant)
}

/// `M†M = I` with `M† = (M̄ᵀ)'`.
pub fn is_twisted_unitary(alb: &Albert, m: &OctMatrix3) -> Result<bool> {
    let o = alb.oct();
    if !alb.field().is_quadratic() {
        return Err(Error::NotQuadratic);
    }
    if !m.in_two_dim_subalgebra(o) {
        return Err(Error::NotInSubalgebra);
    }
    let ct = m.conj_transpose(o);
    let mut dagger = ct;
    for row in dagger.0.iter_mut() {
        for x in row.iter_mut() {
            *x = o.prime(x)?;
        }
    }
    Ok(dagger.mul(o, m) == OctMatrix3::identity(o))
}
