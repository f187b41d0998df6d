//! Orbits, censuses and subspace structure on white points.

pub mod bfs;
pub mod census;
pub mod counts;
mod prime_fast;
pub mod structured;
pub mod subspaces;
pub mod twisted;

use serde::{Deserialize, Serialize};

use crate::albert::{Albert, AlbertVector, Color};
use crate::error::{Error, Result};
use crate::gf::Fe;

pub use bfs::{orbit_bfs, BfsOptions, OrbitReport};
pub use census::{brute_force_color_census, CensusReport};
pub use counts::{closed_form_counts, order_identities, ClosedFormCounts, OrderIdentities};
pub use structured::{structured_white_enumeration, StructuredCase};
pub use subspaces::{pure_white, pure_white_subspaces, seventeen_space, w10_space};
pub use twisted::{two_e6_point_type, TwoE6Analysis, TwoE6PointType};

/// A 1-dimensional subspace, stored as the packed coordinates of its spanning
/// vector whose first nonzero coordinate is 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint(pub u128);

/// Fields whose packed keys fit in 128 bits.
pub fn check_packable(alb: &Albert) -> Result<()> {
    if 27 * alb.bits_per_coord() > 128 {
        return Err(Error::Unsupported(format!(
            "packed points need q <= 16, got q = {}",
            alb.field().order()
        )));
    }
    Ok(())
}

pub fn canonical_vector(alb: &Albert, v: &AlbertVector) -> Result<AlbertVector> {
    let f = alb.field();
    let lead = v
        .coords()
        .into_iter()
        .find(|c| !c.is_zero())
        .ok_or(Error::ZeroVector)?;
    Ok(if lead == Fe::ONE {
        *v
    } else {
        alb.scale(f.inv(lead)?, v)
    })
}

pub fn canonical_point(alb: &Albert, v: &AlbertVector) -> Result<ProjPoint> {
    check_packable(alb)?;
    Ok(ProjPoint(alb.pack(&canonical_vector(alb, v)?)))
}

impl ProjPoint {
    pub fn vector(&self, alb: &Albert) -> AlbertVector {
        alb.unpack(self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineType {
    AllWhite,
    TwoWhite,
}

/// Whether every point of `⟨w, x⟩` is white.
pub fn line_type(alb: &Albert, w: &AlbertVector, x: &AlbertVector) -> Result<LineType> {
    for v in [w, x] {
        if alb.classify_color(v)? != Color::White {
            return Err(Error::NotWhite);
        }
    }
    if canonical_vector(alb, w)? == canonical_vector(alb, x)? {
        return Err(Error::Unsupported("the two points coincide".into()));
    }
    let f = alb.field();
    // points w + μx for μ != 0; w and x themselves are white
    for mu in f.nonzero_elements() {
        let p = alb.add(w, &alb.scale(mu, x));
        if !alb.is_white(&p) {
            return Ok(LineType::TwoWhite);
        }
    }
    Ok(LineType::AllWhite)
}

#[cfg(test)]
mod tests;
