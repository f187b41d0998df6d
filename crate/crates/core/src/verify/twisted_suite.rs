use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::albert_suite::random_white;
use super::{Recorder, VerifyConfig};
use crate::albert::{Albert, AlbertVector, DIM};
use crate::error::Result;
use crate::gf::Field;
use crate::group::{
    generator_op, is_twisted_unitary, representative_kinds, sesquilinear, twisted_kinds, GeneratorKind,
    HermitianVariant, LinearOp27,
};
use crate::octonion::OctIndex;
use crate::orbits::{two_e6_point_type, TwoE6PointType};

fn preserves_h1(alb: &Albert, op: &LinearOp27) -> bool {
    let basis: Vec<AlbertVector> = (0..DIM).map(|u| alb.basis(u)).collect();
    let images: Vec<AlbertVector> = basis.iter().map(|b| op.apply(b)).collect();
    (0..DIM).all(|u| {
        (0..DIM).all(|v| {
            sesquilinear(alb, &images[u], &images[v], HermitianVariant::H1).ok()
                == sesquilinear(alb, &basis[u], &basis[v], HermitianVariant::H1).ok()
        })
    })
}

/// `cfg.q` is the subfield order; the computations run over `F_{q²}`.
pub(crate) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng, rec: &mut Recorder) -> Result<()> {
    let sub = Field::with_order(cfg.q)?;
    let f = Field::new(sub.characteristic(), 2 * sub.degree())?;
    let alb = Albert::new(&f);
    let o = alb.oct();

    let twisted = twisted_kinds(&alb);
    rec.each("twisted generators are unitary", &twisted, |k| {
        is_twisted_unitary(&alb, &k.matrix(&alb).unwrap()).unwrap_or(false)
    });
    rec.each("twisted generators preserve det", &twisted, |k| {
        generator_op(&alb, k).map(|op| op.preserves_det(&alb)).unwrap_or(false)
    });

    // generators of 2SE6: twisted kinds plus F4 kinds with subfield coefficients
    let mut group = Vec::new();
    for k in representative_kinds(&alb) {
        let keep = k.is_twisted()
            || matches!(
                k,
                GeneratorKind::CyclicPerm
                    | GeneratorKind::SwapPerm
                    | GeneratorKind::F4Rotation { .. }
                    | GeneratorKind::Diagonal { .. }
            );
        if !keep {
            continue;
        }
        let m = k.matrix(&alb)?;
        let fixed = m.0.iter().flatten().all(|x| o.prime(x).map(|y| y == *x).unwrap_or(false));
        if k.is_twisted() || fixed {
            group.push(generator_op(&alb, &k)?);
        }
    }
    rec.each("generators preserve H1 on all basis pairs", &group, |op| preserves_h1(&alb, op));

    let whites = cfg.samples.min(100);
    let mut emeralds = Vec::new();
    let mut moved = 0u64;
    let mut bad = 0u64;
    for n in 0..whites {
        let w = if n == 0 { emerald_fixture(&alb) } else { random_white(&alb, rng) };
        let t = two_e6_point_type(&alb, &w)?;
        if t.point_type == TwoE6PointType::Emerald {
            emeralds.push(w);
        }
        for _ in 0..10 {
            let mut x = w;
            for _ in 0..rng.gen_range(1..30) {
                x = group.choose(rng).unwrap().apply(&x);
            }
            moved += 1;
            let tx = two_e6_point_type(&alb, &x)?;
            if tx.point_type != t.point_type {
                bad += 1;
            }
            if tx.point_type == TwoE6PointType::Emerald && emeralds.len() < 50 {
                emeralds.push(x);
            }
        }
    }
    rec.push("point type is invariant under random words", moved, bad, None);

    let mut dims = Vec::new();
    rec.each("emerald radical is the point itself", &emeralds, |v| {
        let t = two_e6_point_type(&alb, v).unwrap();
        if !dims.contains(&t.radical_dim) {
            dims.push(t.radical_dim);
        }
        t.radical_dim == 1
    });
    if let Some(last) = rec.checks.last_mut() {
        if last.failures > 0 {
            dims.sort_unstable();
            last.note = Some(format!("observed radical dimensions {dims:?}"));
        }
    }
    Ok(())
}

/// `(0,0,0|e1,0,0)`, an emerald point.
pub(crate) fn emerald_fixture(alb: &Albert) -> AlbertVector {
    let o = alb.oct();
    let f = alb.field();
    alb.from_parts([f.zero(); 3], [o.basis(OctIndex::P1), o.zero(), o.zero()])
}
