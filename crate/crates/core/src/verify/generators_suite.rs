use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::albert_suite::random_white;
use super::{Recorder, VerifyConfig};
use crate::albert::Albert;
use crate::error::Result;
use crate::gf::{Fe, Field};
use crate::group::{duality_fixed, generator_op, representative_kinds, GeneratorKind, LinearOp27, OFF_DIAGONAL};
use crate::octonion::OctIndex;

const HEAVY: u64 = 5_000;

fn is_f4_kind(k: &GeneratorKind) -> bool {
    matches!(
        k,
        GeneratorKind::CyclicPerm
            | GeneratorKind::SwapPerm
            | GeneratorKind::Diagonal { .. }
            | GeneratorKind::F4Rotation { .. }
    )
}

pub(crate) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng, rec: &mut Recorder) -> Result<()> {
    let f = Field::with_order(cfg.q)?;
    let alb = Albert::new(&f);
    let o = alb.oct();
    let kinds: Vec<GeneratorKind> = representative_kinds(&alb).into_iter().filter(|k| !k.is_twisted()).collect();
    let ops = kinds.iter().map(|k| generator_op(&alb, k)).collect::<Result<Vec<_>>>()?;

    rec.each("generators preserve det as a polynomial", &ops, |op| op.preserves_det(&alb));
    rec.each("scalar λ preserves det iff λ³ = 1", f.nonzero_elements(), |l| {
        let s = LinearOp27::scalar(&f, l).unwrap();
        s.preserves_det(&alb) == (f.pow(l, 3) == Fe::ONE)
    });
    rec.each("operator followed by its inverse is the identity", &ops, |op| {
        op.then(&op.invert()).map(|g| g.is_identity()).unwrap_or(false)
    });
    rec.each("F4 generators fix I and commute with duality", kinds.iter().filter(|k| is_f4_kind(k)), |k| {
        let m = k.matrix(&alb).unwrap();
        duality_fixed(&alb, &m).unwrap_or(false) && generator_op(&alb, k).unwrap().fixes_identity(&alb)
    });
    rec.each("transvections add along a position", OFF_DIAGONAL, |(row, col)| {
        let x = o.basis(OctIndex::P1);
        let y = o.scaled_basis(f.primitive_element(), OctIndex::MW);
        let t = |z| generator_op(&alb, &GeneratorKind::Transvection { row, col, x: z }).unwrap();
        t(x).then(&t(y)).unwrap() == t(o.add(&x, &y))
    });

    let n = cfg.samples.min(HEAVY);
    rec.each("generators map white vectors to white vectors", 0..n, |_| {
        let w = random_white(&alb, rng);
        alb.is_white(&ops.choose(rng).unwrap().apply(&w))
    });
    rec.each("generators preserve color and det", 0..n, |_| {
        let x = alb.random(rng);
        if x.is_zero() {
            return true;
        }
        let y = ops.choose(rng).unwrap().apply(&x);
        alb.classify_color(&x).ok() == alb.classify_color(&y).ok() && alb.det(&x) == alb.det(&y)
    });
    rec.each("random words preserve whiteness", 0..n.min(500), |_| {
        let mut w = random_white(&alb, rng);
        for _ in 0..rng.gen_range(1..20) {
            w = ops.choose(rng).unwrap().apply(&w);
        }
        alb.is_white(&w)
    });
    Ok(())
}
