use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{Recorder, VerifyConfig};
use crate::albert::{dickson_cubic, dickson_poly, dickson_translate, Albert, AlbertVector};
use crate::error::Result;
use crate::gf::{Fe, Field};

/// Heavier checks use at most this many random instances.
const HEAVY: u64 = 10_000;

/// `c v̄ᵀv` for random `c != 0` and `v = (x, y, 1)`, cyclically rotated.
pub(crate) fn random_white(alb: &Albert, rng: &mut ChaCha8Rng) -> AlbertVector {
    let f = alb.field();
    let o = alb.oct();
    let c = Fe(rng.gen_range(1..f.order() as u16));
    let x = o.from_index(rng.gen_range(0..o.count()));
    let y = o.from_index(rng.gen_range(0..o.count()));
    let mut v = alb.from_parts(
        [f.mul(c, o.norm(&x)), f.mul(c, o.norm(&y)), c],
        [o.scale(c, &o.conj(&y)), o.scale(c, &x), o.scale(c, &o.mul(&o.conj(&x), &y))],
    );
    for _ in 0..rng.gen_range(0..3) {
        v = AlbertVector { diag: [v.diag[2], v.diag[0], v.diag[1]], off: [v.off[2], v.off[0], v.off[1]] };
    }
    v
}

fn jtrace_cube(alb: &Albert, x: &AlbertVector) -> Result<Fe> {
    let x2 = alb.jordan_mul(x, x)?;
    Ok(alb.trace(&alb.jordan_mul(&x2, x)?))
}

/// `Tr((X+Y+Z)³) + Tr((X−Y−Z)³) + Tr((Y−X−Z)³) + Tr((Z−X−Y)³)`.
pub fn polarized_cube_trace(alb: &Albert, x: &AlbertVector, y: &AlbertVector, z: &AlbertVector) -> Result<Fe> {
    let f = alb.field();
    let s = |a: &AlbertVector, b: &AlbertVector, c: &AlbertVector| alb.sub(&alb.sub(a, b), c);
    let terms = [
        alb.add(&alb.add(x, y), z),
        s(x, y, z),
        s(y, x, z),
        s(z, x, y),
    ];
    let mut acc = Fe::ZERO;
    for t in &terms {
        acc = f.add(acc, jtrace_cube(alb, t)?);
    }
    Ok(acc)
}

pub(crate) fn run(cfg: &VerifyConfig, rng: &mut ChaCha8Rng, rec: &mut Recorder) -> Result<()> {
    let f = Field::with_order(cfg.q)?;
    let alb = Albert::new(&f);
    let p = f.characteristic();
    let heavy = cfg.samples.min(HEAVY);
    let det_poly = alb.det_poly();

    rec.each("six equations agree with vanishing linear form", 0..heavy, |n| {
        let x = if n % 2 == 0 { random_white(&alb, rng) } else { alb.random(rng) };
        let lin_zero = alb.linear_form_at(&x).iter().all(|c| c.is_zero());
        x.is_zero() || alb.white_equations(&x) == lin_zero
    });
    rec.each("white vectors have det 0", 0..heavy, |_| alb.det(&random_white(&alb, rng)).is_zero());
    rec.each("det agrees with its 45-term expansion", 0..heavy, |_| {
        let x = alb.random(rng);
        let d = alb.det(&x);
        d == alb.det_from_terms(&x) && d == det_poly.eval(&x.coords())
    });
    rec.each("det(λX) = λ³det(X)", 0..heavy, |_| {
        let x = alb.random(rng);
        let l = Fe(rng.gen_range(0..f.order() as u16));
        alb.det(&alb.scale(l, &x)) == f.mul(f.pow(l, 3), alb.det(&x))
    });
    rec.each("full polarization of det at (X,X,X) is 6det(X)", 0..heavy, |_| {
        let x = alb.random(rng);
        alb.trilinear(&x, &x, &x) == f.mul(f.from_int(6), alb.det(&x))
    });
    let dp = Albert::new(&Field::new(p, 1)?);
    rec.each("det + Dickson cubic is the zero polynomial over F_p", [()], |_| {
        dp.det_poly().add(&dickson_poly(dp.field())).is_zero()
    });
    rec.each("det + Dickson cubic vanishes pointwise", 0..heavy, |_| {
        let x = alb.random(rng);
        f.add(alb.det(&x), dickson_cubic(&f, &dickson_translate(&f, &x))).is_zero()
    });
    rec.each("pack and JSON round trips", 0..heavy.min(1000), |_| {
        let x = alb.random(rng);
        alb.unpack_bytes(&alb.pack_bytes(&x)) == Ok(x) && alb.from_json(&alb.to_json(&x)) == Ok(x)
    });

    if p == 2 {
        for name in [
            "Cayley-Hamilton residual vanishes",
            "Jordan trace form is associative",
            "det = Tr(X³)/3 - Tr(X²)Tr(X)/2 + Tr(X)³/6",
            "polarized cube traces equal 24 Tr((X∘Y)∘Z)",
        ] {
            rec.skip(name, "no Jordan product in characteristic 2");
        }
        return Ok(());
    }
    rec.each("Cayley-Hamilton residual vanishes", 0..heavy, |_| {
        let x = alb.random(rng);
        alb.cayley_hamilton_residual(&x).map(|r| r.is_zero()).unwrap_or(false)
    });
    rec.each("Jordan trace form is associative", 0..heavy.min(2000), |_| {
        let (x, y, z) = (alb.random(rng), alb.random(rng), alb.random(rng));
        let l = alb.jordan_mul(&alb.jordan_mul(&x, &y).unwrap(), &z).unwrap();
        let r = alb.jordan_mul(&x, &alb.jordan_mul(&y, &z).unwrap()).unwrap();
        alb.trace(&l) == alb.trace(&r)
    });
    if p == 3 {
        for name in [
            "det = Tr(X³)/3 - Tr(X²)Tr(X)/2 + Tr(X)³/6",
            "polarized cube traces equal 24 Tr((X∘Y)∘Z)",
        ] {
            rec.skip(name, "needs characteristic at least 5");
        }
        return Ok(());
    }
    let third = f.inv(f.from_int(3))?;
    let half = f.inv(f.from_int(2))?;
    let sixth = f.inv(f.from_int(6))?;
    rec.each("det = Tr(X³)/3 - Tr(X²)Tr(X)/2 + Tr(X)³/6", 0..heavy, |_| {
        let x = alb.random(rng);
        let t = alb.trace(&x);
        let t2 = alb.trace(&alb.jordan_mul(&x, &x).unwrap());
        let t3 = jtrace_cube(&alb, &x).unwrap();
        let rhs = f.add(
            f.sub(f.mul(third, t3), f.mul(half, f.mul(t2, t))),
            f.mul(sixth, f.pow(t, 3)),
        );
        alb.det(&x) == rhs
    });
    rec.each("polarized cube traces equal 24 Tr((X∘Y)∘Z)", 0..heavy.min(2000), |_| {
        let (x, y, z) = (alb.random(rng), alb.random(rng), alb.random(rng));
        let lhs = polarized_cube_trace(&alb, &x, &y, &z).unwrap();
        let t = alb.trace(&alb.jordan_mul(&alb.jordan_mul(&x, &y).unwrap(), &z).unwrap());
        lhs == f.mul(f.from_int(24), t)
    });
    Ok(())
}
