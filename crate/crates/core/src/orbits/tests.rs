use super::*;
use crate::albert::oct_coord;
use crate::group::{make_generator, stabilizer_generator_kinds};
use crate::linalg;
use crate::octonion::OctIndex;
use crate::Field;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn alb(q: u32) -> Albert {
    Albert::new(&Field::with_order(q).unwrap())
}

fn b_vec(j: &Albert, k: usize, i: OctIndex) -> AlbertVector {
    j.basis(oct_coord(k, i))
}

/// Random white vector `c v̄ᵀv`, rotated.
fn random_white(j: &Albert, rng: &mut ChaCha8Rng) -> AlbertVector {
    let f = j.field();
    let o = j.oct();
    let q = f.order() as u16;
    let c = Fe(rng.gen_range(1..q));
    let x = o.from_index(rng.gen_range(0..o.count()));
    let y = o.from_index(rng.gen_range(0..o.count()));
    let v = j.from_parts(
        [f.mul(c, o.norm(&x)), f.mul(c, o.norm(&y)), c],
        [o.scale(c, &o.conj(&y)), o.scale(c, &x), o.scale(c, &o.mul(&o.conj(&x), &y))],
    );
    let mut out = v;
    for _ in 0..rng.gen_range(0..3) {
        out = AlbertVector { diag: [out.diag[2], out.diag[0], out.diag[1]], off: [out.off[2], out.off[0], out.off[1]] };
    }
    out
}

#[test]
fn canonical_points() {
    let j = alb(3);
    let v = j.diagonal(Fe::ZERO, j.field().from_int(2), Fe::ZERO);
    let p = canonical_point(&j, &v).unwrap();
    assert_eq!(p.vector(&j), j.unit(1));
    assert_eq!(canonical_point(&j, &p.vector(&j)).unwrap(), p);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let w = random_white(&j, &mut rng);
    assert_eq!(canonical_point(&j, &w), canonical_point(&j, &j.scale(Fe(2), &w)));
    assert_eq!(canonical_point(&j, &j.zero()), Err(Error::ZeroVector));
    assert!(canonical_point(&alb(32), &alb(32).unit(0)).is_err());
}

#[test]
fn line_types() {
    for q in [2, 3] {
        let j = alb(q);
        let e1 = j.unit(0);
        assert_eq!(line_type(&j, &e1, &b_vec(&j, 1, OctIndex::M1)), Ok(LineType::AllWhite));
        assert_eq!(line_type(&j, &e1, &j.unit(1)), Ok(LineType::TwoWhite));
        let grey = j.diagonal(Fe::ONE, Fe::ONE, Fe::ZERO);
        assert_eq!(line_type(&j, &e1, &grey), Err(Error::NotWhite));
    }
}

#[test]
fn pure_white_representatives() {
    let j = alb(2);
    let dims = [1, 2, 3, 4, 5, 5, 6];
    for ((name, basis), d) in pure_white_subspaces(&j).iter().zip(dims) {
        assert_eq!(subspaces::dimension(&j, basis), d, "{name}");
        assert!(pure_white(&j, basis).unwrap(), "{name}");
    }
    assert!(!pure_white(&j, &[j.unit(0), j.unit(1)]).unwrap());
    assert!(pure_white(&alb(4), &[j.unit(0)]).is_err());
}

#[test]
fn seventeen_space_of_first_axis() {
    for q in [2, 3, 4, 5] {
        let j = alb(q);
        let k = seventeen_space(&j, &j.unit(0)).unwrap();
        assert_eq!(k.len(), 17);
        let rows: Vec<Vec<Fe>> = k.iter().map(|v| v.coords().to_vec()).collect();
        for u in 0..27 {
            let expected = u == 0 || u >= 11;
            assert_eq!(linalg::in_span(j.field(), &rows, &j.basis(u).coords()), expected, "q={q} u={u}");
        }
    }
}

#[test]
fn seventeen_space_dimension_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for q in [2, 3, 4] {
        let j = alb(q);
        for _ in 0..60 {
            let v = random_white(&j, &mut rng);
            let k = seventeen_space(&j, &v).unwrap();
            assert_eq!(k.len(), 17, "{v:?}");
            let rows: Vec<Vec<Fe>> = k.iter().map(|v| v.coords().to_vec()).collect();
            assert!(linalg::in_span(j.field(), &rows, &v.coords()));
        }
        assert_eq!(seventeen_space(&j, &j.identity()), Err(Error::NotWhite));
    }
}

#[test]
fn ten_space_dichotomy() {
    for q in [2, 3] {
        let j = alb(q);
        let r = subspaces::w10_dichotomy(&j).unwrap();
        assert_eq!(r.violations, 0);
        assert_eq!(r.isotropic_white + r.anisotropic_grey, (q as u64).pow(10) - 1);
        assert!(r.isotropic_white > 0 && r.anisotropic_grey > 0);
        assert_eq!(w10_space(&j, &j.unit(0)).unwrap().len(), 10);
        assert!(matches!(w10_space(&j, &j.unit(1)), Err(Error::Unsupported(_))));
    }
}

#[test]
fn point_types_over_f4() {
    let j = alb(4);
    let a = two_e6_point_type(&j, &j.unit(0)).unwrap();
    assert_eq!(a.point_type, TwoE6PointType::NonIsotropic);
    assert_eq!(a.h1, Fe::ONE);
    assert_eq!(a.radical_dim, 0);
    // regression fixture: radical has dimension 9, not 1
    let v = b_vec(&j, 0, OctIndex::P1);
    let a = two_e6_point_type(&j, &v).unwrap();
    assert_eq!(a.point_type, TwoE6PointType::Emerald);
    assert_eq!((a.space_dim, a.radical_dim), (17, 9));
    assert_eq!(two_e6_point_type(&alb(3), &alb(3).unit(0)), Err(Error::NotQuadratic));
    assert_eq!(two_e6_point_type(&j, &j.identity()), Err(Error::NotWhite));
}

#[test]
fn bfs_edge_cases() {
    let j = alb(2);
    let o = orbit_bfs(&j, &[], &j.unit(0), &BfsOptions::default()).unwrap();
    assert_eq!(o.report.size, 1u32.into());
    assert!(!o.report.truncated);
    let gens: Vec<_> = stabilizer_generator_kinds(&j).iter().map(|k| make_generator(&j, k).unwrap()).collect();
    let o = orbit_bfs(&j, &gens, &j.unit(0), &BfsOptions::default()).unwrap();
    assert_eq!(o.points.len(), 1);
    let opts = BfsOptions { limit: 100, descriptor: "stabilizer".into() };
    let o = orbit_bfs(&j, &gens, &j.unit(1), &opts).unwrap();
    assert!(o.report.truncated);
    assert_eq!(o.points.len(), 100);
    assert_eq!(o.report.to_json()["generators"], "stabilizer");
}

#[test]
fn generic_bfs_matches_binary_path() {
    // the generic path at q = 3 on a small orbit, and q = 2 via both paths
    let j = alb(2);
    let gens: Vec<_> = stabilizer_generator_kinds(&j).iter().map(|k| make_generator(&j, k).unwrap()).collect();
    let start = b_vec(&j, 1, OctIndex::M1);
    let fast = orbit_bfs(&j, &gens, &start, &BfsOptions::default()).unwrap();
    let ops = bfs::with_inverses(&gens);
    let mut seen = std::collections::HashSet::new();
    let mut queue = vec![canonical_point(&j, &start).unwrap()];
    seen.insert(queue[0]);
    while let Some(p) = queue.pop() {
        for g in &ops {
            let n = canonical_point(&j, &g.apply(&p.vector(&j))).unwrap();
            if seen.insert(n) {
                queue.push(n);
            }
        }
    }
    assert_eq!(seen.len(), fast.points.len());
    assert_eq!(seen.len(), 4590);
}

#[test]
fn annihilator_counts_at_q2() {
    let j = alb(2);
    let o = j.oct();
    let iso: Vec<_> = o.isotropic().collect();
    assert_eq!(iso.len(), 135);
    for a in &iso {
        let bs: Vec<_> = iso.iter().filter(|b| o.mul(a, b).is_zero()).collect();
        assert_eq!(bs.len(), 15);
        for b in bs {
            let cs = o.all().filter(|c| !c.is_zero() && o.mul(b, c).is_zero() && o.mul(c, a).is_zero()).count();
            assert_eq!(cs, 7);
        }
    }
}
