use proptest::prelude::*;

use albert_forge::orbits::{canonical_point, canonical_vector};
use albert_forge::{Albert, AlbertVector, Color, Fe, Field, FieldElement, Octonion};

const ORDERS: [u32; 6] = [2, 3, 4, 5, 8, 9];

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(ORDERS.to_vec()).prop_map(|q| Field::with_order(q).unwrap())
}

fn elem(f: &Field) -> impl Strategy<Value = Fe> {
    (0..f.order() as u16).prop_map(Fe)
}

fn oct(f: &Field) -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(elem(f)).prop_map(Octonion)
}

fn vector(f: &Field) -> impl Strategy<Value = AlbertVector> {
    (prop::array::uniform3(elem(f)), prop::array::uniform3(oct(f))).prop_map(|(diag, off)| AlbertVector { diag, off })
}

fn with_vectors(n: usize) -> impl Strategy<Value = (Field, Vec<AlbertVector>)> {
    field().prop_flat_map(move |f| {
        let v = prop::collection::vec(vector(&f), n);
        (Just(f), v)
    })
}

fn with_scalars_and_octs() -> impl Strategy<Value = (Field, Vec<Fe>, Vec<Octonion>)> {
    field().prop_flat_map(|f| {
        let s = prop::collection::vec(elem(&f), 3);
        let o = prop::collection::vec(oct(&f), 3);
        (Just(f), s, o)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms((f, s, _) in with_scalars_and_octs()) {
        let (a, b, c) = (s[0], s[1], s[2]);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
        }
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
        let e = FieldElement::new(&f, a);
        prop_assert_eq!(FieldElement::from_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn octonion_composition((f, s, o) in with_scalars_and_octs()) {
        let alg = albert_forge::Octonions::new(&f);
        let (x, y) = (&o[0], &o[1]);
        prop_assert_eq!(alg.norm(&alg.mul(x, y)), f.mul(alg.norm(x), alg.norm(y)));
        prop_assert_eq!(alg.conj(&alg.mul(x, y)), alg.mul(&alg.conj(y), &alg.conj(x)));
        prop_assert_eq!(alg.norm(&alg.scale(s[0], x)), f.mul(f.mul(s[0], s[0]), alg.norm(x)));
        prop_assert_eq!(alg.from_json(&alg.to_json(x)).unwrap(), *x);
    }

    #[test]
    fn packing_round_trips((f, v) in with_vectors(1)) {
        let alb = Albert::new(&f);
        let x = v[0];
        prop_assert_eq!(alb.unpack(alb.pack(&x)), x);
        prop_assert_eq!(alb.unpack_bytes(&alb.pack_bytes(&x)).unwrap(), x);
        prop_assert_eq!(alb.from_json(&alb.to_json(&x)).unwrap(), x);
    }

    #[test]
    fn canonical_form_is_idempotent_and_projective((f, v) in with_vectors(1), k in 1u16..1000) {
        let alb = Albert::new(&f);
        let x = v[0];
        prop_assume!(!x.is_zero());
        let c = canonical_vector(&alb, &x).unwrap();
        prop_assert_eq!(canonical_vector(&alb, &c).unwrap(), c);
        let lambda = Fe(1 + k % (f.order() as u16 - 1));
        prop_assert_eq!(canonical_point(&alb, &x).unwrap(), canonical_point(&alb, &alb.scale(lambda, &x)).unwrap());
    }

    #[test]
    fn det_is_cubic_and_color_is_projective((f, v) in with_vectors(1), k in 1u16..1000) {
        let alb = Albert::new(&f);
        let x = v[0];
        prop_assume!(!x.is_zero());
        let lambda = Fe(1 + k % (f.order() as u16 - 1));
        let y = alb.scale(lambda, &x);
        prop_assert_eq!(alb.det(&y), f.mul(f.pow(lambda, 3), alb.det(&x)));
        prop_assert_eq!(alb.classify_color(&y).unwrap(), alb.classify_color(&x).unwrap());
        prop_assert_eq!(alb.det(&x), alb.det_from_terms(&x));
    }

    #[test]
    fn trilinear_form_is_symmetric((f, v) in with_vectors(3)) {
        let alb = Albert::new(&f);
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let t = alb.trilinear(x, y, z);
        prop_assert_eq!(t, alb.trilinear(y, x, z));
        prop_assert_eq!(t, alb.trilinear(x, z, y));
        prop_assert_eq!(t, alb.trilinear(z, y, x));
    }

    #[test]
    fn rank_one_matrices_are_white((f, s, o) in with_scalars_and_octs()) {
        let alb = Albert::new(&f);
        let alg = alb.oct();
        prop_assume!(!s[0].is_zero());
        let (c, x, y) = (s[0], &o[0], &o[1]);
        let w = alb.from_parts(
            [f.mul(c, alg.norm(x)), f.mul(c, alg.norm(y)), c],
            [alg.scale(c, &alg.conj(y)), alg.scale(c, x), alg.scale(c, &alg.mul(&alg.conj(x), y))],
        );
        prop_assert_eq!(alb.classify_color(&w).unwrap(), Color::White);
        prop_assert!(alb.linear_form_at(&w).iter().all(|c| c.is_zero()));
    }
}
