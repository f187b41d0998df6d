//! Integer arithmetic for octonions over a prime field, used by the
//! high-volume enumeration loops.

#[cfg(test)]
use crate::albert::AlbertVector;
use crate::gf::Field;
#[cfg(test)]
use crate::gf::Fe;
use crate::octonion::{basis_products, Octonion};

pub(crate) type V8 = [i32; 8];

pub(crate) struct PrimeOct {
    p: i32,
    /// `(left, right, out, negative)` for the 32 nonzero basis products.
    prods: Vec<(usize, usize, usize, bool)>,
}

impl PrimeOct {
    /// `None` unless the field is prime.
    pub(crate) fn new(f: &Field) -> Option<Self> {
        if f.degree() != 1 {
            return None;
        }
        let prods = basis_products()
            .iter()
            .map(|b| (b.left.ordinal(), b.right.ordinal(), b.out.ordinal(), b.negative))
            .collect();
        Some(PrimeOct { p: f.characteristic() as i32, prods })
    }

    #[inline]
    pub(crate) fn mul(&self, x: &V8, y: &V8) -> V8 {
        let mut out = [0i32; 8];
        for &(l, r, o, neg) in &self.prods {
            let t = x[l] * y[r];
            out[o] += if neg { -t } else { t };
        }
        out.map(|v| v.rem_euclid(self.p))
    }

    #[inline]
    pub(crate) fn norm(&self, x: &V8) -> i32 {
        (x[0] * x[4] + x[1] * x[5] + x[2] * x[6] + x[3] * x[7]).rem_euclid(self.p)
    }

    #[inline]
    pub(crate) fn conj(&self, x: &V8) -> V8 {
        let p = self.p;
        let n = |v: i32| (p - v) % p;
        [x[4], n(x[1]), n(x[2]), n(x[3]), x[0], n(x[5]), n(x[6]), n(x[7])]
    }

    #[inline]
    pub(crate) fn scale(&self, c: i32, x: &V8) -> V8 {
        x.map(|v| (c * v) % self.p)
    }

    /// `c v̄ᵀv` for `v = (x, y, 1)`.
    pub(crate) fn rank_one(&self, c: i32, x: &V8, y: &V8) -> ([i32; 3], [V8; 3]) {
        let p = self.p;
        (
            [(c * self.norm(x)) % p, (c * self.norm(y)) % p, c],
            [
                self.scale(c, &self.conj(y)),
                self.scale(c, x),
                self.scale(c, &self.mul(&self.conj(x), y)),
            ],
        )
    }

    /// The six white equations.
    pub(crate) fn white_equations(&self, d: &[i32; 3], off: &[V8; 3]) -> bool {
        let p = self.p;
        let [a, b, c] = *d;
        let [aa, bb, cc] = off;
        (b * c) % p == self.norm(aa)
            && (a * c) % p == self.norm(bb)
            && (a * b) % p == self.norm(cc)
            && self.mul(bb, cc) == self.scale(a, &self.conj(aa))
            && self.mul(cc, aa) == self.scale(b, &self.conj(bb))
            && self.mul(aa, bb) == self.scale(c, &self.conj(cc))
    }

    pub(crate) fn from_oct(x: &Octonion) -> V8 {
        x.0.map(|c| c.0 as i32)
    }

    #[cfg(test)]
    pub(crate) fn to_vector(d: &[i32; 3], off: &[V8; 3]) -> AlbertVector {
        let oc = |v: &V8| Octonion(v.map(|c| Fe(c as u16)));
        AlbertVector {
            diag: d.map(|c| Fe(c as u16)),
            off: [oc(&off[0]), oc(&off[1]), oc(&off[2])],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::albert::Albert;
    use crate::octonion::Octonions;
    use rand::{Rng, SeedableRng};

    #[test]
    fn agrees_with_generic_arithmetic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for p in [2u32, 3, 5, 7] {
            let f = Field::new(p, 1).unwrap();
            let o = Octonions::new(&f);
            let alb = Albert::new(&f);
            let po = PrimeOct::new(&f).unwrap();
            for _ in 0..2000 {
                let x = o.from_index(rng.gen_range(0..o.count()));
                let y = o.from_index(rng.gen_range(0..o.count()));
                let (vx, vy) = (PrimeOct::from_oct(&x), PrimeOct::from_oct(&y));
                assert_eq!(po.mul(&vx, &vy), PrimeOct::from_oct(&o.mul(&x, &y)));
                assert_eq!(po.norm(&vx), o.norm(&x).0 as i32);
                assert_eq!(po.conj(&vx), PrimeOct::from_oct(&o.conj(&x)));
                let c = rng.gen_range(1..p as i32);
                let (d, off) = po.rank_one(c, &vx, &vy);
                let v = PrimeOct::to_vector(&d, &off);
                assert!(po.white_equations(&d, &off));
                assert!(alb.is_white(&v));
                let mut bent = v;
                bent.diag[rng.gen_range(0..3)] = Fe(rng.gen_range(0..p as u16));
                let bd = bent.diag.map(|c| c.0 as i32);
                assert_eq!(po.white_equations(&bd, &off), alb.white_equations(&bent));
                let r = alb.random(&mut rng);
                let rd = r.diag.map(|c| c.0 as i32);
                let roff = r.off.map(|x| PrimeOct::from_oct(&x));
                assert_eq!(po.white_equations(&rd, &roff), alb.white_equations(&r));
            }
        }
        assert!(PrimeOct::new(&Field::with_order(4).unwrap()).is_none());
    }
}
