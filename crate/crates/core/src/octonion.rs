//! Split octonions over a finite field.
//!
//! The basis is `{e_i : i in ±I}` with `I = {0, 1, ω, ω̄}`, stored in the fixed
//! ordinal order `(+0, +1, +ω, +ω̄, −0, −1, −ω, −ω̄)`. The multiplication table
//! is generated from three defining relations, closed under negating every
//! suffix and under multiplying every suffix by `ω`; every other basis product
//! is zero.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// One of the eight basis suffixes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OctIndex(u8);

impl OctIndex {
    pub const P0: OctIndex = OctIndex(0);
    pub const P1: OctIndex = OctIndex(1);
    pub const PW: OctIndex = OctIndex(2);
    pub const PWB: OctIndex = OctIndex(3);
    pub const M0: OctIndex = OctIndex(4);
    pub const M1: OctIndex = OctIndex(5);
    pub const MW: OctIndex = OctIndex(6);
    pub const MWB: OctIndex = OctIndex(7);

    pub const ALL: [OctIndex; 8] = [
        Self::P0,
        Self::P1,
        Self::PW,
        Self::PWB,
        Self::M0,
        Self::M1,
        Self::MW,
        Self::MWB,
    ];

    /// The positive half `I`.
    pub const POSITIVE: [OctIndex; 4] = [Self::P0, Self::P1, Self::PW, Self::PWB];

    pub fn new(ordinal: usize) -> Self {
        assert!(ordinal < 8, "octonion index out of range");
        OctIndex(ordinal as u8)
    }

    #[inline]
    pub fn ordinal(self) -> usize {
        self.0 as usize
    }

    /// `i -> −i`.
    #[inline]
    pub fn negate(self) -> Self {
        OctIndex((self.0 + 4) % 8)
    }

    /// Multiplies the suffix by `ω`: `1 -> ω -> ω̄ -> 1`, fixing `0`.
    pub fn times_omega(self) -> Self {
        let sign = self.0 & 4;
        let base = self.0 & 3;
        let rotated = if base == 0 { 0 } else { base % 3 + 1 };
        OctIndex(sign | rotated)
    }

    pub fn is_positive(self) -> bool {
        self.0 < 4
    }

    pub fn symbol(self) -> &'static str {
        ["+0", "+1", "+w", "+wb", "-0", "-1", "-w", "-wb"][self.ordinal()]
    }
}

impl fmt::Display for OctIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Nonzero basis product `e_left * e_right = sign * e_out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisProduct {
    pub left: OctIndex,
    pub right: OctIndex,
    pub negative: bool,
    pub out: OctIndex,
}

/// The 8×8 basis table: `table[i][j] = Some((negative, k))` when
/// `e_i e_j = ±e_k`.
pub type MulTable = [[Option<(bool, OctIndex)>; 8]; 8];

fn generate_table() -> MulTable {
    use OctIndex as I;
    let seeds = [
        (I::P1, I::PW, false, I::MWB),
        (I::PW, I::P1, true, I::MWB),
        (I::P1, I::P0, false, I::P1),
        (I::M0, I::P1, false, I::P1),
        (I::M1, I::P1, true, I::P0),
        (I::P0, I::P0, false, I::P0),
    ];
    let mut table: MulTable = [[None; 8]; 8];
    let mut pending: Vec<(I, I, bool, I)> = seeds.to_vec();
    while let Some((i, j, neg, k)) = pending.pop() {
        match table[i.ordinal()][j.ordinal()] {
            Some(existing) => {
                assert_eq!(existing, (neg, k), "inconsistent closure at e{i} e{j}");
                continue;
            }
            None => table[i.ordinal()][j.ordinal()] = Some((neg, k)),
        }
        pending.push((i.negate(), j.negate(), neg, k.negate()));
        pending.push((i.times_omega(), j.times_omega(), neg, k.times_omega()));
    }
    table
}

/// The frozen multiplication table.
pub fn mul_table() -> &'static MulTable {
    static TABLE: OnceLock<MulTable> = OnceLock::new();
    TABLE.get_or_init(generate_table)
}

fn products() -> &'static [BasisProduct] {
    static LIST: OnceLock<Vec<BasisProduct>> = OnceLock::new();
    LIST.get_or_init(|| {
        let table = mul_table();
        let mut out = Vec::new();
        for left in OctIndex::ALL {
            for right in OctIndex::ALL {
                if let Some((negative, k)) = table[left.ordinal()][right.ordinal()] {
                    out.push(BasisProduct {
                        left,
                        right,
                        negative,
                        out: k,
                    });
                }
            }
        }
        out
    })
}

/// Every nonzero basis product, in row-major order.
pub fn basis_products() -> &'static [BasisProduct] {
    products()
}

/// Coefficients over the canonical basis order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Octonion(pub [Fe; 8]);

impl Octonion {
    pub const ZERO: Octonion = Octonion([Fe::ZERO; 8]);

    #[inline]
    pub fn coeff(&self, i: OctIndex) -> Fe {
        self.0[i.ordinal()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

/// Octonion arithmetic over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonions {
    field: Field,
}

impl Octonions {
    pub fn new(field: &Field) -> Self {
        Octonions {
            field: field.clone(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn zero(&self) -> Octonion {
        Octonion::ZERO
    }

    /// `e_0 + e_{−0}`.
    pub fn one(&self) -> Octonion {
        self.scalar(Fe::ONE)
    }

    /// `λ (e_0 + e_{−0})`.
    pub fn scalar(&self, lambda: Fe) -> Octonion {
        let mut c = [Fe::ZERO; 8];
        c[0] = lambda;
        c[4] = lambda;
        Octonion(c)
    }

    pub fn basis(&self, i: OctIndex) -> Octonion {
        self.scaled_basis(Fe::ONE, i)
    }

    pub fn scaled_basis(&self, lambda: Fe, i: OctIndex) -> Octonion {
        let mut c = [Fe::ZERO; 8];
        c[i.ordinal()] = lambda;
        Octonion(c)
    }

    /// Returns `Some(λ)` when `x = λ·1`.
    pub fn as_scalar(&self, x: &Octonion) -> Option<Fe> {
        let c = &x.0;
        if c[0] == c[4] && c[1..4].iter().chain(&c[5..8]).all(|v| v.is_zero()) {
            Some(c[0])
        } else {
            None
        }
    }

    #[inline]
    pub fn add(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let f = &self.field;
        Octonion(std::array::from_fn(|i| f.add(x.0[i], y.0[i])))
    }

    #[inline]
    pub fn sub(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let f = &self.field;
        Octonion(std::array::from_fn(|i| f.sub(x.0[i], y.0[i])))
    }

    #[inline]
    pub fn neg(&self, x: &Octonion) -> Octonion {
        let f = &self.field;
        Octonion(std::array::from_fn(|i| f.neg(x.0[i])))
    }

    #[inline]
    pub fn scale(&self, lambda: Fe, x: &Octonion) -> Octonion {
        let f = &self.field;
        Octonion(std::array::from_fn(|i| f.mul(lambda, x.0[i])))
    }

    /// Bilinear extension of the basis table.
    #[inline]
    pub fn mul(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let f = &self.field;
        let mut out = [Fe::ZERO; 8];
        for bp in products() {
            let a = x.0[bp.left.ordinal()];
            let b = y.0[bp.right.ordinal()];
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let t = f.mul(a, b);
            let slot = &mut out[bp.out.ordinal()];
            *slot = if bp.negative { f.sub(*slot, t) } else { f.add(*slot, t) };
        }
        Octonion(out)
    }

    /// `e_0 <-> e_{−0}`, `e_i -> −e_i` otherwise.
    #[inline]
    pub fn conj(&self, x: &Octonion) -> Octonion {
        let f = &self.field;
        let c = &x.0;
        Octonion([
            c[4],
            f.neg(c[1]),
            f.neg(c[2]),
            f.neg(c[3]),
            c[0],
            f.neg(c[5]),
            f.neg(c[6]),
            f.neg(c[7]),
        ])
    }

    #[inline]
    pub fn trace(&self, x: &Octonion) -> Fe {
        self.field.add(x.0[0], x.0[4])
    }

    /// `N(x) = sum over i in I of λ_i λ_{−i}`.
    #[inline]
    pub fn norm(&self, x: &Octonion) -> Fe {
        let f = &self.field;
        let c = &x.0;
        let s = f.add(f.mul(c[0], c[4]), f.mul(c[1], c[5]));
        f.add(s, f.add(f.mul(c[2], c[6]), f.mul(c[3], c[7])))
    }

    /// Polar form `B(x,y) = N(x+y) − N(x) − N(y)`.
    pub fn bilinear(&self, x: &Octonion, y: &Octonion) -> Fe {
        let f = &self.field;
        f.sub(
            f.sub(self.norm(&self.add(x, y)), self.norm(x)),
            self.norm(y),
        )
    }

    /// `x'`: `conj_q` applied to every coefficient.
    pub fn prime(&self, x: &Octonion) -> Result<Octonion> {
        let f = &self.field;
        if !f.is_quadratic() {
            return Err(Error::NotQuadratic);
        }
        Ok(Octonion(std::array::from_fn(|i| f.conj_unchecked(x.0[i]))))
    }

    /// `x* = conj(x')`.
    pub fn star(&self, x: &Octonion) -> Result<Octonion> {
        Ok(self.conj(&self.prime(x)?))
    }

    /// `Tr(e_i e_j e_k)`, independent of bracketing.
    pub fn basis_triple_trace(&self, i: OctIndex, j: OctIndex, k: OctIndex) -> Fe {
        let x = self.mul(&self.mul(&self.basis(i), &self.basis(j)), &self.basis(k));
        self.trace(&x)
    }

    /// Octonion from its packed coordinate index `sum c_i q^i` (`c_0` first).
    pub fn from_index(&self, mut n: u64) -> Octonion {
        let q = self.field.order() as u64;
        Octonion(std::array::from_fn(|_| {
            let c = (n % q) as u16;
            n /= q;
            Fe(c)
        }))
    }

    /// Number of octonions, `q^8`.
    pub fn count(&self) -> u64 {
        (self.field.order() as u64).pow(8)
    }

    /// Every octonion (feasible for small `q`).
    pub fn all(&self) -> impl Iterator<Item = Octonion> + '_ {
        (0..self.count()).map(move |n| self.from_index(n))
    }

    /// Streams each nonzero octonion of norm zero exactly once.
    ///
    /// The positive coordinates are chosen freely; when one of them is nonzero
    /// the first such pivot determines its negative partner from the other
    /// three negative coordinates.
    pub fn isotropic(&self) -> IsotropicIter<'_> {
        IsotropicIter::new(self)
    }

    pub fn to_json(&self, x: &Octonion) -> serde_json::Value {
        let coeffs: Vec<Vec<u32>> = x.0.iter().map(|&c| self.field.coeffs(c)).collect();
        serde_json::to_value(OctonionJson { coeffs }).expect("plain struct serializes")
    }

    pub fn from_json(&self, value: &serde_json::Value) -> Result<Octonion> {
        let raw: OctonionJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        self.from_coeff_lists(&raw.coeffs)
    }

    pub(crate) fn from_coeff_lists(&self, lists: &[Vec<u32>]) -> Result<Octonion> {
        if lists.len() != 8 {
            return Err(Error::Json("an octonion has 8 coefficients".into()));
        }
        let mut out = [Fe::ZERO; 8];
        for (slot, list) in out.iter_mut().zip(lists) {
            *slot = self.field.element(list)?;
        }
        Ok(Octonion(out))
    }
}

#[derive(Serialize, Deserialize)]
struct OctonionJson {
    coeffs: Vec<Vec<u32>>,
}

/// Iterator behind [`Octonions::isotropic`].
pub struct IsotropicIter<'a> {
    alg: &'a Octonions,
    q: u64,
    /// Index over the positive coordinates (`q^4` values).
    pos: u64,
    /// Index over the free negative coordinates of the current block.
    inner: u64,
}

impl<'a> IsotropicIter<'a> {
    fn new(alg: &'a Octonions) -> Self {
        IsotropicIter {
            alg,
            q: alg.field.order() as u64,
            pos: 0,
            inner: 1,
        }
    }

    fn digits(&self, mut n: u64, len: usize) -> Vec<Fe> {
        (0..len)
            .map(|_| {
                let d = Fe((n % self.q) as u16);
                n /= self.q;
                d
            })
            .collect()
    }
}

impl Iterator for IsotropicIter<'_> {
    type Item = Octonion;

    fn next(&mut self) -> Option<Octonion> {
        let q4 = self.q.pow(4);
        let f = &self.alg.field;
        loop {
            if self.pos >= q4 {
                return None;
            }
            let positive = self.digits(self.pos, 4);
            let block = if self.pos == 0 { q4 } else { self.q.pow(3) };
            if self.inner >= block {
                self.pos += 1;
                self.inner = 0;
                continue;
            }
            let n = self.inner;
            self.inner += 1;
            let mut c = [Fe::ZERO; 8];
            c[..4].copy_from_slice(&positive);
            if self.pos == 0 {
                // all positive coordinates vanish; n >= 1 picks a nonzero negative half
                let neg = self.digits(n, 4);
                c[4..].copy_from_slice(&neg);
            } else {
                let pivot = positive.iter().position(|x| !x.is_zero()).unwrap();
                let free = self.digits(n, 3);
                let mut it = free.into_iter();
                let mut acc = Fe::ZERO;
                for slot in 0..4 {
                    if slot == pivot {
                        continue;
                    }
                    let v = it.next().unwrap();
                    c[4 + slot] = v;
                    acc = f.add(acc, f.mul(positive[slot], v));
                }
                c[4 + pivot] = f.neg(f.mul(acc, f.inv(positive[pivot]).unwrap()));
            }
            return Some(Octonion(c));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn alg(q: u32) -> Octonions {
        Octonions::new(&Field::with_order(q).unwrap())
    }

    /// Hand-transcribed right multiplications `x e_j`, read off as
    /// `(left, negative, out)` for each column `j`.
    fn expected_table() -> MulTable {
        use OctIndex as I;
        let columns: [(I, [(I, bool, I); 4]); 8] = [
            (I::P0, [(I::P0, false, I::P0), (I::P1, false, I::P1), (I::PW, false, I::PW), (I::PWB, false, I::PWB)]),
            (I::P1, [(I::M1, true, I::P0), (I::M0, false, I::P1), (I::PWB, false, I::MW), (I::PW, true, I::MWB)]),
            (I::PW, [(I::MW, true, I::P0), (I::PWB, true, I::M1), (I::M0, false, I::PW), (I::P1, false, I::MWB)]),
            (I::PWB, [(I::MWB, true, I::P0), (I::PW, false, I::M1), (I::P1, true, I::MW), (I::M0, false, I::PWB)]),
            (I::M0, [(I::M0, false, I::M0), (I::M1, false, I::M1), (I::MW, false, I::MW), (I::MWB, false, I::MWB)]),
            (I::M1, [(I::P1, true, I::M0), (I::P0, false, I::M1), (I::MWB, false, I::PW), (I::MW, true, I::PWB)]),
            (I::MW, [(I::PW, true, I::M0), (I::MWB, true, I::P1), (I::P0, false, I::MW), (I::M1, false, I::PWB)]),
            (I::MWB, [(I::PWB, true, I::M0), (I::MW, false, I::P1), (I::M1, true, I::PW), (I::P0, false, I::MWB)]),
        ];
        let mut t: MulTable = [[None; 8]; 8];
        for (right, entries) in columns {
            for (left, neg, out) in entries {
                t[left.ordinal()][right.ordinal()] = Some((neg, out));
            }
        }
        t
    }

    #[test]
    fn generated_table_matches_fixture() {
        assert_eq!(mul_table(), &expected_table());
        assert_eq!(basis_products().len(), 32);
    }

    #[test]
    fn index_symmetries() {
        for i in OctIndex::ALL {
            assert_eq!(i.negate().negate(), i);
            assert_eq!(i.times_omega().times_omega().times_omega(), i);
        }
        assert_eq!(OctIndex::P0.times_omega(), OctIndex::P0);
        assert_eq!(OctIndex::M1.times_omega(), OctIndex::MW);
        assert_eq!(OctIndex::PWB.times_omega(), OctIndex::P1);
    }

    #[test]
    fn basis_examples() {
        let o = alg(3);
        let e = |i| o.basis(i);
        use OctIndex as I;
        assert_eq!(o.mul(&e(I::P1), &e(I::PW)), e(I::MWB));
        assert_eq!(o.mul(&e(I::P0), &e(I::P0)), e(I::P0));
        assert_eq!(o.mul(&e(I::P0), &e(I::M0)), o.zero());
        assert_eq!(o.mul(&e(I::PW), &e(I::PWB)), e(I::M1));
        assert_eq!(o.conj(&e(I::P0)), e(I::M0));
        assert_eq!(o.conj(&e(I::P1)), o.neg(&e(I::P1)));
        assert_eq!(o.conj(&o.one()), o.one());
        for i in OctIndex::ALL {
            assert_eq!(o.mul(&o.one(), &e(i)), e(i));
            assert_eq!(o.mul(&e(i), &o.one()), e(i));
        }
    }

    #[test]
    fn forms_examples() {
        let o = alg(5);
        use OctIndex as I;
        assert_eq!(o.trace(&o.basis(I::P0)), Fe::ONE);
        assert_eq!(o.norm(&o.basis(I::P1)), Fe::ZERO);
        assert_eq!(o.bilinear(&o.basis(I::P1), &o.basis(I::M1)), Fe::ONE);
    }

    #[test]
    fn triple_trace_sign_pattern() {
        // +1 on rotations of multiples of (0,0,0) and (1,ω̄,ω);
        // −1 on rotations of multiples of (1,ω,ω̄) and (1,0,−1).
        let o = alg(5);
        let f = o.field().clone();
        use OctIndex as I;
        let multiples = |t: [I; 3]| {
            let mut out = Vec::new();
            let mut cur = t;
            for _ in 0..3 {
                out.push(cur);
                out.push(cur.map(|i| i.negate()));
                cur = cur.map(|i| i.times_omega());
            }
            out
        };
        let rotations = |t: [I; 3]| [t, [t[1], t[2], t[0]], [t[2], t[0], t[1]]];
        let mut signed = std::collections::HashMap::new();
        for (seed, val) in [
            ([I::P0, I::P0, I::P0], f.one()),
            ([I::P1, I::PWB, I::PW], f.one()),
            ([I::P1, I::PW, I::PWB], f.neg(f.one())),
            ([I::P1, I::P0, I::M1], f.neg(f.one())),
        ] {
            for m in multiples(seed) {
                for r in rotations(m) {
                    signed.insert(r, val);
                }
            }
        }
        assert_eq!(signed.len(), 32);
        for i in OctIndex::ALL {
            for j in OctIndex::ALL {
                for k in OctIndex::ALL {
                    let expected = signed.get(&[i, j, k]).copied().unwrap_or(Fe::ZERO);
                    assert_eq!(o.basis_triple_trace(i, j, k), expected, "{i} {j} {k}");
                }
            }
        }
    }

    #[test]
    fn prime_and_star() {
        let f4 = Field::new(2, 2).unwrap();
        let o = Octonions::new(&f4);
        let t = f4.element(&[0, 1]).unwrap();
        let tp = f4.element(&[1, 1]).unwrap();
        assert_eq!(
            o.prime(&o.scaled_basis(t, OctIndex::P1)).unwrap(),
            o.scaled_basis(tp, OctIndex::P1)
        );
        assert_eq!(o.prime(&o.basis(OctIndex::P1)).unwrap(), o.basis(OctIndex::P1));
        assert_eq!(o.star(&o.basis(OctIndex::P0)).unwrap(), o.basis(OctIndex::M0));
        assert!(matches!(alg(3).prime(&Octonion::ZERO), Err(Error::NotQuadratic)));
    }

    #[test]
    fn isotropic_stream_matches_brute_force() {
        for q in [2u32, 3] {
            let o = alg(q);
            let stream: Vec<Octonion> = o.isotropic().collect();
            let set: HashSet<Octonion> = stream.iter().copied().collect();
            assert_eq!(set.len(), stream.len(), "duplicates at q={q}");
            let brute: HashSet<Octonion> = o
                .all()
                .filter(|x| !x.is_zero() && o.norm(x).is_zero())
                .collect();
            assert_eq!(set, brute);
            let q = q as usize;
            assert_eq!(stream.len(), (q.pow(4) - 1) * (q.pow(3) + 1));
        }
        assert_eq!(alg(2).isotropic().count(), 135);
        assert_eq!(alg(3).isotropic().count(), 2240);
        let o9 = alg(9);
        assert_eq!(o9.isotropic().count(), (9usize.pow(4) - 1) * (9usize.pow(3) + 1));
        let basis: HashSet<Octonion> = OctIndex::ALL.iter().map(|&i| o9.basis(i)).collect();
        assert_eq!(o9.isotropic().filter(|x| basis.contains(x)).count(), 8);
    }

    #[test]
    fn json_round_trip() {
        let f9 = Field::new(3, 2).unwrap();
        let o = Octonions::new(&f9);
        let x = o.add(&o.scaled_basis(f9.element(&[1, 2]).unwrap(), OctIndex::MW), &o.one());
        let json = o.to_json(&x);
        assert_eq!(o.from_json(&json).unwrap(), x);
        assert!(o.from_json(&serde_json::json!({"coeffs": [[0]]})).is_err());
    }
}
