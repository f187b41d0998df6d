//! Small finite fields `F_{p^k}` with `p^k <= 1024`.
//!
//! A [`Field`] is an arithmetic context holding precomputed addition and
//! multiplication tables; elements are packed into a single [`Fe`] word and
//! every operation goes through the context. [`FieldElement`] pairs a value
//! with its field for the checked, self-describing API used at serialization
//! boundaries.
//!
//! An element with polynomial coefficients `c_0 + c_1 t + ... + c_{k-1} t^{k-1}`
//! (constant term first) is packed as the integer `sum c_i p^i`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1024;

/// Characteristic, degree and defining polynomial of a finite field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    /// Monic irreducible polynomial of degree `k`, constant term first
    /// (length `k + 1`, last entry 1).
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// Returns the spec whose modulus is the lexicographically least monic
    /// irreducible polynomial of degree `k` over `F_p`, comparing coefficients
    /// from the constant term upwards.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::FieldTooLarge { p, k });
        }
        let order = (p as u64).checked_pow(k).unwrap_or(u64::MAX);
        if order > MAX_ORDER as u64 {
            return Err(Error::FieldTooLarge { p, k });
        }
        let k_us = k as usize;
        // Counter whose most significant digit is c_0, so that increasing the
        // counter walks the candidates in low-degree-first lexicographic order.
        for n in 0..order as u32 {
            let mut digits = vec![0u32; k_us];
            let mut rest = n;
            for slot in (0..k_us).rev() {
                digits[slot] = rest % p;
                rest /= p;
            }
            let mut poly = digits;
            poly.push(1);
            if poly_is_irreducible(&poly, p) {
                return Ok(FieldSpec { p, k, modulus: poly });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    /// Spec of the prime field `F_p`.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
}

/// Splits a prime power `q` into `(p, k)`.
pub fn prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q % d == 0).unwrap();
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, k))
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// Dense polynomials over F_p, constant term first, no trailing zeros except
// for the zero polynomial (empty vec).
fn poly_trim(mut f: Vec<u32>) -> Vec<u32> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn poly_rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = poly_trim(f.to_vec());
    let g = poly_trim(g.to_vec());
    let lead_inv = inv_mod(*g.last().unwrap(), p);
    while r.len() >= g.len() {
        let shift = r.len() - g.len();
        let factor = r.last().unwrap() * lead_inv % p;
        for (i, &gc) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - factor * gc % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn poly_is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for n in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut rest = n;
            for _ in 0..d {
                g.push(rest % p);
                rest /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// A packed field element; meaningful only together with its [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldInner {
    spec: FieldSpec,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
    /// `x -> x^p`, used for Frobenius powers and square roots.
    frob: Vec<u16>,
    /// `x -> x^{sqrt(order)}` when the degree is even.
    conj: Option<Vec<u16>>,
}

/// Arithmetic context for one finite field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.spec.p, self.0.spec.k)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(p: u32, k: u32) -> Result<Self> {
        Ok(Self::from_spec(FieldSpec::new(p, k)?))
    }

    /// The field with `q` elements.
    pub fn with_order(q: u32) -> Result<Self> {
        let (p, k) = prime_power(q)?;
        Self::new(p, k)
    }

    pub fn from_spec(spec: FieldSpec) -> Self {
        let p = spec.p as usize;
        let k = spec.k as usize;
        let q = spec.order() as usize;
        let digits = |mut n: usize| -> Vec<u32> {
            let mut out = vec![0u32; k];
            for d in out.iter_mut() {
                *d = (n % p) as u32;
                n /= p;
            }
            out
        };
        let pack = |coeffs: &[u32]| -> u16 {
            coeffs
                .iter()
                .rev()
                .fold(0usize, |acc, &c| acc * p + c as usize) as u16
        };
        let all: Vec<Vec<u32>> = (0..q).map(digits).collect();

        let mut add = vec![0u16; q * q];
        let mut neg = vec![0u16; q];
        for x in 0..q {
            let neg_digits: Vec<u32> = all[x].iter().map(|&c| (p as u32 - c) % p as u32).collect();
            neg[x] = pack(&neg_digits);
            for y in 0..q {
                let s: Vec<u32> = all[x]
                    .iter()
                    .zip(&all[y])
                    .map(|(&a, &b)| (a + b) % p as u32)
                    .collect();
                add[x * q + y] = pack(&s);
            }
        }

        let mut mul = vec![0u16; q * q];
        for x in 0..q {
            for y in x..q {
                let mut prod = vec![0u32; 2 * k - 1];
                for (i, &a) in all[x].iter().enumerate() {
                    if a == 0 {
                        continue;
                    }
                    for (j, &b) in all[y].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p as u32;
                    }
                }
                let mut r = poly_rem(&prod, &spec.modulus, p as u32);
                r.resize(k, 0);
                let v = pack(&r);
                mul[x * q + y] = v;
                mul[y * q + x] = v;
            }
        }

        let mut inv = vec![0u16; q];
        for x in 1..q {
            let y = (1..q).find(|&y| mul[x * q + y] == 1).expect("field has inverses");
            inv[x] = y as u16;
        }

        let pow = |x: usize, e: usize| -> u16 {
            let mut acc = 1usize;
            for _ in 0..e {
                acc = mul[acc * q + x] as usize;
            }
            acc as u16
        };
        let frob: Vec<u16> = (0..q).map(|x| pow(x, p)).collect();
        let conj = if k % 2 == 0 {
            let half = p.pow((k / 2) as u32);
            Some((0..q).map(|x| pow(x, half)).collect())
        } else {
            None
        };

        Field(Arc::new(FieldInner {
            spec,
            q,
            add,
            mul,
            neg,
            inv,
            frob,
            conj,
        }))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    /// Number of elements.
    #[inline]
    pub fn order(&self) -> usize {
        self.0.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.spec.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.spec.k
    }

    /// Whether this field is a quadratic extension `F_{q^2}` (even degree).
    pub fn is_quadratic(&self) -> bool {
        self.0.conj.is_some()
    }

    /// Order of the fixed field of `conj_q`.
    pub fn sub_order(&self) -> Result<u32> {
        if !self.is_quadratic() {
            return Err(Error::NotQuadratic);
        }
        Ok(self.0.spec.p.pow(self.0.spec.k / 2))
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// Image of an integer under `Z -> F`.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.0.spec.p as i64;
        Fe(n.rem_euclid(p) as u16)
    }

    /// Builds an element from its coefficient list (constant term first).
    pub fn element(&self, coeffs: &[u32]) -> Result<Fe> {
        let p = self.0.spec.p;
        if coeffs.len() > self.0.spec.k as usize || coeffs.iter().any(|&c| c >= p) {
            return Err(Error::BadCoefficients);
        }
        let v = coeffs
            .iter()
            .rev()
            .fold(0u32, |acc, &c| acc * p + c);
        Ok(Fe(v as u16))
    }

    /// Coefficient list of `x`, constant term first, always of length `k`.
    pub fn coeffs(&self, x: Fe) -> Vec<u32> {
        let p = self.0.spec.p;
        let mut n = x.0 as u32;
        (0..self.0.spec.k)
            .map(|_| {
                let c = n % p;
                n /= p;
                c
            })
            .collect()
    }

    /// The polynomial generator `t` (equal to 0 in a prime field).
    pub fn generator_t(&self) -> Fe {
        if self.0.spec.k == 1 {
            Fe::ZERO
        } else {
            Fe(self.0.spec.p as u16)
        }
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let q = self.order();
        (1..q)
            .map(|x| Fe(x as u16))
            .find(|&x| {
                let mut acc = x;
                let mut ord = 1;
                while acc != Fe::ONE {
                    acc = self.mul(acc, x);
                    ord += 1;
                }
                ord == q - 1
            })
            .expect("multiplicative group is cyclic")
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.0.q).map(|x| Fe(x as u16))
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.0.q).map(|x| Fe(x as u16))
    }

    #[inline]
    pub fn add(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.0.add[x.index() * self.0.q + y.index()])
    }

    #[inline]
    pub fn sub(&self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn neg(&self, x: Fe) -> Fe {
        Fe(self.0.neg[x.index()])
    }

    #[inline]
    pub fn mul(&self, x: Fe, y: Fe) -> Fe {
        Fe(self.0.mul[x.index() * self.0.q + y.index()])
    }

    pub fn inv(&self, x: Fe) -> Result<Fe> {
        if x.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Fe(self.0.inv[x.index()]))
    }

    pub fn div(&self, x: Fe, y: Fe) -> Result<Fe> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, x: Fe, mut e: u64) -> Fe {
        let mut result = Fe::ONE;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `x -> x^p`.
    #[inline]
    pub fn frobenius(&self, x: Fe) -> Fe {
        Fe(self.0.frob[x.index()])
    }

    /// The order-2 automorphism `x -> x^q` of `F_{q^2}`.
    pub fn conj_q(&self, x: Fe) -> Result<Fe> {
        match &self.0.conj {
            Some(t) => Ok(Fe(t[x.index()])),
            None => Err(Error::NotQuadratic),
        }
    }

    /// Unchecked `conj_q` for hot loops; the caller guarantees a quadratic field.
    #[inline]
    pub(crate) fn conj_unchecked(&self, x: Fe) -> Fe {
        Fe(self.0.conj.as_ref().expect("quadratic field")[x.index()])
    }

    /// Unique square root in characteristic 2 (inverse of the Frobenius).
    pub fn sqrt_char2(&self, x: Fe) -> Fe {
        debug_assert_eq!(self.characteristic(), 2);
        let mut y = x;
        for _ in 1..self.degree() {
            y = self.frobenius(y);
        }
        y
    }

    /// Elements of the subfield fixed by `conj_q`.
    pub fn subfield_elements(&self) -> Result<Vec<Fe>> {
        let conj = self.0.conj.as_ref().ok_or(Error::NotQuadratic)?;
        Ok(self
            .elements()
            .filter(|x| conj[x.index()] == x.0)
            .collect())
    }

    pub fn sum<I: IntoIterator<Item = Fe>>(&self, it: I) -> Fe {
        it.into_iter().fold(Fe::ZERO, |acc, x| self.add(acc, x))
    }

    /// Number of bits needed to store one packed element.
    pub fn bits_per_element(&self) -> u32 {
        let q = self.order() as u32;
        32 - (q - 1).leading_zeros()
    }
}

/// A field element bundled with its field: the checked, value-semantics API.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Fe,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.field.coeffs(self.value), self.field)
    }
}

/// Operations accepted by [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow,
    Neg,
}

/// Second operand of [`field_arith`].
#[derive(Clone, Debug)]
pub enum Operand {
    Element(FieldElement),
    Integer(u64),
    None,
}

impl FieldElement {
    pub fn new(field: &Field, value: Fe) -> Self {
        FieldElement {
            field: field.clone(),
            value,
        }
    }

    pub fn from_coeffs(field: &Field, coeffs: &[u32]) -> Result<Self> {
        Ok(Self::new(field, field.element(coeffs)?))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Fe {
        self.value
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::MismatchedFields);
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.field, self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.field, self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(&self.field, self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(Self::new(&self.field, self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        Self::new(&self.field, self.field.pow(self.value, e))
    }

    pub fn conj_q(&self) -> Result<Self> {
        Ok(Self::new(&self.field, self.field.conj_q(self.value)?))
    }
}

/// Dispatches one of the six field operations with operand checking.
pub fn field_arith(op: ArithOp, x: &FieldElement, y: &Operand) -> Result<FieldElement> {
    match (op, y) {
        (ArithOp::Add, Operand::Element(y)) => x.add(y),
        (ArithOp::Sub, Operand::Element(y)) => x.sub(y),
        (ArithOp::Mul, Operand::Element(y)) => x.mul(y),
        (ArithOp::Pow, Operand::Integer(e)) => Ok(x.pow(*e)),
        (ArithOp::Inv, Operand::None) => x.inv(),
        (ArithOp::Neg, Operand::None) => Ok(x.neg()),
        _ => Err(Error::BadOperand),
    }
}

#[derive(Serialize, Deserialize)]
struct FieldElementJson {
    p: u32,
    k: u32,
    coeffs: Vec<u32>,
}

impl FieldElement {
    /// `{"p":2,"k":2,"coeffs":[1,1]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let spec = self.field.spec();
        serde_json::to_value(FieldElementJson {
            p: spec.p,
            k: spec.k,
            coeffs: self.coeffs(),
        })
        .expect("plain struct serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: FieldElementJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        let field = Field::new(raw.p, raw.k)?;
        Self::from_coeffs(&field, &raw.coeffs)
    }

    /// Parses against a known field, rejecting a different `(p, k)`.
    pub fn from_json_in(field: &Field, value: &serde_json::Value) -> Result<Self> {
        let parsed = Self::from_json(value)?;
        if parsed.field != *field {
            return Err(Error::MismatchedFields);
        }
        Ok(Self::new(field, parsed.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_choice() {
        assert_eq!(FieldSpec::new(2, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        // (1,0,1) precedes (1,1,0) when the constant term is compared first.
        assert_eq!(FieldSpec::new(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(FieldSpec::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FieldSpec::new(2, 11), Err(Error::FieldTooLarge { .. })));
        assert!(matches!(FieldSpec::new(2, 0), Err(Error::FieldTooLarge { .. })));
        assert!(FieldSpec::new(2, 10).is_ok());
        assert!(matches!(prime_power(12), Err(Error::NotPrimePower(12))));
        assert_eq!(prime_power(9).unwrap(), (3, 2));
    }

    #[test]
    fn small_examples() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.add(Fe::ONE, Fe::ONE), Fe::ZERO);

        let f4 = Field::new(2, 2).unwrap();
        let t = f4.element(&[0, 1]).unwrap();
        assert_eq!(f4.mul(t, t), f4.element(&[1, 1]).unwrap());
        assert_eq!(f4.conj_q(t).unwrap(), f4.element(&[1, 1]).unwrap());
        assert_eq!(f4.conj_q(Fe::ONE).unwrap(), Fe::ONE);

        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.inv(f3.from_int(2)).unwrap(), f3.from_int(2));
        assert!(matches!(f3.inv(Fe::ZERO), Err(Error::DivisionByZero)));
        assert!(matches!(f3.conj_q(Fe::ONE), Err(Error::NotQuadratic)));

        let f9 = Field::new(3, 2).unwrap();
        let t = f9.element(&[0, 1]).unwrap();
        assert_eq!(f9.conj_q(t).unwrap(), f9.element(&[0, 2]).unwrap());
    }

    #[test]
    fn exhaustive_axioms_up_to_64() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
            let f = Field::with_order(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.add(x, f.neg(x)), Fe::ZERO);
                if !x.is_zero() {
                    assert_eq!(f.mul(x, f.inv(x).unwrap()), Fe::ONE);
                }
                for y in f.elements() {
                    for z in f.elements() {
                        assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
        }
    }

    #[test]
    fn fermat_property_every_supported_field() {
        for q in 2..=MAX_ORDER {
            let Ok(f) = Field::with_order(q) else { continue };
            for x in f.elements() {
                assert_eq!(f.pow(x, q as u64), x, "q={q}");
            }
        }
    }

    #[test]
    fn conj_q_is_an_involution_fixing_the_subfield() {
        for q in [4u32, 9, 16, 25, 49, 64, 81, 121, 256] {
            let f = Field::with_order(q).unwrap();
            let sub = f.sub_order().unwrap();
            let fixed = f.elements().filter(|&x| f.conj_q(x).unwrap() == x).count();
            assert_eq!(fixed as u32, sub);
            for x in f.elements() {
                let c = f.conj_q(x).unwrap();
                assert_eq!(f.conj_q(c).unwrap(), x);
                for y in f.elements() {
                    assert_eq!(
                        f.conj_q(f.mul(x, y)).unwrap(),
                        f.mul(c, f.conj_q(y).unwrap())
                    );
                }
            }
        }
    }

    #[test]
    fn checked_element_api() {
        let f4 = Field::new(2, 2).unwrap();
        let f2 = Field::new(2, 1).unwrap();
        let a = FieldElement::from_coeffs(&f4, &[1, 1]).unwrap();
        let b = FieldElement::from_coeffs(&f2, &[1]).unwrap();
        assert!(matches!(a.add(&b), Err(Error::MismatchedFields)));
        let sq = field_arith(ArithOp::Pow, &a, &Operand::Integer(2)).unwrap();
        assert_eq!(sq.coeffs(), vec![0, 1]);
        assert!(field_arith(ArithOp::Inv, &a, &Operand::Integer(2)).is_err());

        let json = a.to_json();
        assert_eq!(json.to_string(), r#"{"p":2,"k":2,"coeffs":[1,1]}"#);
        assert_eq!(FieldElement::from_json(&json).unwrap(), a);
        assert!(FieldElement::from_json_in(&f2, &json).is_err());
    }

    #[test]
    fn char2_square_root() {
        let f = Field::new(2, 3).unwrap();
        for x in f.elements() {
            let r = f.sqrt_char2(x);
            assert_eq!(f.mul(r, r), x);
        }
    }
}
