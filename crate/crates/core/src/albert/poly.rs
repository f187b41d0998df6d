//! Sparse polynomials of degree at most three in the 27 Albert coordinates.

use std::collections::BTreeMap;
use std::fmt;

use crate::gf::{Fe, Field};

pub const NVARS: usize = 27;

/// Monomial of degree ≤ 3: sorted variable indices in the first `deg` slots.
/// Ordered graded-lex (degree first, then variables).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    deg: u8,
    vars: [u8; 3],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { deg: 0, vars: [0; 3] };

    pub fn new(vars: &[usize]) -> Self {
        assert!(vars.len() <= 3, "degree above 3");
        let mut v = [0u8; 3];
        for (slot, &x) in v.iter_mut().zip(vars) {
            assert!(x < NVARS, "variable out of range");
            *slot = x as u8;
        }
        v[..vars.len()].sort_unstable();
        Monomial {
            deg: vars.len() as u8,
            vars: v,
        }
    }

    pub fn degree(&self) -> usize {
        self.deg as usize
    }

    pub fn vars(&self) -> &[u8] {
        &self.vars[..self.deg as usize]
    }

    fn dense_index(&self) -> usize {
        let v = self.vars();
        match v.len() {
            0 => 0,
            1 => 1 + v[0] as usize,
            2 => 1 + NVARS + v[0] as usize * NVARS + v[1] as usize,
            _ => {
                1 + NVARS
                    + NVARS * NVARS
                    + (v[0] as usize * NVARS + v[1] as usize) * NVARS
                    + v[2] as usize
            }
        }
    }

    fn from_dense_index(mut i: usize) -> Self {
        if i == 0 {
            return Monomial::ONE;
        }
        i -= 1;
        if i < NVARS {
            return Monomial::new(&[i]);
        }
        i -= NVARS;
        if i < NVARS * NVARS {
            return Monomial::new(&[i / NVARS, i % NVARS]);
        }
        i -= NVARS * NVARS;
        Monomial::new(&[i / (NVARS * NVARS), (i / NVARS) % NVARS, i % NVARS])
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return f.write_str("1");
        }
        let names: Vec<String> = self.vars().iter().map(|v| format!("x{v}")).collect();
        f.write_str(&names.join("*"))
    }
}

const DENSE: usize = 1 + NVARS + NVARS * NVARS + NVARS * NVARS * NVARS;

/// Dense scratch space for accumulating expansions.
struct Accumulator {
    coeffs: Vec<Fe>,
    touched: Vec<usize>,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            coeffs: vec![Fe::ZERO; DENSE],
            touched: Vec::new(),
        }
    }

    fn add(&mut self, f: &Field, idx: usize, c: Fe) {
        let slot = &mut self.coeffs[idx];
        if slot.is_zero() {
            self.touched.push(idx);
        }
        *slot = f.add(*slot, c);
    }

    fn finish(mut self, f: &Field) -> CubicPoly27 {
        self.touched.sort_unstable();
        self.touched.dedup();
        let mut terms = BTreeMap::new();
        for idx in self.touched {
            let c = self.coeffs[idx];
            if !c.is_zero() {
                terms.insert(Monomial::from_dense_index(idx), c);
            }
        }
        CubicPoly27 {
            field: f.clone(),
            terms,
        }
    }
}

/// Exact sparse polynomial of degree ≤ 3 in 27 variables. No zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct CubicPoly27 {
    field: Field,
    terms: BTreeMap<Monomial, Fe>,
}

impl fmt::Debug for CubicPoly27 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(m, c)| (m, c.0)))
            .finish()
    }
}

impl CubicPoly27 {
    pub fn zero(field: &Field) -> Self {
        CubicPoly27 {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn variable(field: &Field, u: usize) -> Self {
        let mut p = Self::zero(field);
        p.add_term(Monomial::new(&[u]), Fe::ONE);
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn add_term(&mut self, m: Monomial, c: Fe) {
        if c.is_zero() {
            return;
        }
        let f = &self.field;
        let entry = self.terms.entry(m).or_insert(Fe::ZERO);
        *entry = f.add(*entry, c);
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Fe {
        self.terms.get(m).copied().unwrap_or(Fe::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Fe)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&m, &c) in &other.terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.field.neg(Fe::ONE)))
    }

    pub fn scale(&self, lambda: Fe) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f);
        for (&m, &c) in &self.terms {
            out.add_term(m, f.mul(lambda, c));
        }
        out
    }

    pub fn eval(&self, point: &[Fe]) -> Fe {
        let f = &self.field;
        f.sum(self.terms.iter().map(|(m, &c)| {
            m.vars()
                .iter()
                .fold(c, |acc, &v| f.mul(acc, point[v as usize]))
        }))
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: usize) -> Self {
        CubicPoly27 {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, *c))
                .collect(),
        }
    }

    /// Composes with the linear map `x_u -> sum_v rows[u][v] x_v`.
    pub fn substitute(&self, rows: &[Vec<Fe>]) -> Self {
        assert_eq!(rows.len(), NVARS);
        let f = &self.field;
        let sparse: Vec<Vec<(usize, Fe)>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(v, &c)| (v, c))
                    .collect()
            })
            .collect();
        let mut acc = Accumulator::new();
        for (m, &c) in &self.terms {
            let vars = m.vars();
            match vars.len() {
                0 => acc.add(f, 0, c),
                1 => {
                    for &(v, a) in &sparse[vars[0] as usize] {
                        acc.add(f, Monomial::new(&[v]).dense_index(), f.mul(c, a));
                    }
                }
                2 => {
                    for &(v1, a1) in &sparse[vars[0] as usize] {
                        let c1 = f.mul(c, a1);
                        for &(v2, a2) in &sparse[vars[1] as usize] {
                            acc.add(f, Monomial::new(&[v1, v2]).dense_index(), f.mul(c1, a2));
                        }
                    }
                }
                _ => {
                    for &(v1, a1) in &sparse[vars[0] as usize] {
                        let c1 = f.mul(c, a1);
                        for &(v2, a2) in &sparse[vars[1] as usize] {
                            let c2 = f.mul(c1, a2);
                            for &(v3, a3) in &sparse[vars[2] as usize] {
                                acc.add(
                                    f,
                                    Monomial::new(&[v1, v2, v3]).dense_index(),
                                    f.mul(c2, a3),
                                );
                            }
                        }
                    }
                }
            }
        }
        acc.finish(f)
    }

    /// `p(w + X)` as a polynomial in `X`.
    pub fn shift(&self, w: &[Fe]) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f);
        for (m, &c) in &self.terms {
            let vars = m.vars();
            let n = vars.len();
            for mask in 0u32..(1 << n) {
                let mut coef = c;
                let mut kept = Vec::with_capacity(n);
                for (k, &v) in vars.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        kept.push(v as usize);
                    } else {
                        coef = f.mul(coef, w[v as usize]);
                    }
                }
                out.add_term(Monomial::new(&kept), coef);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_index_round_trip() {
        for m in [
            Monomial::ONE,
            Monomial::new(&[5]),
            Monomial::new(&[26, 3]),
            Monomial::new(&[4, 0, 4]),
            Monomial::new(&[26, 26, 26]),
        ] {
            assert_eq!(Monomial::from_dense_index(m.dense_index()), m);
        }
        assert!(Monomial::new(&[26]) < Monomial::new(&[0, 0]));
    }

    #[test]
    fn substitution_and_shift() {
        let f = Field::with_order(7).unwrap();
        let x0 = CubicPoly27::variable(&f, 0);
        let mut p = x0.clone();
        p.add_term(Monomial::new(&[0, 1, 2]), f.from_int(3));
        // x0 -> x0 + x1
        let mut rows: Vec<Vec<Fe>> = (0..NVARS)
            .map(|u| (0..NVARS).map(|v| if u == v { Fe::ONE } else { Fe::ZERO }).collect())
            .collect();
        rows[0][1] = Fe::ONE;
        let s = p.substitute(&rows);
        assert_eq!(s.coeff(&Monomial::new(&[1, 1, 2])), f.from_int(3));
        assert_eq!(s.coeff(&Monomial::new(&[1])), Fe::ONE);
        assert_eq!(s.len(), 4);
        let mut w = vec![Fe::ZERO; NVARS];
        w[1] = f.from_int(2);
        let sh = p.shift(&w);
        assert_eq!(sh.coeff(&Monomial::new(&[0, 2])), f.from_int(6));
        assert_eq!(sh.eval(&vec![f.one(); NVARS]), p.eval(&{
            let mut pt = vec![f.one(); NVARS];
            pt[1] = f.from_int(3);
            pt
        }));
        assert!(p.sub(&p).is_zero());
    }
}
