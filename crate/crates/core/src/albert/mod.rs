//! The 27-dimensional space of Hermitian 3×3 split-octonion matrices.
//!
//! `(a,b,c | A,B,C)` stands for
//!
//! ```text
//! [ a  C  B̄ ]
//! [ C̄  b  A ]
//! [ B  Ā  c ]
//! ```
//!
//! Canonical coordinates are `a, b, c`, then `A`, `B`, `C` in octonion index
//! order.

pub mod dickson;
pub mod poly;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::Mat;
use crate::octonion::{mul_table, OctIndex, Octonion, Octonions};
use poly::{CubicPoly27, Monomial};

pub use dickson::{dickson_cubic, dickson_poly, dickson_translate, DicksonVars};

pub const DIM: usize = 27;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlbertVector {
    pub diag: [Fe; 3],
    /// `[A, B, C]`.
    pub off: [Octonion; 3],
}

impl AlbertVector {
    pub const ZERO: AlbertVector = AlbertVector {
        diag: [Fe::ZERO; 3],
        off: [Octonion::ZERO; 3],
    };

    pub fn coords(&self) -> [Fe; DIM] {
        let mut out = [Fe::ZERO; DIM];
        out[..3].copy_from_slice(&self.diag);
        for (k, o) in self.off.iter().enumerate() {
            out[3 + 8 * k..11 + 8 * k].copy_from_slice(&o.0);
        }
        out
    }

    pub fn from_coords(c: &[Fe]) -> Self {
        assert_eq!(c.len(), DIM);
        let mut v = AlbertVector::ZERO;
        v.diag.copy_from_slice(&c[..3]);
        for k in 0..3 {
            v.off[k].0.copy_from_slice(&c[3 + 8 * k..11 + 8 * k]);
        }
        v
    }

    pub fn coord(&self, u: usize) -> Fe {
        if u < 3 {
            self.diag[u]
        } else {
            self.off[(u - 3) / 8].0[(u - 3) % 8]
        }
    }

    pub fn set_coord(&mut self, u: usize, x: Fe) {
        if u < 3 {
            self.diag[u] = x
        } else {
            self.off[(u - 3) / 8].0[(u - 3) % 8] = x
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|x| x.is_zero()) && self.off.iter().all(|o| o.is_zero())
    }
}

/// Index of coordinate `i` of octonion slot `k` (0 = A, 1 = B, 2 = C).
pub fn oct_coord(k: usize, i: OctIndex) -> usize {
    3 + 8 * k + i.ordinal()
}

pub fn coord_name(u: usize) -> String {
    if u < 3 {
        ["a", "b", "c"][u].to_string()
    } else {
        let k = (u - 3) / 8;
        let i = OctIndex::new((u - 3) % 8);
        format!("{}{}", ["A", "B", "C"][k], i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    White,
    Grey,
    Black,
}

/// One squarefree term `±x_u x_v x_w` of the determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetTerm {
    pub negative: bool,
    pub vars: [usize; 3],
}

/// `Tr(e_i e_j e_k)` as an integer sign, straight from the basis table.
pub fn basis_triple_sign(i: OctIndex, j: OctIndex, k: OctIndex) -> i8 {
    let t = mul_table();
    let Some((n1, m)) = t[i.ordinal()][j.ordinal()] else {
        return 0;
    };
    let Some((n2, out)) = t[m.ordinal()][k.ordinal()] else {
        return 0;
    };
    if out == OctIndex::P0 || out == OctIndex::M0 {
        if n1 ^ n2 {
            -1
        } else {
            1
        }
    } else {
        0
    }
}

/// The 45 terms of `abc − a N(A) − b N(B) − c N(C) + Tr((AB)C)`.
pub fn det_terms() -> &'static [DetTerm] {
    static TERMS: OnceLock<Vec<DetTerm>> = OnceLock::new();
    TERMS.get_or_init(|| {
        let mut out = vec![DetTerm {
            negative: false,
            vars: [0, 1, 2],
        }];
        for k in 0..3 {
            for i in OctIndex::POSITIVE {
                out.push(DetTerm {
                    negative: true,
                    vars: [k, oct_coord(k, i), oct_coord(k, i.negate())],
                });
            }
        }
        for i in OctIndex::ALL {
            for j in OctIndex::ALL {
                for l in OctIndex::ALL {
                    let s = basis_triple_sign(i, j, l);
                    if s != 0 {
                        out.push(DetTerm {
                            negative: s < 0,
                            vars: [oct_coord(0, i), oct_coord(1, j), oct_coord(2, l)],
                        });
                    }
                }
            }
        }
        out
    })
}

/// Degree-2 part of a cubic at a point: `sum_{u<=v} c_uv x_u x_v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticForm {
    /// Symmetric polar matrix: `c_uv` off the diagonal, `2 c_uu` on it.
    pub polar: Mat,
    /// `Q(basis_u) = c_uu`.
    pub diag: Vec<Fe>,
}

impl QuadraticForm {
    pub fn value(&self, f: &Field, x: &[Fe]) -> Fe {
        let mut acc = Fe::ZERO;
        for u in 0..x.len() {
            if x[u].is_zero() {
                continue;
            }
            acc = f.add(acc, f.mul(self.diag[u], f.mul(x[u], x[u])));
            for v in u + 1..x.len() {
                acc = f.add(acc, f.mul(self.polar[u][v], f.mul(x[u], x[v])));
            }
        }
        acc
    }

    pub fn polar_value(&self, f: &Field, x: &[Fe], y: &[Fe]) -> Fe {
        let mut acc = Fe::ZERO;
        for (u, row) in self.polar.iter().enumerate() {
            if x[u].is_zero() {
                continue;
            }
            for (v, &c) in row.iter().enumerate() {
                acc = f.add(acc, f.mul(c, f.mul(x[u], y[v])));
            }
        }
        acc
    }
}

/// Albert-space arithmetic over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Albert {
    field: Field,
    oct: Octonions,
}

impl Albert {
    pub fn new(field: &Field) -> Self {
        Albert {
            field: field.clone(),
            oct: Octonions::new(field),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn oct(&self) -> &Octonions {
        &self.oct
    }

    pub fn zero(&self) -> AlbertVector {
        AlbertVector::ZERO
    }

    /// `(1,1,1 | 0,0,0)`.
    pub fn identity(&self) -> AlbertVector {
        self.diagonal(Fe::ONE, Fe::ONE, Fe::ONE)
    }

    pub fn diagonal(&self, a: Fe, b: Fe, c: Fe) -> AlbertVector {
        AlbertVector {
            diag: [a, b, c],
            off: [Octonion::ZERO; 3],
        }
    }

    /// Diagonal unit `E_i`.
    pub fn unit(&self, i: usize) -> AlbertVector {
        self.basis(i)
    }

    pub fn basis(&self, u: usize) -> AlbertVector {
        let mut v = AlbertVector::ZERO;
        v.set_coord(u, Fe::ONE);
        v
    }

    pub fn from_parts(&self, diag: [Fe; 3], off: [Octonion; 3]) -> AlbertVector {
        AlbertVector { diag, off }
    }

    pub fn add(&self, x: &AlbertVector, y: &AlbertVector) -> AlbertVector {
        let f = &self.field;
        AlbertVector {
            diag: std::array::from_fn(|i| f.add(x.diag[i], y.diag[i])),
            off: std::array::from_fn(|i| self.oct.add(&x.off[i], &y.off[i])),
        }
    }

    pub fn sub(&self, x: &AlbertVector, y: &AlbertVector) -> AlbertVector {
        let f = &self.field;
        AlbertVector {
            diag: std::array::from_fn(|i| f.sub(x.diag[i], y.diag[i])),
            off: std::array::from_fn(|i| self.oct.sub(&x.off[i], &y.off[i])),
        }
    }

    pub fn scale(&self, lambda: Fe, x: &AlbertVector) -> AlbertVector {
        let f = &self.field;
        AlbertVector {
            diag: std::array::from_fn(|i| f.mul(lambda, x.diag[i])),
            off: std::array::from_fn(|i| self.oct.scale(lambda, &x.off[i])),
        }
    }

    pub fn trace(&self, x: &AlbertVector) -> Fe {
        self.field.sum(x.diag)
    }

    /// `N(A) + N(B) + N(C) − ab − ac − bc`.
    pub fn q_form(&self, x: &AlbertVector) -> Fe {
        let f = &self.field;
        let o = &self.oct;
        let [a, b, c] = x.diag;
        let norms = f.sum(x.off.iter().map(|y| o.norm(y)));
        let pairs = f.sum([f.mul(a, b), f.mul(a, c), f.mul(b, c)]);
        f.sub(norms, pairs)
    }

    /// `abc − a N(A) − b N(B) − c N(C) + Tr((AB)C)`.
    pub fn det(&self, x: &AlbertVector) -> Fe {
        let f = &self.field;
        let o = &self.oct;
        let [a, b, c] = x.diag;
        let [aa, bb, cc] = &x.off;
        let mut d = f.mul(f.mul(a, b), c);
        d = f.sub(d, f.mul(a, o.norm(aa)));
        d = f.sub(d, f.mul(b, o.norm(bb)));
        d = f.sub(d, f.mul(c, o.norm(cc)));
        f.add(d, o.trace(&o.mul(&o.mul(aa, bb), cc)))
    }

    /// Determinant evaluated from the 45-term expansion.
    pub fn det_from_terms(&self, x: &AlbertVector) -> Fe {
        let f = &self.field;
        let c = x.coords();
        f.sum(det_terms().iter().map(|t| {
            let p = f.mul(f.mul(c[t.vars[0]], c[t.vars[1]]), c[t.vars[2]]);
            if t.negative {
                f.neg(p)
            } else {
                p
            }
        }))
    }

    /// Division-free full polarization of `det`.
    pub fn trilinear(&self, x: &AlbertVector, y: &AlbertVector, z: &AlbertVector) -> Fe {
        let f = &self.field;
        let d = |v: &AlbertVector| self.det(v);
        let xy = self.add(x, y);
        let xz = self.add(x, z);
        let yz = self.add(y, z);
        let xyz = self.add(&xy, z);
        let plus = f.sum([d(&xyz), d(x), d(y), d(z)]);
        let minus = f.sum([d(&xy), d(&xz), d(&yz)]);
        f.sub(plus, minus)
    }

    /// The six equations `bc = N(A)`, `ac = N(B)`, `ab = N(C)`,
    /// `BC = aĀ`, `CA = bB̄`, `AB = cC̄`.
    pub fn white_equations(&self, x: &AlbertVector) -> bool {
        let f = &self.field;
        let o = &self.oct;
        let [a, b, c] = x.diag;
        let [aa, bb, cc] = &x.off;
        f.mul(b, c) == o.norm(aa)
            && f.mul(a, c) == o.norm(bb)
            && f.mul(a, b) == o.norm(cc)
            && o.mul(bb, cc) == o.scale(a, &o.conj(aa))
            && o.mul(cc, aa) == o.scale(b, &o.conj(bb))
            && o.mul(aa, bb) == o.scale(c, &o.conj(cc))
    }

    pub fn is_white(&self, x: &AlbertVector) -> bool {
        !x.is_zero() && self.white_equations(x)
    }

    pub fn classify_color(&self, x: &AlbertVector) -> Result<Color> {
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(if self.white_equations(x) {
            Color::White
        } else if !self.det(x).is_zero() {
            Color::Black
        } else {
            Color::Grey
        })
    }

    /// Coefficients of the degree-1 part of `det(W + X)` in `X`.
    pub fn linear_form_at(&self, w: &AlbertVector) -> [Fe; DIM] {
        let f = &self.field;
        let c = w.coords();
        let mut out = [Fe::ZERO; DIM];
        for t in det_terms() {
            for k in 0..3 {
                let u = t.vars[k];
                let p = f.mul(c[t.vars[(k + 1) % 3]], c[t.vars[(k + 2) % 3]]);
                out[u] = if t.negative {
                    f.sub(out[u], p)
                } else {
                    f.add(out[u], p)
                };
            }
        }
        out
    }

    /// Degree-2 part of `det(W + X)` in `X`.
    pub fn quadratic_form_at(&self, w: &AlbertVector) -> QuadraticForm {
        let f = &self.field;
        let c = w.coords();
        let mut coef = vec![vec![Fe::ZERO; DIM]; DIM];
        for t in det_terms() {
            for k in 0..3 {
                let fixed = c[t.vars[k]];
                if fixed.is_zero() {
                    continue;
                }
                let (u, v) = {
                    let p = t.vars[(k + 1) % 3];
                    let q = t.vars[(k + 2) % 3];
                    (p.min(q), p.max(q))
                };
                coef[u][v] = if t.negative {
                    f.sub(coef[u][v], fixed)
                } else {
                    f.add(coef[u][v], fixed)
                };
            }
        }
        let mut polar = vec![vec![Fe::ZERO; DIM]; DIM];
        let mut diag = vec![Fe::ZERO; DIM];
        for u in 0..DIM {
            diag[u] = coef[u][u];
            polar[u][u] = f.add(coef[u][u], coef[u][u]);
            for v in u + 1..DIM {
                polar[u][v] = coef[u][v];
                polar[v][u] = coef[u][v];
            }
        }
        QuadraticForm { polar, diag }
    }

    /// `det` as a sparse polynomial.
    pub fn det_poly(&self) -> CubicPoly27 {
        let f = &self.field;
        let mut p = CubicPoly27::zero(f);
        let minus_one = f.neg(Fe::ONE);
        for t in det_terms() {
            p.add_term(
                Monomial::new(&t.vars),
                if t.negative { minus_one } else { Fe::ONE },
            );
        }
        p
    }

    /// The Hermitian matrix of `x`.
    pub fn to_matrix(&self, x: &AlbertVector) -> [[Octonion; 3]; 3] {
        let o = &self.oct;
        let [a, b, c] = x.diag;
        let [aa, bb, cc] = &x.off;
        [
            [o.scalar(a), *cc, o.conj(bb)],
            [o.conj(cc), o.scalar(b), *aa],
            [*bb, o.conj(aa), o.scalar(c)],
        ]
    }

    pub fn is_hermitian(&self, m: &[[Octonion; 3]; 3]) -> bool {
        let o = &self.oct;
        (0..3).all(|i| o.as_scalar(&m[i][i]).is_some())
            && (0..3).all(|i| (0..3).all(|j| m[j][i] == o.conj(&m[i][j])))
    }

    /// Reads `(a,b,c|A,B,C)` off a Hermitian matrix.
    pub fn from_matrix(&self, m: &[[Octonion; 3]; 3]) -> Result<AlbertVector> {
        if !self.is_hermitian(m) {
            return Err(Error::BadOperand);
        }
        Ok(AlbertVector {
            diag: [m[0][0].0[0], m[1][1].0[0], m[2][2].0[0]],
            off: [m[1][2], m[2][0], m[0][1]],
        })
    }

    fn matrix_product(&self, x: &[[Octonion; 3]; 3], y: &[[Octonion; 3]; 3]) -> [[Octonion; 3]; 3] {
        let o = &self.oct;
        std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Octonion::ZERO, |acc, k| o.add(&acc, &o.mul(&x[i][k], &y[k][j])))
            })
        })
    }

    /// `½(XY + YX)` on the matrix forms; odd characteristic only.
    pub fn jordan_mul(&self, x: &AlbertVector, y: &AlbertVector) -> Result<AlbertVector> {
        let f = &self.field;
        if f.characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        let mx = self.to_matrix(x);
        let my = self.to_matrix(y);
        let xy = self.matrix_product(&mx, &my);
        let yx = self.matrix_product(&my, &mx);
        let half = f.inv(f.from_int(2))?;
        let sym: [[Octonion; 3]; 3] = std::array::from_fn(|i| {
            std::array::from_fn(|j| self.oct.scale(half, &self.oct.add(&xy[i][j], &yx[i][j])))
        });
        self.from_matrix(&sym)
    }

    /// `X³ − Tr(X) X² − Q(X) X − det(X) I` with Jordan powers.
    pub fn cayley_hamilton_residual(&self, x: &AlbertVector) -> Result<AlbertVector> {
        let x2 = self.jordan_mul(x, x)?;
        let x3 = self.jordan_mul(&x2, x)?;
        let mut r = self.sub(&x3, &self.scale(self.trace(x), &x2));
        r = self.sub(&r, &self.scale(self.q_form(x), x));
        Ok(self.sub(&r, &self.scale(self.det(x), &self.identity())))
    }

    /// Uniform random vector.
    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> AlbertVector {
        let q = self.field.order() as u16;
        let c: Vec<Fe> = (0..DIM).map(|_| Fe(rng.gen_range(0..q))).collect();
        AlbertVector::from_coords(&c)
    }

    /// Vector from its packed index `sum c_u q^u`.
    pub fn from_index(&self, mut n: u128) -> AlbertVector {
        let q = self.field.order() as u128;
        let c: Vec<Fe> = (0..DIM)
            .map(|_| {
                let d = (n % q) as u16;
                n /= q;
                Fe(d)
            })
            .collect();
        AlbertVector::from_coords(&c)
    }

    /// Bits per coordinate in the packed point encoding.
    pub fn bits_per_coord(&self) -> u32 {
        self.field.bits_per_element()
    }

    /// Packed key: coordinate `u` occupies bits `u*b .. (u+1)*b`.
    /// Requires `27 * b <= 128`.
    pub fn pack(&self, x: &AlbertVector) -> u128 {
        let b = self.bits_per_coord();
        assert!(27 * b <= 128, "field too large for a 128-bit key");
        x.coords()
            .iter()
            .enumerate()
            .fold(0u128, |acc, (u, c)| acc | ((c.0 as u128) << (u as u32 * b)))
    }

    pub fn unpack(&self, key: u128) -> AlbertVector {
        let b = self.bits_per_coord();
        let mask = (1u128 << b) - 1;
        let c: Vec<Fe> = (0..DIM)
            .map(|u| Fe(((key >> (u as u32 * b)) & mask) as u16))
            .collect();
        AlbertVector::from_coords(&c)
    }

    /// Little-endian byte encoding of the packed bit string, any field size.
    pub fn pack_bytes(&self, x: &AlbertVector) -> Vec<u8> {
        let b = self.bits_per_coord() as usize;
        let mut out = vec![0u8; (27 * b).div_ceil(8)];
        for (u, c) in x.coords().iter().enumerate() {
            for bit in 0..b {
                if (c.0 >> bit) & 1 == 1 {
                    let pos = u * b + bit;
                    out[pos / 8] |= 1 << (pos % 8);
                }
            }
        }
        out
    }

    pub fn unpack_bytes(&self, bytes: &[u8]) -> Result<AlbertVector> {
        let b = self.bits_per_coord() as usize;
        if bytes.len() != (27 * b).div_ceil(8) {
            return Err(Error::BadOperand);
        }
        let mut c = [Fe::ZERO; DIM];
        for (u, slot) in c.iter_mut().enumerate() {
            let mut v = 0u16;
            for bit in 0..b {
                let pos = u * b + bit;
                if (bytes[pos / 8] >> (pos % 8)) & 1 == 1 {
                    v |= 1 << bit;
                }
            }
            if v as usize >= self.field.order() {
                return Err(Error::BadCoefficients);
            }
            *slot = Fe(v);
        }
        Ok(AlbertVector::from_coords(&c))
    }

    /// `{"p","k","a","b","c","A","B","C"}`; scalars are coefficient lists and
    /// octonions are lists of 8 coefficient lists.
    pub fn to_json(&self, x: &AlbertVector) -> serde_json::Value {
        let f = &self.field;
        let oct = |o: &Octonion| -> Vec<Vec<u32>> { o.0.iter().map(|&c| f.coeffs(c)).collect() };
        json!({
            "p": f.characteristic(),
            "k": f.degree(),
            "a": f.coeffs(x.diag[0]),
            "b": f.coeffs(x.diag[1]),
            "c": f.coeffs(x.diag[2]),
            "A": oct(&x.off[0]),
            "B": oct(&x.off[1]),
            "C": oct(&x.off[2]),
        })
    }

    /// Parses a vector; a `p`/`k` header, when present, must match the field.
    pub fn from_json(&self, value: &serde_json::Value) -> Result<AlbertVector> {
        let raw: AlbertJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Json(e.to_string()))?;
        if let (Some(p), Some(k)) = (raw.p, raw.k) {
            if p != self.field.characteristic() || k != self.field.degree() {
                return Err(Error::MismatchedFields);
            }
        }
        let f = &self.field;
        Ok(AlbertVector {
            diag: [f.element(&raw.a)?, f.element(&raw.b)?, f.element(&raw.c)?],
            off: [
                self.oct.from_coeff_lists(&raw.big_a)?,
                self.oct.from_coeff_lists(&raw.big_b)?,
                self.oct.from_coeff_lists(&raw.big_c)?,
            ],
        })
    }
}

#[derive(Deserialize)]
struct AlbertJson {
    p: Option<u32>,
    k: Option<u32>,
    a: Vec<u32>,
    b: Vec<u32>,
    c: Vec<u32>,
    #[serde(rename = "A")]
    big_a: Vec<Vec<u32>>,
    #[serde(rename = "B")]
    big_b: Vec<Vec<u32>>,
    #[serde(rename = "C")]
    big_c: Vec<Vec<u32>>,
}

/// Reads the optional `p`/`k` header of a vector document.
pub fn json_field(value: &serde_json::Value) -> Option<Result<Field>> {
    let p = value.get("p")?.as_u64()?;
    let k = value.get("k")?.as_u64()?;
    Some(Field::new(p as u32, k as u32))
}
