//! Group elements as explicit invertible linear maps of the Albert space.
//!
//! A 3×3 octonion matrix `M` acts by `X -> M̄ᵀ X M`. This is only a lawful
//! matrix action when the entries of `M` lie in a common subalgebra
//! `F·1 + F·w`, so matrices are construction-time inputs only; every group
//! element is stored as a [`LinearOp27`].

pub mod hermitian;

use serde_json::json;

use crate::albert::{Albert, AlbertVector, DIM};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Mat};
use crate::octonion::{OctIndex, Octonion, Octonions};

pub use hermitian::{hermitian_form, is_twisted_unitary, sesquilinear, HermitianVariant};

/// A 3×3 matrix of octonions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OctMatrix3(pub [[Octonion; 3]; 3]);

impl OctMatrix3 {
    pub fn identity(o: &Octonions) -> Self {
        Self::diagonal(o, [o.one(), o.one(), o.one()])
    }

    pub fn diagonal(_o: &Octonions, d: [Octonion; 3]) -> Self {
        let mut m = [[Octonion::ZERO; 3]; 3];
        for i in 0..3 {
            m[i][i] = d[i];
        }
        OctMatrix3(m)
    }

    /// Identity with `x` at `(row, col)`.
    pub fn elementary(o: &Octonions, row: usize, col: usize, x: Octonion) -> Self {
        let mut m = Self::identity(o);
        m.0[row][col] = x;
        m
    }

    pub fn from_scalars(o: &Octonions, s: [[Fe; 3]; 3]) -> Self {
        OctMatrix3(std::array::from_fn(|i| std::array::from_fn(|j| o.scalar(s[i][j]))))
    }

    /// `M̄ᵀ`.
    pub fn conj_transpose(&self, o: &Octonions) -> Self {
        OctMatrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| o.conj(&self.0[j][i]))
        }))
    }

    /// Entrywise product `M N`; only meaningful inside an associative subalgebra.
    pub fn mul(&self, o: &Octonions, n: &Self) -> Self {
        OctMatrix3(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(Octonion::ZERO, |acc, k| {
                    o.add(&acc, &o.mul(&self.0[i][k], &n.0[k][j]))
                })
            })
        }))
    }

    /// Whether all entries lie in `F·1 + F·w` for a single `w`.
    pub fn in_two_dim_subalgebra(&self, o: &Octonions) -> bool {
        let f = o.field();
        let mut vecs: Vec<Vec<Fe>> = vec![o.one().0.to_vec()];
        vecs.extend(self.0.iter().flatten().map(|x| x.0.to_vec()));
        linalg::rank(f, &vecs) <= 2
    }
}

/// Invertible 27×27 matrix in canonical coordinates; column `j` is the image
/// of basis vector `j`.
#[derive(Clone)]
pub struct LinearOp27 {
    field: Field,
    m: Mat,
    sparse: Vec<Vec<(u8, Fe)>>,
}

impl PartialEq for LinearOp27 {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.m == other.m
    }
}

impl Eq for LinearOp27 {}

impl std::fmt::Debug for LinearOp27 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LinearOp27")
            .field("field", &self.field)
            .field("nonzeros", &self.sparse.iter().map(|r| r.len()).sum::<usize>())
            .finish()
    }
}

impl LinearOp27 {
    /// Checks invertibility.
    pub fn from_matrix(field: &Field, m: Mat) -> Result<Self> {
        if m.len() != DIM || m.iter().any(|r| r.len() != DIM) {
            return Err(Error::BadOperand);
        }
        if linalg::rank(field, &m) != DIM {
            return Err(Error::Singular);
        }
        Ok(Self::new_unchecked(field, m))
    }

    fn new_unchecked(field: &Field, m: Mat) -> Self {
        let sparse = m
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, &c)| (j as u8, c))
                    .collect()
            })
            .collect();
        LinearOp27 {
            field: field.clone(),
            m,
            sparse,
        }
    }

    pub fn identity(field: &Field) -> Self {
        Self::new_unchecked(field, linalg::identity(DIM))
    }

    pub fn scalar(field: &Field, lambda: Fe) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::Singular);
        }
        let mut m = linalg::zeros(DIM, DIM);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = lambda;
        }
        Ok(Self::new_unchecked(field, m))
    }

    /// Builds the operator from the images of the 27 basis vectors.
    pub fn from_images(field: &Field, images: &[AlbertVector]) -> Result<Self> {
        let mut m = linalg::zeros(DIM, DIM);
        for (j, img) in images.iter().enumerate() {
            for (u, c) in img.coords().iter().enumerate() {
                m[u][j] = *c;
            }
        }
        Self::from_matrix(field, m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    pub fn apply(&self, x: &AlbertVector) -> AlbertVector {
        let f = &self.field;
        let c = x.coords();
        let mut out = [Fe::ZERO; DIM];
        for (o, row) in out.iter_mut().zip(&self.sparse) {
            let mut acc = Fe::ZERO;
            for &(j, a) in row {
                let v = c[j as usize];
                if !v.is_zero() {
                    acc = f.add(acc, f.mul(a, v));
                }
            }
            *o = acc;
        }
        AlbertVector::from_coords(&out)
    }

    /// Applies `self` first, then `next`.
    pub fn then(&self, next: &LinearOp27) -> Result<LinearOp27> {
        if self.field != next.field {
            return Err(Error::MismatchedFields);
        }
        Ok(Self::new_unchecked(
            &self.field,
            linalg::mat_mul(&self.field, &next.m, &self.m),
        ))
    }

    pub fn invert(&self) -> LinearOp27 {
        let inv = linalg::inverse(&self.field, &self.m).expect("operators are invertible");
        Self::new_unchecked(&self.field, inv)
    }

    pub fn is_identity(&self) -> bool {
        self.m == linalg::identity(DIM)
    }

    /// `det ∘ op == det` as sparse polynomials.
    pub fn preserves_det(&self, alb: &Albert) -> bool {
        let det = alb.det_poly();
        det.substitute(&self.m) == det
    }

    pub fn fixes_identity(&self, alb: &Albert) -> bool {
        let id = alb.identity();
        self.apply(&id) == id
    }

    /// `{"p","k","rows"}`; `rows` is row-major with coefficient lists.
    pub fn to_json(&self) -> serde_json::Value {
        let f = &self.field;
        let rows: Vec<Vec<Vec<u32>>> = self
            .m
            .iter()
            .map(|r| r.iter().map(|&c| f.coeffs(c)).collect())
            .collect();
        json!({"p": f.characteristic(), "k": f.degree(), "rows": rows})
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let p = value["p"].as_u64().ok_or_else(|| Error::Json("missing p".into()))?;
        let k = value["k"].as_u64().ok_or_else(|| Error::Json("missing k".into()))?;
        let field = Field::new(p as u32, k as u32)?;
        let rows: Vec<Vec<Vec<u32>>> = serde_json::from_value(value["rows"].clone())
            .map_err(|e| Error::Json(e.to_string()))?;
        let m = rows
            .iter()
            .map(|r| r.iter().map(|c| field.element(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Mat>>()?;
        Self::from_matrix(&field, m)
    }
}

/// `X -> M̄ᵀ X M`.
pub fn op_from_matrix(alb: &Albert, m: &OctMatrix3) -> Result<LinearOp27> {
    let o = alb.oct();
    if !m.in_two_dim_subalgebra(o) {
        return Err(Error::NotInSubalgebra);
    }
    let mb = m.conj_transpose(o);
    let images = (0..DIM)
        .map(|j| {
            let x = alb.to_matrix(&alb.basis(j));
            let y: [[Octonion; 3]; 3] = std::array::from_fn(|r| {
                std::array::from_fn(|s| {
                    let mut acc = Octonion::ZERO;
                    for k in 0..3 {
                        for l in 0..3 {
                            let t = o.mul(&o.mul(&mb.0[r][k], &x[k][l]), &m.0[l][s]);
                            acc = o.add(&acc, &t);
                        }
                    }
                    acc
                })
            });
            alb.from_matrix(&y)
        })
        .collect::<Result<Vec<_>>>()?;
    LinearOp27::from_images(alb.field(), &images)
}

/// The dual action `X -> M⁻¹ X (M̄ᵀ)⁻¹`, the inverse of `X -> M X M̄ᵀ`.
pub fn dual_op(alb: &Albert, m: &OctMatrix3) -> Result<LinearOp27> {
    Ok(op_from_matrix(alb, &m.conj_transpose(alb.oct()))?.invert())
}

pub fn duality_fixed(alb: &Albert, m: &OctMatrix3) -> Result<bool> {
    Ok(op_from_matrix(alb, m)? == dual_op(alb, m)?)
}

/// Generator families. Positions are `(row, col)` with `row != col`; slots
/// rotate a 2×2 block along the diagonal (`0`: rows 0,1; `1`: rows 1,2;
/// `2`: rows 2,0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// Identity with `x` at `(row, col)`.
    Transvection { row: usize, col: usize, x: Octonion },
    /// `(a,b,c|A,B,C) -> (c,a,b|C,A,B)`.
    CyclicPerm,
    /// `(a,b,c|A,B,C) -> (a,c,b|Ā,C̄,B̄)`.
    SwapPerm,
    /// `u`, `ū` on the diagonal of the slot, `N(u) = 1`.
    Diagonal { u: Octonion, slot: usize },
    /// `x` at `(row, col)`, `−x̄` at `(col, row)`, `N(x) = 0`.
    F4Rotation { row: usize, col: usize, x: Octonion },
    /// `x` at `(row, col)`, `−x̄'` at `(col, row)`; must satisfy `M†M = I`.
    TwistedTransvection { row: usize, col: usize, x: Octonion },
    /// `diag(a, a^q)` in the slot with `a^(1+q) = 1`.
    TwistedTorus { a: Fe, slot: usize },
    /// `(a b; −b^q a^q)` in the slot with `a^(1+q) + b^(1+q) = 1`.
    TwistedBlock { a: Fe, b: Fe, slot: usize },
}

fn slot_rows(slot: usize) -> (usize, usize) {
    (slot % 3, (slot + 1) % 3)
}

fn check_position(row: usize, col: usize) -> Result<()> {
    if row >= 3 || col >= 3 || row == col {
        return Err(Error::BadGenerator(format!("bad position ({row},{col})")));
    }
    Ok(())
}

fn check_slot(slot: usize) -> Result<()> {
    if slot >= 3 {
        return Err(Error::BadGenerator(format!("bad slot {slot}")));
    }
    Ok(())
}

impl GeneratorKind {
    pub fn is_twisted(&self) -> bool {
        matches!(
            self,
            GeneratorKind::TwistedTransvection { .. }
                | GeneratorKind::TwistedTorus { .. }
                | GeneratorKind::TwistedBlock { .. }
        )
    }

    /// The 3×3 matrix, after validating the parameter constraints.
    pub fn matrix(&self, alb: &Albert) -> Result<OctMatrix3> {
        let o = alb.oct();
        let f = alb.field();
        let one = Fe::ONE;
        match *self {
            GeneratorKind::Transvection { row, col, x } => {
                check_position(row, col)?;
                Ok(OctMatrix3::elementary(o, row, col, x))
            }
            GeneratorKind::CyclicPerm => {
                let z = Fe::ZERO;
                Ok(OctMatrix3::from_scalars(o, [[z, one, z], [z, z, one], [one, z, z]]))
            }
            GeneratorKind::SwapPerm => {
                let z = Fe::ZERO;
                Ok(OctMatrix3::from_scalars(o, [[one, z, z], [z, z, one], [z, one, z]]))
            }
            GeneratorKind::Diagonal { u, slot } => {
                check_slot(slot)?;
                if o.norm(&u) != one {
                    return Err(Error::BadGenerator("Diagonal needs N(u) = 1".into()));
                }
                let (i, j) = slot_rows(slot);
                let mut m = OctMatrix3::identity(o);
                m.0[i][i] = u;
                m.0[j][j] = o.conj(&u);
                Ok(m)
            }
            GeneratorKind::F4Rotation { row, col, x } => {
                check_position(row, col)?;
                if !o.norm(&x).is_zero() {
                    return Err(Error::BadGenerator("F4Rotation needs N(x) = 0".into()));
                }
                let mut m = OctMatrix3::elementary(o, row, col, x);
                m.0[col][row] = o.neg(&o.conj(&x));
                Ok(m)
            }
            GeneratorKind::TwistedTransvection { row, col, x } => {
                check_position(row, col)?;
                let mut m = OctMatrix3::elementary(o, row, col, x);
                m.0[col][row] = o.neg(&o.star(&x)?);
                if !is_twisted_unitary(alb, &m)? {
                    return Err(Error::BadGenerator(
                        "TwistedTransvection needs M†M = I".into(),
                    ));
                }
                Ok(m)
            }
            GeneratorKind::TwistedTorus { a, slot } => {
                check_slot(slot)?;
                let aq = f.conj_q(a)?;
                if f.mul(a, aq) != one {
                    return Err(Error::BadGenerator("TwistedTorus needs a^(1+q) = 1".into()));
                }
                let (i, j) = slot_rows(slot);
                let mut m = OctMatrix3::identity(o);
                m.0[i][i] = o.scalar(a);
                m.0[j][j] = o.scalar(aq);
                Ok(m)
            }
            GeneratorKind::TwistedBlock { a, b, slot } => {
                check_slot(slot)?;
                let (aq, bq) = (f.conj_q(a)?, f.conj_q(b)?);
                if f.add(f.mul(a, aq), f.mul(b, bq)) != one {
                    return Err(Error::BadGenerator(
                        "TwistedBlock needs a^(1+q) + b^(1+q) = 1".into(),
                    ));
                }
                let (i, j) = slot_rows(slot);
                let mut m = OctMatrix3::identity(o);
                m.0[i][i] = o.scalar(a);
                m.0[i][j] = o.scalar(b);
                m.0[j][i] = o.scalar(f.neg(bq));
                m.0[j][j] = o.scalar(aq);
                Ok(m)
            }
        }
    }

    pub fn to_json(&self, alb: &Albert) -> serde_json::Value {
        let o = alb.oct();
        let f = alb.field();
        match self {
            GeneratorKind::Transvection { row, col, x } => {
                json!({"kind": "Transvection", "row": row, "col": col, "x": o.to_json(x)})
            }
            GeneratorKind::CyclicPerm => json!({"kind": "CyclicPerm"}),
            GeneratorKind::SwapPerm => json!({"kind": "SwapPerm"}),
            GeneratorKind::Diagonal { u, slot } => {
                json!({"kind": "Diagonal", "slot": slot, "u": o.to_json(u)})
            }
            GeneratorKind::F4Rotation { row, col, x } => {
                json!({"kind": "F4Rotation", "row": row, "col": col, "x": o.to_json(x)})
            }
            GeneratorKind::TwistedTransvection { row, col, x } => {
                json!({"kind": "TwistedTransvection", "row": row, "col": col, "x": o.to_json(x)})
            }
            GeneratorKind::TwistedTorus { a, slot } => {
                json!({"kind": "TwistedTorus", "slot": slot, "a": f.coeffs(*a)})
            }
            GeneratorKind::TwistedBlock { a, b, slot } => {
                json!({"kind": "TwistedBlock", "slot": slot, "a": f.coeffs(*a), "b": f.coeffs(*b)})
            }
        }
    }

    pub fn from_json(alb: &Albert, v: &serde_json::Value) -> Result<Self> {
        let o = alb.oct();
        let f = alb.field();
        let num = |key: &str| -> Result<usize> {
            v[key]
                .as_u64()
                .map(|n| n as usize)
                .ok_or_else(|| Error::Json(format!("missing {key}")))
        };
        let fe = |key: &str| -> Result<Fe> {
            let c: Vec<u32> = serde_json::from_value(v[key].clone())
                .map_err(|e| Error::Json(e.to_string()))?;
            f.element(&c)
        };
        let kind = v["kind"].as_str().ok_or_else(|| Error::Json("missing kind".into()))?;
        Ok(match kind {
            "Transvection" => GeneratorKind::Transvection {
                row: num("row")?,
                col: num("col")?,
                x: o.from_json(&v["x"])?,
            },
            "CyclicPerm" => GeneratorKind::CyclicPerm,
            "SwapPerm" => GeneratorKind::SwapPerm,
            "Diagonal" => GeneratorKind::Diagonal {
                u: o.from_json(&v["u"])?,
                slot: num("slot")?,
            },
            "F4Rotation" => GeneratorKind::F4Rotation {
                row: num("row")?,
                col: num("col")?,
                x: o.from_json(&v["x"])?,
            },
            "TwistedTransvection" => GeneratorKind::TwistedTransvection {
                row: num("row")?,
                col: num("col")?,
                x: o.from_json(&v["x"])?,
            },
            "TwistedTorus" => GeneratorKind::TwistedTorus {
                a: fe("a")?,
                slot: num("slot")?,
            },
            "TwistedBlock" => GeneratorKind::TwistedBlock {
                a: fe("a")?,
                b: fe("b")?,
                slot: num("slot")?,
            },
            other => return Err(Error::Json(format!("unknown generator kind {other}"))),
        })
    }
}

/// Validates `kind`, builds its operator and certifies that it preserves det.
pub fn make_generator(alb: &Albert, kind: &GeneratorKind) -> Result<LinearOp27> {
    let op = op_from_matrix(alb, &kind.matrix(alb)?)?;
    if !op.preserves_det(alb) {
        return Err(Error::BadGenerator(format!("{kind:?} does not preserve det")));
    }
    Ok(op)
}

/// Builds the operator without the determinant certificate.
pub fn generator_op(alb: &Albert, kind: &GeneratorKind) -> Result<LinearOp27> {
    op_from_matrix(alb, &kind.matrix(alb)?)
}

pub const OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (1, 0), (1, 2), (2, 1), (2, 0), (0, 2)];

/// 48 basis transvections (`x = e_i`) and the two coordinate permutations.
pub fn standard_generator_kinds(alb: &Albert) -> Vec<GeneratorKind> {
    let o = alb.oct();
    let mut out = Vec::new();
    for (row, col) in OFF_DIAGONAL {
        for i in OctIndex::ALL {
            out.push(GeneratorKind::Transvection {
                row,
                col,
                x: o.basis(i),
            });
        }
    }
    out.push(GeneratorKind::CyclicPerm);
    out.push(GeneratorKind::SwapPerm);
    out
}

/// Generators fixing the point `⟨(1,0,0|0,0,0)⟩`: basis transvections whose
/// row is not 0, and norm-one diagonals in every slot.
pub fn stabilizer_generator_kinds(alb: &Albert) -> Vec<GeneratorKind> {
    let o = alb.oct();
    let f = alb.field();
    let mut out = Vec::new();
    for (row, col) in [(1, 0), (2, 0), (1, 2), (2, 1)] {
        for i in OctIndex::ALL {
            out.push(GeneratorKind::Transvection {
                row,
                col,
                x: o.basis(i),
            });
        }
    }
    for slot in 0..3 {
        for i in [OctIndex::P1, OctIndex::PW, OctIndex::PWB, OctIndex::M1, OctIndex::MW, OctIndex::MWB] {
            out.push(GeneratorKind::Diagonal {
                u: o.add(&o.one(), &o.basis(i)),
                slot,
            });
        }
        for i in OctIndex::POSITIVE {
            for lambda in f.nonzero_elements() {
                let u = o.add(
                    &o.scaled_basis(lambda, i),
                    &o.scaled_basis(f.inv(lambda).unwrap(), i.negate()),
                );
                if u != o.one() {
                    out.push(GeneratorKind::Diagonal { u, slot });
                }
            }
        }
    }
    out
}

/// A deterministic sample covering every generator family; twisted kinds are
/// included only over a quadratic field.
pub fn representative_kinds(alb: &Albert) -> Vec<GeneratorKind> {
    let o = alb.oct();
    let f = alb.field();
    let g = f.primitive_element();
    let mut lambdas = vec![Fe::ONE];
    if g != Fe::ONE {
        lambdas.push(g);
    }
    let generic = o.add(
        &o.add(&o.basis(OctIndex::P0), &o.basis(OctIndex::P1)),
        &o.scaled_basis(g, OctIndex::MW),
    );
    let mut out = Vec::new();
    for (row, col) in OFF_DIAGONAL {
        for i in OctIndex::ALL {
            for &l in &lambdas {
                out.push(GeneratorKind::Transvection { row, col, x: o.scaled_basis(l, i) });
                out.push(GeneratorKind::F4Rotation { row, col, x: o.scaled_basis(l, i) });
            }
        }
        out.push(GeneratorKind::Transvection { row, col, x: generic });
    }
    out.push(GeneratorKind::CyclicPerm);
    out.push(GeneratorKind::SwapPerm);
    for slot in 0..3 {
        out.push(GeneratorKind::Diagonal { u: o.add(&o.one(), &o.basis(OctIndex::P1)), slot });
        out.push(GeneratorKind::Diagonal { u: o.add(&o.one(), &o.scaled_basis(g, OctIndex::MWB)), slot });
        for i in OctIndex::POSITIVE {
            let u = o.add(&o.scaled_basis(g, i), &o.scaled_basis(f.inv(g).unwrap(), i.negate()));
            out.push(GeneratorKind::Diagonal { u, slot });
        }
    }
    if f.is_quadratic() {
        out.extend(twisted_kinds(alb));
    }
    out
}

/// Twisted generators over `F_{q²}`: `N_x` for `x = λe_i`, the torus
/// `diag(a, a^q, 1)` and the blocks `(a b; −b^q a^q)`.
pub fn twisted_kinds(alb: &Albert) -> Vec<GeneratorKind> {
    let o = alb.oct();
    let f = alb.field();
    let mut out = Vec::new();
    let g = f.primitive_element();
    let mut lambdas = vec![Fe::ONE, g];
    lambdas.dedup();
    for (row, col) in OFF_DIAGONAL {
        for i in OctIndex::ALL {
            for &l in &lambdas {
                out.push(GeneratorKind::TwistedTransvection { row, col, x: o.scaled_basis(l, i) });
            }
        }
    }
    let unitary: Vec<Fe> = f
        .nonzero_elements()
        .filter(|&a| f.mul(a, f.conj_unchecked(a)) == Fe::ONE && f.conj_unchecked(a) != a)
        .collect();
    let block = f.elements().flat_map(|a| f.elements().map(move |b| (a, b))).find(|&(a, b)| {
        !a.is_zero()
            && !b.is_zero()
            && f.add(f.mul(a, f.conj_unchecked(a)), f.mul(b, f.conj_unchecked(b))) == Fe::ONE
    });
    for slot in 0..3 {
        if let Some(&a) = unitary.first() {
            out.push(GeneratorKind::TwistedTorus { a, slot });
        }
        if let Some((a, b)) = block {
            out.push(GeneratorKind::TwistedBlock { a, b, slot });
        }
    }
    out
}
