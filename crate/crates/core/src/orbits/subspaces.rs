//! Pure white subspaces, the 17-space of a white vector and the 10-space.

use std::collections::HashSet;

use crate::albert::{oct_coord, Albert, AlbertVector, Color, DIM};
use crate::error::{Error, Result};
use crate::gf::Fe;
use crate::linalg;
use crate::octonion::OctIndex;

/// Largest span (`q^dim` vectors) the exhaustive testers will walk.
pub const SPAN_LIMIT: u64 = 1 << 24;

fn b_slot(alb: &Albert, i: OctIndex) -> AlbertVector {
    alb.basis(oct_coord(1, i))
}

/// `W1 ⊂ W2 ⊂ W3 ⊂ W4 ⊂ W5`, `W4 ⊂ W5′ ⊂ W6`, as named bases.
pub fn pure_white_subspaces(alb: &Albert) -> Vec<(&'static str, Vec<AlbertVector>)> {
    let w1 = vec![alb.unit(0)];
    let mut w2 = w1.clone();
    w2.push(b_slot(alb, OctIndex::M1));
    let mut w3 = w2.clone();
    w3.push(b_slot(alb, OctIndex::PWB));
    let mut w4 = w3.clone();
    w4.push(b_slot(alb, OctIndex::PW));
    let mut w5 = w4.clone();
    w5.push(b_slot(alb, OctIndex::P0));
    let mut w5p = w4.clone();
    w5p.push(b_slot(alb, OctIndex::M0));
    let mut w6 = w5p.clone();
    w6.push(alb.basis(oct_coord(2, OctIndex::M1)));
    vec![
        ("W1", w1),
        ("W2", w2),
        ("W3", w3),
        ("W4", w4),
        ("W5", w5),
        ("W5'", w5p),
        ("W6", w6),
    ]
}

fn as_rows(basis: &[AlbertVector]) -> Vec<Vec<Fe>> {
    basis.iter().map(|v| v.coords().to_vec()).collect()
}

/// Every vector of the span, zero included.
pub fn span_vectors(alb: &Albert, basis: &[AlbertVector]) -> Result<Vec<AlbertVector>> {
    let f = alb.field();
    let q = f.order() as u64;
    let n = q.checked_pow(basis.len() as u32).filter(|&n| n <= SPAN_LIMIT).ok_or_else(|| {
        Error::Budget(format!("span of dimension {} over F_{q} is too large", basis.len()))
    })?;
    let mut out = Vec::with_capacity(n as usize);
    for idx in 0..n {
        let mut m = idx;
        let mut v = alb.zero();
        for b in basis {
            let l = Fe((m % q) as u16);
            m /= q;
            if !l.is_zero() {
                v = alb.add(&v, &alb.scale(l, b));
            }
        }
        out.push(v);
    }
    Ok(out)
}

/// Whether every nonzero vector of the span is white. Needs `dim <= 6` and
/// `q <= 3`.
pub fn pure_white(alb: &Albert, basis: &[AlbertVector]) -> Result<bool> {
    let f = alb.field();
    if basis.len() > 6 || f.order() > 3 {
        return Err(Error::Budget(format!(
            "exhaustive test needs dim <= 6 and q <= 3, got dim {} and q {}",
            basis.len(),
            f.order()
        )));
    }
    Ok(span_vectors(alb, basis)?
        .iter()
        .filter(|v| !v.is_zero())
        .all(|v| alb.is_white(v)))
}

pub fn dimension(alb: &Albert, basis: &[AlbertVector]) -> usize {
    linalg::rank(alb.field(), &as_rows(basis))
}

/// Whether no white vector outside the span extends it to a larger pure
/// white space. `white` holds the packed keys of all white vectors.
///
/// `⟨W, w⟩` is pure white iff `w + s` is white for every `s` in `W`.
pub fn is_maximal_pure_white(
    alb: &Albert,
    basis: &[AlbertVector],
    white: &HashSet<u128>,
) -> Result<bool> {
    let span = span_vectors(alb, basis)?;
    let inside: HashSet<u128> = span.iter().map(|v| alb.pack(v)).collect();
    for &key in white {
        if inside.contains(&key) {
            continue;
        }
        let w = alb.unpack(key);
        if span.iter().all(|s| white.contains(&alb.pack(&alb.add(&w, s)))) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_white(alb: &Albert, v: &AlbertVector) -> Result<()> {
    if alb.classify_color(v)? != Color::White {
        return Err(Error::NotWhite);
    }
    Ok(())
}

/// Radical of the quadratic part of `X -> det(v + X)`.
///
/// Odd characteristic: the kernel of the polar form. Characteristic 2: the
/// vectors of that kernel on which the quadratic form also vanishes; there
/// the form is additive and `Q(sum μ_i k_i) = (sum μ_i √Q(k_i))²`, so one
/// extra linear condition suffices.
pub fn seventeen_space(alb: &Albert, v: &AlbertVector) -> Result<Vec<AlbertVector>> {
    require_white(alb, v)?;
    let f = alb.field();
    let qf = alb.quadratic_form_at(v);
    let kernel = linalg::nullspace(f, &qf.polar, DIM);
    let basis = if f.characteristic() == 2 {
        let roots: Vec<Fe> = kernel.iter().map(|k| f.sqrt_char2(qf.value(f, k))).collect();
        if roots.iter().all(|r| r.is_zero()) {
            kernel
        } else {
            linalg::nullspace(f, &vec![roots], kernel.len())
                .iter()
                .map(|mu| {
                    let mut out = vec![Fe::ZERO; DIM];
                    for (m, k) in mu.iter().zip(&kernel) {
                        for (o, &x) in out.iter_mut().zip(k) {
                            *o = f.add(*o, f.mul(*m, x));
                        }
                    }
                    out
                })
                .collect()
        }
    } else {
        kernel
    };
    Ok(basis.iter().map(|c| AlbertVector::from_coords(c)).collect())
}

/// The 10-space `{(a,0,c|0,B,0)}` attached to the white point `⟨v⟩`.
/// Only the standard point `⟨(1,0,0|0,0,0)⟩` is supported.
pub fn w10_space(alb: &Albert, v: &AlbertVector) -> Result<Vec<AlbertVector>> {
    require_white(alb, v)?;
    let e1 = alb.unit(0);
    if !linalg::in_span(alb.field(), &as_rows(&[e1]), &v.coords()) {
        return Err(Error::Unsupported(
            "10-space is only tabulated for the point (1,0,0|0,0,0)".into(),
        ));
    }
    let mut out = vec![e1, alb.unit(2)];
    out.extend(OctIndex::ALL.iter().map(|&i| b_slot(alb, i)));
    Ok(out)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct W10Report {
    pub isotropic_white: u64,
    pub anisotropic_grey: u64,
    /// Vectors breaking the rule white ⇔ isotropic, non-white ⇒ grey.
    pub violations: u64,
}

/// Exhaustive check of the white/isotropic dichotomy on the 10-space, with
/// the restriction of the quadratic invariant as the form.
pub fn w10_dichotomy(alb: &Albert) -> Result<W10Report> {
    let basis = w10_space(alb, &alb.unit(0))?;
    let mut r = W10Report::default();
    for x in span_vectors(alb, &basis)?.iter().filter(|x| !x.is_zero()) {
        let iso = alb.q_form(x).is_zero();
        match (alb.classify_color(x)?, iso) {
            (Color::White, true) => r.isotropic_white += 1,
            (Color::Grey, false) => r.anisotropic_grey += 1,
            _ => r.violations += 1,
        }
    }
    Ok(r)
}
