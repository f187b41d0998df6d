//! White vectors by their explicit parametrization, split into six cases.
//!
//! Cases 1 to 3 have three, two or one nonzero diagonal entries; they are
//! the rank-one matrices `c·v̄ᵀv` with `v = (x, y, 1)` and its cyclic rotations. Cases 4
//! to 6 have zero diagonal and three, two or one nonzero isotropic off-diagonal
//! entries with `AB = BC = CA = 0`.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::albert::{Albert, AlbertVector};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::linalg::{self, Mat};
use crate::octonion::{OctIndex, Octonion, Octonions};
use super::prime_fast::{PrimeOct, V8};

/// Largest field the structured enumeration accepts.
pub const MAX_Q: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructuredCase {
    pub case: u8,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredReport {
    pub q: u32,
    pub cases: Vec<StructuredCase>,
    /// Emitted vectors failing the white test (emission mode only).
    pub non_white: Option<u64>,
}

impl StructuredReport {
    pub fn total(&self) -> u64 {
        self.cases.iter().map(|c| c.count).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "cases": self.cases.iter().map(|c| c.count).collect::<Vec<_>>(),
            "white": self.total(),
            "non_white_emitted": self.non_white,
        })
    }
}

fn check_case(case: u8) -> Result<()> {
    if !(1..=6).contains(&case) {
        return Err(Error::Unsupported(format!("case must be 1..6, got {case}")));
    }
    Ok(())
}

fn check_field(f: &Field) -> Result<()> {
    if f.order() > MAX_Q {
        return Err(Error::Unsupported(format!(
            "structured enumeration needs q <= {MAX_Q}, got {}",
            f.order()
        )));
    }
    Ok(())
}

/// `(a,b,c|A,B,C) -> (c,a,b|C,A,B)`.
fn rotate(x: &AlbertVector) -> AlbertVector {
    AlbertVector {
        diag: [x.diag[2], x.diag[0], x.diag[1]],
        off: [x.off[2], x.off[0], x.off[1]],
    }
}

/// `c·v̄ᵀv` for `v = (x, y, 1)`: `(cN(x), cN(y), c | cȳ, cx, c·x̄y)`.
fn rank_one(alb: &Albert, c: Fe, x: &Octonion, y: &Octonion) -> AlbertVector {
    let f = alb.field();
    let o = alb.oct();
    alb.from_parts(
        [f.mul(c, o.norm(x)), f.mul(c, o.norm(y)), c],
        [o.scale(c, &o.conj(y)), o.scale(c, x), o.scale(c, &o.mul(&o.conj(x), y))],
    )
}

/// Number of octonions of each norm value.
pub fn norm_distribution(f: &Field) -> Vec<u64> {
    let q = f.order();
    // pairs (s, t) with st = v
    let mut pair = vec![q as u64 - 1; q];
    pair[0] = 2 * q as u64 - 1;
    let mut dist = vec![0u64; q];
    dist[0] = 1;
    for _ in 0..4 {
        let mut next = vec![0u64; q];
        for (u, &du) in dist.iter().enumerate() {
            for (v, &pv) in pair.iter().enumerate() {
                let w = f.add(Fe(u as u16), Fe(v as u16));
                next[w.index()] += du * pv;
            }
        }
        dist = next;
    }
    dist
}

/// Exact count of one case. Cases 4 to 6 cost about
/// `q^7 · q^3 / (q-1)^2` small kernel computations; `budget` caps that.
pub fn structured_case_count(f: &Field, case: u8, budget: u64) -> Result<u64> {
    check_case(case)?;
    check_field(f)?;
    let q = f.order() as u64;
    let dist = norm_distribution(f);
    let iso = dist[0];
    let non = q.pow(8) - iso;
    Ok(match case {
        1 => (q - 1) * non * non,
        2 => 3 * (q - 1) * iso * non,
        3 => 3 * (q - 1) * iso * iso,
        6 => 3 * (iso - 1),
        _ => {
            let work = q.pow(10) / (q - 1).pow(2);
            if work > budget {
                return Err(Error::Budget(format!(
                    "about {work} kernel computations exceed the budget of {budget}"
                )));
            }
            let o = Octonions::new(f);
            let (pairs, triples) = offdiag_counts(&o);
            if case == 5 {
                3 * pairs
            } else {
                triples
            }
        }
    })
}

/// Counts of all six cases.
pub fn structured_counts(f: &Field, budget: u64) -> Result<StructuredReport> {
    let cases = (1..=6)
        .map(|c| structured_case_count(f, c, budget).map(|count| StructuredCase { case: c, count }))
        .collect::<Result<Vec<_>>>()?;
    Ok(StructuredReport { q: f.order() as u32, cases, non_white: None })
}

fn left_mul_matrix(o: &Octonions, a: &Octonion) -> Mat {
    // column j is a·e_j
    let cols: Vec<Octonion> = OctIndex::ALL.iter().map(|&j| o.mul(a, &o.basis(j))).collect();
    (0..8).map(|i| cols.iter().map(|c| c.0[i]).collect()).collect()
}

fn right_mul_matrix(o: &Octonions, a: &Octonion) -> Mat {
    let cols: Vec<Octonion> = OctIndex::ALL.iter().map(|&j| o.mul(&o.basis(j), a)).collect();
    (0..8).map(|i| cols.iter().map(|c| c.0[i]).collect()).collect()
}

fn combine(f: &Field, basis: &[Vec<Fe>], coeffs: &[Fe]) -> Octonion {
    let mut c = [Fe::ZERO; 8];
    for (b, &l) in basis.iter().zip(coeffs) {
        if l.is_zero() {
            continue;
        }
        for (x, &y) in c.iter_mut().zip(b) {
            *x = f.add(*x, f.mul(l, y));
        }
    }
    Octonion(c)
}

/// All coefficient vectors of length `d`, or only those whose first nonzero
/// entry is 1.
fn coefficient_vectors(f: &Field, d: usize, projective: bool) -> Vec<Vec<Fe>> {
    let q = f.order();
    let mut out = Vec::new();
    for n in 1..q.pow(d as u32) {
        let mut m = n;
        let v: Vec<Fe> = (0..d)
            .map(|_| {
                let x = Fe((m % q) as u16);
                m /= q;
                x
            })
            .collect();
        if !projective || v.iter().find(|x| !x.is_zero()) == Some(&Fe::ONE) {
            out.push(v);
        }
    }
    out
}

fn is_projective_rep(x: &Octonion) -> bool {
    x.0.iter().find(|c| !c.is_zero()) == Some(&Fe::ONE)
}

/// Nonzero isotropic vectors in a subspace, as coefficient combinations.
fn isotropic_in_span(o: &Octonions, basis: &[Vec<Fe>], projective: bool) -> Vec<Octonion> {
    let f = o.field();
    coefficient_vectors(f, basis.len(), projective)
        .iter()
        .map(|c| combine(f, basis, c))
        .filter(|x| o.norm(x).is_zero())
        .collect()
}

/// Number of nonzero isotropic vectors in a subspace.
fn count_isotropic_in_span(o: &Octonions, basis: &[Vec<Fe>]) -> u64 {
    let f = o.field();
    let vecs: Vec<Octonion> = basis.iter().map(|b| Octonion(b.as_slice().try_into().unwrap())).collect();
    let totally = vecs.iter().all(|v| o.norm(v).is_zero())
        && vecs.iter().enumerate().all(|(i, u)| vecs[i + 1..].iter().all(|v| o.bilinear(u, v).is_zero()));
    if totally {
        (f.order() as u64).pow(basis.len() as u32) - 1
    } else {
        isotropic_in_span(o, basis, false).len() as u64
    }
}

/// `(#{(X,Y) : XY = 0}, #{(A,B,C) : AB = BC = CA = 0})` over nonzero
/// isotropic octonions, using invariance under scaling each entry.
fn offdiag_counts(o: &Octonions) -> (u64, u64) {
    let f = o.field();
    let q1 = f.order() as u64 - 1;
    let reps: Vec<Octonion> = o.isotropic().filter(is_projective_rep).collect();
    let (pairs, triples) = reps
        .par_iter()
        .map(|a| {
            let ker_a = linalg::nullspace(f, &left_mul_matrix(o, a), 8);
            let ra = right_mul_matrix(o, a);
            let bs = isotropic_in_span(o, &ker_a, true);
            let mut t = 0u64;
            for b in &bs {
                let mut m = left_mul_matrix(o, b);
                m.extend(ra.iter().cloned());
                t += count_isotropic_in_span(o, &linalg::nullspace(f, &m, 8));
            }
            (bs.len() as u64, t)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    (pairs * q1 * q1, triples * q1 * q1)
}

/// Emits every vector of a case to `sink` (from worker threads, in no fixed
/// order) and returns the number emitted. Refuses when the case size
/// exceeds `budget`.
pub fn structured_white_enumeration<F>(alb: &Albert, case: u8, budget: u64, sink: F) -> Result<u64>
where
    F: Fn(&AlbertVector) + Sync,
{
    let f = alb.field();
    check_case(case)?;
    check_field(f)?;
    let size = structured_case_count(f, case, u64::MAX)?;
    if size > budget {
        return Err(Error::Budget(format!(
            "case {case} has {size} vectors, over the budget of {budget}"
        )));
    }
    let o = alb.oct();
    let emitted = match case {
        1..=3 => emit_diagonal_case(alb, case, &sink),
        _ => emit_offdiag_case(o, case, &sink),
    };
    Ok(emitted)
}

fn emit_diagonal_case<F: Fn(&AlbertVector) + Sync>(alb: &Albert, case: u8, sink: &F) -> u64 {
    let f = alb.field();
    let o = alb.oct();
    let all: Vec<Octonion> = o.all().collect();
    let (iso, non): (Vec<Octonion>, Vec<Octonion>) = all.into_iter().partition(|x| o.norm(x).is_zero());
    // (x class, y class, rotations); a = cN(x), b = cN(y)
    let plans: Vec<(&[Octonion], &[Octonion], usize)> = match case {
        1 => vec![(&non, &non, 0)],
        2 => vec![(&iso, &non, 0), (&non, &iso, 0), (&iso, &non, 2)],
        _ => vec![(&iso, &iso, 0), (&iso, &iso, 1), (&iso, &iso, 2)],
    };
    let mut total = 0u64;
    for (xs, ys, rot) in plans {
        total += xs
            .par_iter()
            .map(|x| {
                let mut n = 0u64;
                for c in f.nonzero_elements() {
                    for y in ys {
                        let mut v = rank_one(alb, c, x, y);
                        for _ in 0..rot {
                            v = rotate(&v);
                        }
                        sink(&v);
                        n += 1;
                    }
                }
                n
            })
            .sum::<u64>();
    }
    total
}

/// Same parametrization as [`emit_diagonal_case`] in integer arithmetic;
/// returns `(emitted, non-white)`.
fn check_diagonal_case_prime(o: &Octonions, po: &PrimeOct, case: u8) -> (u64, u64) {
    let p = o.field().characteristic() as i32;
    let (iso, non): (Vec<V8>, Vec<V8>) = o
        .all()
        .map(|x| PrimeOct::from_oct(&x))
        .partition(|x| po.norm(x) == 0);
    let plans: Vec<(&[V8], &[V8], usize)> = match case {
        1 => vec![(&non, &non, 0)],
        2 => vec![(&iso, &non, 0), (&non, &iso, 0), (&iso, &non, 2)],
        _ => vec![(&iso, &iso, 0), (&iso, &iso, 1), (&iso, &iso, 2)],
    };
    let mut total = (0u64, 0u64);
    for (xs, ys, rot) in plans {
        let (n, b) = xs
            .par_iter()
            .map(|x| {
                let (mut n, mut b) = (0u64, 0u64);
                for c in 1..p {
                    for y in ys {
                        let (mut d, mut off) = po.rank_one(c, x, y);
                        for _ in 0..rot {
                            d = [d[2], d[0], d[1]];
                            off = [off[2], off[0], off[1]];
                        }
                        n += 1;
                        if !po.white_equations(&d, &off) {
                            b += 1;
                        }
                    }
                }
                (n, b)
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
        total = (total.0 + n, total.1 + b);
    }
    total
}

fn emit_offdiag_case<F: Fn(&AlbertVector) + Sync>(o: &Octonions, case: u8, sink: &F) -> u64 {
    let f = o.field();
    let iso: Vec<Octonion> = o.isotropic().collect();
    let z = Octonion::ZERO;
    let put = |a: &Octonion, b: &Octonion, c: &Octonion| {
        sink(&AlbertVector { diag: [Fe::ZERO; 3], off: [*a, *b, *c] });
    };
    iso.par_iter()
        .map(|a| {
            let mut n = 0u64;
            match case {
                6 => {
                    put(a, &z, &z);
                    put(&z, a, &z);
                    put(&z, &z, a);
                    n += 3;
                }
                5 => {
                    let ker = linalg::nullspace(f, &left_mul_matrix(o, a), 8);
                    for b in isotropic_in_span(o, &ker, false) {
                        put(a, &b, &z);
                        put(&z, a, &b);
                        put(&b, &z, a);
                        n += 3;
                    }
                }
                _ => {
                    let ker = linalg::nullspace(f, &left_mul_matrix(o, a), 8);
                    let ra = right_mul_matrix(o, a);
                    for b in isotropic_in_span(o, &ker, false) {
                        let mut m = left_mul_matrix(o, &b);
                        m.extend(ra.iter().cloned());
                        for c in isotropic_in_span(o, &linalg::nullspace(f, &m, 8), false) {
                            put(a, &b, &c);
                            n += 1;
                        }
                    }
                }
            }
            n
        })
        .sum()
}

/// Emits all six cases, checks each vector with the six-equation test and
/// reports per-case counts plus the number of non-white emissions.
pub fn structured_emission_report(alb: &Albert, budget: u64) -> Result<StructuredReport> {
    use std::sync::atomic::{AtomicU64, Ordering};
    let bad = AtomicU64::new(0);
    let mut cases = Vec::new();
    let fast = PrimeOct::new(alb.field());
    for case in 1..=6 {
        let count = match (&fast, case) {
            (Some(po), 1..=3) => {
                let size = structured_case_count(alb.field(), case, u64::MAX)?;
                if size > budget {
                    return Err(Error::Budget(format!(
                        "case {case} has {size} vectors, over the budget of {budget}"
                    )));
                }
                let (n, b) = check_diagonal_case_prime(alb.oct(), po, case);
                bad.fetch_add(b, Ordering::Relaxed);
                n
            }
            _ => structured_white_enumeration(alb, case, budget, |v| {
                if !alb.is_white(v) {
                    bad.fetch_add(1, Ordering::Relaxed);
                }
            })?,
        };
        cases.push(StructuredCase { case, count });
    }
    Ok(StructuredReport {
        q: alb.field().order() as u32,
        cases,
        non_white: Some(bad.into_inner()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_distribution_matches_isotropic_count() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Field::with_order(q).unwrap();
            let d = norm_distribution(&f);
            let q = q as u64;
            assert_eq!(d[0], q.pow(7) + q.pow(4) - q.pow(3));
            assert_eq!(d.iter().sum::<u64>(), q.pow(8));
            assert!(d[1..].iter().all(|&x| x == q.pow(7) - q.pow(3)));
        }
    }

    #[test]
    fn offdiag_pair_counts() {
        for q in [2, 3, 4] {
            let f = Field::with_order(q).unwrap();
            let o = Octonions::new(&f);
            let (pairs, triples) = offdiag_counts(&o);
            let q = q as u64;
            assert_eq!(pairs, (q.pow(4) - 1) * (q.pow(4) - 1) * (q.pow(3) + 1));
            assert_eq!(triples, (q.pow(4) - 1).pow(2) * (q.pow(6) - 1));
        }
    }

    #[test]
    fn bad_inputs() {
        let f = Field::with_order(2).unwrap();
        assert!(structured_case_count(&f, 0, u64::MAX).is_err());
        assert!(structured_case_count(&f, 7, u64::MAX).is_err());
        assert!(structured_case_count(&Field::with_order(11).unwrap(), 1, u64::MAX).is_err());
        let alb = Albert::new(&f);
        assert!(matches!(structured_white_enumeration(&alb, 1, 10, |_| {}), Err(Error::Budget(_))));
    }
}
