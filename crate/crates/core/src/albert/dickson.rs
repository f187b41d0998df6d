//! Dickson's 27-variable cubic form and the coordinate translation to
//! `(a,b,c | A,B,C)`.

use super::poly::{CubicPoly27, Monomial};
use super::{oct_coord, AlbertVector, DIM};
use crate::gf::{Fe, Field};
use crate::octonion::OctIndex;

/// A Dickson variable; indices are 1-based as in Dickson's notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DVar {
    X(u8),
    Y(u8),
    /// `z_ij`, with `z_ji = −z_ij`.
    Z(u8, u8),
}

/// `(coordinate, Dickson variable, negated)`: coordinate `u` equals
/// `±variable`.
pub fn translation_table() -> [(usize, DVar, bool); DIM] {
    use DVar::*;
    use OctIndex as I;
    let rows: [(I, [(DVar, bool); 3]); 8] = [
        (I::P0, [(Z(2, 5), false), (Z(4, 3), false), (Z(1, 6), false)]),
        (I::M0, [(Z(4, 6), false), (Z(1, 5), false), (Z(2, 3), false)]),
        (I::P1, [(Y(3), false), (Y(6), false), (Y(5), false)]),
        (I::M1, [(X(1), false), (X(2), false), (X(4), false)]),
        (I::PW, [(X(3), false), (X(6), false), (X(5), false)]),
        (I::MW, [(Y(1), true), (Y(2), true), (Y(4), true)]),
        (I::PWB, [(Z(5, 6), false), (Z(3, 5), false), (Z(6, 3), false)]),
        (I::MWB, [(Z(4, 2), false), (Z(1, 4), false), (Z(2, 1), false)]),
    ];
    let mut out = [(0usize, X(1), false); DIM];
    out[0] = (0, Z(1, 3), false);
    out[1] = (1, Z(2, 6), false);
    out[2] = (2, Z(4, 5), false);
    for (i, entries) in rows {
        for (k, (var, neg)) in entries.into_iter().enumerate() {
            let u = oct_coord(k, i);
            out[u] = (u, var, neg);
        }
    }
    out
}

/// Values of `x_1..x_6`, `y_1..y_6` and the antisymmetric `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DicksonVars {
    pub x: [Fe; 6],
    pub y: [Fe; 6],
    pub z: [[Fe; 6]; 6],
}

pub fn dickson_translate(f: &Field, v: &AlbertVector) -> DicksonVars {
    let c = v.coords();
    let mut d = DicksonVars {
        x: [Fe::ZERO; 6],
        y: [Fe::ZERO; 6],
        z: [[Fe::ZERO; 6]; 6],
    };
    for (u, var, neg) in translation_table() {
        let val = if neg { f.neg(c[u]) } else { c[u] };
        match var {
            DVar::X(i) => d.x[i as usize - 1] = val,
            DVar::Y(i) => d.y[i as usize - 1] = val,
            DVar::Z(i, j) => {
                d.z[i as usize - 1][j as usize - 1] = val;
                d.z[j as usize - 1][i as usize - 1] = f.neg(val);
            }
        }
    }
    d
}

/// The 15 pairings of `{1..6}` as sorted pairs with the sign of the
/// permutation `ijklmn`.
pub fn partitions() -> Vec<([(usize, usize); 3], bool)> {
    let mut out = Vec::new();
    let rest = |used: &[usize]| -> Vec<usize> { (1..=6).filter(|x| !used.contains(x)).collect() };
    for j in 2..=6 {
        let r1 = rest(&[1, j]);
        let k = r1[0];
        for &l in &r1[1..] {
            let r2 = rest(&[1, j, k, l]);
            let (m, n) = (r2[0], r2[1]);
            let seq = [1, j, k, l, m, n];
            let inversions = (0..6)
                .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
                .filter(|&(a, b)| seq[a] > seq[b])
                .count();
            out.push(([(1, j), (k, l), (m, n)], inversions % 2 == 1));
        }
    }
    out
}

/// `sum_{i,j} x_i y_j z_ij + sum_partitions ± z_ij z_kl z_mn`.
pub fn dickson_cubic(f: &Field, d: &DicksonVars) -> Fe {
    let mut acc = Fe::ZERO;
    for i in 0..6 {
        for j in 0..6 {
            acc = f.add(acc, f.mul(f.mul(d.x[i], d.y[j]), d.z[i][j]));
        }
    }
    for (pairs, odd) in partitions() {
        let t = pairs
            .iter()
            .fold(Fe::ONE, |p, &(i, j)| f.mul(p, d.z[i - 1][j - 1]));
        acc = if odd { f.sub(acc, t) } else { f.add(acc, t) };
    }
    acc
}

/// Dickson's cubic composed with the translation, as a polynomial in the
/// Albert coordinates.
pub fn dickson_poly(f: &Field) -> CubicPoly27 {
    // each Dickson variable as (coordinate, sign)
    let mut x = [(0usize, false); 6];
    let mut y = [(0usize, false); 6];
    let mut z: [[Option<(usize, bool)>; 6]; 6] = [[None; 6]; 6];
    for (u, var, neg) in translation_table() {
        match var {
            DVar::X(i) => x[i as usize - 1] = (u, neg),
            DVar::Y(i) => y[i as usize - 1] = (u, neg),
            DVar::Z(i, j) => {
                z[i as usize - 1][j as usize - 1] = Some((u, neg));
                z[j as usize - 1][i as usize - 1] = Some((u, !neg));
            }
        }
    }
    let mut p = CubicPoly27::zero(f);
    let mut push = |factors: [(usize, bool); 3], extra_neg: bool| {
        let neg = factors.iter().fold(extra_neg, |n, &(_, s)| n ^ s);
        let vars = factors.map(|(u, _)| u);
        p.add_term(
            Monomial::new(&vars),
            if neg { f.neg(Fe::ONE) } else { Fe::ONE },
        );
    };
    for i in 0..6 {
        for j in 0..6 {
            if let Some(zij) = z[i][j] {
                push([x[i], y[j], zij], false);
            }
        }
    }
    for (pairs, odd) in partitions() {
        let factors = pairs.map(|(i, j)| z[i - 1][j - 1].expect("every pair is translated"));
        push(factors, odd);
    }
    p
}
