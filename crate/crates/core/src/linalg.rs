//! Dense linear algebra over a finite field: row reduction, rank, kernels,
//! inverses. Matrices are row-major `Vec<Vec<Fe>>`.

use crate::gf::{Fe, Field};

pub type Mat = Vec<Vec<Fe>>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![Fe::ZERO; cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Fe::ONE;
    }
    m
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(f: &Field, m: &mut Mat) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(factor, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(f: &Field, m: &Mat) -> usize {
    let mut m = m.clone();
    rref(f, &mut m).len()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(f: &Field, m: &Mat, cols: usize) -> Vec<Vec<Fe>> {
    let mut m = m.clone();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Fe::ZERO; cols];
            v[fc] = Fe::ONE;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m[r][fc]);
            }
            v
        })
        .collect()
}

/// Row-reduced basis of the span of the given vectors.
pub fn row_space(f: &Field, vectors: &[Vec<Fe>]) -> Vec<Vec<Fe>> {
    let mut m = vectors.to_vec();
    let k = rref(f, &mut m).len();
    m.truncate(k);
    m
}

pub fn inverse(f: &Field, m: &Mat) -> Option<Mat> {
    let n = m.len();
    let mut aug: Mat = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().copied().chain(id).collect())
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_mul(f: &Field, a: &Mat, b: &Mat) -> Mat {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut out = vec![Fe::ZERO; cols];
            for (k, &x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, &y) in out.iter_mut().zip(&b[k]) {
                    *o = f.add(*o, f.mul(x, y));
                }
            }
            out
        })
        .collect()
}

pub fn mat_vec(f: &Field, a: &Mat, v: &[Fe]) -> Vec<Fe> {
    a.iter()
        .map(|row| f.sum(row.iter().zip(v).map(|(&x, &y)| f.mul(x, y))))
        .collect()
}

pub fn transpose(m: &Mat) -> Mat {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j]).collect()).collect()
}

/// Whether `v` lies in the span of `basis`.
pub fn in_span(f: &Field, basis: &[Vec<Fe>], v: &[Fe]) -> bool {
    let r = rank(f, &basis.to_vec());
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank(f, &ext) == r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_kernel() {
        let f = Field::with_order(5).unwrap();
        let e = |n| f.from_int(n);
        let m = vec![vec![e(1), e(2)], vec![e(3), e(4)]];
        let inv = inverse(&f, &m).unwrap();
        assert_eq!(mat_mul(&f, &m, &inv), identity(2));
        let sing = vec![vec![e(1), e(2)], vec![e(2), e(4)]];
        assert!(inverse(&f, &sing).is_none());
        let k = nullspace(&f, &sing, 2);
        assert_eq!(k.len(), 1);
        assert!(mat_vec(&f, &sing, &k[0]).iter().all(|x| x.is_zero()));
        assert_eq!(rank(&f, &sing), 1);
        assert!(in_span(&f, &[vec![e(1), e(2)]], &[e(3), e(1)]));
        assert!(!in_span(&f, &[vec![e(1), e(2)]], &[e(1), e(1)]));
    }
}
