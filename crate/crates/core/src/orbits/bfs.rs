//! Breadth-first orbit enumeration on projective points.

use std::collections::{HashSet, VecDeque};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde_json::{json, Value};

use super::{canonical_point, check_packable, ProjPoint};
use crate::albert::{Albert, AlbertVector, DIM};
use crate::error::Result;
use crate::gf::Fe;
use crate::group::LinearOp27;

#[derive(Clone, Debug)]
pub struct BfsOptions {
    /// Stop once this many points have been seen.
    pub limit: usize,
    /// Free-form name of the generator set, copied into the report.
    pub descriptor: String,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions { limit: 50_000_000, descriptor: "custom".into() }
    }
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub size: BigUint,
    pub generators: String,
    /// Distinct operators used, inverses included.
    pub operator_count: usize,
    pub truncated: bool,
    pub elapsed: Duration,
}

impl OrbitReport {
    /// Timing is left out so that identical runs give identical output.
    pub fn to_json(&self) -> Value {
        json!({
            "size": super::counts::big_json(&self.size),
            "generators": self.generators,
            "operators": self.operator_count,
            "truncated": self.truncated,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub report: OrbitReport,
    /// Points in visit order.
    pub points: Vec<ProjPoint>,
}

/// The generators followed by those inverses not already present.
pub fn with_inverses(gens: &[LinearOp27]) -> Vec<LinearOp27> {
    let mut out: Vec<LinearOp27> = Vec::new();
    for g in gens.iter().cloned().chain(gens.iter().map(|g| g.invert())) {
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

/// BFS from `start` under `gens` and their inverses.
pub fn orbit_bfs(
    alb: &Albert,
    gens: &[LinearOp27],
    start: &AlbertVector,
    opts: &BfsOptions,
) -> Result<Orbit> {
    check_packable(alb)?;
    let t0 = Instant::now();
    let ops = with_inverses(gens);
    let start = canonical_point(alb, start)?;
    let (points, truncated) = if alb.field().order() == 2 {
        bfs_binary(&ops, start, opts.limit)
    } else {
        bfs_generic(alb, &ops, start, opts.limit)
    };
    Ok(Orbit {
        report: OrbitReport {
            size: BigUint::from(points.len()),
            generators: opts.descriptor.clone(),
            operator_count: ops.len(),
            truncated,
            elapsed: t0.elapsed(),
        },
        points,
    })
}

fn bfs_generic(
    alb: &Albert,
    ops: &[LinearOp27],
    start: ProjPoint,
    limit: usize,
) -> (Vec<ProjPoint>, bool) {
    let mut seen = HashSet::from([start]);
    let mut order = vec![start];
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let v = p.vector(alb);
        for g in ops {
            let img = canonical_point(alb, &g.apply(&v)).expect("invertible image is nonzero");
            if seen.insert(img) {
                if order.len() >= limit {
                    return (order, true);
                }
                order.push(img);
                queue.push_back(img);
            }
        }
    }
    (order, false)
}

/// Column masks: image of basis vector `u` as a 27-bit key.
fn binary_columns(op: &LinearOp27) -> [u32; DIM] {
    let m = op.matrix();
    let mut cols = [0u32; DIM];
    for (u, col) in cols.iter_mut().enumerate() {
        for (r, row) in m.iter().enumerate() {
            if row[u] == Fe::ONE {
                *col |= 1 << r;
            }
        }
    }
    cols
}

fn apply_binary(cols: &[u32; DIM], mut x: u32) -> u32 {
    let mut out = 0;
    while x != 0 {
        let u = x.trailing_zeros();
        out ^= cols[u as usize];
        x &= x - 1;
    }
    out
}

fn bfs_binary(ops: &[LinearOp27], start: ProjPoint, limit: usize) -> (Vec<ProjPoint>, bool) {
    let cols: Vec<[u32; DIM]> = ops.iter().map(binary_columns).collect();
    let start = start.0 as u32;
    let mut seen = HashSet::from([start]);
    let mut order = vec![start];
    let mut head = 0;
    let mut truncated = false;
    'outer: while head < order.len() {
        let x = order[head];
        head += 1;
        for c in &cols {
            let y = apply_binary(c, x);
            if seen.insert(y) {
                if order.len() >= limit {
                    truncated = true;
                    break 'outer;
                }
                order.push(y);
            }
        }
    }
    (order.into_iter().map(|k| ProjPoint(k as u128)).collect(), truncated)
}
