//! Exhaustive colour census of all nonzero vectors.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::albert::{Albert, AlbertVector, Color};
use crate::error::{Error, Result};
use crate::gf::{Fe, Field};
use crate::octonion::{Octonion, Octonions};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub q: u32,
    pub white: u64,
    pub grey: u64,
    pub black: u64,
    /// White vectors of trace 1.
    pub white_trace_one: u64,
    pub white_trace_zero: u64,
    /// White vectors supported on `a, b, c` only.
    pub white_diagonal: u64,
}

impl CensusReport {
    pub fn total(&self) -> u64 {
        self.white + self.grey + self.black
    }

    fn merge(mut self, o: CensusReport) -> CensusReport {
        self.white += o.white;
        self.grey += o.grey;
        self.black += o.black;
        self.white_trace_one += o.white_trace_one;
        self.white_trace_zero += o.white_trace_zero;
        self.white_diagonal += o.white_diagonal;
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "white": self.white,
            "grey": self.grey,
            "black": self.black,
            "total": self.total(),
            "white_trace_one": self.white_trace_one,
            "white_trace_zero": self.white_trace_zero,
            "white_diagonal": self.white_diagonal,
        })
    }
}

/// Scans every nonzero vector when `q^27 - 1 <= budget`.
pub fn brute_force_color_census(field: &Field, budget: u64) -> Result<CensusReport> {
    let q = field.order() as u32;
    let total = (q as f64).powi(27);
    if total - 1.0 > budget as f64 {
        return Err(Error::Budget(format!(
            "q^27 - 1 vectors exceed the budget of {budget}"
        )));
    }
    if q == 2 {
        Ok(Binary::new().census(false).0)
    } else {
        Ok(generic_census(field))
    }
}

/// White vectors over `F_2` as 27-bit packed keys, in increasing order.
pub fn binary_white_keys() -> Vec<u32> {
    let mut keys = Binary::new().census(true).1;
    keys.sort_unstable();
    keys
}

fn generic_census(field: &Field) -> CensusReport {
    let alb = Albert::new(field);
    let q = field.order() as u128;
    let n = q.pow(27);
    let chunks = 1024u128;
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut r = CensusReport { q: q as u32, ..Default::default() };
            let lo = (n * c / chunks).max(1);
            let hi = n * (c + 1) / chunks;
            for idx in lo..hi {
                tally(&alb, &alb.from_index(idx), &mut r);
            }
            r
        })
        .reduce(CensusReport::default, CensusReport::merge)
}

fn tally(alb: &Albert, x: &AlbertVector, r: &mut CensusReport) {
    match alb.classify_color(x).expect("nonzero") {
        Color::White => {
            r.white += 1;
            let t = alb.trace(x);
            if t == Fe::ONE {
                r.white_trace_one += 1;
            } else if t.is_zero() {
                r.white_trace_zero += 1;
            }
            if x.off.iter().all(|o| o.is_zero()) {
                r.white_diagonal += 1;
            }
        }
        Color::Grey => r.grey += 1,
        Color::Black => r.black += 1,
    }
}

/// Octonions over `F_2` as bytes: bit `i` is the coefficient of the basis
/// element with ordinal `i`.
pub(crate) struct Binary {
    mul: Vec<u8>,
    norm: [bool; 256],
    conj: [u8; 256],
    trace: [bool; 256],
}

pub(crate) fn byte_to_oct(b: u8) -> Octonion {
    let mut c = [Fe::ZERO; 8];
    for (i, x) in c.iter_mut().enumerate() {
        *x = Fe(((b >> i) & 1) as u16);
    }
    Octonion(c)
}

fn oct_to_byte(x: &Octonion) -> u8 {
    x.0.iter().enumerate().fold(0, |acc, (i, c)| acc | ((c.0 as u8) << i))
}

impl Binary {
    pub(crate) fn new() -> Self {
        let o = Octonions::new(&Field::new(2, 1).expect("F_2"));
        let all: Vec<Octonion> = (0..=255u8).map(byte_to_oct).collect();
        let mut mul = vec![0u8; 1 << 16];
        for x in 0..256 {
            for y in 0..256 {
                mul[(x << 8) | y] = oct_to_byte(&o.mul(&all[x], &all[y]));
            }
        }
        let mut norm = [false; 256];
        let mut conj = [0u8; 256];
        let mut trace = [false; 256];
        for x in 0..256 {
            norm[x] = o.norm(&all[x]) == Fe::ONE;
            conj[x] = oct_to_byte(&o.conj(&all[x]));
            trace[x] = o.trace(&all[x]) == Fe::ONE;
        }
        Binary { mul, norm, conj, trace }
    }

    #[inline]
    fn m(&self, x: u8, y: u8) -> u8 {
        self.mul[((x as usize) << 8) | y as usize]
    }

    /// Census over all `2^27 - 1` vectors, optionally collecting white keys.
    fn census(&self, keep: bool) -> (CensusReport, Vec<u32>) {
        let parts: Vec<(CensusReport, Vec<u32>)> = (0..256u32)
            .into_par_iter()
            .map(|a_oct| self.census_slice(a_oct as u8, keep))
            .collect();
        let mut keys = Vec::new();
        let mut r = CensusReport { q: 2, ..Default::default() };
        for (p, k) in parts {
            r = r.merge(p);
            keys.extend(k);
        }
        r.q = 2;
        (r, keys)
    }

    /// Colour of `(a,b,c|A,B,C)` with the diagonal in the low three bits of `d`.
    #[inline]
    pub(crate) fn color(&self, d: u8, aa: u8, bb: u8, cc: u8) -> Color {
        let (a, b, c) = (d & 1 == 1, d & 2 == 2, d & 4 == 4);
        let (na, nb, nc) = (self.norm[aa as usize], self.norm[bb as usize], self.norm[cc as usize]);
        let ab = self.m(aa, bb);
        let white = (b && c) == na
            && (a && c) == nb
            && (a && b) == nc
            && self.m(bb, cc) == if a { self.conj[aa as usize] } else { 0 }
            && self.m(cc, aa) == if b { self.conj[bb as usize] } else { 0 }
            && ab == if c { self.conj[cc as usize] } else { 0 };
        if white {
            return Color::White;
        }
        // char 2: det = abc + aN(A) + bN(B) + cN(C) + Tr(ABC)
        let det = (a && b && c) ^ (a && na) ^ (b && nb) ^ (c && nc) ^ self.trace[self.m(ab, cc) as usize];
        if det {
            Color::Black
        } else {
            Color::Grey
        }
    }

    fn census_slice(&self, aa: u8, keep: bool) -> (CensusReport, Vec<u32>) {
        let mut r = CensusReport::default();
        let mut keys = Vec::new();
        for bb in 0..=255u8 {
            for cc in 0..=255u8 {
                for d in 0u8..8 {
                    if d == 0 && aa == 0 && bb == 0 && cc == 0 {
                        continue;
                    }
                    match self.color(d, aa, bb, cc) {
                        Color::White => {
                            r.white += 1;
                            if (d.count_ones() & 1) == 1 {
                                r.white_trace_one += 1;
                            } else {
                                r.white_trace_zero += 1;
                            }
                            if aa == 0 && bb == 0 && cc == 0 {
                                r.white_diagonal += 1;
                            }
                            if keep {
                                keys.push(pack_binary(d, aa, bb, cc));
                            }
                        }
                        Color::Grey => r.grey += 1,
                        Color::Black => r.black += 1,
                    }
                }
            }
        }
        (r, keys)
    }
}

/// Packed key over `F_2`, matching [`Albert::pack`].
pub(crate) fn pack_binary(d: u8, aa: u8, bb: u8, cc: u8) -> u32 {
    d as u32 | (aa as u32) << 3 | (bb as u32) << 11 | (cc as u32) << 19
}
