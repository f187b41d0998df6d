//! Closed-form counts and group orders as exact big integers.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::gf::prime_power;

fn pw(q: &BigUint, n: u32) -> BigUint {
    q.pow(n)
}

/// `q^n - 1`.
fn m1(q: &BigUint, n: u32) -> BigUint {
    q.pow(n) - 1u32
}

/// `q^n + 1`.
fn p1(q: &BigUint, n: u32) -> BigUint {
    q.pow(n) + 1u32
}

/// Big integer as a JSON number with every digit kept.
pub fn big_json(n: &BigUint) -> Value {
    serde_json::from_str(&n.to_string()).expect("decimal digits parse as a JSON number")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormCounts {
    pub q: u32,
    pub white_vectors: BigUint,
    pub white_points: BigUint,
    /// Points joined to a fixed white point by an all-white line.
    pub suborbit_all_white: BigUint,
    pub suborbit_two_white: BigUint,
    pub primitive_idempotents: BigUint,
    pub trace_zero_white: BigUint,
    /// Per-case white-vector counts in the structured enumeration.
    pub cases: [BigUint; 6],
    pub se6: BigUint,
    pub f4: BigUint,
    pub twisted_se6: BigUint,
    /// The three twisted orbit lengths on white points over `F_{q²}`.
    pub twisted_orbits: [BigUint; 3],
    /// `q^16 (q-1) d·P` for `d = 1` and `d = 2`, where `P` is the
    /// order polynomial `q^20 (q^8-1)(q^6-1)(q^4-1)(q^2-1)(q^5-1)`.
    pub stabilizer_candidates: [BigUint; 2],
}

fn check_q(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    prime_power(q).map(|_| ())
}

/// `q^20 (q^8-1)(q^6-1)(q^4-1)(q^2-1)(q^5-1)`.
fn d10_poly(q: &BigUint) -> BigUint {
    pw(q, 20) * m1(q, 8) * m1(q, 6) * m1(q, 4) * m1(q, 2) * m1(q, 5)
}

pub fn spin9_order(q: u32) -> BigUint {
    let q = BigUint::from(q);
    pw(&q, 16) * m1(&q, 8) * m1(&q, 6) * m1(&q, 4) * m1(&q, 2)
}

/// `|Spin10⁻(q)|`.
pub fn spin10_minus_order(q: u32) -> BigUint {
    let q = BigUint::from(q);
    pw(&q, 20) * p1(&q, 5) * m1(&q, 2) * m1(&q, 4) * m1(&q, 6) * m1(&q, 8)
}

/// White-point count of the space over a field of order `q`.
pub fn white_points(q: &BigUint) -> BigUint {
    m1(q, 9) * (pw(q, 8) + pw(q, 4) + 1u32) / (q - 1u32)
}

pub fn closed_form_counts(q: u32) -> Result<ClosedFormCounts> {
    check_q(q)?;
    let order = q;
    let qb = BigUint::from(q);
    let q = &qb;
    let qm = q - 1u32;
    let white_vectors = m1(q, 9) * (pw(q, 8) + pw(q, 4) + 1u32);
    let white_points = &white_vectors / &qm;
    let suborbit_all_white = q * p1(q, 3) * m1(q, 8) / &qm;
    let suborbit_two_white = pw(q, 8) * p1(q, 4) * m1(q, 5) / &qm;
    let primitive_idempotents = pw(q, 8) * (pw(q, 8) + pw(q, 4) + 1u32);
    let trace_zero_white = m1(q, 12) * p1(q, 4);

    let r = pw(q, 7) - pw(q, 3);
    let s = pw(q, 7) + pw(q, 4) - pw(q, 3);
    let cases = [
        qm.pow(3) * &r * &r,
        3u32 * qm.pow(2) * &r * &s,
        3u32 * &qm * &s * &s,
        m1(q, 4).pow(2) * m1(q, 6),
        3u32 * m1(q, 4).pow(2) * p1(q, 3),
        3u32 * m1(q, 4) * p1(q, 3),
    ];

    let se6 = pw(q, 36) * m1(q, 12) * m1(q, 9) * m1(q, 8) * m1(q, 6) * m1(q, 5) * m1(q, 2);
    let f4 = pw(q, 24) * m1(q, 12) * m1(q, 8) * m1(q, 6) * m1(q, 2);
    let twisted_se6 = pw(q, 36) * m1(q, 12) * p1(q, 9) * m1(q, 8) * m1(q, 6) * p1(q, 5) * m1(q, 2);
    let twisted_orbits = [
        p1(q, 9) * m1(q, 12) * p1(q, 5) / m1(q, 2),
        p1(q, 4) * p1(q, 9) * pw(q, 5) * m1(q, 12) * m1(q, 3) / m1(q, 2),
        pw(q, 16) * (pw(q, 8) + pw(q, 4) + 1u32) * p1(q, 9) / (q + 1u32),
    ];
    let base = &white_points * pw(q, 16) * &qm * d10_poly(q);
    let stabilizer_candidates = [base.clone(), base * 2u32];
    Ok(ClosedFormCounts {
        q: order,
        white_vectors,
        white_points,
        suborbit_all_white,
        suborbit_two_white,
        primitive_idempotents,
        trace_zero_white,
        cases,
        se6,
        f4,
        twisted_se6,
        twisted_orbits,
        stabilizer_candidates,
    })
}

impl ClosedFormCounts {
    pub fn to_json(&self) -> Value {
        let list = |xs: &[BigUint]| Value::Array(xs.iter().map(big_json).collect());
        json!({
            "q": self.q,
            "white": big_json(&self.white_vectors),
            "white_points": big_json(&self.white_points),
            "suborbits": [1, big_json(&self.suborbit_all_white), big_json(&self.suborbit_two_white)],
            "primitive_idempotents": big_json(&self.primitive_idempotents),
            "trace_zero_white": big_json(&self.trace_zero_white),
            "cases": list(&self.cases),
            "se6_order": big_json(&self.se6),
            "f4_order": big_json(&self.f4),
            "twisted_se6_order": big_json(&self.twisted_se6),
            "twisted_orbits": list(&self.twisted_orbits),
        })
    }
}

/// Name of the stabilizer quotient whose order makes the orbit-stabilizer
/// product equal `|SE6(q)|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum StabilizerConvention {
    /// `Ω10⁺(q)`, of order `P` for even `q`.
    Omega,
    /// `SO10⁺(q)`, of order `P` for odd `q` and `2P` for even `q`.
    SpecialOrthogonal,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdentities {
    pub q: u32,
    pub se6_factorization: bool,
    /// Multiplier `d` of `P` that matched, if any.
    pub matched_d: Option<u32>,
    pub stabilizer: StabilizerConvention,
    pub twisted_orbit_sum: bool,
    pub f4_factorization: bool,
    pub twisted_se6_factorization: bool,
    pub rank3_partition: bool,
    pub idempotent_partition: bool,
    pub case_sum: bool,
}

impl OrderIdentities {
    pub fn all_hold(&self) -> bool {
        self.se6_factorization
            && self.twisted_orbit_sum
            && self.f4_factorization
            && self.twisted_se6_factorization
            && self.rank3_partition
            && self.idempotent_partition
            && self.case_sum
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "se6_factorization": self.se6_factorization,
            "stabilizer_convention": self.stabilizer,
            "matched_d": self.matched_d,
            "twisted_orbit_sum": self.twisted_orbit_sum,
            "f4_factorization": self.f4_factorization,
            "twisted_se6_factorization": self.twisted_se6_factorization,
            "rank3_partition": self.rank3_partition,
            "idempotent_partition": self.idempotent_partition,
            "case_sum": self.case_sum,
            "all_hold": self.all_hold(),
        })
    }
}

pub fn order_identities(q: u32) -> Result<OrderIdentities> {
    let c = closed_form_counts(q)?;
    let qb = BigUint::from(q);
    let matched_d = if c.stabilizer_candidates[0] == c.se6 {
        Some(1)
    } else if c.stabilizer_candidates[1] == c.se6 {
        Some(2)
    } else {
        None
    };
    let stabilizer = match (matched_d, q % 2 == 0) {
        (Some(1), true) => StabilizerConvention::Omega,
        (Some(1), false) | (Some(2), true) => StabilizerConvention::SpecialOrthogonal,
        _ => StabilizerConvention::Neither,
    };
    let qq = &qb * &qb;
    let twisted_sum: BigUint = c.twisted_orbits.iter().sum();
    let case_sum: BigUint = c.cases.iter().sum();
    let twisted_stab = &c.twisted_orbits[2] * spin10_minus_order(q) * (&qb + 1u32);
    Ok(OrderIdentities {
        q,
        se6_factorization: matched_d.is_some(),
        matched_d,
        stabilizer,
        twisted_orbit_sum: twisted_sum == white_points(&qq),
        f4_factorization: c.f4 == &c.primitive_idempotents * spin9_order(q),
        twisted_se6_factorization: twisted_stab == c.twisted_se6,
        rank3_partition: BigUint::one() + &c.suborbit_all_white + &c.suborbit_two_white
            == c.white_points,
        idempotent_partition: &c.primitive_idempotents * (&qb - 1u32) + &c.trace_zero_white
            == c.white_vectors,
        case_sum: case_sum == c.white_vectors && !c.white_vectors.is_zero(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn q2_values() {
        let c = closed_form_counts(2).unwrap();
        assert_eq!(c.white_vectors, n(139503));
        assert_eq!(c.white_points, n(139503));
        assert_eq!(c.suborbit_all_white, n(4590));
        assert_eq!(c.suborbit_two_white, n(134912));
        assert_eq!(c.primitive_idempotents, n(69888));
        assert_eq!(c.trace_zero_white, n(69615));
        let cases: Vec<BigUint> = [14400, 48960, 55488, 14175, 6075, 405].map(n).to_vec();
        assert_eq!(c.cases.to_vec(), cases);
        assert_eq!(c.f4, n(3311126603366400));
    }

    #[test]
    fn q3_case_total() {
        let c = closed_form_counts(3).unwrap();
        let total: BigUint = c.cases.iter().sum();
        assert_eq!(total, n(130747526));
        assert!(closed_form_counts(4).unwrap().se6.bits() > 128);
    }

    #[test]
    fn identities_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 16, 25] {
            let r = order_identities(q).unwrap();
            assert!(r.all_hold(), "{r:?}");
        }
        assert_eq!(order_identities(2).unwrap().stabilizer, StabilizerConvention::Omega);
        assert_eq!(
            order_identities(3).unwrap().stabilizer,
            StabilizerConvention::SpecialOrthogonal
        );
    }

    #[test]
    fn rejects_bad_q() {
        assert!(closed_form_counts(1).is_err());
        assert!(closed_form_counts(6).is_err());
    }

    #[test]
    fn json_keeps_digits() {
        let v = closed_form_counts(3).unwrap().to_json();
        let s = serde_json::to_string(&v["se6_order"]).unwrap();
        assert_eq!(s, closed_form_counts(3).unwrap().se6.to_string());
    }
}
