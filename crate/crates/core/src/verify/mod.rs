//! Invariant suites: each runs a list of named checks and counts failures.
//!
//! Identities that are multilinear or quadratic in an argument are checked
//! exhaustively by letting that argument run over a determining set: the
//! basis for linear slots, the basis plus all pairwise sums `e_i + e_j` for
//! quadratic slots. Random checks come on top of that.

mod albert_suite;
mod generators_suite;
mod octonion_suite;
mod twisted_suite;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Octonion,
    Albert,
    Generators,
    Twisted,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Octonion, Suite::Albert, Suite::Generators, Suite::Twisted];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Octonion => "octonion",
            Suite::Albert => "albert",
            Suite::Generators => "generators",
            Suite::Twisted => "twisted",
        }
    }

    /// Field orders used when none is given; for the twisted suite these are
    /// the subfield orders `q` of `F_{q²}`.
    pub fn default_orders(self) -> &'static [u32] {
        match self {
            Suite::Twisted => &[2, 3],
            _ => &[2, 3, 4, 5],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub q: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "q": self.q,
            "seed": self.seed,
            "passed": self.passed(),
            "checks": self.checks,
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub q: u32,
    pub seed: u64,
    /// Random instances per randomized check.
    pub samples: u64,
}

impl VerifyConfig {
    pub fn new(q: u32, seed: u64) -> Self {
        VerifyConfig { q, seed, samples: 100_000 }
    }
}

/// Accumulates checks for one suite run.
pub(crate) struct Recorder {
    pub(crate) checks: Vec<Check>,
}

impl Recorder {
    fn new() -> Self {
        Recorder { checks: Vec::new() }
    }

    /// Runs `f` on every item, counting `false` results.
    pub(crate) fn each<T>(&mut self, name: &str, items: impl IntoIterator<Item = T>, mut f: impl FnMut(T) -> bool) {
        let (mut n, mut bad) = (0, 0);
        for x in items {
            n += 1;
            if !f(x) {
                bad += 1;
            }
        }
        self.push(name, n, bad, None);
    }

    pub(crate) fn push(&mut self, name: &str, instances: u64, failures: u64, note: Option<String>) {
        self.checks.push(Check { name: name.to_string(), instances, failures, note });
    }

    pub(crate) fn skip(&mut self, name: &str, why: &str) {
        self.push(name, 0, 0, Some(format!("skipped: {why}")));
    }
}

/// Deterministic per-suite generator stream.
pub(crate) fn rng_for(suite: Suite, cfg: &VerifyConfig) -> ChaCha8Rng {
    let tag = suite as u64 + 1;
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (tag << 56) ^ ((cfg.q as u64) << 32))
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let mut rec = Recorder::new();
    let mut rng = rng_for(suite, cfg);
    match suite {
        Suite::Octonion => octonion_suite::run(cfg, &mut rng, &mut rec)?,
        Suite::Albert => albert_suite::run(cfg, &mut rng, &mut rec)?,
        Suite::Generators => generators_suite::run(cfg, &mut rng, &mut rec)?,
        Suite::Twisted => twisted_suite::run(cfg, &mut rng, &mut rec)?,
    }
    Ok(SuiteReport { suite, q: cfg.q, seed: cfg.seed, checks: rec.checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(q: u32, suite: Suite) -> SuiteReport {
        let cfg = VerifyConfig { q, seed: 11, samples: 300 };
        run_suite(suite, &cfg).unwrap()
    }

    #[test]
    fn suites_pass_on_small_fields() {
        for q in [2, 3, 4, 5] {
            for suite in [Suite::Octonion, Suite::Albert, Suite::Generators] {
                let r = quick(q, suite);
                assert!(r.passed(), "q={q} {suite:?}: {:?}", r.failed_checks());
            }
        }
    }

    #[test]
    fn twisted_suite_fails_only_on_the_emerald_radical() {
        for q in [2, 3] {
            let r = quick(q, Suite::Twisted);
            let failed: Vec<&str> = r.failed_checks().iter().map(|c| c.name.as_str()).collect();
            assert_eq!(failed, ["emerald radical is the point itself"], "q={q}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = quick(3, Suite::Albert).to_json();
        let b = quick(3, Suite::Albert).to_json();
        assert_eq!(a, b);
        assert_ne!(
            run_suite(Suite::Albert, &VerifyConfig { q: 3, seed: 12, samples: 300 }).unwrap().seed,
            11
        );
    }
}
