//! Randomized verification of the axioms: seeded samplers, a catalogue of
//! checks, and a deterministic suite runner whose failures replay exactly.

mod checks;
mod gen;

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::basecat::{Backend, Category, DimConstraint};
use crate::error::{Error, Result};
use crate::exactlin::PrimeField;
use crate::karoubi::{FClass, FTriangle, KarMorphism, KarObject};
use crate::quiverrep::{ExtCocycle, Quiver, Rep, RepMorphism, SearchConfig};
use crate::weakcomp::WeakCompletion;

pub use gen::{Generator, Want};

/// Failure payloads kept per check; later failures are only counted.
pub const MAX_PAYLOADS: usize = 4;

/// Which checks a run covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Base,
    Karoubi,
    Weak,
    All,
}

impl Suite {
    fn covers(self, check: &str) -> bool {
        match self {
            Suite::All => true,
            Suite::Base => check.starts_with("base."),
            Suite::Karoubi => check.starts_with("karoubi."),
            Suite::Weak => check.starts_with("weak."),
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "base" => Ok(Suite::Base),
            "karoubi" => Ok(Suite::Karoubi),
            "weak" => Ok(Suite::Weak),
            "all" => Ok(Suite::All),
            other => Err(Error::Precondition(format!("unknown suite {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_vertex_dim: usize,
    pub primes: Vec<u32>,
    pub quivers: Vec<Quiver>,
    pub suite: Suite,
    pub search: SearchConfig,
    /// Checks whose main witness is corrupted before verification.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tamper: Vec<String>,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 0,
            trials: 20,
            max_vertex_dim: 3,
            primes: vec![2, 3],
            quivers: vec![Quiver::linear(2), Quiver::linear(3)],
            suite: Suite::All,
            search: SearchConfig::default(),
            tamper: Vec::new(),
        }
    }
}

impl TrialConfig {
    /// Rejects configurations no trial could run under.
    pub fn validate(&self) -> Result<()> {
        if self.primes.is_empty() {
            return Err(Error::Precondition("primes: empty list".into()));
        }
        if self.quivers.is_empty() {
            return Err(Error::Precondition("quivers: empty list".into()));
        }
        for &p in &self.primes {
            PrimeField::new(p).map_err(|e| Error::Precondition(format!("primes: {e}")))?;
        }
        let names = check_names();
        if let Some(t) = self.tamper.iter().find(|t| *t != "all" && !names.contains(&t.as_str())) {
            return Err(Error::Precondition(format!("tamper: unknown check {t:?}")));
        }
        Ok(())
    }

    fn tampers(&self, check: &str) -> bool {
        self.tamper.iter().any(|t| t == check || t == "all")
    }

    /// The category used by a trial: combinations of prime and quiver in turn.
    pub fn category_for(&self, trial: u64) -> CategorySpec {
        let combos = (self.primes.len() * self.quivers.len()).max(1) as u64;
        let k = (trial % combos) as usize;
        let quiver = self.quivers[k % self.quivers.len()].clone();
        CategorySpec {
            prime: self.primes[k / self.quivers.len()],
            backend: Backend::Balanced {
                constraint: DimConstraint::balanced(quiver.vertices()),
            },
            quiver,
            search: self.search,
        }
    }
}

/// Enough to rebuild a trial's base category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategorySpec {
    pub prime: u32,
    pub quiver: Quiver,
    pub backend: Backend,
    pub search: SearchConfig,
}

impl CategorySpec {
    pub fn build(&self) -> Result<Category> {
        Ok(Category::new(Arc::new(self.quiver.clone()), PrimeField::new(self.prime)?, self.backend.clone())?
            .with_search(self.search))
    }
}

/// One generated input value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Datum {
    Rep(Rep),
    Map(RepMorphism),
    Cocycle(ExtCocycle),
    Object(KarObject),
    KarMap(KarMorphism),
    Class(FClass),
    Triangle(FTriangle),
}

/// The named inputs of one trial.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sample(pub BTreeMap<String, Datum>);

macro_rules! accessor {
    ($name:ident, $variant:ident, $ty:ty) => {
        pub fn $name(&self, key: &str) -> Result<&$ty> {
            match self.0.get(key) {
                Some(Datum::$variant(x)) => Ok(x),
                _ => Err(Error::Shape(format!("sample has no {} named {key:?}", stringify!($name)))),
            }
        }
    };
}

impl Sample {
    pub fn with(mut self, key: &str, d: Datum) -> Self {
        self.0.insert(key.into(), d);
        self
    }

    accessor!(rep, Rep, Rep);
    accessor!(map, Map, RepMorphism);
    accessor!(cocycle, Cocycle, ExtCocycle);
    accessor!(object, Object, KarObject);
    accessor!(kar_map, KarMap, KarMorphism);
    accessor!(class, Class, FClass);
    accessor!(triangle, Triangle, FTriangle);
}

/// What a passing trial reports: observed dimensions and the witness it checked.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub dims: Vec<usize>,
    pub witness: serde_json::Value,
}

impl Outcome {
    pub fn new(dims: Vec<usize>, witness: &impl Serialize) -> Self {
        Outcome {
            dims,
            witness: serde_json::to_value(witness).expect("witness serializes"),
        }
    }
}

/// The categories a trial works in.
pub struct Lab {
    weak: WeakCompletion,
}

impl Lab {
    pub fn new(cat: Category) -> Self {
        Lab {
            weak: WeakCompletion::new(cat),
        }
    }

    pub fn cat(&self) -> &Category {
        self.weak.base()
    }

    pub fn tilde(&self) -> &crate::karoubi::Completion {
        self.weak.completion()
    }

    pub fn weak(&self) -> &WeakCompletion {
        &self.weak
    }
}

type GenerateFn = fn(&mut Generator<'_>) -> Result<Sample>;
type VerifyFn = fn(&Lab, &Sample, bool) -> Result<Outcome>;

/// A named check: a sampler and an independent verifier.
pub struct Check {
    pub name: &'static str,
    generate: GenerateFn,
    verify: VerifyFn,
}

/// Every check in a fixed order.
pub fn catalogue() -> Vec<Check> {
    checks::catalogue()
}

pub fn check_names() -> Vec<&'static str> {
    catalogue().iter().map(|c| c.name).collect()
}

fn trial_rng(seed: u64, check: &str, trial: u64) -> ChaCha8Rng {
    let mut h = Sha256::new();
    h.update(seed.to_le_bytes());
    h.update(check.as_bytes());
    h.update(trial.to_le_bytes());
    ChaCha8Rng::from_seed(h.finalize().into())
}

fn sha_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Inputs of a failed trial, sufficient to rerun the verifier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailurePayload {
    pub check: String,
    pub seed: u64,
    pub trial: u64,
    pub max_vertex_dim: usize,
    pub category: CategorySpec,
    /// Absent when sampling itself failed; the seed then replays it.
    pub sample: Option<Sample>,
    pub tamper: bool,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Observed dimension tuples and how often each occurred.
    pub dims: BTreeMap<String, u64>,
    /// Digest over the per-trial witness digests, in trial order.
    pub witness_digest: String,
    pub failures: Vec<FailurePayload>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub config: TrialConfig,
    pub checks: Vec<CheckRecord>,
    pub passed: u64,
    pub failed: u64,
    /// Digest of the serialized checks.
    pub digest: String,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

enum TrialResult {
    Pass { dims: Vec<usize>, digest: String },
    Fail(Box<FailurePayload>),
}

fn run_trial(cfg: &TrialConfig, check: &Check, trial: u64) -> TrialResult {
    let spec = cfg.category_for(trial);
    let tamper = cfg.tampers(check.name);
    let fail = |sample: Option<Sample>, message: String| {
        TrialResult::Fail(Box::new(FailurePayload {
            check: check.name.into(),
            seed: cfg.seed,
            trial,
            max_vertex_dim: cfg.max_vertex_dim,
            category: spec.clone(),
            sample,
            tamper,
            message,
        }))
    };
    let cat = match spec.build() {
        Ok(c) => c,
        Err(e) => return fail(None, format!("category: {e}")),
    };
    let lab = Lab::new(cat);
    let mut g = Generator::new(trial_rng(cfg.seed, check.name, trial), lab.tilde(), cfg.max_vertex_dim);
    let sample = match guarded(|| (check.generate)(&mut g)) {
        Ok(s) => s,
        Err(e) => return fail(None, format!("sampling: {e}")),
    };
    match guarded(|| (check.verify)(&lab, &sample, tamper)) {
        Ok(out) => TrialResult::Pass {
            digest: sha_hex(out.witness.to_string().as_bytes()),
            dims: out.dims,
        },
        Err(e) => fail(Some(sample), e.to_string()),
    }
}

/// Turns a panic into an error so one bad trial cannot take down the run.
fn guarded<T>(f: impl FnOnce() -> Result<T>) -> Result<T> {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| p.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "non-string panic".into());
        Err(Error::Assertion(format!("panicked: {msg}")))
    })
}

fn dims_key(dims: &[usize]) -> String {
    let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Runs every selected check `trials` times. Trials run in parallel; the
/// report is assembled in trial order.
///
/// Panics if `cfg` fails [`TrialConfig::validate`] and `trials > 0`.
pub fn run_suite(cfg: &TrialConfig) -> Report {
    if cfg.trials > 0 {
        if let Err(e) = cfg.validate() {
            panic!("invalid trial config: {e}");
        }
    }
    let checks: Vec<CheckRecord> = catalogue()
        .iter()
        .filter(|c| cfg.suite.covers(c.name))
        .map(|check| {
            let results: Vec<TrialResult> = (0..cfg.trials)
                .into_par_iter()
                .map(|t| run_trial(cfg, check, t))
                .collect();
            let mut rec = CheckRecord {
                name: check.name.into(),
                passed: 0,
                failed: 0,
                dims: BTreeMap::new(),
                witness_digest: String::new(),
                failures: Vec::new(),
            };
            let mut digests = Sha256::new();
            for r in results {
                match r {
                    TrialResult::Pass { dims, digest } => {
                        rec.passed += 1;
                        *rec.dims.entry(dims_key(&dims)).or_default() += 1;
                        digests.update(digest.as_bytes());
                    }
                    TrialResult::Fail(payload) => {
                        rec.failed += 1;
                        if rec.failures.len() < MAX_PAYLOADS {
                            rec.failures.push(*payload);
                        }
                    }
                }
            }
            rec.witness_digest = hex::encode(digests.finalize());
            rec
        })
        .collect();
    let passed = checks.iter().map(|c| c.passed).sum();
    let failed = checks.iter().map(|c| c.failed).sum();
    let digest = sha_hex(serde_json::to_string(&checks).expect("checks serialize").as_bytes());
    Report {
        config: cfg.clone(),
        checks,
        passed,
        failed,
        digest,
    }
}

/// Reruns a failure from its payload and returns the failure message, or
/// `Ok(None)` if the rerun passes.
pub fn replay(payload: &FailurePayload) -> Result<Option<String>> {
    let catalogue = catalogue();
    let check = catalogue
        .iter()
        .find(|c| c.name == payload.check)
        .ok_or_else(|| Error::Precondition(format!("unknown check {:?}", payload.check)))?;
    let lab = Lab::new(payload.category.build()?);
    let sample = match &payload.sample {
        Some(s) => s.clone(),
        None => {
            let rng = trial_rng(payload.seed, check.name, payload.trial);
            let mut g = Generator::new(rng, lab.tilde(), payload.max_vertex_dim);
            match guarded(|| (check.generate)(&mut g)) {
                Ok(s) => s,
                Err(e) => return Ok(Some(format!("sampling: {e}"))),
            }
        }
    };
    Ok(guarded(|| (check.verify)(&lab, &sample, payload.tamper)).err().map(|e| e.to_string()))
}

/// The sample a check draws for a given seed and trial.
pub fn sample_for(cfg: &TrialConfig, check: &str, trial: u64) -> Result<Sample> {
    let catalogue = catalogue();
    let c = catalogue
        .iter()
        .find(|c| c.name == check)
        .ok_or_else(|| Error::Precondition(format!("unknown check {check:?}")))?;
    let lab = Lab::new(cfg.category_for(trial).build()?);
    let mut g = Generator::new(trial_rng(cfg.seed, check, trial), lab.tilde(), cfg.max_vertex_dim);
    (c.generate)(&mut g)
}
