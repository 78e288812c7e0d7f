//! The category description file and its validation.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use extri_core::axiomlab::{Suite, TrialConfig};
use extri_core::basecat::{Backend, Category, DimConstraint};
use extri_core::exactlin::{Matrix, PrimeField};
use extri_core::karoubi::KarObject;
use extri_core::quiverrep::{Quiver, Rep, RepMorphism};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: usize,
    /// `[source, target]` pairs.
    pub arrows: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum BackendSpec {
    Balanced { weights: Vec<i64> },
    /// Names of objects declared in the same file.
    Formal { generators: Vec<String> },
}

/// Row-major integer entries with an explicit shape; entries are reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixSpec {
    pub shape: [usize; 2],
    pub data: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ObjectSpec {
    pub dims: Vec<usize>,
    /// One matrix per arrow, in arrow order.
    #[serde(default)]
    pub maps: Vec<MatrixSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdempotentSpec {
    pub object: String,
    /// One matrix per vertex.
    pub maps: Vec<MatrixSpec>,
}

/// Defaults for `check`; command-line flags override them.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckSpec {
    pub seed: Option<u64>,
    pub trials: Option<u64>,
    pub suite: Option<String>,
    pub max_vertex_dim: Option<usize>,
    pub primes: Option<Vec<u32>>,
    pub quivers: Option<Vec<QuiverSpec>>,
    #[serde(default)]
    pub tamper: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryConfig {
    pub prime: u32,
    pub quiver: QuiverSpec,
    pub backend: BackendSpec,
    #[serde(default)]
    pub objects: BTreeMap<String, ObjectSpec>,
    #[serde(default)]
    pub idempotents: BTreeMap<String, IdempotentSpec>,
    #[serde(default)]
    pub check: Option<CheckSpec>,
}

/// A validated configuration.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub config: CategoryConfig,
    pub category: Category,
    pub objects: BTreeMap<String, Rep>,
    pub idempotents: BTreeMap<String, KarObject>,
}

fn semantic(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Semantic(format!("{field}: {msg}"))
}

pub fn parse(text: &str) -> Result<CategoryConfig, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    build(parse(&text)?)
}

fn quiver(spec: &QuiverSpec, field: &str) -> Result<Quiver, CliError> {
    let arrows = spec.arrows.iter().map(|&[s, t]| (s, t)).collect();
    Quiver::new(spec.vertices, arrows).map_err(|e| match e {
        extri_core::Error::Quiver(msg) => semantic(field, msg),
        other => semantic(field, other),
    })
}

fn matrix(f: PrimeField, spec: &MatrixSpec, field: &str) -> Result<Matrix, CliError> {
    let [rows, cols] = spec.shape;
    if spec.data.len() != rows * cols {
        return Err(semantic(
            field,
            format!("shape {rows}x{cols} needs {} entries, got {}", rows * cols, spec.data.len()),
        ));
    }
    let data = spec.data.iter().map(|&x| f.from_i64(x)).collect();
    Matrix::from_vec(f, rows, cols, data).map_err(|e| semantic(field, e))
}

pub fn build(config: CategoryConfig) -> Result<Loaded, CliError> {
    let f = PrimeField::new(config.prime).map_err(|e| semantic("prime", e))?;
    let q = Arc::new(quiver(&config.quiver, "quiver")?);

    let mut objects = BTreeMap::new();
    for (name, o) in &config.objects {
        let at = format!("objects.{name}");
        if o.dims.len() != q.vertices() {
            return Err(semantic(
                &format!("{at}.dims"),
                format!("{} entries for {} vertices", o.dims.len(), q.vertices()),
            ));
        }
        if o.maps.len() != q.arrows().len() {
            return Err(semantic(
                &format!("{at}.maps"),
                format!("{} matrices for {} arrows", o.maps.len(), q.arrows().len()),
            ));
        }
        let maps = o
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(f, m, &format!("{at}.maps[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let rep = Rep::new(q.clone(), f, o.dims.clone(), maps).map_err(|e| semantic(&at, e))?;
        objects.insert(name.clone(), rep);
    }

    let backend = match &config.backend {
        BackendSpec::Balanced { weights } => {
            if weights.len() != q.vertices() {
                return Err(semantic(
                    "backend.weights",
                    format!("{} weights for {} vertices", weights.len(), q.vertices()),
                ));
            }
            Backend::Balanced {
                constraint: DimConstraint { weights: weights.clone() },
            }
        }
        BackendSpec::Formal { generators } => {
            let gens = generators
                .iter()
                .map(|g| {
                    objects
                        .get(g)
                        .cloned()
                        .ok_or_else(|| semantic("backend.generators", format!("no object named {g:?}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Backend::Formal { generators: gens }
        }
    };
    let category = Category::new(q.clone(), f, backend).map_err(|e| semantic("backend", e))?;
    for (name, rep) in &objects {
        if !category.membership(rep) {
            return Err(semantic(&format!("objects.{name}"), "not a member of the category"));
        }
    }

    let mut idempotents = BTreeMap::new();
    for (name, spec) in &config.idempotents {
        let at = format!("idempotents.{name}");
        let rep = objects
            .get(&spec.object)
            .ok_or_else(|| semantic(&format!("{at}.object"), format!("no object named {:?}", spec.object)))?;
        if spec.maps.len() != q.vertices() {
            return Err(semantic(
                &format!("{at}.maps"),
                format!("{} matrices for {} vertices", spec.maps.len(), q.vertices()),
            ));
        }
        let maps = spec
            .maps
            .iter()
            .enumerate()
            .map(|(i, m)| matrix(f, m, &format!("{at}.maps[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let p = RepMorphism::new(rep.clone(), rep.clone(), maps).map_err(|e| semantic(&at, e))?;
        let obj = KarObject::new(rep.clone(), p).map_err(|e| semantic(&at, e))?;
        idempotents.insert(name.clone(), obj);
    }

    if let Some(check) = &config.check {
        trial_config(check)?;
    }

    Ok(Loaded {
        config,
        category,
        objects,
        idempotents,
    })
}

/// The trial configuration a `check` section describes, before flag overrides.
pub fn trial_config(spec: &CheckSpec) -> Result<TrialConfig, CliError> {
    let mut cfg = TrialConfig {
        trials: 200,
        ..TrialConfig::default()
    };
    if let Some(s) = spec.seed {
        cfg.seed = s;
    }
    if let Some(t) = spec.trials {
        cfg.trials = t;
    }
    if let Some(s) = &spec.suite {
        cfg.suite = s.parse::<Suite>().map_err(|e| semantic("check.suite", e))?;
    }
    if let Some(d) = spec.max_vertex_dim {
        cfg.max_vertex_dim = d;
    }
    if let Some(p) = &spec.primes {
        cfg.primes = p.clone();
    }
    if let Some(qs) = &spec.quivers {
        cfg.quivers = qs
            .iter()
            .enumerate()
            .map(|(i, q)| quiver(q, &format!("check.quivers[{i}]")))
            .collect::<Result<_, _>>()?;
    }
    cfg.tamper = spec.tamper.clone();
    cfg.validate().map_err(|e| semantic("check", e))?;
    Ok(cfg)
}

impl Loaded {
    pub fn object(&self, name: &str) -> Result<&Rep, CliError> {
        self.objects
            .get(name)
            .ok_or_else(|| CliError::Semantic(format!("no object named {name:?}")))
    }

    /// `(A, p)` for the named idempotent, or `(A, 1)` when none is given.
    pub fn kar_object(&self, object: &str, idem: Option<&str>) -> Result<KarObject, CliError> {
        let rep = self.object(object)?;
        match idem {
            None => Ok(KarObject::trivial(rep)),
            Some(name) => {
                let k = self
                    .idempotents
                    .get(name)
                    .ok_or_else(|| CliError::Semantic(format!("no idempotent named {name:?}")))?;
                if k.rep() != rep {
                    return Err(CliError::Semantic(format!("idempotent {name:?} does not act on {object:?}")));
                }
                Ok(k.clone())
            }
        }
    }
}
