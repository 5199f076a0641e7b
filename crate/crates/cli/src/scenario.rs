//! Scenario files: TOML documents describing a model, seeds, a time grid, the
//! ordered bases to score against and the outputs to write.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use krylov_core::linalg::{CMatrix, CVector};
use krylov_core::models::{
    build_pair, build_rydberg_pair, build_single_qubit, build_two_level_atom, rydberg_seed_vector, PairSeed,
    PairSpec, RydbergPairSpec, SingleQubitSpec, TwoLevelAtomSpec, ATOM_LABELS, QUBIT_LABELS,
};
use krylov_core::subspace::{random_instance_seeded, rydberg_blockade_partition, PartitionedHamiltonian};
use krylov_core::{Complex64, HermitianOperator, OrderedBasis, StateVector};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{invalid, CliError, Result};
use crate::values::parse_scalar;

/// Largest time grid a scenario may request.
pub const MAX_POINTS: i64 = 200_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Number(f64),
    Expr(String),
}

impl Scalar {
    fn eval(&self, field: &str) -> Result<f64> {
        match self {
            Scalar::Number(x) if x.is_finite() => Ok(*x),
            Scalar::Number(_) => Err(invalid(field, "must be finite")),
            Scalar::Expr(s) => parse_scalar(s).map_err(|e| invalid(field, e.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Amplitude {
    Real(f64),
    Complex([f64; 2]),
}

impl Amplitude {
    fn value(&self) -> Complex64 {
        match *self {
            Amplitude::Real(x) => Complex64::new(x, 0.0),
            Amplitude::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmplitudeSeed {
    pub amplitudes: Vec<Amplitude>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlochSeed {
    pub theta: Scalar,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawSeed {
    Label(String),
    Labels(Vec<String>),
    Amplitudes(AmplitudeSeed),
    Bloch(BlochSeed),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitBasis {
    pub explicit: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RawBasis {
    Named(String),
    Explicit(ExplicitBasis),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawGrid {
    pub start: Scalar,
    pub end: Scalar,
    pub points: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomPartition {
    pub gap: Scalar,
    pub ratio: Scalar,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPartition {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels_a: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels_b: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_a: Option<Vec<Vec<Amplitude>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_b: Option<Vec<Vec<Amplitude>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<Vec<Amplitude>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random: Option<RandomPartition>,
}

/// A scenario exactly as written in the file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawScenario {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub model: String,
    #[serde(default)]
    pub params: BTreeMap<String, Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<RawSeed>,
    pub time_grid: RawGrid,
    #[serde(default)]
    pub bases: Vec<RawBasis>,
    #[serde(default)]
    pub outputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub random_seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<RawPartition>,
}

pub fn parse_scenario(text: &str) -> Result<RawScenario> {
    toml::from_str(text).map_err(|e| CliError::Parse(e.to_string().trim_end().to_string()))
}

/// Parses and validates in one step.
pub fn load_scenario(text: &str, default_name: &str) -> Result<Scenario> {
    parse_scenario(text)?.validate(default_name)
}

impl RawScenario {
    /// SHA-256 of the canonical JSON form, so formatting and comments do not matter.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("scenario serializes");
        Sha256::digest(canonical.as_bytes())
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Copy with `params.<name>` replaced; the parameter must already be set.
    pub fn with_param(&self, name: &str, value: f64) -> Result<RawScenario> {
        if !self.params.contains_key(name) {
            return Err(invalid(
                format!("params.{name}"),
                "not set in the scenario; only existing parameters can be swept",
            ));
        }
        let mut out = self.clone();
        out.params.insert(name.to_string(), Scalar::Number(value));
        Ok(out)
    }

    pub fn validate(&self, default_name: &str) -> Result<Scenario> {
        let name = self.name.clone().unwrap_or_else(|| default_name.to_string());
        if name.is_empty()
            || name.starts_with('.')
            || !name.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
        {
            return Err(invalid("name", format!("{name:?} must be a plain file name (letters, digits, _ - .)")));
        }
        let grid = self.time_grid()?;
        let model = self.model()?;
        let seeds = self.seeds(&model)?;
        let bases = self.bases(&model, &seeds)?;
        let outputs = self.outputs(&model, &bases)?;
        Ok(Scenario {
            name,
            digest: self.digest(),
            model,
            seeds,
            grid,
            bases,
            outputs,
            raw: self.clone(),
        })
    }

    fn time_grid(&self) -> Result<TimeGrid> {
        let start = self.time_grid.start.eval("time_grid.start")?;
        let end = self.time_grid.end.eval("time_grid.end")?;
        let points = self.time_grid.points;
        if !(2..=MAX_POINTS).contains(&points) {
            return Err(invalid("time_grid.points", format!("must be between 2 and {MAX_POINTS}, got {points}")));
        }
        if end <= start {
            return Err(invalid("time_grid.end", format!("must exceed start ({end} <= {start})")));
        }
        Ok(TimeGrid {
            start,
            end,
            points: points as usize,
        })
    }

    fn model(&self) -> Result<Model> {
        let mut p = Params::new(&self.params, &self.model);
        let model = match self.model.as_str() {
            "single_qubit" => Model::SingleQubit { omega: p.require("omega")? },
            "two_level_atom" => {
                let (omega, delta) = (p.require("omega")?, p.optional("delta", 0.0)?);
                Model::TwoLevelAtom(TwoLevelAtomSpec::new(omega, delta).map_err(|e| invalid("params", e.to_string()))?)
            }
            "pair_noninteracting" => {
                let spec = PairSpec::new(
                    p.require("omega1")?,
                    p.require("omega2")?,
                    p.require("theta1")?,
                    p.require("theta2")?,
                    p.optional("phi1", 0.0)?,
                    p.optional("phi2", 0.0)?,
                )
                .map_err(|e| invalid("params", e.to_string()))?;
                Model::Pair(spec)
            }
            "rydberg_pair" => {
                let omega = p.get("omega")?;
                let delta = p.get("delta")?;
                let (o1, o2) = match omega {
                    Some(o) => (p.forbid_with("omega1", "omega", o)?, p.forbid_with("omega2", "omega", o)?),
                    None => (p.require("omega1")?, p.require("omega2")?),
                };
                let (d1, d2) = match delta {
                    Some(d) => (p.forbid_with("delta1", "delta", d)?, p.forbid_with("delta2", "delta", d)?),
                    None => (p.optional("delta1", 0.0)?, p.optional("delta2", 0.0)?),
                };
                let v0 = p.optional("v0", 0.0)?;
                Model::Rydberg(RydbergPairSpec::new(o1, o2, d1, d2, v0).map_err(|e| invalid("params", e.to_string()))?)
            }
            "partitioned_custom" => Model::Partitioned(self.partition()?),
            other => {
                return Err(invalid(
                    "model",
                    format!(
                        "unknown model {other:?}; expected one of single_qubit, two_level_atom, \
                         pair_noninteracting, rydberg_pair, partitioned_custom"
                    ),
                ))
            }
        };
        p.finish()?;
        if !matches!(model, Model::Partitioned(_)) && self.partition.is_some() {
            return Err(invalid("partition", format!("only used by partitioned_custom, not {}", self.model)));
        }
        Ok(model)
    }

    fn partition(&self) -> Result<PartitionedHamiltonian> {
        let raw = self
            .partition
            .as_ref()
            .ok_or_else(|| invalid("partition", "required by model partitioned_custom"))?;
        if let Some(random) = &raw.random {
            let explicit = raw.labels_a.is_some()
                || raw.labels_b.is_some()
                || raw.c_a.is_some()
                || raw.c_b.is_some()
                || raw.d.is_some();
            if explicit {
                return Err(invalid("partition.random", "cannot be combined with explicit blocks"));
            }
            let gap = random.gap.eval("partition.random.gap")?;
            let ratio = random.ratio.eval("partition.random.ratio")?;
            let seed = self.random_seed.unwrap_or(0);
            return random_instance_seeded(seed, gap, ratio)
                .map(|inst| inst.partition)
                .map_err(|e| invalid("partition.random", e.to_string()));
        }
        let labels = |v: &Option<Vec<String>>, field: &str| {
            v.clone().ok_or_else(|| invalid(format!("partition.{field}"), "required"))
        };
        let block = |v: &Option<Vec<Vec<Amplitude>>>, field: &str, rows: usize, cols: usize| -> Result<CMatrix> {
            let field = format!("partition.{field}");
            let v = v.as_ref().ok_or_else(|| invalid(&field, "required"))?;
            if v.len() != rows || v.iter().any(|r| r.len() != cols) {
                return Err(invalid(&field, format!("must be {rows} rows of {cols} entries")));
            }
            let m = CMatrix::from_fn(rows, cols, |i, j| v[i][j].value());
            if m.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(invalid(&field, "entries must be finite"));
            }
            Ok(m)
        };
        let labels_a = labels(&raw.labels_a, "labels_a")?;
        let labels_b = labels(&raw.labels_b, "labels_b")?;
        let (n_a, n_b) = (labels_a.len(), labels_b.len());
        let c_a = block(&raw.c_a, "c_a", n_a, n_a)?;
        let c_b = block(&raw.c_b, "c_b", n_b, n_b)?;
        let d = block(&raw.d, "d", n_a, n_b)?;
        PartitionedHamiltonian::new(labels_a, labels_b, c_a, c_b, d).map_err(|e| invalid("partition", e.to_string()))
    }

    fn seeds(&self, model: &Model) -> Result<Vec<SeedSpec>> {
        let labelled = |label: &str| -> Result<SeedSpec> {
            let v = model
                .basis_vector(label)
                .ok_or_else(|| invalid("seed", format!("unknown label {label:?} for model {}", model.kind())))?;
            Ok(SeedSpec {
                label: label.to_string(),
                state: StateVector::new(v, model.labels())?,
            })
        };
        let seeds = match (&self.seed, model) {
            (None, Model::Pair(spec)) => vec![SeedSpec {
                label: "product".into(),
                state: build_pair(spec).1,
            }],
            (Some(RawSeed::Label(l)), Model::Pair(spec)) if l == "product" => vec![SeedSpec {
                label: "product".into(),
                state: build_pair(spec).1,
            }],
            (Some(_), Model::Pair(_)) => {
                return Err(invalid("seed", "pair_noninteracting always starts from the product state; use \"product\" or omit"))
            }
            (None, _) => return Err(invalid("seed", format!("required by model {}", model.kind()))),
            (Some(RawSeed::Label(l)), _) => vec![labelled(l)?],
            (Some(RawSeed::Labels(ls)), _) => {
                if ls.is_empty() {
                    return Err(invalid("seed", "empty list"));
                }
                ls.iter().map(|l| labelled(l)).collect::<Result<_>>()?
            }
            (Some(RawSeed::Amplitudes(a)), _) => {
                if a.amplitudes.len() != model.dim() {
                    return Err(invalid(
                        "seed.amplitudes",
                        format!("expected {} amplitudes, got {}", model.dim(), a.amplitudes.len()),
                    ));
                }
                let v = CVector::from_iterator(a.amplitudes.len(), a.amplitudes.iter().map(Amplitude::value));
                let state = StateVector::normalized(v, model.labels())
                    .map_err(|e| invalid("seed.amplitudes", e.to_string()))?;
                vec![SeedSpec {
                    label: a.label.clone().unwrap_or_else(|| "custom".into()),
                    state,
                }]
            }
            (Some(RawSeed::Bloch(b)), Model::SingleQubit { omega }) => {
                let theta = b.theta.eval("seed.theta")?;
                let phi = b.phi.as_ref().map(|p| p.eval("seed.phi")).transpose()?.unwrap_or(0.0);
                if !(0.0..=std::f64::consts::PI).contains(&theta) {
                    return Err(invalid("seed.theta", "must lie in [0, pi]"));
                }
                let spec = SingleQubitSpec::from_bloch(*omega, theta, phi)?;
                vec![SeedSpec {
                    label: "bloch".into(),
                    state: build_single_qubit(&spec).1,
                }]
            }
            (Some(RawSeed::Bloch(_)), _) => {
                return Err(invalid("seed", "theta/phi seeds are only available for single_qubit"))
            }
        };
        let mut stems = BTreeSet::new();
        for s in &seeds {
            if !stems.insert(file_stem(&s.label)) {
                return Err(invalid("seed", format!("label {:?} is used twice", s.label)));
            }
        }
        Ok(seeds)
    }

    fn bases(&self, model: &Model, seeds: &[SeedSpec]) -> Result<Vec<BasisSpec>> {
        if self.bases.is_empty() {
            return Ok(vec![BasisSpec::KrylovFull]);
        }
        let mut out = Vec::new();
        let mut explicit_count = 0;
        for (i, b) in self.bases.iter().enumerate() {
            let field = format!("bases[{i}]");
            let spec = match b {
                RawBasis::Named(n) if n == "krylov_full" => BasisSpec::KrylovFull,
                RawBasis::Named(n) if n == "krylov_effective" => {
                    let p = model.partition().ok_or_else(|| {
                        invalid(&field, format!("krylov_effective needs a partitioned model, not {}", model.kind()))
                    })?;
                    for s in seeds {
                        let w = p.b_weight(s.state.amplitudes());
                        if w > krylov_core::subspace::SEED_SUPPORT_TOL {
                            return Err(invalid(
                                &field,
                                format!("krylov_effective needs seeds inside subspace A; {:?} has weight {w:e} outside", s.label),
                            ));
                        }
                    }
                    BasisSpec::KrylovEffective
                }
                RawBasis::Named(n) => {
                    return Err(invalid(
                        &field,
                        format!("unknown basis {n:?}; expected krylov_full, krylov_effective or {{ explicit = [...] }}"),
                    ))
                }
                RawBasis::Explicit(e) => {
                    let vectors = e
                        .explicit
                        .iter()
                        .map(|l| {
                            model
                                .basis_vector(l)
                                .ok_or_else(|| invalid(&field, format!("unknown label {l:?} for model {}", model.kind())))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let basis = OrderedBasis::with_linear_weights(vectors).map_err(|e| invalid(&field, e.to_string()))?;
                    let name = format!("explicit{explicit_count}");
                    explicit_count += 1;
                    BasisSpec::Explicit {
                        name,
                        labels: e.explicit.clone(),
                        basis,
                    }
                }
            };
            if out.iter().any(|o: &BasisSpec| o.name() == spec.name()) {
                return Err(invalid(&field, format!("basis {} is listed twice", spec.name())));
            }
            out.push(spec);
        }
        Ok(out)
    }

    fn outputs(&self, model: &Model, bases: &[BasisSpec]) -> Result<BTreeSet<Output>> {
        if self.outputs.is_empty() {
            return Ok(BTreeSet::from([Output::Complexity]));
        }
        let mut out = BTreeSet::new();
        for (i, o) in self.outputs.iter().enumerate() {
            let field = format!("outputs[{i}]");
            let kind = Output::ALL
                .into_iter()
                .find(|k| k.name() == o)
                .ok_or_else(|| {
                    let names: Vec<_> = Output::ALL.iter().map(|k| k.name()).collect();
                    invalid(&field, format!("unknown output {o:?}; expected one of {}", names.join(", ")))
                })?;
            match kind {
                Output::Bloch if model.dim() != 2 => {
                    return Err(invalid(&field, format!("bloch needs a two-level model, not {}", model.kind())))
                }
                Output::Comparison
                    if model.partition().is_some() && !bases.contains(&BasisSpec::KrylovEffective) =>
                {
                    return Err(invalid(&field, "comparison for partitioned models needs the krylov_effective basis"))
                }
                _ => {}
            }
            out.insert(kind);
        }
        Ok(out)
    }
}

/// Tracks which parameters a model consumed so leftovers can be reported.
struct Params<'a> {
    params: &'a BTreeMap<String, Scalar>,
    model: &'a str,
    used: BTreeSet<&'a str>,
}

impl<'a> Params<'a> {
    fn new(params: &'a BTreeMap<String, Scalar>, model: &'a str) -> Self {
        Self {
            params,
            model,
            used: BTreeSet::new(),
        }
    }

    fn get(&mut self, key: &'a str) -> Result<Option<f64>> {
        self.used.insert(key);
        self.params.get(key).map(|v| v.eval(&format!("params.{key}"))).transpose()
    }

    fn require(&mut self, key: &'a str) -> Result<f64> {
        self.get(key)?
            .ok_or_else(|| invalid(format!("params.{key}"), format!("required by model {}", self.model)))
    }

    fn optional(&mut self, key: &'a str, default: f64) -> Result<f64> {
        Ok(self.get(key)?.unwrap_or(default))
    }

    /// `value`, provided `key` is absent because `instead` already covers it.
    fn forbid_with(&mut self, key: &'a str, instead: &str, value: f64) -> Result<f64> {
        if self.params.contains_key(key) {
            return Err(invalid(format!("params.{key}"), format!("conflicts with params.{instead}")));
        }
        self.used.insert(key);
        Ok(value)
    }

    fn finish(self) -> Result<()> {
        match self.params.keys().find(|k| !self.used.contains(k.as_str())) {
            Some(k) => Err(invalid(format!("params.{k}"), format!("not a parameter of model {}", self.model))),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub start: f64,
    pub end: f64,
    pub points: usize,
}

impl TimeGrid {
    pub fn times(&self) -> Vec<f64> {
        krylov_core::analysis::linspace(self.start, self.end, self.points)
    }
}

#[derive(Debug, Clone)]
pub enum Model {
    SingleQubit { omega: f64 },
    TwoLevelAtom(TwoLevelAtomSpec),
    Pair(PairSpec),
    Rydberg(RydbergPairSpec),
    Partitioned(PartitionedHamiltonian),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::SingleQubit { .. } => "single_qubit",
            Model::TwoLevelAtom(_) => "two_level_atom",
            Model::Pair(_) => "pair_noninteracting",
            Model::Rydberg(_) => "rydberg_pair",
            Model::Partitioned(_) => "partitioned_custom",
        }
    }

    pub fn hamiltonian(&self) -> HermitianOperator {
        match self {
            Model::SingleQubit { omega } => {
                build_single_qubit(&SingleQubitSpec::from_bloch(*omega, 0.0, 0.0).expect("finite omega")).0
            }
            Model::TwoLevelAtom(spec) => build_two_level_atom(spec),
            Model::Pair(spec) => build_pair(spec).0,
            Model::Rydberg(spec) => build_rydberg_pair(spec),
            Model::Partitioned(p) => p.assemble(),
        }
    }

    pub fn labels(&self) -> Vec<String> {
        let own = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        match self {
            Model::SingleQubit { .. } => own(&QUBIT_LABELS),
            Model::TwoLevelAtom(_) => own(&ATOM_LABELS),
            Model::Pair(_) => own(&krylov_core::models::PAIR_LABELS),
            Model::Rydberg(_) => krylov_core::models::rydberg_labels(),
            Model::Partitioned(p) => p.labels(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels().len()
    }

    /// Unit vector named by `label`; Rydberg pairs also know `plus` and `minus`.
    pub fn basis_vector(&self, label: &str) -> Option<CVector> {
        if let Model::Rydberg(_) = self {
            return label.parse::<PairSeed>().ok().map(rydberg_seed_vector);
        }
        let labels = self.labels();
        let idx = labels.iter().position(|l| l == label)?;
        Some(StateVector::basis_state(labels, idx).ok()?.into_amplitudes())
    }

    /// The `A`/`B` split used by `krylov_effective` and comparisons.
    pub fn partition(&self) -> Option<PartitionedHamiltonian> {
        match self {
            Model::Rydberg(spec) => Some(rydberg_blockade_partition(spec)),
            Model::Partitioned(p) => Some(p.clone()),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SeedSpec {
    pub label: String,
    pub state: StateVector,
}

#[derive(Debug, Clone)]
pub enum BasisSpec {
    KrylovFull,
    KrylovEffective,
    Explicit {
        name: String,
        labels: Vec<String>,
        basis: OrderedBasis,
    },
}

impl PartialEq for BasisSpec {
    fn eq(&self, other: &Self) -> bool {
        self.name() == other.name()
    }
}

impl BasisSpec {
    /// Name used in column headers.
    pub fn name(&self) -> &str {
        match self {
            BasisSpec::KrylovFull => "krylov",
            BasisSpec::KrylovEffective => "effective",
            BasisSpec::Explicit { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Output {
    Complexity,
    Populations,
    Shannon,
    Ipr,
    Lanczos,
    Bloch,
    Comparison,
}

impl Output {
    pub const ALL: [Output; 7] = [
        Output::Complexity,
        Output::Populations,
        Output::Shannon,
        Output::Ipr,
        Output::Lanczos,
        Output::Bloch,
        Output::Comparison,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Output::Complexity => "complexity",
            Output::Populations => "populations",
            Output::Shannon => "shannon",
            Output::Ipr => "ipr",
            Output::Lanczos => "lanczos",
            Output::Bloch => "bloch",
            Output::Comparison => "comparison",
        }
    }
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated scenario, ready to run.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub digest: String,
    pub model: Model,
    pub seeds: Vec<SeedSpec>,
    pub grid: TimeGrid,
    pub bases: Vec<BasisSpec>,
    pub outputs: BTreeSet<Output>,
    pub raw: RawScenario,
}

/// File-name-safe version of a seed label: `+` and `-` are spelled out.
pub fn file_stem(label: &str) -> String {
    let mut out = String::new();
    for c in label.chars() {
        match c {
            '+' => out.push_str("plus"),
            '-' => out.push_str("minus"),
            c if c.is_ascii_alphanumeric() || c == '_' => out.push(c),
            _ => out.push('_'),
        }
    }
    if out.is_empty() {
        out.push_str("seed");
    }
    out
}
