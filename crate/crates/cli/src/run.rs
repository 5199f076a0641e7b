//! Executes a validated scenario: one trace per seed plus a JSON report.

use krylov_core::bloch::{bloch_of, displacement_sq};
use krylov_core::krylov::{default_tol, evolve_states, lanczos, spread_complexity, LeakPolicy};
use krylov_core::models::{
    noninteracting_pair_complexity, single_qubit_complexity_closed, single_qubit_complexity_lanczos_form,
    SingleQubitSpec,
};
use krylov_core::subspace::{compare_spread, coupling_diagnostics, km_decomposition_check, PartitionedHamiltonian};
use krylov_core::{ComplexityTrace, HermitianOperator, KrylovBasis, StateVector};
use serde_json::{json, Value};

use crate::error::Result;
use crate::scenario::{file_stem, BasisSpec, Model, Output, Scenario, SeedSpec};
use crate::trace::TraceFile;

#[derive(Debug, Clone)]
pub struct SeedRun {
    pub label: String,
    /// File stem for the trace.
    pub stem: String,
    pub trace: TraceFile,
    pub report: Value,
    /// Largest value of each basis' complexity, keyed by basis name.
    pub max_complexity: Vec<(String, f64)>,
    /// Largest interaction excess `F` for pair models.
    pub max_f: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct RunResult {
    pub scenario: String,
    pub digest: String,
    pub seeds: Vec<SeedRun>,
}

impl RunResult {
    pub fn report(&self) -> Value {
        let seeds: serde_json::Map<String, Value> =
            self.seeds.iter().map(|s| (s.label.clone(), s.report.clone())).collect();
        json!({
            "scenario": self.scenario,
            "digest": format!("sha256:{}", self.digest),
            "seeds": seeds,
        })
    }
}

pub fn run(scenario: &Scenario) -> Result<RunResult> {
    let h = scenario.model.hamiltonian();
    let times = scenario.grid.times();
    let seeds = scenario
        .seeds
        .iter()
        .map(|s| run_seed(scenario, &h, &times, s))
        .collect::<Result<Vec<_>>>()?;
    Ok(RunResult {
        scenario: scenario.name.clone(),
        digest: scenario.digest.clone(),
        seeds,
    })
}

struct Columns {
    names: Vec<String>,
    data: Vec<Vec<f64>>,
}

impl Columns {
    fn push(&mut self, name: String, values: Vec<f64>) {
        self.names.push(name);
        self.data.push(values);
    }

    fn into_trace(self, n: usize) -> TraceFile {
        let mut t = TraceFile::new(self.names);
        t.rows = (0..n).map(|k| self.data.iter().map(|c| c[k]).collect()).collect();
        t
    }
}

fn lanczos_json(k: &KrylovBasis) -> Value {
    json!({ "a": k.a(), "b": k.b(), "terminated": k.terminated(), "dimension": k.len() })
}

fn run_seed(scenario: &Scenario, h: &HermitianOperator, times: &[f64], seed: &SeedSpec) -> Result<SeedRun> {
    let outputs = &scenario.outputs;
    let states = evolve_states(h, &seed.state, times)?;
    let mut cols = Columns {
        names: vec!["time".into()],
        data: vec![times.to_vec()],
    };
    let mut bases_report = serde_json::Map::new();
    let mut max_complexity = Vec::new();

    for spec in &scenario.bases {
        let name = spec.name().to_string();
        let (trace, krylov): (ComplexityTrace, Option<KrylovBasis>) = match spec {
            BasisSpec::KrylovFull => {
                let k = lanczos(h, &seed.state, default_tol(h))?;
                let t = spread_complexity(times, &states, &k.to_ordered(), LeakPolicy::Strict)?;
                (t, Some(k))
            }
            BasisSpec::KrylovEffective => {
                let p = scenario.model.partition().expect("validated partitioned model");
                let h_a = p.h_a();
                let k = lanczos(&h_a, &seed.state, default_tol(&h_a))?;
                let t = spread_complexity(times, &states, &k.to_ordered(), LeakPolicy::Report)?;
                (t, Some(k))
            }
            BasisSpec::Explicit { basis, .. } => (spread_complexity(times, &states, basis, LeakPolicy::Report)?, None),
        };
        let mut entry = serde_json::Map::new();
        entry.insert("max_complexity".into(), json!(trace.max_complexity()));
        entry.insert("max_leak".into(), json!(trace.max_leak()));
        if let BasisSpec::Explicit { labels, .. } = spec {
            entry.insert("labels".into(), json!(labels));
        }
        if let (Some(k), true) = (&krylov, outputs.contains(&Output::Lanczos)) {
            entry.insert("lanczos".into(), lanczos_json(k));
        }
        bases_report.insert(name.clone(), Value::Object(entry));
        max_complexity.push((name.clone(), trace.max_complexity()));

        if outputs.contains(&Output::Complexity) {
            cols.push(format!("C[{name}]"), trace.complexity.clone());
            if !matches!(spec, BasisSpec::KrylovFull) {
                cols.push(format!("leak[{name}]"), trace.leak.clone());
            }
        }
        if outputs.contains(&Output::Populations) {
            let width = trace.populations.first().map_or(0, Vec::len);
            for n in 0..width {
                cols.push(format!("P{n}[{name}]"), trace.population_of(n));
            }
        }
        if outputs.contains(&Output::Shannon) {
            cols.push(format!("S[{name}]"), trace.shannon.clone());
        }
        if outputs.contains(&Output::Ipr) {
            cols.push(format!("IPR[{name}]"), trace.ipr.clone());
        }
    }

    if outputs.contains(&Output::Bloch) {
        let alphas = states.iter().map(bloch_of).collect::<krylov_core::Result<Vec<_>>>()?;
        cols.push("alpha_x".into(), alphas.iter().map(|a| a.x).collect());
        cols.push("alpha_y".into(), alphas.iter().map(|a| a.y).collect());
        cols.push("alpha_z".into(), alphas.iter().map(|a| a.z).collect());
        let d = states
            .iter()
            .map(|s| displacement_sq(s, &seed.state))
            .collect::<krylov_core::Result<Vec<_>>>()?;
        cols.push("displacement_sq".into(), d);
    }

    let mut report = serde_json::Map::new();
    report.insert("bases".into(), Value::Object(bases_report));
    let mut max_f = None;
    if outputs.contains(&Output::Comparison) {
        let (value, f) = comparison(scenario, &seed.state, times, &mut cols)?;
        report.insert("comparison".into(), value);
        max_f = f;
    }

    let mut trace = cols.into_trace(times.len());
    trace.metadata.insert("scenario".into(), scenario.name.clone());
    trace.metadata.insert("seed".into(), file_stem(&seed.label));
    trace.metadata.insert("model".into(), scenario.model.kind().into());
    trace.metadata.insert("digest".into(), format!("sha256:{}", scenario.digest));
    Ok(SeedRun {
        label: seed.label.clone(),
        stem: file_stem(&seed.label),
        trace,
        report: Value::Object(report),
        max_complexity,
        max_f,
    })
}

fn comparison(
    scenario: &Scenario,
    seed: &StateVector,
    times: &[f64],
    cols: &mut Columns,
) -> Result<(Value, Option<f64>)> {
    match &scenario.model {
        Model::SingleQubit { omega } => {
            let amp = seed.amplitudes();
            let spec = SingleQubitSpec::new(*omega, amp[0], amp[1])?;
            cols.push("C_closed".into(), times.iter().map(|&t| single_qubit_complexity_closed(&spec, t)).collect());
            Ok((json!({ "a0": spec.a0(), "b1": spec.b1() }), None))
        }
        Model::TwoLevelAtom(_) => {
            let h = scenario.model.hamiltonian();
            let k = lanczos(&h, seed, default_tol(&h))?;
            let (a0, a1, b1) = (k.a()[0], k.a().get(1).copied().unwrap_or(0.0), k.b_at(1));
            cols.push(
                "C_closed".into(),
                times.iter().map(|&t| single_qubit_complexity_lanczos_form(a0, a1, b1, t)).collect(),
            );
            Ok((json!({ "a0": a0, "a1": a1, "b1": b1 }), None))
        }
        Model::Pair(spec) => {
            let parts: Vec<_> = times.iter().map(|&t| noninteracting_pair_complexity(spec, t)).collect();
            let f: Vec<f64> = parts.iter().map(|p| p.f).collect();
            let max_f = f.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            cols.push("C1".into(), parts.iter().map(|p| p.c1).collect());
            cols.push("C2".into(), parts.iter().map(|p| p.c2).collect());
            cols.push("F".into(), f);
            let degenerate = parts.first().is_some_and(|p| p.degenerate);
            Ok((json!({ "max_f": max_f, "degenerate": degenerate }), Some(max_f)))
        }
        Model::Rydberg(_) | Model::Partitioned(_) => {
            let p = scenario.model.partition().expect("partitioned model");
            partition_comparison(&p, seed, times, cols).map(|v| (v, None))
        }
    }
}

fn partition_comparison(p: &PartitionedHamiltonian, seed: &StateVector, times: &[f64], cols: &mut Columns) -> Result<Value> {
    let rep = compare_spread(p, seed, &p.h_a(), times)?;
    let diag = coupling_diagnostics(p)?;
    let km: Vec<Value> = (1..=rep.m)
        .map(|m| {
            km_decomposition_check(p, seed, m).map(|k| {
                json!({
                    "m": k.m,
                    "b_m": k.b_m,
                    "b_a_m": k.b_a_m,
                    "residual": k.residual,
                    "tolerance": k.tolerance,
                    "holds": k.holds,
                    "alpha": k.alpha.map(|a| [a.re, a.im]),
                    "lambda": k.lambda,
                    "remainder_norm": k.remainder_norm,
                    "remainder_b_weight": k.remainder_b_weight,
                })
            })
        })
        .collect::<krylov_core::Result<_>>()?;
    cols.push("pop_B".into(), rep.b_population.clone());
    Ok(json!({
        "shared_prefix": rep.m,
        "max_excess": rep.max_excess(),
        "first_violation_time": rep.first_violation_time,
        "max_b_population": rep.max_b_population(),
        "max_leak": rep.effective.max_leak(),
        "coupling": {
            "max_abs_d": diag.max_abs_d,
            "gap": diag.gap,
            "ratio": diag.ratio,
            "non_positive_gap": diag.non_positive_gap,
            "weakly_coupled": diag.weakly_coupled,
        },
        "km": km,
    }))
}
