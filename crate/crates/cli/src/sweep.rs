//! Parameter sweeps over the Cartesian product of one or more value lists.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{invalid, Result};
use crate::output::{write_atomic, write_run};
use crate::run::{run, RunResult};
use crate::scenario::{file_stem, RawScenario, Scenario};
use crate::trace::TraceFile;
use crate::values::MAX_RANGE_POINTS;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepAxis {
    pub param: String,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub index: usize,
    pub values: Vec<f64>,
    pub scenario: Scenario,
}

/// Validates every point of the product before anything runs.
pub fn plan(raw: &RawScenario, default_name: &str, axes: &[SweepAxis]) -> Result<Vec<SweepPoint>> {
    if axes.is_empty() {
        return Err(invalid("--param", "at least one parameter is required"));
    }
    let mut seen = BTreeSet::new();
    for axis in axes {
        if !seen.insert(axis.param.as_str()) {
            return Err(invalid(format!("params.{}", axis.param), "swept twice"));
        }
        if axis.values.is_empty() {
            return Err(invalid(format!("params.{}", axis.param), "no values to sweep"));
        }
        raw.with_param(&axis.param, 0.0)?;
    }
    let total = axes.iter().try_fold(1usize, |acc, a| acc.checked_mul(a.values.len()));
    let total = match total {
        Some(n) if n <= MAX_RANGE_POINTS => n,
        _ => return Err(invalid("--values", format!("sweep has more than {MAX_RANGE_POINTS} points"))),
    };
    (0..total)
        .map(|index| {
            let mut rem = index;
            let mut values = vec![0.0; axes.len()];
            for (j, axis) in axes.iter().enumerate().rev() {
                values[j] = axis.values[rem % axis.values.len()];
                rem /= axis.values.len();
            }
            let mut point = raw.clone();
            for (axis, &v) in axes.iter().zip(&values) {
                point = point.with_param(&axis.param, v)?;
            }
            let scenario = point.validate(default_name).map_err(|e| match e {
                crate::error::CliError::Validation { field, message } => invalid(
                    field,
                    format!("{message} (at {})", describe(axes, &values)),
                ),
                other => other,
            })?;
            Ok(SweepPoint { index, values, scenario })
        })
        .collect()
}

fn describe(axes: &[SweepAxis], values: &[f64]) -> String {
    axes.iter()
        .zip(values)
        .map(|(a, v)| format!("{} = {v}", a.param))
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub dir: PathBuf,
    pub summary: TraceFile,
    pub runs: Vec<RunResult>,
}

pub fn sweep_dir_name(axes: &[SweepAxis]) -> String {
    let names: Vec<String> = axes.iter().map(|a| file_stem(&a.param)).collect();
    format!("sweep_{}", names.join("_"))
}

/// Runs every point in parallel and writes `p0000/...` plus `summary.tsv` under
/// `<base>/sweep_<params>/`.
pub fn run_sweep(points: &[SweepPoint], axes: &[SweepAxis], base: &Path) -> Result<SweepResult> {
    let runs = points.par_iter().map(|p| run(&p.scenario)).collect::<Result<Vec<_>>>()?;
    let dir = base.join(sweep_dir_name(axes));
    for (point, result) in points.iter().zip(&runs) {
        write_run(result, &dir.join(format!("p{:04}", point.index)))?;
    }
    let summary = summarize(points, axes, &runs);
    write_atomic(
        &dir.join("summary.tsv"),
        summary.render().expect("summary columns are sanitized").as_bytes(),
    )?;
    Ok(SweepResult { dir, summary, runs })
}

fn summarize(points: &[SweepPoint], axes: &[SweepAxis], runs: &[RunResult]) -> TraceFile {
    let mut columns: Vec<String> = axes.iter().map(|a| file_stem(&a.param)).collect();
    if let Some(first) = runs.first() {
        for seed in &first.seeds {
            for (basis, _) in &seed.max_complexity {
                columns.push(format!("maxC[{basis}]@{}", seed.stem));
            }
            if seed.max_f.is_some() {
                columns.push(format!("maxF@{}", seed.stem));
            }
        }
    }
    let mut t = TraceFile::new(columns);
    if let Some(first) = runs.first() {
        t.metadata.insert("scenario".into(), first.scenario.clone());
    }
    t.metadata.insert("points".into(), points.len().to_string());
    t.rows = points
        .iter()
        .zip(runs)
        .map(|(p, r)| {
            let mut row = p.values.clone();
            for seed in &r.seeds {
                row.extend(seed.max_complexity.iter().map(|(_, c)| *c));
                row.extend(seed.max_f);
            }
            row
        })
        .collect();
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::parse_scenario;

    const PAIR: &str = r#"
model = "pair_noninteracting"
outputs = ["comparison"]
time_grid = { start = 0, end = "2pi", points = 5 }
[params]
omega1 = 1
omega2 = 1
theta1 = "pi/4"
theta2 = "pi/4"
"#;

    #[test]
    fn product_order_is_row_major() {
        let raw = parse_scenario(PAIR).unwrap();
        let axes = [
            SweepAxis { param: "theta1".into(), values: vec![0.1, 0.2] },
            SweepAxis { param: "theta2".into(), values: vec![1.0, 2.0, 3.0] },
        ];
        let pts = plan(&raw, "pair", &axes).unwrap();
        let got: Vec<_> = pts.iter().map(|p| p.values.clone()).collect();
        assert_eq!(got[0], vec![0.1, 1.0]);
        assert_eq!(got[1], vec![0.1, 2.0]);
        assert_eq!(got[5], vec![0.2, 3.0]);
        assert_eq!(sweep_dir_name(&axes), "sweep_theta1_theta2");
    }

    #[test]
    fn every_point_is_validated_up_front() {
        let raw = parse_scenario(PAIR).unwrap();
        let axes = [SweepAxis { param: "theta2".into(), values: vec![0.5, 4.0] }];
        let err = plan(&raw, "pair", &axes).unwrap_err();
        assert!(err.to_string().contains("theta2 = 4"), "{err}");
        let axes = [SweepAxis { param: "delta".into(), values: vec![0.5] }];
        assert!(plan(&raw, "pair", &axes).is_err());
        let twice = [
            SweepAxis { param: "theta2".into(), values: vec![0.5] },
            SweepAxis { param: "theta2".into(), values: vec![0.5] },
        ];
        assert!(plan(&raw, "pair", &twice).is_err());
    }
}
