//! Amplitude and frequency estimates for sampled oscillations.

use std::f64::consts::PI;

/// Peak value over the grid.
pub fn amplitude(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

/// Angular frequency of a sampled periodic signal, estimated from upward
/// crossings of the mid level `(max + min) / 2` with linear interpolation
/// between grid points. Needs at least two crossings.
pub fn angular_frequency(times: &[f64], values: &[f64]) -> Option<f64> {
    if times.len() != values.len() || times.len() < 3 {
        return None;
    }
    let hi = amplitude(values);
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    if !(hi - lo > 0.0) {
        return None;
    }
    let level = 0.5 * (hi + lo);
    let crossings = upward_crossings(times, values, level);
    if crossings.len() < 2 {
        return None;
    }
    let span = crossings[crossings.len() - 1] - crossings[0];
    Some(2.0 * PI * (crossings.len() - 1) as f64 / span)
}

/// Interpolated times where the signal crosses `level` going up.
///
/// Crossings closer together than a tenth of the mean crossing spacing are
/// merged so that small ripples riding on the main oscillation do not count.
pub fn upward_crossings(times: &[f64], values: &[f64], level: f64) -> Vec<f64> {
    let mut raw = Vec::new();
    for i in 1..values.len() {
        let (y0, y1) = (values[i - 1] - level, values[i] - level);
        if y0 < 0.0 && y1 >= 0.0 {
            let frac = y0 / (y0 - y1);
            raw.push(times[i - 1] + frac * (times[i] - times[i - 1]));
        }
    }
    if raw.len() < 3 {
        return raw;
    }
    let mean_gap = (raw[raw.len() - 1] - raw[0]) / (raw.len() - 1) as f64;
    let mut merged = vec![raw[0]];
    for &t in &raw[1..] {
        if t - merged[merged.len() - 1] > 0.1 * mean_gap {
            merged.push(t);
        }
    }
    merged
}

/// Uniform grid with `n` points from `start` to `end` inclusive.
pub fn linspace(start: f64, end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (end - start) / (n - 1) as f64;
            (0..n).map(|i| start + step * i as f64).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_sine_frequency() {
        let times = linspace(0.0, 40.0, 4001);
        let values: Vec<f64> = times.iter().map(|t| (1.3 * t / 2.0).sin().powi(2)).collect();
        let w = angular_frequency(&times, &values).unwrap();
        assert!((w - 1.3).abs() < 1e-3, "{w}");
    }

    #[test]
    fn ignores_small_ripple() {
        let times = linspace(0.0, 30.0, 6001);
        let values: Vec<f64> = times
            .iter()
            .map(|t| (t / 2.0).sin().powi(2) + 1e-3 * (80.0 * t).sin())
            .collect();
        let w = angular_frequency(&times, &values).unwrap();
        assert!((w - 1.0).abs() < 1e-2, "{w}");
    }

    #[test]
    fn flat_signal_has_no_frequency() {
        let times = linspace(0.0, 1.0, 10);
        assert_eq!(angular_frequency(&times, &[0.5; 10]), None);
    }

    #[test]
    fn linspace_endpoints() {
        let g = linspace(1.0, 2.0, 5);
        assert_eq!(g, vec![1.0, 1.25, 1.5, 1.75, 2.0]);
        assert_eq!(linspace(3.0, 4.0, 1), vec![3.0]);
    }
}
