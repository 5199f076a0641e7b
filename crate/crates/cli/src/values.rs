//! Scalars like `3pi/4` and sweep value lists like `0.1,0.2` or `0:pi:13`.

use std::f64::consts::PI;

use thiserror::Error;

/// Upper bound on the length of a generated range.
pub const MAX_RANGE_POINTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValuesError {
    #[error("empty value list")]
    Empty,
    #[error("cannot read {0:?} as a number")]
    BadNumber(String),
    #[error("{0:?} is not finite")]
    NotFinite(String),
    #[error("range {0:?} must look like start:end:count")]
    BadRange(String),
    #[error("range count must be between 1 and {MAX_RANGE_POINTS}, got {0}")]
    BadCount(String),
}

/// A finite number, optionally a multiple or fraction of `pi`:
/// `1.5`, `pi`, `-pi/2`, `3pi/4`, `0.5*pi`.
pub fn parse_scalar(text: &str) -> Result<f64, ValuesError> {
    let s = text.trim().to_ascii_lowercase();
    let value = match s.find("pi") {
        Some(idx) => {
            let pre = s[..idx].trim().trim_end_matches('*').trim();
            let post = s[idx + 2..].trim();
            let coef = match pre {
                "" | "+" => 1.0,
                "-" => -1.0,
                p => number(p, text)?,
            };
            let divisor = if post.is_empty() {
                1.0
            } else {
                let d = post.strip_prefix('/').ok_or_else(|| ValuesError::BadNumber(text.to_string()))?;
                number(d.trim(), text)?
            };
            if divisor == 0.0 {
                return Err(ValuesError::NotFinite(text.to_string()));
            }
            coef * PI / divisor
        }
        None => number(&s, text)?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(ValuesError::NotFinite(text.to_string()))
    }
}

fn number(s: &str, original: &str) -> Result<f64, ValuesError> {
    let ok = !s.is_empty()
        && s.chars().all(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | '+' | '-'));
    let x: f64 = if ok { s.parse().ok() } else { None }
        .ok_or_else(|| ValuesError::BadNumber(original.to_string()))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(ValuesError::NotFinite(original.to_string()))
    }
}

/// `a,b,c` or `start:end:count` (inclusive, evenly spaced).
pub fn parse_values(text: &str) -> Result<Vec<f64>, ValuesError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ValuesError::Empty);
    }
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, end, count] = parts[..] else {
            return Err(ValuesError::BadRange(text.to_string()));
        };
        let (start, end) = (parse_scalar(start)?, parse_scalar(end)?);
        let n: usize = count
            .trim()
            .parse()
            .ok()
            .filter(|n| (1..=MAX_RANGE_POINTS).contains(n))
            .ok_or_else(|| ValuesError::BadCount(count.trim().to_string()))?;
        return Ok(krylov_core::analysis::linspace(start, end, n));
    }
    let values = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(parse_scalar)
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err(ValuesError::Empty);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("1.5").unwrap(), 1.5);
        assert_eq!(parse_scalar(" pi ").unwrap(), PI);
        assert_eq!(parse_scalar("-pi/2").unwrap(), -PI / 2.0);
        assert_eq!(parse_scalar("3pi/4").unwrap(), 3.0 * PI / 4.0);
        assert_eq!(parse_scalar("0.5*PI").unwrap(), 0.5 * PI);
        assert_eq!(parse_scalar("1e-3").unwrap(), 1e-3);
        for bad in ["", "abc", "pi/0", "inf", "nan", "1e400", "2pi3", "pi/x", "--1"] {
            assert!(parse_scalar(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_values("1, 2,3").unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(parse_values("0:1:5").unwrap(), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let r = parse_values("0:pi:5").unwrap();
        assert_eq!(r[4], PI);
        assert_eq!(parse_values("2:3:1").unwrap(), vec![2.0]);
        assert_eq!(parse_values(""), Err(ValuesError::Empty));
        assert_eq!(parse_values(" , "), Err(ValuesError::Empty));
        assert!(matches!(parse_values("0:1"), Err(ValuesError::BadRange(_))));
        assert!(matches!(parse_values("0:1:0"), Err(ValuesError::BadCount(_))));
        assert!(matches!(parse_values("0:1:1000001"), Err(ValuesError::BadCount(_))));
    }
}
