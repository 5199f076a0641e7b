//! Tab-separated trace files.
//!
//! ```text
//! # krylov-trace v1<TAB>scenario=fig1_entropy<TAB>seed=bloch<TAB>digest=sha256:...
//! time<TAB>C[krylov]<TAB>...
//! 0.0000000000000000e0<TAB>0.0000000000000000e0<TAB>...
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

pub const MAGIC: &str = "# krylov-trace v1";

#[derive(Debug, Error, PartialEq)]
pub enum TraceError {
    #[error("missing `{MAGIC}` header line")]
    MissingHeader,
    #[error("bad metadata field {0:?}")]
    BadMetadata(String),
    #[error("missing column header line")]
    MissingColumns,
    #[error("bad column name {0:?}")]
    BadColumn(String),
    #[error("line {line}: expected {expected} fields, found {found}")]
    RaggedRow { line: usize, expected: usize, found: usize },
    #[error("line {line}: cannot parse {text:?} as a number")]
    BadNumber { line: usize, text: String },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TraceFile {
    pub metadata: BTreeMap<String, String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

fn valid_key(k: &str) -> bool {
    !k.is_empty() && k.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.'))
}

fn valid_text(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c == '\t' || c == '\n' || c == '\r')
}

impl TraceFile {
    pub fn new(columns: Vec<String>) -> Self {
        Self {
            columns,
            ..Self::default()
        }
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    /// Renders the file. Fails if a metadata entry or column name cannot be
    /// represented, or if a row has the wrong width.
    pub fn render(&self) -> Result<String, TraceError> {
        let mut out = String::from(MAGIC);
        for (k, v) in &self.metadata {
            if !valid_key(k) || !valid_text(v) {
                return Err(TraceError::BadMetadata(format!("{k}={v}")));
            }
            write!(out, "\t{k}={v}").unwrap();
        }
        out.push('\n');
        if self.columns.is_empty() {
            return Err(TraceError::MissingColumns);
        }
        if let Some(c) = self.columns.iter().find(|c| !valid_text(c)) {
            return Err(TraceError::BadColumn(c.clone()));
        }
        out.push_str(&self.columns.join("\t"));
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.columns.len() {
                return Err(TraceError::RaggedRow {
                    line: i + 3,
                    expected: self.columns.len(),
                    found: row.len(),
                });
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    out.push('\t');
                }
                write!(out, "{x:.16e}").unwrap();
            }
            out.push('\n');
        }
        Ok(out)
    }

    pub fn parse(text: &str) -> Result<Self, TraceError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(TraceError::MissingHeader)?;
        let mut fields = header.split('\t');
        if fields.next() != Some(MAGIC) {
            return Err(TraceError::MissingHeader);
        }
        let mut metadata = BTreeMap::new();
        for f in fields {
            let (k, v) = f.split_once('=').ok_or_else(|| TraceError::BadMetadata(f.to_string()))?;
            if !valid_key(k) || !valid_text(v) || metadata.insert(k.to_string(), v.to_string()).is_some() {
                return Err(TraceError::BadMetadata(f.to_string()));
            }
        }
        let columns: Vec<String> = match lines.next() {
            Some(l) if !l.is_empty() => l.split('\t').map(str::to_string).collect(),
            _ => return Err(TraceError::MissingColumns),
        };
        if let Some(c) = columns.iter().find(|c| !valid_text(c)) {
            return Err(TraceError::BadColumn(c.clone()));
        }
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let line_no = i + 3;
            let row = line
                .split('\t')
                .map(|s| {
                    s.parse::<f64>().map_err(|_| TraceError::BadNumber {
                        line: line_no,
                        text: s.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != columns.len() {
                return Err(TraceError::RaggedRow {
                    line: line_no,
                    expected: columns.len(),
                    found: row.len(),
                });
            }
            rows.push(row);
        }
        Ok(Self { metadata, columns, rows })
    }
}
