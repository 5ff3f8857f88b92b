//! JSON ring files.
//!
//! ```json
//! {"name": "...", "order": 4, "add": [[...]], "mul": [[...]], "labels": ["0", "a", ...]}
//! ```
//!
//! Indices are 0-based and the zero element is found by validation.
//! `labels` is optional. Writing uses a fixed key order with one table row
//! per line, so files diff cleanly and round-trip byte for byte.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ring::{FiniteRing, RawRing, Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingFile {
    pub name: String,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingFileError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid ring: {0}")]
    Validation(#[from] RingError),
    #[error("{0}: {1}")]
    Io(String, String),
}

impl RingFile {
    pub fn from_ring(ring: &FiniteRing) -> Self {
        RingFile {
            name: ring.name().to_string(),
            order: ring.order(),
            add: ring.add_table(),
            mul: ring.mul_table(),
            labels: Some(ring.labels().to_vec()),
        }
    }

    pub fn into_ring(self, max_order: usize) -> Result<Ring, RingFileError> {
        if self.add.len() != self.order || self.mul.len() != self.order {
            return Err(RingError::BadTableShape(format!(
                "order is {} but tables have {} and {} rows",
                self.order,
                self.add.len(),
                self.mul.len()
            ))
            .into());
        }
        let raw = RawRing {
            name: self.name,
            add: self.add,
            mul: self.mul,
            labels: self.labels,
        };
        Ok(FiniteRing::build(raw, max_order)?)
    }

    pub fn to_json(&self) -> String {
        let q = |s: &str| serde_json::to_string(s).expect("string serializes");
        let table = |t: &[Vec<usize>]| {
            let rows: Vec<String> = t
                .iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                    format!("    [{}]", cells.join(", "))
                })
                .collect();
            format!("[\n{}\n  ]", rows.join(",\n"))
        };
        let mut out = String::from("{\n");
        let _ = writeln!(out, "  \"name\": {},", q(&self.name));
        let _ = writeln!(out, "  \"order\": {},", self.order);
        let _ = write!(out, "  \"add\": {},\n  \"mul\": {}", table(&self.add), table(&self.mul));
        if let Some(labels) = &self.labels {
            let ls: Vec<String> = labels.iter().map(|l| q(l)).collect();
            let _ = write!(out, ",\n  \"labels\": [{}]", ls.join(", "));
        }
        out.push_str("\n}\n");
        out
    }
}

pub fn parse_ring_str(text: &str, max_order: usize) -> Result<Ring, RingFileError> {
    let file: RingFile = serde_json::from_str(text).map_err(|e| RingFileError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_ring(max_order)
}

pub fn read_ring_file(path: &Path, max_order: usize) -> Result<Ring, RingFileError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| RingFileError::Io(path.display().to_string(), e.to_string()))?;
    parse_ring_str(&text, max_order)
}

pub fn write_ring_file(ring: &FiniteRing, path: &Path) -> Result<(), RingFileError> {
    std::fs::write(path, RingFile::from_ring(ring).to_json())
        .map_err(|e| RingFileError::Io(path.display().to_string(), e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{builtin_example, zmod, PaperExample};
    use crate::ring::DEFAULT_MAX_ORDER;
    use proptest::prelude::*;

    #[test]
    fn order_mismatch_is_shape_error() {
        let text = r#"{"name": "x", "order": 2, "add": [[0,1,2],[1,2,0],[2,0,1]], "mul": [[0,0,0],[0,1,2],[0,2,1]]}"#;
        assert!(matches!(
            parse_ring_str(text, DEFAULT_MAX_ORDER),
            Err(RingFileError::Validation(RingError::BadTableShape(_)))
        ));
    }

    #[test]
    fn syntax_error_reports_position() {
        let text = "{\n  \"name\": \"x\",\n  \"order\": oops\n}";
        match parse_ring_str(text, DEFAULT_MAX_ORDER) {
            Err(RingFileError::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = r#"{"name": "x", "order": 1, "add": [[0]], "mul": [[0]], "extra": 1}"#;
        assert!(matches!(parse_ring_str(text, 64), Err(RingFileError::Parse { .. })));
    }

    #[test]
    fn labels_are_optional_and_default_to_indices() {
        let text = r#"{"name": "z2", "order": 2, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]}"#;
        let r = parse_ring_str(text, 64).unwrap();
        assert_eq!(r.labels(), &["0".to_string(), "1".to_string()]);
    }

    #[test]
    fn paper_ring_writes_expected_layout() {
        let r = builtin_example(PaperExample::TwoOneII).unwrap();
        let json = RingFile::from_ring(&r).to_json();
        assert!(
            json.starts_with("{\n  \"name\": \"paper:ex-2-1-ii\",\n  \"order\": 4,\n  \"add\": [\n    [0, 1, 2, 3],")
        );
        assert!(json.ends_with("\"labels\": [\"0\", \"a\", \"b\", \"c\"]\n}\n"));
    }

    proptest! {
        #[test]
        fn write_then_read_is_stable(n in 1usize..14) {
            let r = zmod(n);
            let json = RingFile::from_ring(&r).to_json();
            let back = parse_ring_str(&json, 64).unwrap();
            prop_assert_eq!(back.add_table(), r.add_table());
            prop_assert_eq!(back.mul_table(), r.mul_table());
            prop_assert_eq!(RingFile::from_ring(&back).to_json(), json);
        }
    }
}
