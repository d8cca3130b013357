//! JSON interchange format for weight systems.
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "obstruction": [0, 0],
//!   "orientation": 1,
//!   "genus": 0,
//!   "circle_boundaries": [[1, 2]],
//!   "fixed_cycles": [
//!     [{"pair": [1, 0], "f": 5}, {"pair": [2, 5], "f": -5}]
//!   ],
//!   "exceptional": [{"alpha": 3, "gamma1": 1, "gamma2": 0}]
//! }
//! ```
//!
//! Sign representatives inside cycles are kept exactly as written. Integers
//! are decimal; values outside the signed 64-bit range are rejected rather
//! than truncated. [`to_pretty`] output is byte-stable: parsing it and
//! printing again gives the same bytes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weights::{CycleEntry, FiniteIsotropyInvariant, FixedCycle, Orientation, Pair, WeightSystem};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?} (expected \"1\")")]
    Version(String),
    #[error("orientation must be 1 or -1, got {0}")]
    Orientation(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    pair: Pair,
    f: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeifertDoc {
    alpha: i64,
    gamma1: i64,
    gamma2: i64,
}

/// The on-disk shape of a weight system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightSystemDocument {
    schema_version: String,
    obstruction: [i64; 2],
    orientation: i64,
    genus: i64,
    circle_boundaries: Vec<Pair>,
    fixed_cycles: Vec<Vec<EntryDoc>>,
    exceptional: Vec<SeifertDoc>,
}

impl From<&WeightSystem> for WeightSystemDocument {
    fn from(w: &WeightSystem) -> Self {
        WeightSystemDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            obstruction: [w.obstruction.0, w.obstruction.1],
            orientation: w.orientation.sign(),
            genus: w.genus,
            circle_boundaries: w.circle_boundaries.clone(),
            fixed_cycles: w
                .fixed_cycles
                .iter()
                .map(|c| c.entries().iter().map(|e| EntryDoc { pair: e.pair, f: e.f }).collect())
                .collect(),
            exceptional: w
                .exceptional
                .iter()
                .map(|e| SeifertDoc { alpha: e.alpha, gamma1: e.gamma1, gamma2: e.gamma2 })
                .collect(),
        }
    }
}

impl TryFrom<WeightSystemDocument> for WeightSystem {
    type Error = DocumentError;

    fn try_from(doc: WeightSystemDocument) -> Result<Self, DocumentError> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Version(doc.schema_version));
        }
        let orientation = Orientation::try_from(doc.orientation).map_err(DocumentError::Orientation)?;
        Ok(WeightSystem {
            obstruction: (doc.obstruction[0], doc.obstruction[1]),
            orientation,
            genus: doc.genus,
            circle_boundaries: doc.circle_boundaries,
            fixed_cycles: doc
                .fixed_cycles
                .into_iter()
                .map(|c| FixedCycle::new(c.into_iter().map(|e| CycleEntry::new(e.pair, e.f)).collect()))
                .collect(),
            exceptional: doc
                .exceptional
                .into_iter()
                .map(|e| FiniteIsotropyInvariant::new(e.alpha, e.gamma1, e.gamma2))
                .collect(),
        })
    }
}

/// Parses a document. Legality is not checked here; see [`crate::validate`].
pub fn parse(text: &str) -> Result<WeightSystem, DocumentError> {
    let doc: WeightSystemDocument = serde_json::from_str(text)?;
    doc.try_into()
}

fn pair_text(p: Pair) -> String {
    format!("[{}, {}]", p.m, p.n)
}

/// Multi-line form used for files.
pub fn to_pretty(w: &WeightSystem) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"schema_version\": \"{SCHEMA_VERSION}\",");
    let _ = writeln!(out, "  \"obstruction\": [{}, {}],", w.obstruction.0, w.obstruction.1);
    let _ = writeln!(out, "  \"orientation\": {},", w.orientation.sign());
    let _ = writeln!(out, "  \"genus\": {},", w.genus);

    let circles: Vec<String> = w.circle_boundaries.iter().map(|&p| pair_text(p)).collect();
    let _ = writeln!(out, "  \"circle_boundaries\": [{}],", circles.join(", "));

    if w.fixed_cycles.is_empty() {
        out.push_str("  \"fixed_cycles\": [],\n");
    } else {
        out.push_str("  \"fixed_cycles\": [\n");
        let lines: Vec<String> = w
            .fixed_cycles
            .iter()
            .map(|c| {
                let entries: Vec<String> = c
                    .entries()
                    .iter()
                    .map(|e| format!("{{\"pair\": {}, \"f\": {}}}", pair_text(e.pair), e.f))
                    .collect();
                format!("    [{}]", entries.join(", "))
            })
            .collect();
        out.push_str(&lines.join(",\n"));
        out.push_str("\n  ],\n");
    }

    let exceptional: Vec<String> = w
        .exceptional
        .iter()
        .map(|e| format!("{{\"alpha\": {}, \"gamma1\": {}, \"gamma2\": {}}}", e.alpha, e.gamma1, e.gamma2))
        .collect();
    let _ = writeln!(out, "  \"exceptional\": [{}]", exceptional.join(", "));
    out.push_str("}\n");
    out
}

/// Single-line form used for streams, one document per line.
pub fn to_line(w: &WeightSystem) -> String {
    serde_json::to_string(&WeightSystemDocument::from(w)).expect("documents always serialize")
}
