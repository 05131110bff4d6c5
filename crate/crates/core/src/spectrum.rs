//! Loading externally computed length spectra and auditing them against
//! [`geodesic_length_bound`](crate::bounds::geodesic_length_bound).
//!
//! Two input encodings are accepted, both UTF-8:
//!
//! * CSV with header `index,length`, 1-based contiguous indices. The filled
//!   volume is not part of the file and is supplied by the caller.
//! * JSON `{"name": ..., "filled_volume": ..., "lengths": [...]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{geodesic_length_bound, BoundQuery};

/// Printed alongside every audit.
pub const HYPOTHESES_DISCLAIMER: &str = "The bound applies to hyperbolic link complements M \\ L where M is a \
closed orientable 3-manifold of volume V (V = 0 if M is not hyperbolic). This tool does not check that the \
supplied spectrum comes from such a manifold.";

/// Printed when an audit finds violations.
pub const VIOLATION_NOTE: &str = "A violation means either the input data is wrong or it lies outside the \
hypotheses above (for example, the volume given is not that of the filled manifold); the audit cannot \
tell which.";

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("lengths must be nondecreasing: entry {index} ({length}) follows {previous}")]
    UnsortedSpectrum {
        index: usize,
        length: f64,
        previous: f64,
    },
    #[error("length at index {index} must be positive, got {length}")]
    NonpositiveLength { index: usize, length: f64 },
    #[error("filled volume must be nonnegative, got {0}")]
    NegativeVolume(f64),
}

impl From<csv::Error> for SpectrumError {
    fn from(e: csv::Error) -> Self {
        SpectrumError::Parse(e.to_string())
    }
}

impl From<serde_json::Error> for SpectrumError {
    fn from(e: serde_json::Error) -> Self {
        SpectrumError::Parse(e.to_string())
    }
}

/// Ordered closed geodesic lengths of a link complement, with the volume
/// of the filled manifold.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumRecord {
    name: String,
    filled_volume: f64,
    lengths: Vec<f64>,
}

impl SpectrumRecord {
    /// Validates volume, positivity and ordering. Unsorted input is
    /// rejected, never re-sorted.
    pub fn new(
        name: impl Into<String>,
        filled_volume: f64,
        lengths: Vec<f64>,
    ) -> Result<Self, SpectrumError> {
        if !filled_volume.is_finite() {
            return Err(SpectrumError::Parse(format!(
                "filled volume {filled_volume} is not finite"
            )));
        }
        if filled_volume < 0.0 {
            return Err(SpectrumError::NegativeVolume(filled_volume));
        }
        for (i, &length) in lengths.iter().enumerate() {
            if length.is_nan() || length <= 0.0 || length.is_infinite() {
                return Err(SpectrumError::NonpositiveLength {
                    index: i + 1,
                    length,
                });
            }
            if i > 0 && length < lengths[i - 1] {
                return Err(SpectrumError::UnsortedSpectrum {
                    index: i + 1,
                    length,
                    previous: lengths[i - 1],
                });
            }
        }
        Ok(Self {
            name: name.into(),
            filled_volume,
            lengths,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn filled_volume(&self) -> f64 {
        self.filled_volume
    }

    pub fn lengths(&self) -> &[f64] {
        &self.lengths
    }
}

/// How to decode spectrum bytes.
#[derive(Debug, Clone, PartialEq)]
pub enum SpectrumFormat {
    Csv { name: String, filled_volume: f64 },
    Json,
}

#[derive(Deserialize)]
struct JsonSpectrum {
    name: String,
    filled_volume: f64,
    lengths: Vec<f64>,
}

#[derive(Deserialize)]
struct CsvRow {
    index: usize,
    length: f64,
}

pub fn load_spectrum(
    bytes: &[u8],
    format: SpectrumFormat,
) -> Result<SpectrumRecord, SpectrumError> {
    match format {
        SpectrumFormat::Json => {
            let raw: JsonSpectrum = serde_json::from_slice(bytes)?;
            SpectrumRecord::new(raw.name, raw.filled_volume, raw.lengths)
        }
        SpectrumFormat::Csv {
            name,
            filled_volume,
        } => {
            let text =
                std::str::from_utf8(bytes).map_err(|e| SpectrumError::Parse(e.to_string()))?;
            let mut reader = csv::ReaderBuilder::new()
                .trim(csv::Trim::All)
                .from_reader(text.as_bytes());
            let headers = reader.headers()?.clone();
            if headers.iter().collect::<Vec<_>>() != ["index", "length"] {
                return Err(SpectrumError::Parse(format!(
                    "expected header `index,length`, got `{}`",
                    headers.iter().collect::<Vec<_>>().join(",")
                )));
            }
            let mut lengths = Vec::new();
            for row in reader.deserialize() {
                let row: CsvRow = row?;
                if row.index != lengths.len() + 1 {
                    return Err(SpectrumError::Parse(format!(
                        "indices must be 1-based and contiguous: expected {}, got {}",
                        lengths.len() + 1,
                        row.index
                    )));
                }
                lengths.push(row.length);
            }
            SpectrumRecord::new(name, filled_volume, lengths)
        }
    }
}

/// Comparison of one geodesic length with its bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AuditEntry {
    pub n: u32,
    pub length: f64,
    pub bound: f64,
    /// `bound − length`.
    pub margin: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    pub name: String,
    pub filled_volume: f64,
    pub entries: Vec<AuditEntry>,
    pub passed: usize,
    pub violations: usize,
}

impl AuditReport {
    /// Entries whose length exceeds the bound, in index order.
    pub fn violating(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

/// Checks the `n`-th length against the rank-`n` bound for every `n`.
pub fn audit(record: &SpectrumRecord) -> AuditReport {
    let entries: Vec<AuditEntry> = record
        .lengths
        .iter()
        .enumerate()
        .map(|(i, &length)| {
            let n = u32::try_from(i + 1).unwrap_or(u32::MAX);
            // volume was validated on construction
            let query = BoundQuery::new(n, record.filled_volume).expect("validated record");
            let bound = geodesic_length_bound(&query);
            let margin = bound - length;
            AuditEntry {
                n,
                length,
                bound,
                margin,
                pass: margin >= 0.0,
            }
        })
        .collect();
    let violations = entries.iter().filter(|e| !e.pass).count();
    AuditReport {
        name: record.name.clone(),
        filled_volume: record.filled_volume,
        passed: entries.len() - violations,
        violations,
        entries,
    }
}
