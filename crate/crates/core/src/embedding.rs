//! Pretrained word vectors in GloVe plain-text form, plus the small amount
//! of vector algebra the scorers need.
//!
//! The accepted format is one entry per line, `token v1 v2 ... vD`, fields
//! separated by single ASCII spaces, no header. Tokens are lowercased on load
//! and on lookup. When a token appears twice the first line wins and a
//! warning is recorded on the table.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::ops::Deref;
use std::path::Path;

use crate::error::{Error, Result};

/// A dense embedding vector. All components are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct WordVector(Vec<f64>);

impl WordVector {
    /// Wraps raw components, rejecting NaN and infinities.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Parse {
                line: 0,
                message: format!("non-finite vector component {bad}"),
            });
        }
        Ok(WordVector(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|v| v * v).sum::<f64>().sqrt()
    }
}

impl Deref for WordVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl TryFrom<Vec<f64>> for WordVector {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        WordVector::new(values)
    }
}

/// Immutable token → vector map with a fixed dimension.
#[derive(Debug, Clone)]
pub struct EmbeddingTable {
    dimension: usize,
    entries: HashMap<String, WordVector>,
    source_label: String,
    warnings: Vec<String>,
}

impl EmbeddingTable {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn source_label(&self) -> &str {
        &self.source_label
    }

    /// Warnings collected during loading (duplicate tokens).
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Case-insensitive lookup. Absent tokens yield `None`; there is no
    /// default vector.
    pub fn lookup(&self, token: &str) -> Option<&WordVector> {
        match self.entries.get(token) {
            Some(v) => Some(v),
            None => self.entries.get(&token.to_lowercase()),
        }
    }

    pub fn contains(&self, token: &str) -> bool {
        self.lookup(token).is_some()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// Parses a GloVe text stream.
///
/// If `expected_dimension` is given every line must carry exactly that many
/// components; otherwise the first line fixes the dimension.
pub fn load_embeddings<R: BufRead>(
    reader: R,
    expected_dimension: Option<usize>,
    source_label: impl Into<String>,
) -> Result<EmbeddingTable> {
    let mut dimension = expected_dimension;
    let mut entries: HashMap<String, WordVector> = HashMap::new();
    let mut warnings = Vec::new();
    let mut seen_first = false;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = line.split(' ');
        let token = fields.next().unwrap_or_default();
        if token.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                message: "line starts with a separator instead of a token".into(),
            });
        }
        let raw: Vec<&str> = fields.collect();

        if !seen_first {
            seen_first = true;
            if looks_like_header(token, &raw) {
                return Err(Error::HeaderLine { line: line_no });
            }
        }

        let mut values = Vec::with_capacity(raw.len());
        for field in &raw {
            let v: f64 = field.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("non-numeric vector component {field:?}"),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("non-finite vector component {field:?}"),
                });
            }
            values.push(v);
        }

        match dimension {
            Some(d) if d != values.len() => {
                return Err(Error::DimensionMismatch {
                    line: line_no,
                    expected: d,
                    found: values.len(),
                })
            }
            Some(_) => {}
            None => {
                if values.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "token has no vector components".into(),
                    });
                }
                dimension = Some(values.len());
            }
        }

        let key = token.to_lowercase();
        if entries.contains_key(&key) {
            warnings.push(format!(
                "line {line_no}: duplicate token {key:?} ignored (first occurrence kept)"
            ));
            continue;
        }
        entries.insert(key, WordVector(values));
    }

    if entries.is_empty() {
        return Err(Error::EmptyEmbeddings);
    }
    Ok(EmbeddingTable {
        dimension: dimension.expect("dimension fixed by first entry"),
        entries,
        source_label: source_label.into(),
        warnings,
    })
}

/// Loads an embedding file from disk; the path becomes the source label.
pub fn load_embeddings_file(
    path: impl AsRef<Path>,
    expected_dimension: Option<usize>,
) -> Result<EmbeddingTable> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    load_embeddings(
        BufReader::new(file),
        expected_dimension,
        path.display().to_string(),
    )
}

// word2vec-style `<vocab size> <dimension>` header.
fn looks_like_header(token: &str, rest: &[&str]) -> bool {
    rest.len() == 1 && token.parse::<u64>().is_ok() && rest[0].parse::<u64>().is_ok()
}

/// Cosine similarity, clamped to [-1, 1].
pub fn cosine(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut dot = 0.0;
    let mut norm_a = 0.0;
    let mut norm_b = 0.0;
    for (x, y) in a.iter().zip(b) {
        dot += x * y;
        norm_a += x * x;
        norm_b += y * y;
    }
    if norm_a == 0.0 || norm_b == 0.0 {
        return Err(Error::ZeroNorm);
    }
    let mut denom = (norm_a * norm_b).sqrt();
    if !denom.is_normal() {
        denom = norm_a.sqrt() * norm_b.sqrt();
    }
    let sim = dot / denom;
    Ok(sim.clamp(-1.0, 1.0))
}

/// Elementwise sum, accumulated left to right in input order.
pub fn vector_sum<'a, I>(vectors: I) -> Result<WordVector>
where
    I: IntoIterator<Item = &'a WordVector>,
{
    let mut iter = vectors.into_iter();
    let first = iter.next().ok_or(Error::EmptySum)?;
    let mut acc = first.0.clone();
    for v in iter {
        if v.len() != acc.len() {
            return Err(Error::LengthMismatch {
                left: acc.len(),
                right: v.len(),
            });
        }
        for (a, x) in acc.iter_mut().zip(v.iter()) {
            *a += x;
        }
    }
    Ok(WordVector(acc))
}
