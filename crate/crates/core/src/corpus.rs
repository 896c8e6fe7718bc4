//! Corpus tokenization, adjacent-bigram counting and the two negative-pair
//! samplers (uniform random pairs and most frequent bigrams).

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use walkdir::WalkDir;

use crate::error::{Error, Result};
use crate::scoring::LexemePair;

/// Lowercase alphabetic tokens in corpus order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenStream {
    pub tokens: Vec<String>,
    pub source_label: String,
}

impl TokenStream {
    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Distinct tokens in lexicographic order.
    pub fn vocabulary(&self) -> BTreeSet<String> {
        self.tokens.iter().cloned().collect()
    }
}

/// Lowercases `text` and splits it on every non-alphabetic character.
pub fn tokenize(text: &str) -> TokenStream {
    TokenStream {
        tokens: tokenize_words(text),
        source_label: String::new(),
    }
}

pub(crate) fn tokenize_words(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphabetic())
        .filter(|s| !s.is_empty())
        .map(str::to_lowercase)
        .collect()
}

/// Reads a corpus file, or every file below a directory in lexicographic
/// path order, and tokenizes the concatenated text.
pub fn read_corpus(path: impl AsRef<Path>) -> Result<TokenStream> {
    let path = path.as_ref();
    let mut tokens = Vec::new();
    if path.is_dir() {
        let walker = WalkDir::new(path).sort_by_file_name();
        for entry in walker {
            let entry = entry.map_err(|e| Error::File {
                path: path.to_path_buf(),
                source: e.into(),
            })?;
            if entry.file_type().is_file() {
                tokens.extend(tokenize_words(&read_text(entry.path())?));
            }
        }
    } else {
        tokens = tokenize_words(&read_text(path)?);
    }
    Ok(TokenStream {
        tokens,
        source_label: path.display().to_string(),
    })
}

fn read_text(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|source| Error::File {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

/// Adjacent-pair counts over a token stream.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BigramCounts {
    counts: HashMap<(String, String), u64>,
    total: u64,
}

impl BigramCounts {
    pub fn total_bigrams(&self) -> u64 {
        self.total
    }

    pub fn get(&self, left: &str, right: &str) -> u64 {
        self.counts
            .get(&(left.to_owned(), right.to_owned()))
            .copied()
            .unwrap_or(0)
    }

    /// Number of distinct bigram types.
    pub fn distinct(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Unordered iteration over `((left, right), count)`.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, u64)> {
        self.counts
            .iter()
            .map(|((l, r), c)| (l.as_str(), r.as_str(), *c))
    }
}

pub fn build_bigram_counts(stream: &TokenStream) -> BigramCounts {
    let mut counts: HashMap<(String, String), u64> = HashMap::new();
    for window in stream.tokens.windows(2) {
        *counts
            .entry((window[0].clone(), window[1].clone()))
            .or_insert(0) += 1;
    }
    BigramCounts {
        total: stream.tokens.len().saturating_sub(1) as u64,
        counts,
    }
}

/// A pair together with its corpus frequency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCount {
    pub pair: LexemePair,
    pub count: u64,
}

/// Draws `n` distinct ordered pairs of distinct vocabulary tokens, uniformly,
/// skipping anything in `exclusions`.
pub fn sample_random_pairs(
    vocabulary: &BTreeSet<String>,
    n: usize,
    seed: u64,
    exclusions: &HashSet<LexemePair>,
) -> Result<Vec<LexemePair>> {
    let vocab: Vec<&String> = vocabulary.iter().collect();
    let v = vocab.len();
    let universe = v.saturating_mul(v.saturating_sub(1));
    let excluded_in_universe = exclusions
        .iter()
        .filter(|p| p.left() != p.right())
        .filter(|p| vocabulary.contains(p.left()) && vocabulary.contains(p.right()))
        .count();
    let available = universe - excluded_in_universe;
    if n > available {
        return Err(Error::InsufficientPairs {
            requested: n,
            available,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let make = |i: usize, j: usize| LexemePair::from_parts_unchecked(vocab[i], vocab[j]);

    // Dense requests: enumerate the admissible pairs and pick a uniform subset.
    if n.saturating_mul(2) >= available {
        let candidates: Vec<LexemePair> = (0..v)
            .flat_map(|i| (0..v).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| make(i, j))
            .filter(|p| !exclusions.contains(p))
            .collect();
        let picked = index::sample(&mut rng, candidates.len(), n);
        return Ok(picked.into_iter().map(|k| candidates[k].clone()).collect());
    }

    let mut seen = HashSet::with_capacity(n);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let i = rng.random_range(0..v);
        let mut j = rng.random_range(0..v - 1);
        if j >= i {
            j += 1;
        }
        let pair = make(i, j);
        if exclusions.contains(&pair) || !seen.insert(pair.clone()) {
            continue;
        }
        out.push(pair);
    }
    Ok(out)
}

/// The `n` most frequent bigrams outside `exclusions`, by descending count
/// then lexicographic `(left, right)`. Self-pairs such as `(the, the)` are
/// never candidates.
pub fn top_cooccurring_pairs(
    counts: &BigramCounts,
    n: usize,
    exclusions: &HashSet<LexemePair>,
) -> Result<Vec<PairCount>> {
    top_cooccurring_pairs_where(counts, n, exclusions, |_| true)
}

/// Like [`top_cooccurring_pairs`] with an extra candidate filter.
pub fn top_cooccurring_pairs_where<F>(
    counts: &BigramCounts,
    n: usize,
    exclusions: &HashSet<LexemePair>,
    mut keep: F,
) -> Result<Vec<PairCount>>
where
    F: FnMut(&LexemePair) -> bool,
{
    let mut candidates: Vec<PairCount> = counts
        .iter()
        .filter(|(l, r, _)| l != r)
        .map(|(l, r, c)| PairCount {
            pair: LexemePair::from_parts_unchecked(l, r),
            count: c,
        })
        .filter(|pc| !exclusions.contains(&pc.pair) && keep(&pc.pair))
        .collect();
    if candidates.len() < n {
        return Err(Error::InsufficientPairs {
            requested: n,
            available: candidates.len(),
        });
    }
    candidates.sort_by(|a, b| b.count.cmp(&a.count).then_with(|| a.pair.cmp(&b.pair)));
    candidates.truncate(n);
    Ok(candidates)
}

fn csv_writer<W: Write>(writer: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer)
}

/// `left,right` with header.
pub fn write_pairs_csv<W: Write>(writer: W, pairs: &[LexemePair]) -> Result<()> {
    let mut w = csv_writer(writer);
    w.write_record(["left", "right"])?;
    for p in pairs {
        w.write_record([p.left(), p.right()])?;
    }
    w.flush()?;
    Ok(())
}

/// `left,right,count` with header.
pub fn write_pair_counts_csv<W: Write>(writer: W, pairs: &[PairCount]) -> Result<()> {
    let mut w = csv_writer(writer);
    w.write_record(["left", "right", "count"])?;
    for pc in pairs {
        w.write_record([pc.pair.left(), pc.pair.right(), &pc.count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a headed pair CSV (`left,right[,count]`); extra columns are ignored.
pub fn read_pairs_csv<R: Read>(source: R) -> Result<Vec<LexemePair>> {
    let mut reader = csv::ReaderBuilder::new().flexible(true).from_reader(source);
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record?;
        let (Some(left), Some(right)) = (record.get(0), record.get(1)) else {
            return Err(Error::InvalidPair(format!(
                "row {:?} has fewer than two fields",
                record
            )));
        };
        out.push(LexemePair::allow_identical(left, right)?);
    }
    Ok(out)
}
