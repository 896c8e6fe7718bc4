//! Frame-blind scanning: score every frequent adjacent bigram of a corpus and
//! keep the ones judged compounds.

use std::cmp::{Ordering, Reverse};
use std::collections::HashMap;
use std::io::Write;

use crate::corpus::BigramCounts;
use crate::error::{Error, Result};
use crate::scoring::{check_threshold, classify, Judgement, LexemePair, ScoreMethod, Scorer};

#[derive(Debug, Clone, PartialEq)]
pub struct ScanHit {
    pub pair: LexemePair,
    pub count: u64,
    pub method: ScoreMethod,
    pub score: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub method: ScoreMethod,
    pub threshold: f64,
    pub min_count: u64,
    pub top_n: Option<usize>,
}

/// Returns bigrams with `count >= min_count`, scorable under `method` and
/// scoring strictly below `threshold`, most non-compositional first (ties by
/// `(left, right)`).
///
/// Every scorer is symmetric, so the two orientations of a word pair are one
/// candidate: only the more frequent orientation is considered (the
/// lexicographically smaller one on equal counts), with its own count.
pub fn scan_bigrams(
    counts: &BigramCounts,
    scorer: &Scorer<'_>,
    options: &ScanOptions,
) -> Result<Vec<ScanHit>> {
    check_threshold(options.threshold)?;
    if options.min_count == 0 {
        return Err(Error::Usage("min-count must be at least 1".into()));
    }
    scorer.supports(options.method)?;

    let mut dominant: HashMap<(&str, &str), (&str, &str, u64)> = HashMap::new();
    for (left, right, count) in counts.iter() {
        if left == right {
            continue;
        }
        let key = if left < right {
            (left, right)
        } else {
            (right, left)
        };
        let candidate = (left, right, count);
        dominant
            .entry(key)
            .and_modify(|best| {
                if (count, Reverse((left, right))) > (best.2, Reverse((best.0, best.1))) {
                    *best = candidate;
                }
            })
            .or_insert(candidate);
    }

    let mut hits = Vec::new();
    for (left, right, count) in dominant.into_values() {
        if count < options.min_count {
            continue;
        }
        let pair = LexemePair::new(left, right)?;
        let outcome = scorer.score(options.method, &pair)?;
        if classify(outcome, options.threshold)? != Judgement::Compound {
            continue;
        }
        let score = outcome.value().expect("compound judgement implies a score");
        hits.push(ScanHit {
            pair,
            count,
            method: options.method,
            score,
        });
    }
    hits.sort_by(|a, b| {
        a.score
            .partial_cmp(&b.score)
            .unwrap_or(Ordering::Equal)
            .then_with(|| a.pair.cmp(&b.pair))
    });
    if let Some(n) = options.top_n {
        hits.truncate(n);
    }
    Ok(hits)
}

/// `left,right,count,score` with header.
pub fn write_hits_csv<W: Write>(writer: W, hits: &[ScanHit]) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(["left", "right", "count", "score"])?;
    for h in hits {
        w.write_record([
            h.pair.left(),
            h.pair.right(),
            &h.count.to_string(),
            &h.score.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
