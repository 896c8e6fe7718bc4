//! The three pair scores and the below-threshold compound judgement.
//!
//! Every score is a cosine similarity: between the two lexeme vectors
//! (word similarity), between the summed first-definition vectors
//! (definition similarity), or between the summed definition vectors after
//! stop-word removal (definition content similarity). Low similarity signals
//! non-compositionality, so a value strictly below the threshold is judged
//! a compound.

use std::fmt;
use std::str::FromStr;

use crate::definitions::{definition_embedding, DefinitionLexicon, StopWordList};
use crate::embedding::{cosine, EmbeddingTable};
use crate::error::{Error, Result};

/// An ordered candidate pair of lowercase, whitespace-free tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LexemePair {
    left: String,
    right: String,
}

impl LexemePair {
    /// Builds a pair of two distinct tokens.
    pub fn new(left: &str, right: &str) -> Result<Self> {
        let pair = Self::allow_identical(left, right)?;
        if pair.left == pair.right {
            return Err(Error::InvalidPair(format!(
                "both sides are {:?}",
                pair.left
            )));
        }
        Ok(pair)
    }

    /// Builds a pair whose sides may be the same token.
    pub fn allow_identical(left: &str, right: &str) -> Result<Self> {
        Ok(LexemePair {
            left: normalize(left)?,
            right: normalize(right)?,
        })
    }

    pub(crate) fn from_parts_unchecked(left: &str, right: &str) -> Self {
        LexemePair {
            left: left.to_owned(),
            right: right.to_owned(),
        }
    }

    pub fn left(&self) -> &str {
        &self.left
    }

    pub fn right(&self) -> &str {
        &self.right
    }

    pub fn reversed(&self) -> Self {
        LexemePair {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

impl fmt::Display for LexemePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.left, self.right)
    }
}

fn normalize(token: &str) -> Result<String> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::InvalidPair("empty token".into()));
    }
    if token.contains(char::is_whitespace) {
        return Err(Error::InvalidPair(format!(
            "token {token:?} contains whitespace"
        )));
    }
    Ok(token.to_lowercase())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScoreMethod {
    WordSimilarity,
    DefinitionSimilarity,
    DefinitionContentSimilarity,
}

impl ScoreMethod {
    pub const ALL: [ScoreMethod; 3] = [
        ScoreMethod::WordSimilarity,
        ScoreMethod::DefinitionSimilarity,
        ScoreMethod::DefinitionContentSimilarity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScoreMethod::WordSimilarity => "word",
            ScoreMethod::DefinitionSimilarity => "definition",
            ScoreMethod::DefinitionContentSimilarity => "definition_content",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ScoreMethod::WordSimilarity => "word similarity",
            ScoreMethod::DefinitionSimilarity => "definition similarity",
            ScoreMethod::DefinitionContentSimilarity => "definition content similarity",
        }
    }

    pub fn needs_definitions(self) -> bool {
        self != ScoreMethod::WordSimilarity
    }
}

impl fmt::Display for ScoreMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ScoreMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "word" | "word_similarity" => Ok(ScoreMethod::WordSimilarity),
            "definition" | "definition_similarity" => Ok(ScoreMethod::DefinitionSimilarity),
            "definition_content" | "definition_content_similarity" | "content" => {
                Ok(ScoreMethod::DefinitionContentSimilarity)
            }
            other => Err(Error::Usage(format!(
                "unknown method {other:?} (expected word, definition or definition_content)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnscorableReason {
    LeftOov,
    RightOov,
    NoDefinition,
    AllOov,
    AllStopwords,
    ZeroNorm,
}

impl UnscorableReason {
    pub fn code(self) -> &'static str {
        match self {
            UnscorableReason::LeftOov => "left-oov",
            UnscorableReason::RightOov => "right-oov",
            UnscorableReason::NoDefinition => "no-definition",
            UnscorableReason::AllOov => "all-oov",
            UnscorableReason::AllStopwords => "all-stopwords",
            UnscorableReason::ZeroNorm => "zero-norm",
        }
    }
}

impl fmt::Display for UnscorableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Either a similarity in [-1, 1] or the reason none could be computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScoreOutcome {
    Scored(f64),
    Unscorable(UnscorableReason),
}

impl ScoreOutcome {
    pub fn value(self) -> Option<f64> {
        match self {
            ScoreOutcome::Scored(v) => Some(v),
            ScoreOutcome::Unscorable(_) => None,
        }
    }

    pub fn unscorable_reason(self) -> Option<UnscorableReason> {
        match self {
            ScoreOutcome::Scored(_) => None,
            ScoreOutcome::Unscorable(r) => Some(r),
        }
    }
}

impl From<Result<f64, UnscorableReason>> for ScoreOutcome {
    fn from(r: Result<f64, UnscorableReason>) -> Self {
        match r {
            Ok(v) => ScoreOutcome::Scored(v),
            Err(reason) => ScoreOutcome::Unscorable(reason),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Judgement {
    Compound,
    NotCompound,
    Unscorable,
}

pub fn word_similarity(table: &EmbeddingTable, pair: &LexemePair) -> ScoreOutcome {
    let left = table.lookup(pair.left());
    let right = table.lookup(pair.right());
    let outcome = match (left, right) {
        (None, _) => Err(UnscorableReason::LeftOov),
        (_, None) => Err(UnscorableReason::RightOov),
        (Some(l), Some(r)) => cosine(l, r).map_err(|_| UnscorableReason::ZeroNorm),
    };
    outcome.into()
}

pub fn definition_similarity(
    table: &EmbeddingTable,
    lexicon: &DefinitionLexicon,
    pair: &LexemePair,
) -> ScoreOutcome {
    definition_cosine(table, lexicon, None, pair)
}

pub fn definition_content_similarity(
    table: &EmbeddingTable,
    lexicon: &DefinitionLexicon,
    stopwords: &StopWordList,
    pair: &LexemePair,
) -> ScoreOutcome {
    definition_cosine(table, lexicon, Some(stopwords), pair)
}

fn definition_cosine(
    table: &EmbeddingTable,
    lexicon: &DefinitionLexicon,
    stopwords: Option<&StopWordList>,
    pair: &LexemePair,
) -> ScoreOutcome {
    let outcome = definition_embedding(lexicon, table, pair.left(), stopwords).and_then(|l| {
        let r = definition_embedding(lexicon, table, pair.right(), stopwords)?;
        cosine(&l.vector, &r.vector).map_err(|_| UnscorableReason::ZeroNorm)
    });
    outcome.into()
}

/// Strictly below `threshold` is a compound; at or above is not.
pub fn classify(outcome: ScoreOutcome, threshold: f64) -> Result<Judgement> {
    check_threshold(threshold)?;
    Ok(match outcome {
        ScoreOutcome::Scored(v) if v < threshold => Judgement::Compound,
        ScoreOutcome::Scored(_) => Judgement::NotCompound,
        ScoreOutcome::Unscorable(_) => Judgement::Unscorable,
    })
}

pub(crate) fn check_threshold(threshold: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&threshold) {
        Ok(())
    } else {
        Err(Error::ThresholdOutOfRange(threshold))
    }
}

/// Bundles the inputs every method may need so callers can score by
/// [`ScoreMethod`].
#[derive(Debug, Clone, Copy)]
pub struct Scorer<'a> {
    pub table: &'a EmbeddingTable,
    pub lexicon: Option<&'a DefinitionLexicon>,
    pub stopwords: Option<&'a StopWordList>,
}

impl<'a> Scorer<'a> {
    pub fn new(table: &'a EmbeddingTable) -> Self {
        Scorer {
            table,
            lexicon: None,
            stopwords: None,
        }
    }

    pub fn with_definitions(mut self, lexicon: &'a DefinitionLexicon) -> Self {
        self.lexicon = Some(lexicon);
        self
    }

    pub fn with_stopwords(mut self, stopwords: &'a StopWordList) -> Self {
        self.stopwords = Some(stopwords);
        self
    }

    /// Checks that the inputs `method` requires are present.
    pub fn supports(&self, method: ScoreMethod) -> Result<()> {
        match method {
            ScoreMethod::WordSimilarity => Ok(()),
            ScoreMethod::DefinitionSimilarity if self.lexicon.is_none() => Err(Error::Usage(
                "definition similarity needs a definitions file".into(),
            )),
            ScoreMethod::DefinitionContentSimilarity
                if self.lexicon.is_none() || self.stopwords.is_none() =>
            {
                Err(Error::Usage(
                    "definition content similarity needs definitions and stop-word files".into(),
                ))
            }
            _ => Ok(()),
        }
    }

    pub fn score(&self, method: ScoreMethod, pair: &LexemePair) -> Result<ScoreOutcome> {
        self.supports(method)?;
        Ok(match method {
            ScoreMethod::WordSimilarity => word_similarity(self.table, pair),
            ScoreMethod::DefinitionSimilarity => {
                definition_similarity(self.table, self.lexicon.unwrap(), pair)
            }
            ScoreMethod::DefinitionContentSimilarity => definition_content_similarity(
                self.table,
                self.lexicon.unwrap(),
                self.stopwords.unwrap(),
                pair,
            ),
        })
    }
}
