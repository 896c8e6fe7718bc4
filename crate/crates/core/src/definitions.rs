//! First-definition lexicon, stop-word lists and definition embeddings.

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::Path;

use crate::corpus::tokenize_words;
use crate::embedding::{vector_sum, EmbeddingTable, WordVector};
use crate::error::{Error, Result};
use crate::scoring::UnscorableReason;

/// Lexeme → tokens of its first definition.
#[derive(Debug, Clone, Default)]
pub struct DefinitionLexicon {
    entries: HashMap<String, Vec<String>>,
}

impl DefinitionLexicon {
    pub fn definition(&self, lexeme: &str) -> Option<&[String]> {
        match self.entries.get(lexeme) {
            Some(d) => Some(d),
            None => self.entries.get(&lexeme.to_lowercase()).map(Vec::as_slice),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lexemes(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

/// Reads `lexeme<TAB>definition` lines. Repeated lexemes keep their first line.
pub fn load_definitions<R: BufRead>(reader: R) -> Result<DefinitionLexicon> {
    let mut entries = HashMap::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim_end_matches(['\r', '\n']);
        if line.trim().is_empty() {
            continue;
        }
        let (lexeme, text) = line
            .split_once('\t')
            .ok_or(Error::MissingTab { line: line_no })?;
        let lexeme = lexeme.trim().to_lowercase();
        if lexeme.is_empty() || lexeme.contains(char::is_whitespace) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("invalid lexeme {lexeme:?}"),
            });
        }
        if entries.contains_key(&lexeme) {
            continue;
        }
        let tokens = tokenize_words(text);
        if tokens.is_empty() {
            return Err(Error::EmptyDefinition {
                line: line_no,
                lexeme,
            });
        }
        entries.insert(lexeme, tokens);
    }
    Ok(DefinitionLexicon { entries })
}

pub fn load_definitions_file(path: impl AsRef<Path>) -> Result<DefinitionLexicon> {
    load_definitions(open(path.as_ref())?)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopWordList {
    words: HashSet<String>,
}

impl StopWordList {
    pub fn contains(&self, token: &str) -> bool {
        self.words.contains(token)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl<S: AsRef<str>> FromIterator<S> for StopWordList {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        StopWordList {
            words: iter
                .into_iter()
                .map(|w| w.as_ref().trim().to_lowercase())
                .filter(|w| !w.is_empty())
                .collect(),
        }
    }
}

/// One token per line; blank lines are skipped.
pub fn load_stopwords<R: BufRead>(reader: R) -> Result<StopWordList> {
    let lines = reader.lines().collect::<std::io::Result<Vec<_>>>()?;
    Ok(lines.into_iter().collect())
}

pub fn load_stopwords_file(path: impl AsRef<Path>) -> Result<StopWordList> {
    load_stopwords(open(path.as_ref())?)
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })
}

/// A summed definition vector with its token coverage.
#[derive(Debug, Clone, PartialEq)]
pub struct DefinitionEmbedding {
    pub vector: WordVector,
    /// Tokens that contributed a vector.
    pub used: usize,
    /// Tokens dropped because the table has no vector for them.
    pub oov: usize,
    /// Tokens removed as stop words.
    pub stopped: usize,
}

/// Sums the vectors of `lexeme`'s definition tokens, after optional
/// stop-word removal. OOV tokens are dropped.
pub fn definition_embedding(
    lexicon: &DefinitionLexicon,
    table: &EmbeddingTable,
    lexeme: &str,
    stopwords: Option<&StopWordList>,
) -> Result<DefinitionEmbedding, UnscorableReason> {
    let definition = lexicon
        .definition(lexeme)
        .ok_or(UnscorableReason::NoDefinition)?;

    let mut stopped = 0;
    let mut oov = 0;
    let mut vectors = Vec::with_capacity(definition.len());
    for token in definition {
        if stopwords.is_some_and(|s| s.contains(token)) {
            stopped += 1;
            continue;
        }
        match table.lookup(token) {
            Some(v) => vectors.push(v),
            None => oov += 1,
        }
    }

    if vectors.is_empty() {
        return Err(if oov == 0 {
            UnscorableReason::AllStopwords
        } else {
            UnscorableReason::AllOov
        });
    }
    let used = vectors.len();
    let vector = vector_sum(vectors).expect("non-empty, table-dimension vectors");
    Ok(DefinitionEmbedding {
        vector,
        used,
        oov,
        stopped,
    })
}
