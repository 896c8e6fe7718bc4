//! Detection of two-word compound expressions from the non-compositionality
//! signal in pretrained word embeddings.
//!
//! A candidate pair is scored by cosine similarity, either of the two word
//! vectors or of their summed first-definition vectors (optionally with stop
//! words removed). Compounds tend to be *less* similar than ordinary word
//! pairs, so a score strictly below a calibrated threshold is a compound
//! judgement.
//!
//! ```
//! use mwe_compound::embedding::load_embeddings;
//! use mwe_compound::scoring::{classify, word_similarity, Judgement, LexemePair};
//!
//! let table = load_embeddings("jet 1 0\nlag 0 1\n".as_bytes(), None, "toy").unwrap();
//! let pair = LexemePair::new("jet", "lag").unwrap();
//! let score = word_similarity(&table, &pair);
//! assert_eq!(classify(score, 0.78).unwrap(), Judgement::Compound);
//! ```

pub mod cli;
pub mod corpus;
pub mod definitions;
pub mod embedding;
pub mod error;
pub mod pipeline;
pub mod scan;
pub mod scoring;

pub use error::{Error, Result};
