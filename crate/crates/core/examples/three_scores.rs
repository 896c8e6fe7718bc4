// Score candidate pairs with word, definition and definition-content
// similarity, then apply per-method thresholds.
//
// `cargo run --example three_scores`

use std::error::Error;
use std::path::PathBuf;

use mwe_compound::definitions::{load_definitions_file, load_stopwords_file};
use mwe_compound::embedding::load_embeddings_file;
use mwe_compound::scoring::{classify, LexemePair, ScoreMethod, Scorer};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = load_embeddings_file(fixture("embeddings.txt"), Some(4))?;
    let lexicon = load_definitions_file(fixture("definitions.tsv"))?;
    let stopwords = load_stopwords_file(fixture("stopwords.txt"))?;
    let scorer = Scorer::new(&table)
        .with_definitions(&lexicon)
        .with_stopwords(&stopwords);

    let thresholds = [
        (ScoreMethod::WordSimilarity, 0.78),
        (ScoreMethod::DefinitionSimilarity, 0.90),
        (ScoreMethod::DefinitionContentSimilarity, 0.46),
    ];
    for (left, right) in [
        ("home", "work"),
        ("jet", "lag"),
        ("cat", "dog"),
        ("the", "mat"),
    ] {
        let pair = LexemePair::new(left, right)?;
        for (method, threshold) in thresholds {
            let outcome = scorer.score(method, &pair)?;
            let shown = match outcome.value() {
                Some(v) => format!("{v:.4}"),
                None => format!("unscorable ({})", outcome.unscorable_reason().unwrap()),
            };
            println!(
                "{pair:<10} {:<30} {shown:<24} {:?}",
                method.label(),
                classify(outcome, threshold)?
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
