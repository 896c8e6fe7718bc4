// Build the two negative populations from a corpus: uniform random word
// pairs and the most frequent adjacent bigrams, both screened against known
// compounds.
//
// `cargo run --example negative_samples`

use std::collections::HashSet;
use std::error::Error;
use std::path::PathBuf;

use mwe_compound::corpus::{
    build_bigram_counts, read_corpus, sample_random_pairs, top_cooccurring_pairs,
};
use mwe_compound::scoring::LexemePair;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/corpus.txt");
    let stream = read_corpus(&path)?;
    let counts = build_bigram_counts(&stream);
    println!(
        "{} tokens, {} bigrams ({} distinct)",
        stream.len(),
        counts.total_bigrams(),
        counts.distinct()
    );

    let compounds = [
        LexemePair::new("fire", "fly")?,
        LexemePair::new("home", "work")?,
    ];
    let exclusions: HashSet<LexemePair> = compounds
        .iter()
        .flat_map(|p| [p.clone(), p.reversed()])
        .collect();

    println!("most frequent bigrams:");
    for pc in top_cooccurring_pairs(&counts, 5, &exclusions)? {
        println!("  {:<12} {}", pc.pair.to_string(), pc.count);
    }

    println!("random pairs (seed 42):");
    for pair in sample_random_pairs(&stream.vocabulary(), 5, 42, &exclusions)? {
        println!("  {pair}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
