// Frame-blind scan: classify every adjacent bigram of a corpus and list the
// ones that look like compounds, most non-compositional first.
//
// `cargo run --example corpus_scan`

use std::error::Error;
use std::path::PathBuf;

use mwe_compound::corpus::{build_bigram_counts, read_corpus};
use mwe_compound::embedding::load_embeddings_file;
use mwe_compound::scan::{scan_bigrams, write_hits_csv, ScanOptions};
use mwe_compound::scoring::{ScoreMethod, Scorer};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let table = load_embeddings_file(dir.join("embeddings.txt"), None)?;
    let counts = build_bigram_counts(&read_corpus(dir.join("corpus.txt"))?);

    let options = ScanOptions {
        method: ScoreMethod::WordSimilarity,
        threshold: 0.78,
        min_count: 1,
        top_n: Some(10),
    };
    let hits = scan_bigrams(&counts, &Scorer::new(&table), &options)?;
    write_hits_csv(std::io::stdout().lock(), &hits)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
