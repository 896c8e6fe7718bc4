// Load GloVe-style vectors and compare words with cosine similarity.
//
// `cargo run --example cosine_similarity`

use std::error::Error;

use mwe_compound::embedding::{cosine, load_embeddings, vector_sum};

const VECTORS: &str = "\
home 0.9 0.1 0.0 0.2
work 0.1 0.8 0.3 0.0
video 0.2 0.7 0.3 0.1
lag 0.1 0.6 0.4 0.0
jet 0.0 0.2 0.9 0.1
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let table = load_embeddings(VECTORS.as_bytes(), Some(4), "inline")?;
    println!("{} vectors of dimension {}", table.len(), table.dimension());

    let lag = table.lookup("LAG").ok_or("lag missing")?;
    for word in ["video", "jet"] {
        let v = table.lookup(word).ok_or("missing")?;
        println!("cosine({word}, lag) = {:.4}", cosine(v, lag)?);
    }

    let home = table.lookup("home").ok_or("home missing")?;
    let work = table.lookup("work").ok_or("work missing")?;
    let sum = vector_sum([home, work])?;
    println!("home + work = {:?}", sum.values());
    assert!(table.lookup("homework").is_none());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
