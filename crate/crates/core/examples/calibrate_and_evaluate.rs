// Pick a threshold on a calibration split, then measure recall, precision
// and F1 on held-out pairs.
//
// `cargo run --example calibrate_and_evaluate`

use std::error::Error;

use mwe_compound::pipeline::{
    calibrate, evaluate, render_table, LabeledPair, NegativeSource, PairSource,
};
use mwe_compound::scoring::{LexemePair, ScoreMethod, ScoreOutcome};

fn labeled(items: &[(&str, &str, PairSource, f64)]) -> Vec<(LabeledPair, ScoreOutcome)> {
    items
        .iter()
        .map(|&(l, r, source, score)| {
            let pair = LexemePair::new(l, r).expect("valid pair");
            (LabeledPair::new(pair, source), ScoreOutcome::Scored(score))
        })
        .collect()
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    use PairSource::{Ladec, Random};

    // compounds tend to score low, random pairs high
    let seen = labeled(&[
        ("jet", "lag", Ladec, 0.21),
        ("snow", "ball", Ladec, 0.48),
        ("fire", "fly", Ladec, 0.35),
        ("home", "chef", Random, 0.52),
        ("video", "lag", Random, 0.81),
        ("green", "idea", Random, 0.66),
    ]);
    let positives: Vec<f64> = seen
        .iter()
        .filter(|(p, _)| p.is_positive())
        .filter_map(|(_, s)| s.value())
        .collect();
    let negatives: Vec<f64> = seen
        .iter()
        .filter(|(p, _)| !p.is_positive())
        .filter_map(|(_, s)| s.value())
        .collect();
    let calibration = calibrate(&positives, &negatives)?;
    println!(
        "threshold {:.3} (calibration F1 {:.3})",
        calibration.threshold, calibration.f1
    );

    let unseen = labeled(&[
        ("home", "work", Ladec, 0.40),
        ("rail", "road", Ladec, 0.55),
        ("sun", "flower", Ladec, 0.30),
        ("blue", "table", Random, 0.45),
        ("cold", "river", Random, 0.70),
        ("tall", "music", Random, 0.90),
    ]);
    let report = evaluate(
        &unseen,
        calibration.threshold,
        ScoreMethod::WordSimilarity,
        NegativeSource::Random,
    )?;
    print!("{}", render_table(&[report]));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
