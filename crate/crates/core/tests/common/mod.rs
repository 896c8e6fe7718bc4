#![allow(dead_code)]

use std::path::PathBuf;

use mwe_compound::scoring::{classify, Judgement, ScoreOutcome};
use num_rational::Ratio;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// F1 of the compound class at `threshold`, from precision and recall as
/// exact rationals. Zero when either is undefined or both are zero.
pub fn f1_at(pos: &[f64], neg: &[f64], threshold: f64) -> Ratio<u64> {
    let compound =
        |s: f64| classify(ScoreOutcome::Scored(s), threshold).unwrap() == Judgement::Compound;
    let tp = pos.iter().filter(|&&s| compound(s)).count() as u64;
    let fp = neg.iter().filter(|&&s| compound(s)).count() as u64;
    let fn_ = pos.len() as u64 - tp;
    if tp == 0 {
        return Ratio::from_integer(0);
    }
    let precision = Ratio::new(tp, tp + fp);
    let recall = Ratio::new(tp, tp + fn_);
    Ratio::from_integer(2) * precision * recall / (precision + recall)
}

/// Exhaustive scan over every candidate threshold, evaluating each one from
/// scratch. Ties go to the smallest threshold.
pub fn brute_force_threshold(pos: &[f64], neg: &[f64]) -> f64 {
    let mut values: Vec<f64> = pos.iter().chain(neg).copied().collect();
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    values.dedup();
    let mut candidates = vec![(-1.0 + values[0]) / 2.0];
    for i in 1..values.len() {
        candidates.push((values[i - 1] + values[i]) / 2.0);
    }
    candidates.push((values[values.len() - 1] + 1.0) / 2.0);

    let mut best_t = candidates[0];
    let mut best_f1 = f1_at(pos, neg, best_t);
    for &t in &candidates[1..] {
        let f1 = f1_at(pos, neg, t);
        if f1 > best_f1 || (f1 == best_f1 && t < best_t) {
            best_f1 = f1;
            best_t = t;
        }
    }
    best_t
}
