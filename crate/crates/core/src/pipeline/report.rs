use std::fmt::Write as _;
use std::io::Write;

use crate::error::Result;
use crate::pipeline::dataset::{LabeledPair, NegativeSource};
use crate::scoring::{check_threshold, classify, Judgement, ScoreMethod, ScoreOutcome};

/// Confusion counts plus the derived metrics for one (method, negative
/// source) evaluation. Metrics are `None` where their denominator is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub method: ScoreMethod,
    pub negative_source: NegativeSource,
    pub threshold: f64,
    pub recall: Option<f64>,
    pub precision: Option<f64>,
    pub f1: Option<f64>,
    pub tp: u64,
    pub fp: u64,
    pub fn_: u64,
    pub tn: u64,
    pub unscorable_pos: u64,
    pub unscorable_neg: u64,
}

impl EvalReport {
    pub fn positives(&self) -> u64 {
        self.tp + self.fn_ + self.unscorable_pos
    }

    pub fn negatives(&self) -> u64 {
        self.fp + self.tn + self.unscorable_neg
    }
}

/// Classifies every outcome at `threshold` and tallies the confusion matrix
/// with compound as the positive class.
pub fn evaluate(
    scored_heldout: &[(LabeledPair, ScoreOutcome)],
    threshold: f64,
    method: ScoreMethod,
    negative_source: NegativeSource,
) -> Result<EvalReport> {
    check_threshold(threshold)?;
    let mut r = EvalReport {
        method,
        negative_source,
        threshold,
        recall: None,
        precision: None,
        f1: None,
        tp: 0,
        fp: 0,
        fn_: 0,
        tn: 0,
        unscorable_pos: 0,
        unscorable_neg: 0,
    };
    for (pair, outcome) in scored_heldout {
        let positive = pair.is_positive();
        match (classify(*outcome, threshold)?, positive) {
            (Judgement::Compound, true) => r.tp += 1,
            (Judgement::Compound, false) => r.fp += 1,
            (Judgement::NotCompound, true) => r.fn_ += 1,
            (Judgement::NotCompound, false) => r.tn += 1,
            (Judgement::Unscorable, true) => r.unscorable_pos += 1,
            (Judgement::Unscorable, false) => r.unscorable_neg += 1,
        }
    }
    r.precision = ratio(r.tp, r.tp + r.fp);
    r.recall = ratio(r.tp, r.tp + r.fn_);
    r.f1 = match (r.precision, r.recall) {
        (Some(_), Some(_)) => ratio(2 * r.tp, 2 * r.tp + r.fp + r.fn_),
        _ => None,
    };
    Ok(r)
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

pub const REPORT_COLUMNS: [&str; 12] = [
    "method",
    "negative_source",
    "threshold",
    "recall",
    "precision",
    "f1",
    "tp",
    "fp",
    "fn",
    "tn",
    "unscorable_pos",
    "unscorable_neg",
];

fn opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Writes one CSV row per report, with header.
pub fn write_reports_csv<W: Write>(writer: W, reports: &[EvalReport]) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(writer);
    w.write_record(REPORT_COLUMNS)?;
    for r in reports {
        w.write_record([
            r.method.as_str().to_owned(),
            r.negative_source.as_str().to_owned(),
            r.threshold.to_string(),
            opt(r.recall),
            opt(r.precision),
            opt(r.f1),
            r.tp.to_string(),
            r.fp.to_string(),
            r.fn_.to_string(),
            r.tn.to_string(),
            r.unscorable_pos.to_string(),
            r.unscorable_neg.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// Fixed-width table for terminals.
pub fn render_table(reports: &[EvalReport]) -> String {
    let fmt3 = |v: Option<f64>| v.map(|x| format!("{x:.3}")).unwrap_or_else(|| "-".into());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<31} {:<9} {:>9} {:>7} {:>9} {:>7} {:>6} {:>6} {:>6} {:>6} {:>7} {:>7}",
        "method",
        "negatives",
        "threshold",
        "recall",
        "precision",
        "f1",
        "tp",
        "fp",
        "fn",
        "tn",
        "unsc+",
        "unsc-"
    );
    for r in reports {
        let _ = writeln!(
            out,
            "{:<31} {:<9} {:>9.4} {:>7} {:>9} {:>7} {:>6} {:>6} {:>6} {:>6} {:>7} {:>7}",
            r.method.label(),
            r.negative_source.as_str(),
            r.threshold,
            fmt3(r.recall),
            fmt3(r.precision),
            fmt3(r.f1),
            r.tp,
            r.fp,
            r.fn_,
            r.tn,
            r.unscorable_pos,
            r.unscorable_neg
        );
    }
    out
}
