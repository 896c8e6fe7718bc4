use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Result of a threshold sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Calibration {
    pub threshold: f64,
    /// F1 of the compound class at `threshold`.
    pub f1: f64,
}

/// The threshold maximizing compound-class F1 on the given scores.
pub fn calibrate_threshold(positive_scores: &[f64], negative_scores: &[f64]) -> Result<f64> {
    calibrate(positive_scores, negative_scores).map(|c| c.threshold)
}

/// Sweeps every candidate threshold: one below the smallest score, the
/// midpoint between each pair of consecutive distinct scores, and one above
/// the largest. Below-range and above-range candidates are the midpoints to
/// -1 and 1 respectively, so every candidate stays a valid threshold.
///
/// A score is judged compound when strictly below the threshold. Equal F1
/// values resolve to the smallest threshold.
pub fn calibrate(positive_scores: &[f64], negative_scores: &[f64]) -> Result<Calibration> {
    if positive_scores.is_empty() {
        return Err(Error::EmptyScores("positive score".into()));
    }
    if negative_scores.is_empty() {
        return Err(Error::EmptyScores("negative score".into()));
    }
    for &s in positive_scores.iter().chain(negative_scores) {
        if !(-1.0..=1.0).contains(&s) {
            return Err(Error::InvalidScore(s));
        }
    }

    let mut pos = positive_scores.to_vec();
    let mut neg = negative_scores.to_vec();
    pos.sort_by(f64::total_cmp);
    neg.sort_by(f64::total_cmp);

    let mut distinct: Vec<f64> = pos.iter().chain(&neg).copied().collect();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();

    let candidates = std::iter::once((-1.0 + distinct[0]) / 2.0)
        .chain(distinct.windows(2).map(|w| (w[0] + w[1]) / 2.0))
        .chain(std::iter::once((distinct[distinct.len() - 1] + 1.0) / 2.0));

    let total_pos = pos.len() as u64;
    let (mut p_below, mut n_below) = (0usize, 0usize);
    let mut best: Option<(F1, f64)> = None;
    for threshold in candidates {
        while p_below < pos.len() && pos[p_below] < threshold {
            p_below += 1;
        }
        while n_below < neg.len() && neg[n_below] < threshold {
            n_below += 1;
        }
        let tp = p_below as u64;
        let f1 = F1 {
            tp,
            fp: n_below as u64,
            fn_: total_pos - tp,
        };
        let better = match &best {
            None => true,
            Some((b, bt)) => match f1.cmp(b) {
                Ordering::Greater => true,
                Ordering::Equal => threshold < *bt,
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((f1, threshold));
        }
    }
    let (f1, threshold) = best.expect("at least two candidates");
    Ok(Calibration {
        threshold,
        f1: f1.value(),
    })
}

/// Exact F1 = 2tp / (2tp + fp + fn), compared without rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct F1 {
    tp: u64,
    fp: u64,
    fn_: u64,
}

impl F1 {
    fn parts(self) -> (u128, u128) {
        let num = 2 * self.tp as u128;
        (num, num + self.fp as u128 + self.fn_ as u128)
    }

    fn value(self) -> f64 {
        let (n, d) = self.parts();
        if d == 0 {
            0.0
        } else {
            n as f64 / d as f64
        }
    }
}

impl Ord for F1 {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.parts();
        let (c, d) = other.parts();
        // a/b vs c/d, with 0/0 treated as 0
        let b = b.max(1);
        let d = d.max(1);
        (a * d).cmp(&(c * b))
    }
}

impl PartialOrd for F1 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
