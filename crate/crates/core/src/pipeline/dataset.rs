use std::collections::HashSet;
use std::fmt;
use std::io::Read;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scoring::LexemePair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Positive,
    Negative,
}

/// Where a pair came from. Compounds are the only positive source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairSource {
    Ladec,
    Random,
    Cooccur,
}

impl PairSource {
    pub fn label(self) -> Label {
        match self {
            PairSource::Ladec => Label::Positive,
            PairSource::Random | PairSource::Cooccur => Label::Negative,
        }
    }
}

/// The two negative populations evaluation is run against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NegativeSource {
    Random,
    Cooccur,
}

impl NegativeSource {
    pub const ALL: [NegativeSource; 2] = [NegativeSource::Random, NegativeSource::Cooccur];

    pub fn as_str(self) -> &'static str {
        match self {
            NegativeSource::Random => "random",
            NegativeSource::Cooccur => "cooccur",
        }
    }

    pub fn pair_source(self) -> PairSource {
        match self {
            NegativeSource::Random => PairSource::Random,
            NegativeSource::Cooccur => PairSource::Cooccur,
        }
    }
}

impl fmt::Display for NegativeSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledPair {
    pub pair: LexemePair,
    pub source: PairSource,
}

impl LabeledPair {
    pub fn new(pair: LexemePair, source: PairSource) -> Self {
        LabeledPair { pair, source }
    }

    pub fn label(&self) -> Label {
        self.source.label()
    }

    pub fn is_positive(&self) -> bool {
        self.label() == Label::Positive
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pub calibration: Vec<LabeledPair>,
    pub heldout: Vec<LabeledPair>,
    pub split_seed: u64,
    pub split_fraction: f64,
}

/// Column names of the two constituents in a compound CSV.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompoundColumns {
    pub left: String,
    pub right: String,
}

impl Default for CompoundColumns {
    fn default() -> Self {
        CompoundColumns {
            left: "c1".into(),
            right: "c2".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LoadedCompounds {
    /// Distinct pairs in file order.
    pub pairs: Vec<LexemePair>,
    /// Rows dropped because a constituent was empty, contained whitespace,
    /// or both constituents were the same token.
    pub skipped: usize,
    pub duplicates: usize,
}

/// Reads positive compounds from a headed CSV.
pub fn load_compounds<R: Read>(source: R, columns: &CompoundColumns) -> Result<LoadedCompounds> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(source);
    let headers = reader.headers()?.clone();
    let position = |name: &str| {
        headers
            .iter()
            .position(|h| h.trim().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::MissingColumn(name.to_owned()))
    };
    let left_idx = position(&columns.left)?;
    let right_idx = position(&columns.right)?;

    let mut out = LoadedCompounds::default();
    let mut seen = HashSet::new();
    for record in reader.records() {
        let record = record?;
        let left = record.get(left_idx).unwrap_or("");
        let right = record.get(right_idx).unwrap_or("");
        match LexemePair::new(left, right) {
            Ok(pair) => {
                if seen.insert(pair.clone()) {
                    out.pairs.push(pair);
                } else {
                    out.duplicates += 1;
                }
            }
            Err(_) => out.skipped += 1,
        }
    }
    if out.pairs.is_empty() {
        return Err(Error::NoCompounds);
    }
    Ok(out)
}

/// Stratified, seeded split. Each source stratum sends `fraction` of its
/// members (rounded, at least one each way) to calibration and the rest to
/// heldout; within each split the input order is preserved.
pub fn split_dataset(pairs: &[LabeledPair], fraction: f64, seed: u64) -> Result<LabeledDataset> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(Error::InvalidFraction(fraction));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut in_calibration = vec![false; pairs.len()];

    for stratum in [PairSource::Ladec, PairSource::Random, PairSource::Cooccur] {
        let members: Vec<usize> = pairs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.source == stratum)
            .map(|(i, _)| i)
            .collect();
        let n = members.len();
        if n == 0 {
            continue;
        }
        if n < 2 {
            return Err(Error::InfeasibleSplit(format!(
                "{stratum:?} has {n} pair; each stratum needs at least 2"
            )));
        }
        let k = ((fraction * n as f64).round() as usize).clamp(1, n - 1);
        for pick in index::sample(&mut rng, n, k) {
            in_calibration[members[pick]] = true;
        }
    }

    let mut calibration = Vec::new();
    let mut heldout = Vec::new();
    for (pair, cal) in pairs.iter().zip(in_calibration) {
        if cal {
            calibration.push(pair.clone());
        } else {
            heldout.push(pair.clone());
        }
    }
    for (name, split) in [("calibration", &calibration), ("heldout", &heldout)] {
        for label in [Label::Positive, Label::Negative] {
            if !split.iter().any(|p| p.label() == label) {
                return Err(Error::InfeasibleSplit(format!(
                    "{name} split has no {label:?} pair"
                )));
            }
        }
    }
    Ok(LabeledDataset {
        calibration,
        heldout,
        split_seed: seed,
        split_fraction: fraction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(n_pos: usize, n_neg: usize) -> Vec<LabeledPair> {
        let mut v = Vec::new();
        for i in 0..n_pos {
            v.push(LabeledPair::new(
                LexemePair::new(&format!("p{i}"), "x").unwrap(),
                PairSource::Ladec,
            ));
        }
        for i in 0..n_neg {
            v.push(LabeledPair::new(
                LexemePair::new(&format!("n{i}"), "y").unwrap(),
                PairSource::Random,
            ));
        }
        v
    }

    fn count(split: &[LabeledPair], label: Label) -> usize {
        split.iter().filter(|p| p.label() == label).count()
    }

    #[test]
    fn compounds_basic() {
        let c = load_compounds(
            "c1,c2,stim\nhome,work,homework\n".as_bytes(),
            &Default::default(),
        )
        .unwrap();
        assert_eq!(c.pairs, [LexemePair::new("home", "work").unwrap()]);
    }

    #[test]
    fn compounds_dedup_and_lowercase() {
        let c = load_compounds(
            "c1,c2\nhome,work\nHome,Work\nhome,work\n".as_bytes(),
            &Default::default(),
        )
        .unwrap();
        assert_eq!(c.pairs.len(), 1);
        assert_eq!(c.duplicates, 2);
    }

    #[test]
    fn compounds_missing_column_or_rows() {
        assert!(matches!(
            load_compounds("c1,other\nhome,work\n".as_bytes(), &Default::default()),
            Err(Error::MissingColumn(c)) if c == "c2"
        ));
        assert!(matches!(
            load_compounds("c1,c2\n".as_bytes(), &Default::default()),
            Err(Error::NoCompounds)
        ));
    }

    #[test]
    fn compounds_custom_columns_and_skips() {
        let cols = CompoundColumns {
            left: "first".into(),
            right: "second".into(),
        };
        let c = load_compounds("first,second\ncan,can\njet,lag\n,x\n".as_bytes(), &cols).unwrap();
        assert_eq!(c.pairs, [LexemePair::new("jet", "lag").unwrap()]);
        assert_eq!(c.skipped, 2);
    }

    #[test]
    fn exact_stratification() {
        let d = split_dataset(&labeled(10, 10), 0.5, 1).unwrap();
        assert_eq!(count(&d.calibration, Label::Positive), 5);
        assert_eq!(count(&d.calibration, Label::Negative), 5);
        assert_eq!(count(&d.heldout, Label::Positive), 5);
        assert_eq!(count(&d.heldout, Label::Negative), 5);
        let cal: HashSet<_> = d.calibration.iter().collect();
        assert!(d.heldout.iter().all(|p| !cal.contains(p)));
    }

    #[test]
    fn split_is_seeded() {
        let data = labeled(10, 10);
        assert_eq!(
            split_dataset(&data, 0.5, 3).unwrap(),
            split_dataset(&data, 0.5, 3).unwrap()
        );
        assert_ne!(
            split_dataset(&data, 0.5, 3).unwrap().calibration,
            split_dataset(&data, 0.5, 4).unwrap().calibration
        );
    }

    #[test]
    fn split_rejects_bad_fraction_and_tiny_strata() {
        let data = labeled(10, 10);
        assert!(matches!(
            split_dataset(&data, 1.0, 0),
            Err(Error::InvalidFraction(_))
        ));
        assert!(matches!(
            split_dataset(&data, 0.0, 0),
            Err(Error::InvalidFraction(_))
        ));
        assert!(matches!(
            split_dataset(&labeled(1, 10), 0.5, 0),
            Err(Error::InfeasibleSplit(_))
        ));
        assert!(matches!(
            split_dataset(&labeled(4, 0), 0.5, 0),
            Err(Error::InfeasibleSplit(_))
        ));
    }

    #[test]
    fn extreme_fraction_still_leaves_one_each_side() {
        let d = split_dataset(&labeled(3, 3), 0.01, 0).unwrap();
        assert_eq!(count(&d.calibration, Label::Positive), 1);
        assert_eq!(count(&d.heldout, Label::Positive), 2);
    }
}
