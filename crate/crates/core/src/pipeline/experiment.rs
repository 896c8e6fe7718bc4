//! End-to-end experiment: compounds as positives, random and co-occurring
//! corpus pairs as negatives at a 1:1:1 ratio, per-method thresholds
//! calibrated on a seen split and applied to the unseen split.

use std::collections::{BTreeSet, HashSet};
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::corpus::{
    build_bigram_counts, read_corpus, sample_random_pairs, top_cooccurring_pairs_where, TokenStream,
};
use crate::definitions::{
    load_definitions_file, load_stopwords_file, DefinitionLexicon, StopWordList,
};
use crate::embedding::{load_embeddings_file, EmbeddingTable};
use crate::error::{Error, Result};
use crate::pipeline::calibration::calibrate_threshold;
use crate::pipeline::dataset::{
    load_compounds, split_dataset, CompoundColumns, LabeledDataset, LabeledPair, NegativeSource,
    PairSource,
};
use crate::pipeline::report::{evaluate, render_table, write_reports_csv, EvalReport};
use crate::scoring::{LexemePair, ScoreMethod, ScoreOutcome, Scorer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdMode {
    /// Calibrate once per method against random negatives; apply to both
    /// negative sources.
    Shared,
    /// Calibrate per (method, negative source).
    PerSource,
}

impl ThresholdMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ThresholdMode::Shared => "shared",
            ThresholdMode::PerSource => "per_source",
        }
    }
}

impl FromStr for ThresholdMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "shared" => Ok(ThresholdMode::Shared),
            "per_source" | "per-source" => Ok(ThresholdMode::PerSource),
            _ => Err(format!("expected shared or per_source, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub embeddings: PathBuf,
    pub embedding_dimension: Option<usize>,
    pub compounds: PathBuf,
    pub compound_columns: CompoundColumns,
    pub corpus: PathBuf,
    pub definitions: PathBuf,
    pub stopwords: PathBuf,
    pub sample_seed: u64,
    pub split_seed: u64,
    pub split_fraction: f64,
    pub threshold_mode: ThresholdMode,
    /// Draw negatives only from corpus tokens that have an embedding.
    pub negatives_in_vocabulary: bool,
    pub output_dir: PathBuf,
}

const REQUIRED_PATHS: [&str; 5] = [
    "embeddings",
    "compounds",
    "corpus",
    "definitions",
    "stopwords",
];

impl ExperimentConfig {
    /// Parses `key = value` lines. `#` starts a comment. Relative paths are
    /// resolved against `base_dir`.
    pub fn parse(text: &str, base_dir: &Path) -> Result<Self> {
        let mut pairs: Vec<(String, String)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Config {
                key: line.to_owned(),
                message: format!("line {} is not `key = value`", idx + 1),
            })?;
            let key = key.trim().to_owned();
            if pairs.iter().any(|(k, _)| *k == key) {
                return Err(Error::Config {
                    key,
                    message: "given more than once".into(),
                });
            }
            pairs.push((key, value.trim().to_owned()));
        }

        let get = |key: &str| {
            pairs
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
        };
        let path = |key: &str| -> Result<PathBuf> {
            let v = get(key).ok_or_else(|| Error::Config {
                key: key.into(),
                message: "required key missing".into(),
            })?;
            Ok(base_dir.join(v))
        };
        fn parsed<T: FromStr>(key: &str, value: Option<&str>, default: T) -> Result<T>
        where
            T::Err: std::fmt::Display,
        {
            match value {
                None => Ok(default),
                Some(v) => v.parse().map_err(|e: T::Err| Error::Config {
                    key: key.into(),
                    message: format!("invalid value {v:?}: {e}"),
                }),
            }
        }

        for (k, _) in &pairs {
            const KNOWN: [&str; 14] = [
                "embeddings",
                "embedding_dimension",
                "compounds",
                "compound_left_column",
                "compound_right_column",
                "corpus",
                "definitions",
                "stopwords",
                "sample_seed",
                "split_seed",
                "split_fraction",
                "threshold_mode",
                "negatives_in_vocabulary",
                "output_dir",
            ];
            if !KNOWN.contains(&k.as_str()) {
                return Err(Error::Config {
                    key: k.clone(),
                    message: "unknown key".into(),
                });
            }
        }

        let split_fraction = parsed("split_fraction", get("split_fraction"), 0.5)?;
        if !(split_fraction > 0.0 && split_fraction < 1.0) {
            return Err(Error::Config {
                key: "split_fraction".into(),
                message: format!("{split_fraction} is not strictly between 0 and 1"),
            });
        }
        let embedding_dimension = match get("embedding_dimension") {
            None => None,
            Some(v) => Some(parsed("embedding_dimension", Some(v), 0usize)?),
        };
        let defaults = CompoundColumns::default();
        Ok(ExperimentConfig {
            embeddings: path("embeddings")?,
            embedding_dimension,
            compounds: path("compounds")?,
            compound_columns: CompoundColumns {
                left: get("compound_left_column")
                    .unwrap_or(&defaults.left)
                    .to_owned(),
                right: get("compound_right_column")
                    .unwrap_or(&defaults.right)
                    .to_owned(),
            },
            corpus: path("corpus")?,
            definitions: path("definitions")?,
            stopwords: path("stopwords")?,
            sample_seed: parsed("sample_seed", get("sample_seed"), 0)?,
            split_seed: parsed("split_seed", get("split_seed"), 0)?,
            split_fraction,
            threshold_mode: parsed(
                "threshold_mode",
                get("threshold_mode"),
                ThresholdMode::Shared,
            )?,
            negatives_in_vocabulary: parsed(
                "negatives_in_vocabulary",
                get("negatives_in_vocabulary"),
                true,
            )?,
            output_dir: base_dir.join(get("output_dir").unwrap_or("reports")),
        })
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&text, base)
    }

    fn input_paths(&self) -> [(&'static str, &Path); 5] {
        [
            (REQUIRED_PATHS[0], &self.embeddings),
            (REQUIRED_PATHS[1], &self.compounds),
            (REQUIRED_PATHS[2], &self.corpus),
            (REQUIRED_PATHS[3], &self.definitions),
            (REQUIRED_PATHS[4], &self.stopwords),
        ]
    }

    /// One line per non-obvious modelling choice in effect.
    pub fn assumptions(&self) -> Vec<String> {
        vec![
            "threshold calibration maximizes F1 of the compound class (score strictly below threshold = compound)".into(),
            format!(
                "calibration/heldout split: stratified by source, fraction {}, seed {}",
                self.split_fraction, self.split_seed
            ),
            format!(
                "threshold mode: {}{}",
                self.threshold_mode.as_str(),
                match self.threshold_mode {
                    ThresholdMode::Shared => " (calibrated against random negatives, applied to both)",
                    ThresholdMode::PerSource => " (calibrated separately against each negative source)",
                }
            ),
            format!(
                "random negatives: uniform over distinct corpus tokens{}, seed {}",
                if self.negatives_in_vocabulary { " with an embedding" } else { "" },
                self.sample_seed
            ),
            "co-occurring negatives: most frequent adjacent bigrams, ties broken lexicographically".into(),
            "negatives exclude every compound in either order".into(),
            "unscorable pairs are excluded from metric denominators and counted separately".into(),
        ]
    }
}

/// Everything read from disk for one experiment.
#[derive(Debug, Clone)]
pub struct ExperimentInputs {
    pub table: EmbeddingTable,
    pub lexicon: DefinitionLexicon,
    pub stopwords: StopWordList,
    pub compounds: Vec<LexemePair>,
    pub corpus: TokenStream,
}

impl ExperimentInputs {
    pub fn load(config: &ExperimentConfig) -> Result<Self> {
        for (key, path) in config.input_paths() {
            if !path.exists() {
                return Err(Error::MissingInput {
                    key: key.into(),
                    path: path.to_path_buf(),
                });
            }
        }
        let table = load_embeddings_file(&config.embeddings, config.embedding_dimension)?;
        let lexicon = load_definitions_file(&config.definitions)?;
        let stopwords = load_stopwords_file(&config.stopwords)?;
        let file = File::open(&config.compounds).map_err(|source| Error::File {
            path: config.compounds.clone(),
            source,
        })?;
        let compounds = load_compounds(file, &config.compound_columns)?.pairs;
        let corpus = read_corpus(&config.corpus)?;
        if corpus.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        Ok(ExperimentInputs {
            table,
            lexicon,
            stopwords,
            compounds,
            corpus,
        })
    }

    pub fn scorer(&self) -> Scorer<'_> {
        Scorer::new(&self.table)
            .with_definitions(&self.lexicon)
            .with_stopwords(&self.stopwords)
    }
}

/// Positives followed by an equal number of random and of co-occurring
/// negatives.
pub fn build_labeled_pairs(
    inputs: &ExperimentInputs,
    config: &ExperimentConfig,
) -> Result<Vec<LabeledPair>> {
    let n = inputs.compounds.len();
    let exclusions: HashSet<LexemePair> = inputs
        .compounds
        .iter()
        .flat_map(|p| [p.clone(), p.reversed()])
        .collect();

    let in_vocab = |t: &str| !config.negatives_in_vocabulary || inputs.table.contains(t);
    let vocabulary: BTreeSet<String> = inputs
        .corpus
        .vocabulary()
        .into_iter()
        .filter(|t| in_vocab(t))
        .collect();
    let random = sample_random_pairs(&vocabulary, n, config.sample_seed, &exclusions)?;

    let counts = build_bigram_counts(&inputs.corpus);
    let cooccur = top_cooccurring_pairs_where(&counts, n, &exclusions, |p| {
        in_vocab(p.left()) && in_vocab(p.right())
    })?;

    let mut pairs = Vec::with_capacity(3 * n);
    pairs.extend(
        inputs
            .compounds
            .iter()
            .map(|p| LabeledPair::new(p.clone(), PairSource::Ladec)),
    );
    pairs.extend(
        random
            .into_iter()
            .map(|p| LabeledPair::new(p, PairSource::Random)),
    );
    pairs.extend(
        cooccur
            .into_iter()
            .map(|pc| LabeledPair::new(pc.pair, PairSource::Cooccur)),
    );
    Ok(pairs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdRecord {
    pub method: ScoreMethod,
    /// Negative source the threshold is applied to.
    pub negative_source: NegativeSource,
    /// Negative source the threshold was calibrated against.
    pub calibrated_on: NegativeSource,
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult {
    /// Ordered by method, then negative source (random before cooccur).
    pub reports: Vec<EvalReport>,
    pub thresholds: Vec<ThresholdRecord>,
    pub dataset: LabeledDataset,
    pub assumptions: Vec<String>,
}

impl ExperimentResult {
    pub fn report(&self, method: ScoreMethod, source: NegativeSource) -> Option<&EvalReport> {
        self.reports
            .iter()
            .find(|r| r.method == method && r.negative_source == source)
    }

    pub fn threshold(&self, method: ScoreMethod, source: NegativeSource) -> Option<f64> {
        self.thresholds
            .iter()
            .find(|t| t.method == method && t.negative_source == source)
            .map(|t| t.threshold)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for a in &self.assumptions {
            out.push_str("# ");
            out.push_str(a);
            out.push('\n');
        }
        out.push_str(&render_table(&self.reports));
        out
    }

    /// Writes `reports.csv`, `thresholds.csv` and `reports.txt` into `dir`.
    pub fn write_to_dir(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let mut reports = BufWriter::new(File::create(dir.join("reports.csv"))?);
        write_reports_csv(&mut reports, &self.reports)?;
        reports.flush()?;

        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_path(dir.join("thresholds.csv"))?;
        w.write_record(["method", "negative_source", "calibrated_on", "threshold"])?;
        for t in &self.thresholds {
            w.write_record([
                t.method.as_str(),
                t.negative_source.as_str(),
                t.calibrated_on.as_str(),
                &t.threshold.to_string(),
            ])?;
        }
        w.flush()?;

        fs::write(dir.join("reports.txt"), self.render())?;
        Ok(())
    }
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentResult> {
    let inputs = ExperimentInputs::load(config)?;
    run_with_inputs(&inputs, config)
}

pub fn run_with_inputs(
    inputs: &ExperimentInputs,
    config: &ExperimentConfig,
) -> Result<ExperimentResult> {
    let pairs = build_labeled_pairs(inputs, config)?;
    let dataset = split_dataset(&pairs, config.split_fraction, config.split_seed)?;
    let scorer = inputs.scorer();

    let score_all = |split: &[LabeledPair], method| -> Result<Vec<(LabeledPair, ScoreOutcome)>> {
        split
            .iter()
            .map(|p| Ok((p.clone(), scorer.score(method, &p.pair)?)))
            .collect()
    };

    let mut reports = Vec::with_capacity(6);
    let mut thresholds = Vec::with_capacity(6);
    for method in ScoreMethod::ALL {
        let calibration = score_all(&dataset.calibration, method)?;
        let heldout = score_all(&dataset.heldout, method)?;

        let calibrate_against = |source: NegativeSource| -> Result<f64> {
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for (p, outcome) in &calibration {
                let Some(v) = outcome.value() else { continue };
                if p.is_positive() {
                    pos.push(v);
                } else if p.source == source.pair_source() {
                    neg.push(v);
                }
            }
            calibrate_threshold(&pos, &neg).map_err(|e| match e {
                Error::EmptyScores(what) => Error::EmptyScores(format!(
                    "{what} for {} calibration against {source} negatives",
                    method.label()
                )),
                other => other,
            })
        };

        let shared = match config.threshold_mode {
            ThresholdMode::Shared => Some(calibrate_against(NegativeSource::Random)?),
            ThresholdMode::PerSource => None,
        };

        for source in NegativeSource::ALL {
            let (threshold, calibrated_on) = match shared {
                Some(t) => (t, NegativeSource::Random),
                None => (calibrate_against(source)?, source),
            };
            let subset: Vec<(LabeledPair, ScoreOutcome)> = heldout
                .iter()
                .filter(|(p, _)| p.is_positive() || p.source == source.pair_source())
                .cloned()
                .collect();
            reports.push(evaluate(&subset, threshold, method, source)?);
            thresholds.push(ThresholdRecord {
                method,
                negative_source: source,
                calibrated_on,
                threshold,
            });
        }
    }

    Ok(ExperimentResult {
        reports,
        thresholds,
        dataset,
        assumptions: config.assumptions(),
    })
}
