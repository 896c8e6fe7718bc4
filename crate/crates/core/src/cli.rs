//! Command-line front end: `score`, `run`, `scan` and `sample-negatives`.
//!
//! Exit codes: 0 on success, 1 on usage, configuration or ingestion errors,
//! 2 when the command completed but produced no usable result (an
//! unscorable pair, or a scan with no hits).

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{
    build_bigram_counts, read_corpus, read_pairs_csv, sample_random_pairs, top_cooccurring_pairs,
    write_pair_counts_csv, write_pairs_csv,
};
use crate::definitions::{
    load_definitions_file, load_stopwords_file, DefinitionLexicon, StopWordList,
};
use crate::embedding::{load_embeddings_file, EmbeddingTable};
use crate::error::{Error, Result};
use crate::pipeline::{run_experiment, ExperimentConfig};
use crate::scan::{scan_bigrams, write_hits_csv, ScanOptions};
use crate::scoring::{LexemePair, ScoreMethod, ScoreOutcome, Scorer};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_EMPTY: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mwe",
    version,
    about = "Compound detection from embedding non-compositionality"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Word,
    Definition,
    DefinitionContent,
}

impl From<MethodArg> for ScoreMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Word => ScoreMethod::WordSimilarity,
            MethodArg::Definition => ScoreMethod::DefinitionSimilarity,
            MethodArg::DefinitionContent => ScoreMethod::DefinitionContentSimilarity,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NegativeKind {
    Random,
    Cooccur,
}

#[derive(Debug, clap::Args)]
pub struct ScoringInputs {
    #[arg(long, value_enum, default_value = "word")]
    pub method: MethodArg,
    /// GloVe text embedding file.
    #[arg(long)]
    pub embeddings: PathBuf,
    #[arg(long)]
    pub dimension: Option<usize>,
    /// TSV of `lexeme<TAB>first definition`.
    #[arg(long)]
    pub definitions: Option<PathBuf>,
    /// One stop word per line.
    #[arg(long)]
    pub stopwords: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one candidate pair.
    Score {
        #[command(flatten)]
        inputs: ScoringInputs,
        left: String,
        right: String,
    },
    /// Run the full calibration/evaluation experiment from a config file.
    Run {
        config: PathBuf,
        /// Output directory (overrides `output_dir` in the config).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every corpus bigram and list the compound judgements.
    Scan {
        #[command(flatten)]
        inputs: ScoringInputs,
        /// Corpus file or directory.
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        threshold: f64,
        #[arg(long, default_value_t = 1)]
        min_count: u64,
        #[arg(long)]
        top_n: Option<usize>,
        /// Write CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write random or most frequent co-occurring pairs as CSV.
    SampleNegatives {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_enum)]
        kind: NegativeKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pair CSV (`left,right`) of pairs never to emit, e.g. known compounds.
        #[arg(long)]
        exclusions: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<u8> {
    match command {
        Command::Score {
            inputs,
            left,
            right,
        } => cmd_score(&inputs, &left, &right, stdout, stderr),
        Command::Run { config, out } => cmd_run(&config, out.as_deref(), stdout),
        Command::Scan {
            inputs,
            corpus,
            threshold,
            min_count,
            top_n,
            out,
        } => {
            let options = ScanOptions {
                method: inputs.method.into(),
                threshold,
                min_count,
                top_n,
            };
            cmd_scan(&inputs, &corpus, &options, out.as_deref(), stdout, stderr)
        }
        Command::SampleNegatives {
            corpus,
            kind,
            n,
            seed,
            exclusions,
            out,
        } => cmd_sample_negatives(
            &corpus,
            kind,
            n,
            seed,
            exclusions.as_deref(),
            out.as_deref(),
            stdout,
        ),
    }
}

struct Loaded {
    table: EmbeddingTable,
    lexicon: Option<DefinitionLexicon>,
    stopwords: Option<StopWordList>,
}

impl Loaded {
    fn scorer(&self) -> Scorer<'_> {
        let mut s = Scorer::new(&self.table);
        if let Some(l) = &self.lexicon {
            s = s.with_definitions(l);
        }
        if let Some(sw) = &self.stopwords {
            s = s.with_stopwords(sw);
        }
        s
    }
}

fn load_scoring_inputs(inputs: &ScoringInputs, stderr: &mut dyn Write) -> Result<Loaded> {
    let method = ScoreMethod::from(inputs.method);
    if method.needs_definitions() && inputs.definitions.is_none() {
        return Err(Error::Usage(format!(
            "--method {method} requires --definitions"
        )));
    }
    if method == ScoreMethod::DefinitionContentSimilarity && inputs.stopwords.is_none() {
        return Err(Error::Usage(format!(
            "--method {method} requires --stopwords"
        )));
    }
    let table = load_embeddings_file(&inputs.embeddings, inputs.dimension)?;
    for w in table.warnings().iter().take(5) {
        let _ = writeln!(stderr, "warning: {w}");
    }
    if table.warnings().len() > 5 {
        let _ = writeln!(
            stderr,
            "warning: {} more duplicate tokens",
            table.warnings().len() - 5
        );
    }
    let lexicon = inputs
        .definitions
        .as_ref()
        .map(load_definitions_file)
        .transpose()?;
    let stopwords = inputs
        .stopwords
        .as_ref()
        .map(load_stopwords_file)
        .transpose()?;
    Ok(Loaded {
        table,
        lexicon,
        stopwords,
    })
}

pub fn cmd_score(
    inputs: &ScoringInputs,
    left: &str,
    right: &str,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8> {
    let pair = LexemePair::allow_identical(left, right)?;
    let loaded = load_scoring_inputs(inputs, stderr)?;
    match loaded.scorer().score(inputs.method.into(), &pair)? {
        ScoreOutcome::Scored(v) => {
            writeln!(stdout, "{v}")?;
            Ok(EXIT_OK)
        }
        ScoreOutcome::Unscorable(reason) => {
            writeln!(stdout, "unscorable: {reason}")?;
            Ok(EXIT_EMPTY)
        }
    }
}

pub fn cmd_run(config_path: &Path, out: Option<&Path>, stdout: &mut dyn Write) -> Result<u8> {
    let config = ExperimentConfig::from_file(config_path)?;
    let result = run_experiment(&config)?;
    let dir = out.unwrap_or(&config.output_dir);
    result.write_to_dir(dir)?;
    write!(stdout, "{}", result.render())?;
    writeln!(stdout, "reports written to {}", dir.display())?;
    Ok(EXIT_OK)
}

pub fn cmd_scan(
    inputs: &ScoringInputs,
    corpus: &Path,
    options: &ScanOptions,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<u8> {
    let loaded = load_scoring_inputs(inputs, stderr)?;
    let stream = read_corpus(corpus)?;
    if stream.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let counts = build_bigram_counts(&stream);
    let hits = scan_bigrams(&counts, &loaded.scorer(), options)?;
    with_output(out, stdout, |w| write_hits_csv(w, &hits))?;
    Ok(if hits.is_empty() { EXIT_EMPTY } else { EXIT_OK })
}

pub fn cmd_sample_negatives(
    corpus: &Path,
    kind: NegativeKind,
    n: usize,
    seed: u64,
    exclusions: Option<&Path>,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<u8> {
    let stream = read_corpus(corpus)?;
    if stream.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let excluded: HashSet<LexemePair> = match exclusions {
        Some(path) => {
            let file = File::open(path).map_err(|source| Error::File {
                path: path.to_path_buf(),
                source,
            })?;
            read_pairs_csv(file)?.into_iter().collect()
        }
        None => HashSet::new(),
    };
    match kind {
        NegativeKind::Random => {
            let pairs = sample_random_pairs(&stream.vocabulary(), n, seed, &excluded)?;
            with_output(out, stdout, |w| write_pairs_csv(w, &pairs))?;
        }
        NegativeKind::Cooccur => {
            let pairs = top_cooccurring_pairs(&build_bigram_counts(&stream), n, &excluded)?;
            with_output(out, stdout, |w| write_pair_counts_csv(w, &pairs))?;
        }
    }
    Ok(EXIT_OK)
}

fn with_output<F>(out: Option<&Path>, stdout: &mut dyn Write, write: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match out {
        Some(path) => {
            let file = File::create(path).map_err(|source| Error::File {
                path: path.to_path_buf(),
                source,
            })?;
            let mut w = BufWriter::new(file);
            write(&mut w)?;
            w.flush().map_err(Error::from)
        }
        None => write(stdout),
    }
}

/// Runs with the process arguments against real stdio.
pub fn main_from_env() -> u8 {
    main_with_args(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}
