// Acceptance suite. One line per criterion; exits non-zero if any gated
// criterion fails. Run with `cargo test --test acceptance`.
//
// Criterion 7 needs external data. Point MWE_FULL_DATA_CONFIG at a run config
// for the full data to enable it; its outcome is reported but never gates.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use mwe_compound::cli::main_with_args;
use mwe_compound::definitions::StopWordList;
use mwe_compound::embedding::cosine;
use mwe_compound::pipeline::{
    build_labeled_pairs, calibrate_threshold, evaluate, run_experiment, run_with_inputs,
    EvalReport, ExperimentConfig, ExperimentInputs, ExperimentResult, LabeledPair, NegativeSource,
    PairSource, ThresholdMode,
};
use mwe_compound::scoring::{
    definition_content_similarity, definition_similarity, LexemePair, ScoreMethod, ScoreOutcome,
};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn fixture_config() -> ExperimentConfig {
    ExperimentConfig::from_file(common::fixture("fixture.conf")).expect("fixture config")
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.random_range(-10.0..10.0)).collect();
        if v.iter().any(|x| x.abs() > 1e-6) {
            return v;
        }
    }
}

fn cosine_algebra() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut vectors = 0;
    let mut worst_self = 0.0f64;
    let mut worst_scale = 0.0f64;
    while vectors < 10_000 {
        let dim = rng.random_range(2..=128);
        let a = random_vector(&mut rng, dim);
        let b = random_vector(&mut rng, dim);
        vectors += 2;

        let ab = cosine(&a, &b).map_err(|e| e.to_string())?;
        let ba = cosine(&b, &a).map_err(|e| e.to_string())?;
        ensure!(ab == ba, "asymmetric: {ab} vs {ba} (dim {dim})");
        ensure!((-1.0..=1.0).contains(&ab), "out of range: {ab}");

        for v in [&a, &b] {
            let s = cosine(v, v).map_err(|e| e.to_string())?;
            ensure!((-1.0..=1.0).contains(&s), "self out of range: {s}");
            worst_self = worst_self.max((s - 1.0).abs());
        }

        let k = 10f64.powf(rng.random_range(-3.0..3.0));
        let scaled: Vec<f64> = a.iter().map(|x| x * k).collect();
        let s = cosine(&scaled, &b).map_err(|e| e.to_string())?;
        worst_scale = worst_scale.max((s - ab).abs());

        // parallel and anti-parallel vectors stress the clamp
        let anti: Vec<f64> = a.iter().map(|x| -x * k).collect();
        let p = cosine(&a, &scaled).map_err(|e| e.to_string())?;
        let q = cosine(&a, &anti).map_err(|e| e.to_string())?;
        ensure!(
            (-1.0..=1.0).contains(&p) && (-1.0..=1.0).contains(&q),
            "clamp failed: {p} {q}"
        );
    }
    ensure!(worst_self <= 1e-9, "self-similarity off by {worst_self:e}");
    ensure!(
        worst_scale <= 1e-9,
        "scale invariance off by {worst_scale:e}"
    );
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!(
        "{vectors} vectors, max |self-1| {worst_self:.1e}, max scale drift {worst_scale:.1e}, {elapsed:.2?}"
    ))
}

fn calibration_oracle() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut ties = 0;
    for instance in 0..500 {
        let np = rng.random_range(1..=50);
        let nn = rng.random_range(1..=50);
        // half the instances draw from a coarse grid so ties and duplicates occur
        let coarse = instance % 2 == 0;
        let draw = |rng: &mut ChaCha8Rng| {
            if coarse {
                rng.random_range(-10i32..=10) as f64 / 10.0
            } else {
                rng.random_range(-1.0..=1.0)
            }
        };
        let pos: Vec<f64> = (0..np).map(|_| draw(&mut rng)).collect();
        let neg: Vec<f64> = (0..nn).map(|_| draw(&mut rng)).collect();
        let got = calibrate_threshold(&pos, &neg).map_err(|e| e.to_string())?;
        let want = common::brute_force_threshold(&pos, &neg);
        ensure!(
            got == want,
            "instance {instance}: calibrated {got}, brute force {want}"
        );
        let best = common::f1_at(&pos, &neg, want);
        let mut distinct: Vec<f64> = pos.iter().chain(&neg).copied().collect();
        distinct.sort_by(f64::total_cmp);
        distinct.dedup();
        let candidates = std::iter::once((-1.0 + distinct[0]) / 2.0)
            .chain(distinct.windows(2).map(|w| (w[0] + w[1]) / 2.0))
            .chain(std::iter::once((distinct[distinct.len() - 1] + 1.0) / 2.0));
        if candidates
            .filter(|&t| common::f1_at(&pos, &neg, t) == best)
            .count()
            > 1
        {
            ties += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    Ok(format!(
        "500 instances ({ties} with tied optima), {elapsed:.2?}"
    ))
}

fn as_f64(r: Ratio<u64>) -> f64 {
    // both parts are small integers, so the quotient is correctly rounded
    *r.numer() as f64 / *r.denom() as f64
}

fn metric_arithmetic() -> Outcome {
    let threshold = 0.6;
    let rows: [(&str, &str, PairSource, f64); 10] = [
        ("jet", "lag", PairSource::Ladec, 0.1),
        ("fire", "fly", PairSource::Ladec, 0.2),
        ("snow", "ball", PairSource::Ladec, 0.6), // on the threshold: not compound
        ("home", "work", PairSource::Ladec, 0.7),
        ("rail", "road", PairSource::Ladec, 0.8),
        ("home", "play", PairSource::Random, 0.3),
        ("blue", "idea", PairSource::Random, 0.55),
        ("cold", "song", PairSource::Random, 0.6),
        ("tall", "fish", PairSource::Random, 0.9),
        ("dark", "milk", PairSource::Random, 0.95),
    ];
    let items: Vec<(LabeledPair, ScoreOutcome)> = rows
        .iter()
        .map(|&(l, r, s, v)| {
            (
                LabeledPair::new(LexemePair::new(l, r).unwrap(), s),
                ScoreOutcome::Scored(v),
            )
        })
        .collect();
    let report = evaluate(
        &items,
        threshold,
        ScoreMethod::WordSimilarity,
        NegativeSource::Random,
    )
    .map_err(|e| e.to_string())?;

    // by hand: tp = {jet lag, fire fly}, fn = the other three compounds,
    // fp = {home play, blue idea}, tn = the remaining three
    let (tp, fp, fn_, tn) = (2u64, 2u64, 3u64, 3u64);
    ensure!(
        (report.tp, report.fp, report.fn_, report.tn) == (tp, fp, fn_, tn),
        "counts {:?}",
        (report.tp, report.fp, report.fn_, report.tn)
    );
    let precision = Ratio::new(tp, tp + fp);
    let recall = Ratio::new(tp, tp + fn_);
    let f1 = Ratio::from_integer(2) * precision * recall / (precision + recall);
    ensure!(precision == Ratio::new(1, 2), "hand precision {precision}");
    ensure!(recall == Ratio::new(2, 5), "hand recall {recall}");
    ensure!(f1 == Ratio::new(4, 9), "hand f1 {f1}");
    ensure!(
        report.precision == Some(as_f64(precision)),
        "precision {:?}",
        report.precision
    );
    ensure!(
        report.recall == Some(as_f64(recall)),
        "recall {:?}",
        report.recall
    );
    ensure!(report.f1 == Some(as_f64(f1)), "f1 {:?}", report.f1);

    // the 2/3 precision case: drop one false positive
    let fewer: Vec<_> = items
        .iter()
        .filter(|(p, _)| p.pair.to_string() != "blue idea")
        .cloned()
        .collect();
    let r2 = evaluate(
        &fewer,
        threshold,
        ScoreMethod::WordSimilarity,
        NegativeSource::Random,
    )
    .map_err(|e| e.to_string())?;
    let p2 = Ratio::new(2u64, 3);
    let f2 = Ratio::from_integer(2) * p2 * recall / (p2 + recall);
    ensure!(f2 == Ratio::new(1, 2), "hand f1 {f2}");
    ensure!(
        (r2.tp, r2.fp, r2.fn_, r2.tn) == (2, 1, 3, 3),
        "counts {:?}",
        (r2.tp, r2.fp, r2.fn_, r2.tn)
    );
    ensure!(
        r2.precision == Some(as_f64(p2)),
        "precision {:?}",
        r2.precision
    );
    ensure!(r2.f1 == Some(0.5), "f1 {:?}", r2.f1);
    Ok("tp/fp/fn/tn 2/2/3/3 -> P 1/2 R 2/5 F1 4/9; 2/1/3/3 -> P 2/3 F1 1/2".into())
}

fn degenerate_to_identity() -> Outcome {
    let config = fixture_config();
    let inputs = ExperimentInputs::load(&config).map_err(|e| e.to_string())?;
    let lexicon = &inputs.lexicon;
    let empty = StopWordList::default();

    let mut pairs: BTreeSet<LexemePair> = build_labeled_pairs(&inputs, &config)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|p| p.pair)
        .collect();
    let words: Vec<String> = lexicon.lexemes().map(str::to_owned).collect();
    for l in &words {
        for r in &words {
            if l != r {
                pairs.insert(LexemePair::new(l, r).unwrap());
            }
        }
    }

    let mut scored = 0;
    for pair in &pairs {
        let a = definition_similarity(&inputs.table, lexicon, pair);
        let b = definition_content_similarity(&inputs.table, lexicon, &empty, pair);
        let same = match (a, b) {
            (ScoreOutcome::Scored(x), ScoreOutcome::Scored(y)) => {
                scored += 1;
                x.to_bits() == y.to_bits()
            }
            (x, y) => x == y,
        };
        ensure!(same, "{pair}: {a:?} vs {b:?}");
    }
    Ok(format!(
        "{} pairs, {scored} scored, all bit-identical",
        pairs.len()
    ))
}

fn check_identities(result: &ExperimentResult) -> Result<(), String> {
    let heldout = &result.dataset.heldout;
    let pos = heldout.iter().filter(|p| p.is_positive()).count() as u64;
    for r in &result.reports {
        let neg = heldout
            .iter()
            .filter(|p| p.source == r.negative_source.pair_source())
            .count() as u64;
        let name = format!("{} / {}", r.method.as_str(), r.negative_source.as_str());
        ensure!(
            r.tp + r.fn_ + r.unscorable_pos == pos,
            "{name}: positives do not add up"
        );
        ensure!(
            r.fp + r.tn + r.unscorable_neg == neg,
            "{name}: negatives do not add up"
        );
        ensure!(
            r.recall == (r.tp + r.fn_ > 0).then(|| r.tp as f64 / (r.tp + r.fn_) as f64),
            "{name}: recall"
        );
        ensure!(
            r.precision == (r.tp + r.fp > 0).then(|| r.tp as f64 / (r.tp + r.fp) as f64),
            "{name}: precision"
        );
        if let (Some(p), Some(q), Some(f)) = (r.precision, r.recall, r.f1) {
            let h = if p + q > 0.0 {
                2.0 * p * q / (p + q)
            } else {
                0.0
            };
            ensure!((f - h).abs() < 1e-12, "{name}: f1 {f} vs {h}");
        }
    }
    Ok(())
}

fn end_to_end_fixture() -> Outcome {
    let config = fixture_config();
    let inputs = ExperimentInputs::load(&config).map_err(|e| e.to_string())?;
    ensure!(
        inputs.table.len() <= 20,
        "table has {} tokens",
        inputs.table.len()
    );
    ensure!(
        inputs.table.dimension() == 4,
        "dimension {}",
        inputs.table.dimension()
    );
    let pairs = build_labeled_pairs(&inputs, &config).map_err(|e| e.to_string())?;
    for source in [PairSource::Ladec, PairSource::Random, PairSource::Cooccur] {
        let n = pairs.iter().filter(|p| p.source == source).count();
        ensure!(n == 4, "{source:?}: {n} pairs");
    }

    let first = run_with_inputs(&inputs, &config).map_err(|e| e.to_string())?;
    ensure!(first.reports.len() == 6, "{} reports", first.reports.len());
    let kinds: BTreeSet<(&str, &str)> = first
        .reports
        .iter()
        .map(|r| (r.method.as_str(), r.negative_source.as_str()))
        .collect();
    ensure!(kinds.len() == 6, "duplicate report kinds");
    check_identities(&first)?;

    let second = run_experiment(&config).map_err(|e| e.to_string())?;
    ensure!(first == second, "rerun differs in memory");
    let bits = |rs: &[EvalReport]| -> Vec<Option<u64>> {
        rs.iter()
            .flat_map(|r| [r.recall, r.precision, r.f1, Some(r.threshold)])
            .map(|x| x.map(f64::to_bits))
            .collect()
    };
    ensure!(
        bits(&first.reports) == bits(&second.reports),
        "rerun differs in bits"
    );
    let dir_a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dir_b = tempfile::tempdir().map_err(|e| e.to_string())?;
    first
        .write_to_dir(dir_a.path())
        .map_err(|e| e.to_string())?;
    second
        .write_to_dir(dir_b.path())
        .map_err(|e| e.to_string())?;
    for f in ["reports.csv", "thresholds.csv", "reports.txt"] {
        let a = fs::read(dir_a.path().join(f)).map_err(|e| e.to_string())?;
        let b = fs::read(dir_b.path().join(f)).map_err(|e| e.to_string())?;
        ensure!(a == b, "{f} differs between runs");
    }
    Ok("6 reports, identities hold, rerun bit-identical (memory and files)".into())
}

fn recall_equality(result: &ExperimentResult) -> Result<Vec<String>, String> {
    let mut lines = Vec::new();
    for m in ScoreMethod::ALL {
        let r = result
            .report(m, NegativeSource::Random)
            .ok_or("missing random report")?;
        let c = result
            .report(m, NegativeSource::Cooccur)
            .ok_or("missing cooccur report")?;
        ensure!(
            r.threshold == c.threshold,
            "{}: thresholds differ",
            m.as_str()
        );
        ensure!(
            r.recall.map(f64::to_bits) == c.recall.map(f64::to_bits),
            "{}: recall {:?} vs {:?}",
            m.as_str(),
            r.recall,
            c.recall
        );
        lines.push(format!("{}={:?}", m.as_str(), r.recall));
    }
    Ok(lines)
}

fn full_data_config() -> Option<PathBuf> {
    std::env::var_os("MWE_FULL_DATA_CONFIG").map(PathBuf::from)
}

fn shared_recall_equality() -> Outcome {
    let mut config = fixture_config();
    config.threshold_mode = ThresholdMode::Shared;
    let result = run_experiment(&config).map_err(|e| e.to_string())?;
    let fixture = recall_equality(&result)?;
    let mut summary = format!("fixture: {}", fixture.join(" "));
    if let Some(path) = full_data_config() {
        let mut config = ExperimentConfig::from_file(&path).map_err(|e| e.to_string())?;
        config.threshold_mode = ThresholdMode::Shared;
        let result = run_experiment(&config).map_err(|e| e.to_string())?;
        summary.push_str(&format!(
            "; full data: {}",
            recall_equality(&result)?.join(" ")
        ));
    }
    Ok(summary)
}

enum Gate {
    Gated,
    BestEffort,
}

fn full_data_reproduction() -> Option<Outcome> {
    let path = full_data_config()?;
    Some((|| {
        let start = Instant::now();
        let mut config = ExperimentConfig::from_file(&path).map_err(|e| e.to_string())?;
        config.threshold_mode = ThresholdMode::Shared;
        let inputs = ExperimentInputs::load(&config).map_err(|e| e.to_string())?;
        let result = run_with_inputs(&inputs, &config).map_err(|e| e.to_string())?;
        let word = ScoreMethod::WordSimilarity;
        let random = result
            .report(word, NegativeSource::Random)
            .ok_or("no random report")?;
        let cooccur = result
            .report(word, NegativeSource::Cooccur)
            .ok_or("no cooccur report")?;
        let targets = [
            ("random recall", random.recall, 0.840),
            ("random precision", random.precision, 0.596),
            ("random f1", random.f1, 0.697),
            ("cooccur precision", cooccur.precision, 0.754),
            ("cooccur f1", cooccur.f1, 0.795),
            ("threshold", Some(random.threshold), 0.78),
        ];
        let mut misses = Vec::new();
        let mut seen = Vec::new();
        for (name, got, want) in targets {
            let shown = got.map_or("n/a".to_string(), |g| format!("{g:.3}"));
            seen.push(format!("{name} {shown} (target {want})"));
            if got.is_none_or(|g| (g - want).abs() > 0.05) {
                misses.push(name);
            }
        }
        let detail = format!(
            "{} compounds, {}; {:.1?}",
            inputs.compounds.len(),
            seen.join(", "),
            start.elapsed()
        );
        if misses.is_empty() {
            Ok(detail)
        } else {
            Err(format!("outside +-0.05: {}; {detail}", misses.join(", ")))
        }
    })())
}

fn scan_correctness() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let corpus_path = dir.path().join("corpus.txt");
    let table_path = dir.path().join("vectors.txt");

    let table: BTreeMap<&str, [f64; 3]> = [
        ("jet", [1.0, 0.0, 0.0]),
        ("lag", [0.0, 1.0, 0.0]),
        ("hot", [0.6, 0.8, 0.0]),
        ("dog", [0.9, 0.1, 0.3]),
        ("cat", [0.8, 0.2, 0.35]),
        ("red", [-0.5, 0.5, 0.7]),
        ("sky", [0.0, 0.0, 1.0]),
        ("sun", [0.3, 0.3, 0.9]),
    ]
    .into();
    let mut text = String::new();
    for (w, v) in &table {
        text.push_str(&format!("{w} {} {} {}\n", v[0], v[1], v[2]));
    }
    fs::write(&table_path, text).map_err(|e| e.to_string())?;

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let vocab: Vec<&str> = table.keys().copied().chain(["the", "and"]).collect();
    let words: Vec<&str> = (0..600)
        .map(|_| vocab[rng.random_range(0..vocab.len())])
        .collect();
    let mut corpus = String::new();
    for chunk in words.chunks(12) {
        corpus.push_str(&chunk.join(" "));
        corpus.push_str(". \n");
    }
    // a fixed reversed-orientation case on top of the random text
    corpus.push_str("lag jet lag jet lag jet\n");
    fs::write(&corpus_path, &corpus).map_err(|e| e.to_string())?;

    // oracle: adjacent counts over the raw word sequence
    let seq: Vec<String> = corpus
        .split(|c: char| !c.is_alphabetic())
        .filter(|s| !s.is_empty())
        .map(str::to_lowercase)
        .collect();
    let mut counts: BTreeMap<(String, String), u64> = BTreeMap::new();
    for w in seq.windows(2) {
        *counts.entry((w[0].clone(), w[1].clone())).or_default() += 1;
    }
    let plain_cosine = |a: &[f64; 3], b: &[f64; 3]| {
        let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
        let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
        dot / (na * nb)
    };

    let mut cases = 0;
    for (threshold, min_count) in [(0.5, 1), (0.3, 3), (0.9, 5), (-0.2, 1), (0.99, 12)] {
        let mut expected: Vec<(String, String, u64, f64)> = Vec::new();
        for ((l, r), &c) in &counts {
            if l == r {
                continue;
            }
            let back = counts.get(&(r.clone(), l.clone())).copied().unwrap_or(0);
            // keep one orientation: the more frequent, lexicographically first on ties
            if back > c || (back == c && r < l) {
                continue;
            }
            let (Some(a), Some(b)) = (table.get(l.as_str()), table.get(r.as_str())) else {
                continue;
            };
            let s = plain_cosine(a, b);
            if c >= min_count && s < threshold {
                expected.push((l.clone(), r.clone(), c, s));
            }
        }
        expected.sort_by(|a, b| {
            a.3.total_cmp(&b.3)
                .then_with(|| (&a.0, &a.1).cmp(&(&b.0, &b.1)))
        });

        let out_path = dir.path().join(format!("hits-{cases}.csv"));
        let args = [
            "mwe".to_string(),
            "scan".into(),
            "--corpus".into(),
            corpus_path.display().to_string(),
            "--embeddings".into(),
            table_path.display().to_string(),
            "--threshold".into(),
            threshold.to_string(),
            "--min-count".into(),
            min_count.to_string(),
            "--out".into(),
            out_path.display().to_string(),
        ];
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(args, &mut out, &mut err);
        let want_code = if expected.is_empty() { 2 } else { 0 };
        ensure!(
            code == want_code,
            "threshold {threshold} min {min_count}: exit {code}, {}",
            String::from_utf8_lossy(&err)
        );

        let mut reader = csv::Reader::from_path(&out_path).map_err(|e| e.to_string())?;
        let mut got = Vec::new();
        for row in reader.records() {
            let row = row.map_err(|e| e.to_string())?;
            let count: u64 = row[2].parse().map_err(|_| "bad count")?;
            let score: f64 = row[3].parse().map_err(|_| "bad score")?;
            got.push((row[0].to_string(), row[1].to_string(), count, score));
        }
        ensure!(
            got.len() == expected.len(),
            "threshold {threshold} min {min_count}: {} hits, oracle {}",
            got.len(),
            expected.len()
        );
        for (g, e) in got.iter().zip(&expected) {
            ensure!(
                g.0 == e.0 && g.1 == e.1 && g.2 == e.2 && (g.3 - e.3).abs() < 1e-12,
                "hit {g:?} vs oracle {e:?}"
            );
        }
        ensure!(got.windows(2).all(|w| w[0].3 <= w[1].3), "not ascending");
        cases += 1;
        if threshold == 0.5 {
            ensure!(
                got.iter().any(|g| g.0 == "jet" && g.1 == "lag")
                    && !got.iter().any(|g| g.0 == "lag" && g.1 == "jet"),
                "orientation collapse"
            );
        }
    }
    Ok(format!(
        "{cases} threshold/min-count settings match the oracle"
    ))
}

fn run(name: &str, f: fn() -> Outcome) -> Outcome {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err(format!("{name} panicked")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (1, "cosine algebra", cosine_algebra),
        (2, "calibration oracle equivalence", calibration_oracle),
        (3, "metric arithmetic", metric_arithmetic),
        (
            4,
            "empty stop-word list is identity",
            degenerate_to_identity,
        ),
        (5, "end-to-end fixture run", end_to_end_fixture),
        (
            6,
            "shared-threshold recall equality",
            shared_recall_equality,
        ),
        (8, "scan correctness", scan_correctness),
    ];
    let mut failed = 0;
    let mut report = |id: u8, name: &str, gate: Gate, outcome: Option<Outcome>| {
        let suffix = match gate {
            Gate::Gated => "",
            Gate::BestEffort => " [best-effort, not gated]",
        };
        match outcome {
            Some(Ok(detail)) => println!("PASS AC{id} {name}{suffix}: {detail}"),
            Some(Err(detail)) => {
                println!("FAIL AC{id} {name}{suffix}: {detail}");
                if matches!(gate, Gate::Gated) {
                    failed += 1;
                }
            }
            None => println!("SKIP AC{id} {name}{suffix}: set MWE_FULL_DATA_CONFIG to enable"),
        }
    };
    for (id, name, f) in criteria {
        report(id, name, Gate::Gated, Some(run(name, f)));
        if id == 6 {
            let outcome = catch_unwind(full_data_reproduction)
                .unwrap_or_else(|_| Some(Err("panicked".into())));
            report(7, "full-data reproduction", Gate::BestEffort, outcome);
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
