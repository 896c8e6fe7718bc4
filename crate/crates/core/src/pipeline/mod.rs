//! Labeled dataset assembly, threshold calibration and evaluation.

mod calibration;
mod dataset;
mod experiment;
mod report;

pub use calibration::{calibrate, calibrate_threshold, Calibration};
pub use dataset::{
    load_compounds, split_dataset, CompoundColumns, Label, LabeledDataset, LabeledPair,
    LoadedCompounds, NegativeSource, PairSource,
};
pub use experiment::{
    build_labeled_pairs, run_experiment, run_with_inputs, ExperimentConfig, ExperimentInputs,
    ExperimentResult, ThresholdMode, ThresholdRecord,
};
pub use report::{evaluate, render_table, write_reports_csv, EvalReport, REPORT_COLUMNS};
