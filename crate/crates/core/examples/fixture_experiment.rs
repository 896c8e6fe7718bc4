// Run the whole calibration/evaluation experiment on the bundled toy data
// and print the six-row report.
//
// `cargo run --example fixture_experiment`
//
// The same run is available from the command line:
// `cargo run --bin mwe -- run crates/core/fixtures/fixture.conf`

use std::error::Error;
use std::path::PathBuf;

use mwe_compound::pipeline::{run_experiment, ExperimentConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/fixture.conf");
    let config = ExperimentConfig::from_file(path)?;
    let result = run_experiment(&config)?;
    print!("{}", result.render());
    println!(
        "calibration pairs: {}, held-out pairs: {}",
        result.dataset.calibration.len(),
        result.dataset.heldout.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
