//! Shared inputs for the benchmarks.

use fsp_core::simulate::{random_scenario, scenario_stream};
use fsp_core::{FuzzySoftSet, Grade};

/// A reproducible random instance on the 0.1 grid.
pub fn instance(n: usize, m: usize, seed: u64) -> FuzzySoftSet {
    let mut rng = scenario_stream(seed, 0);
    random_scenario(&mut rng, n, m, Grade::from_units(1000).expect("valid step"))
}
