//! Seeded Monte Carlo study of measure bias and ties.
//!
//! Scenario `k` of a run draws its grades from a ChaCha8 generator seeded
//! with the run seed and switched to stream `k`, so a scenario's content does
//! not depend on how many scenarios precede it or on which thread evaluates it.

mod report;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fss::FuzzySoftSet;
use crate::grade::{Grade, GRADE_SCALE};
use crate::measure::{Measure, MeasureValues};
use crate::rank::all_measures;

pub use report::{emit_report, parse_report_json, MeasureReport, ReportFormat, SimulationReport, TIE_COUNT_RULE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid simulation config: {0}")]
pub struct ConfigError(pub String);

fn default_grid_step() -> Grade {
    Grade::from_units(GRADE_SCALE / 10).expect("0.1 is a grade")
}

fn default_measures() -> Vec<Measure> {
    Measure::ALL.to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationConfig {
    pub scenarios: u64,
    pub n_alternatives: usize,
    pub n_attributes: usize,
    #[serde(default = "default_grid_step")]
    pub grid_step: Grade,
    pub seed: u64,
    #[serde(default = "default_measures")]
    pub measures: Vec<Measure>,
}

impl SimulationConfig {
    /// One-decimal grid, all measures.
    pub fn new(scenarios: u64, n_alternatives: usize, n_attributes: usize, seed: u64) -> Self {
        SimulationConfig {
            scenarios,
            n_alternatives,
            n_attributes,
            grid_step: default_grid_step(),
            seed,
            measures: default_measures(),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_alternatives == 0 {
            return Err(ConfigError("n_alternatives must be at least 1".into()));
        }
        if self.n_attributes == 0 {
            return Err(ConfigError("n_attributes must be at least 1".into()));
        }
        let step = self.grid_step.units();
        if step == 0 || !GRADE_SCALE.is_multiple_of(step) {
            return Err(ConfigError(format!(
                "grid_step {} must be in (0, 1] with an integral reciprocal",
                self.grid_step
            )));
        }
        if self.measures.is_empty() {
            return Err(ConfigError("at least one measure is required".into()));
        }
        Ok(())
    }

    /// Requested measures, deduplicated, in g1/g2/g3 order.
    pub fn measure_set(&self) -> Vec<Measure> {
        let mut m = self.measures.clone();
        m.sort();
        m.dedup();
        m
    }
}

/// Generator for scenario `index` of a run with `seed`.
pub fn scenario_stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Alternative ids used for generated scenarios.
pub fn alternative_ids(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("a{k}")).collect()
}

/// Attribute ids used for generated scenarios.
pub fn attribute_ids(m: usize) -> Vec<String> {
    (1..=m).map(|k| format!("c{k}")).collect()
}

/// Draws an `n × m` fuzzy soft set with grades uniform on `{0, step, 2·step, …, 1}`.
///
/// Grades are drawn row by row. Panics if `step` does not divide 1.
pub fn random_scenario<R: Rng + ?Sized>(rng: &mut R, n: usize, m: usize, step: Grade) -> FuzzySoftSet {
    let step = step.units();
    assert!(step > 0 && GRADE_SCALE.is_multiple_of(step), "grid step must divide 1");
    let levels = GRADE_SCALE / step;
    let grades = (0..n)
        .map(|_| {
            (0..m)
                .map(|_| Grade::from_units(rng.random_range(0..=levels) * step).expect("on grid"))
                .collect::<Vec<_>>()
        })
        .collect();
    FuzzySoftSet::new(alternative_ids(n), attribute_ids(m), grades).expect("dimensions are valid")
}

/// What one scenario contributes to each requested measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScenarioOutcome {
    /// per requested measure: alternatives attaining the maximum
    pub argmax: Vec<Vec<usize>>,
    /// per requested measure: unordered pairs with exactly equal value
    pub tie_pairs: Vec<u64>,
}

fn outcome_for(values: &[MeasureValues], measures: &[Measure]) -> ScenarioOutcome {
    let mut argmax = Vec::with_capacity(measures.len());
    let mut tie_pairs = Vec::with_capacity(measures.len());
    for &measure in measures {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[b].cmp_by(&values[a], measure));
        let top = &values[order[0]];
        argmax.push(
            (0..values.len())
                .filter(|&i| values[i].cmp_by(top, measure).is_eq())
                .collect(),
        );
        let mut pairs = 0u64;
        let mut run = 1u64;
        for w in order.windows(2) {
            if values[w[0]].cmp_by(&values[w[1]], measure).is_eq() {
                run += 1;
            } else {
                pairs += run * (run - 1) / 2;
                run = 1;
            }
        }
        pairs += run * (run - 1) / 2;
        tie_pairs.push(pairs);
    }
    ScenarioOutcome { argmax, tie_pairs }
}

/// Evaluates scenario `index` of the run described by `config`.
pub fn evaluate_scenario(config: &SimulationConfig, index: u64) -> ScenarioOutcome {
    let mut rng = scenario_stream(config.seed, index);
    let fss = random_scenario(&mut rng, config.n_alternatives, config.n_attributes, config.grid_step);
    let values: Vec<MeasureValues> = all_measures(&fss)
        .expect("generated scenarios have at least one attribute")
        .into_iter()
        .map(|(_, v)| v)
        .collect();
    outcome_for(&values, &config.measure_set())
}

/// Runs the study. The report depends only on `config`.
pub fn run_simulation(config: &SimulationConfig) -> Result<SimulationReport, ConfigError> {
    config.validate()?;
    let measures = config.measure_set();
    let outcomes: Vec<ScenarioOutcome> = (0..config.scenarios)
        .into_par_iter()
        .map(|k| evaluate_scenario(config, k))
        .collect();

    let mut per_measure: Vec<MeasureReport> = measures
        .iter()
        .map(|&measure| MeasureReport {
            measure,
            top_frequency: vec![0; config.n_alternatives],
            tie_count: 0,
            top_tie_scenarios: 0,
        })
        .collect();
    for outcome in &outcomes {
        for (k, report) in per_measure.iter_mut().enumerate() {
            for &i in &outcome.argmax[k] {
                report.top_frequency[i] += 1;
            }
            if outcome.argmax[k].len() > 1 {
                report.top_tie_scenarios += 1;
            }
            report.tie_count += outcome.tie_pairs[k];
        }
    }
    Ok(SimulationReport::new(config.clone(), per_measure))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(s: &str) -> Grade {
        s.parse().unwrap()
    }

    #[test]
    fn scenario_grades_sit_on_the_grid() {
        let mut rng = scenario_stream(1, 0);
        let fss = random_scenario(&mut rng, 5, 10, step("0.1"));
        assert_eq!((fss.n_alternatives(), fss.n_attributes()), (5, 10));
        for row in fss.rows() {
            for g in row {
                assert_eq!(g.units() % 1000, 0);
            }
        }
    }

    #[test]
    fn scenario_is_reproducible() {
        let a = random_scenario(&mut scenario_stream(9, 4), 4, 6, step("0.1"));
        let b = random_scenario(&mut scenario_stream(9, 4), 4, 6, step("0.1"));
        assert_eq!(a, b);
        let c = random_scenario(&mut scenario_stream(9, 5), 4, 6, step("0.1"));
        assert_ne!(a, c);
    }

    #[test]
    fn minimal_scenario() {
        let fss = random_scenario(&mut scenario_stream(0, 0), 1, 1, step("0.5"));
        assert_eq!((fss.n_alternatives(), fss.n_attributes()), (1, 1));
        assert!([0, 5000, 10000].contains(&fss.grade(0, 0).units()));
    }

    #[test]
    fn coarse_grid_reaches_both_ends() {
        let mut rng = scenario_stream(3, 0);
        let fss = random_scenario(&mut rng, 20, 20, Grade::ONE);
        let units: std::collections::BTreeSet<u16> = fss.rows().flatten().map(|g| g.units()).collect();
        assert_eq!(units.into_iter().collect::<Vec<_>>(), [0, 10000]);
    }

    #[test]
    fn empty_run_is_all_zero() {
        let report = run_simulation(&SimulationConfig::new(0, 4, 3, 1)).unwrap();
        for m in &report.measures {
            assert!(m.top_frequency.iter().all(|&c| c == 0));
            assert_eq!(m.tie_count, 0);
        }
    }

    #[test]
    fn config_validation() {
        let mut c = SimulationConfig::new(1, 0, 3, 1);
        assert!(c.validate().is_err());
        c.n_alternatives = 2;
        c.n_attributes = 0;
        assert!(c.validate().is_err());
        c.n_attributes = 2;
        c.grid_step = step("0.3");
        assert!(c.validate().is_err());
        c.grid_step = Grade::ZERO;
        assert!(c.validate().is_err());
        c.grid_step = step("0.25");
        assert!(c.validate().is_ok());
        c.measures.clear();
        assert!(run_simulation(&c).is_err());
    }

    #[test]
    fn credits_cover_every_scenario() {
        let config = SimulationConfig::new(300, 5, 4, 11);
        let report = run_simulation(&config).unwrap();
        for m in &report.measures {
            let credits: u64 = m.top_frequency.iter().sum();
            assert!(credits >= 300);
            assert_eq!(credits == 300, m.top_tie_scenarios == 0);
        }
    }

    #[test]
    fn single_alternative_never_ties() {
        let report = run_simulation(&SimulationConfig::new(50, 1, 3, 2)).unwrap();
        for m in &report.measures {
            assert_eq!(m.top_frequency, [50]);
            assert_eq!(m.tie_count, 0);
        }
    }

    #[test]
    fn tie_pairs_count_runs() {
        let v = |g2: i64| MeasureValues {
            gamma1: crate::measure::Rational::from_integer(1),
            gamma2: g2,
            gamma3: crate::measure::Rational::from_integer(2),
        };
        let values = [v(1), v(3), v(1), v(1), v(3), v(0)];
        let outcome = outcome_for(&values, &[Measure::G1, Measure::G2]);
        assert_eq!(outcome.tie_pairs, [15, 4]);
        assert_eq!(outcome.argmax[1], [1, 4]);
        assert_eq!(outcome.argmax[0].len(), 6);
    }

    #[test]
    fn measure_subset_is_respected() {
        let mut config = SimulationConfig::new(10, 3, 3, 5);
        config.measures = vec![Measure::G3, Measure::G1, Measure::G3];
        let report = run_simulation(&config).unwrap();
        let ms: Vec<Measure> = report.measures.iter().map(|m| m.measure).collect();
        assert_eq!(ms, [Measure::G1, Measure::G3]);
    }
}
