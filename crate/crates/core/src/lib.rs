//! Fuzzy soft set decision support.
//!
//! Alternatives are graded in `[0, 1]` against a set of attributes. Every
//! ordered pair of alternatives is compared attribute by attribute; the
//! resulting domination, subjection and equity counts feed three decision
//! measures, and alternatives are ranked by the chosen one. All arithmetic is
//! exact, so ties are detected reliably.
//!
//! ```
//! use fsp_core::{example, rank, Measure};
//!
//! let table = rank(&example::fuzzy_soft_set(), Measure::G1).unwrap();
//! assert_eq!(table.rows[0].alternative, "ψ5");
//! ```

pub mod compare;
pub mod error;
pub mod example;
pub mod explain;
pub mod fss;
pub mod grade;
pub mod io;
pub mod measure;
pub mod rank;
pub mod scores;
pub mod simulate;

pub use compare::{compare, comparison_matrix, AttributeSet, ComparisonCell};
pub use error::FssError;
pub use explain::{explain, ExplanationReport, OpponentEntry};
pub use fss::{Attribute, FuzzySoftSet};
pub use grade::Grade;
pub use measure::{decision_measures, Measure, MeasureValues, Rational};
pub use rank::{all_measures, rank, DecisionRow, DecisionTable};
pub use scores::{cumulative_scores, CumulativeScores};
pub use simulate::{run_simulation, SimulationConfig, SimulationReport};
