//! Decision tables: alternatives sorted by a decision measure, ties surfaced.

use crate::error::Result;
use crate::fss::FuzzySoftSet;
use crate::measure::{decision_measures, Measure, MeasureValues};
use crate::scores::{cumulative_scores, CumulativeScores};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionRow {
    pub alternative: String,
    /// position of the alternative in the source set
    pub index: usize,
    pub scores: CumulativeScores,
    pub values: MeasureValues,
    /// 1-based position in the sorted table
    pub rank: usize,
    /// 1-based; rows with exactly equal selected-measure value share it
    pub tie_group: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTable {
    pub measure: Measure,
    pub rows: Vec<DecisionRow>,
    pub source_digest: String,
}

impl DecisionTable {
    pub fn row(&self, alternative: &str) -> Option<&DecisionRow> {
        self.rows.iter().find(|r| r.alternative == alternative)
    }

    /// Alternative ids in table order.
    pub fn order(&self) -> Vec<&str> {
        self.rows.iter().map(|r| r.alternative.as_str()).collect()
    }

    /// Members of each tie group, in table order.
    pub fn tie_groups(&self) -> Vec<Vec<&str>> {
        let mut groups: Vec<Vec<&str>> = Vec::new();
        for row in &self.rows {
            if groups.len() < row.tie_group {
                groups.push(Vec::new());
            }
            groups[row.tie_group - 1].push(&row.alternative);
        }
        groups
    }
}

/// Measure values for every alternative, in input order.
pub fn all_measures(fss: &FuzzySoftSet) -> Result<Vec<(CumulativeScores, MeasureValues)>> {
    cumulative_scores(fss)
        .into_iter()
        .map(|s| decision_measures(&s).map(|v| (s, v)))
        .collect()
}

/// Sorts alternatives in non-increasing order of `measure`.
///
/// The sort is stable, so exactly tied alternatives keep their input order.
/// All three measures are populated regardless of `measure`.
pub fn rank(fss: &FuzzySoftSet, measure: Measure) -> Result<DecisionTable> {
    let mut rows: Vec<DecisionRow> = all_measures(fss)?
        .into_iter()
        .map(|(scores, values)| DecisionRow {
            alternative: fss.alternatives()[scores.alternative].clone(),
            index: scores.alternative,
            scores,
            values,
            rank: 0,
            tie_group: 0,
        })
        .collect();
    rows.sort_by(|a, b| b.values.cmp_by(&a.values, measure));

    let mut group = 0;
    for k in 0..rows.len() {
        if k == 0 || rows[k].values.cmp_by(&rows[k - 1].values, measure).is_ne() {
            group += 1;
        }
        rows[k].rank = k + 1;
        rows[k].tie_group = group;
    }
    Ok(DecisionTable {
        measure,
        rows,
        source_digest: fss.digest(),
    })
}
