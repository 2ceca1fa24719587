use crate::compare::{compare_indices, ComparisonCell};
use crate::error::Result;
use crate::fss::{Attribute, FuzzySoftSet};
use crate::measure::{decision_measures, MeasureValues};
use crate::scores::CumulativeScores;

/// Comparison of the explained alternative against one opponent, by attribute id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpponentEntry {
    pub opponent: String,
    pub rho: Vec<String>,
    pub chi: Vec<String>,
    pub eq: Vec<String>,
}

impl OpponentEntry {
    fn from_cell(fss: &FuzzySoftSet, cell: &ComparisonCell) -> Self {
        let owned = |ids: Vec<&str>| ids.into_iter().map(String::from).collect();
        OpponentEntry {
            opponent: fss.alternatives()[cell.col].clone(),
            rho: owned(cell.rho.ids(fss)),
            chi: owned(cell.chi.ids(fss)),
            eq: owned(cell.eq.ids(fss)),
        }
    }
}

/// Why an alternative scored what it did: its row of the domination and
/// subjection tables, its cumulative scores and its decision measures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplanationReport {
    pub alternative: String,
    /// attribute ids with labels, for rendering the sets
    pub attributes: Vec<Attribute>,
    /// every other alternative, in input order
    pub opponents: Vec<OpponentEntry>,
    pub scores: CumulativeScores,
    pub values: MeasureValues,
}

pub fn explain(fss: &FuzzySoftSet, alternative: &str) -> Result<ExplanationReport> {
    let i = fss.alternative_index(alternative)?;
    let mut scores = CumulativeScores {
        alternative: i,
        dom: 0,
        sub: 0,
        equity: 0,
    };
    let mut opponents = Vec::with_capacity(fss.n_alternatives().saturating_sub(1));
    for j in 0..fss.n_alternatives() {
        let cell = compare_indices(fss, i, j);
        scores.dom += cell.rho.len() as u64;
        scores.sub += cell.chi.len() as u64;
        scores.equity += cell.eq.len() as u64;
        if j != i {
            opponents.push(OpponentEntry::from_cell(fss, &cell));
        }
    }
    let values = decision_measures(&scores)?;
    Ok(ExplanationReport {
        alternative: alternative.to_string(),
        attributes: fss.attributes().to_vec(),
        opponents,
        scores,
        values,
    })
}
