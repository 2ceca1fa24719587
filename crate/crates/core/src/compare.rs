//! Pairwise domination / subjection sets.

use std::cmp::Ordering;

use crate::error::Result;
use crate::fss::FuzzySoftSet;

/// Ascending set of attribute column indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AttributeSet(Vec<usize>);

impl AttributeSet {
    pub fn full(m: usize) -> Self {
        AttributeSet((0..m).collect())
    }

    /// Builds a set from arbitrary indices (sorted and deduplicated).
    pub fn from_indices(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        AttributeSet(indices)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn intersection(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet(self.0.iter().copied().filter(|&e| other.contains(e)).collect())
    }

    pub fn union(&self, other: &AttributeSet) -> AttributeSet {
        AttributeSet::from_indices(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Attribute ids of the members, in column order.
    pub fn ids<'a>(&self, fss: &'a FuzzySoftSet) -> Vec<&'a str> {
        self.0.iter().map(|&e| fss.attributes()[e].id.as_str()).collect()
    }
}

/// Comparison of alternative `row` against alternative `col`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonCell {
    pub row: usize,
    pub col: usize,
    /// attributes where `row` grades at least as high as `col`
    pub rho: AttributeSet,
    /// attributes where `row` grades at most as high as `col`
    pub chi: AttributeSet,
    /// attributes with equal grades; always `rho ∩ chi`
    pub eq: AttributeSet,
}

pub(crate) fn compare_indices(fss: &FuzzySoftSet, i: usize, j: usize) -> ComparisonCell {
    let (mut rho, mut chi, mut eq) = (Vec::new(), Vec::new(), Vec::new());
    for (e, (a, b)) in fss.row(i).iter().zip(fss.row(j)).enumerate() {
        match a.cmp(b) {
            Ordering::Greater => rho.push(e),
            Ordering::Less => chi.push(e),
            Ordering::Equal => {
                rho.push(e);
                chi.push(e);
                eq.push(e);
            }
        }
    }
    ComparisonCell {
        row: i,
        col: j,
        rho: AttributeSet(rho),
        chi: AttributeSet(chi),
        eq: AttributeSet(eq),
    }
}

/// Compares two alternatives by id.
pub fn compare(fss: &FuzzySoftSet, i: &str, j: &str) -> Result<ComparisonCell> {
    let i = fss.alternative_index(i)?;
    let j = fss.alternative_index(j)?;
    Ok(compare_indices(fss, i, j))
}

/// Full `n × n` listing; `matrix[i][j]` compares alternative `i` with `j`.
pub fn comparison_matrix(fss: &FuzzySoftSet) -> Vec<Vec<ComparisonCell>> {
    let n = fss.n_alternatives();
    (0..n)
        .map(|i| (0..n).map(|j| compare_indices(fss, i, j)).collect())
        .collect()
}
