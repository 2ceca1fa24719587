//! Brute-force re-derivation of the pipeline straight from the definitions.
//!
//! Shares nothing with the library beyond reading grades: sets are
//! `BTreeSet`s of attribute ids, sums are recomputed per pair, and measures
//! are kept as unreduced `(numerator, denominator)` pairs compared by
//! cross-multiplication in `i128`.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::BTreeSet;

use fsp_core::FuzzySoftSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCell {
    pub rho: BTreeSet<String>,
    pub chi: BTreeSet<String>,
}

impl OracleCell {
    pub fn eq(&self) -> BTreeSet<String> {
        self.rho.intersection(&self.chi).cloned().collect()
    }
}

/// Grades as plain integers (ten-thousandths), copied out once.
pub fn grade_matrix(fss: &FuzzySoftSet) -> Vec<Vec<u32>> {
    (0..fss.n_alternatives())
        .map(|i| (0..fss.n_attributes()).map(|e| u32::from(fss.grade(i, e).units())).collect())
        .collect()
}

pub fn oracle_cell(fss: &FuzzySoftSet, i: usize, j: usize) -> OracleCell {
    let g = grade_matrix(fss);
    let mut rho = BTreeSet::new();
    let mut chi = BTreeSet::new();
    for (e, attr) in fss.attributes().iter().enumerate() {
        if g[i][e] >= g[j][e] {
            rho.insert(attr.id.clone());
        }
        if g[i][e] <= g[j][e] {
            chi.insert(attr.id.clone());
        }
    }
    OracleCell { rho, chi }
}

/// (dom, sub, equity) per alternative, diagonal included.
pub fn oracle_scores(fss: &FuzzySoftSet) -> Vec<(u64, u64, u64)> {
    let n = fss.n_alternatives();
    (0..n)
        .map(|i| {
            (0..n).fold((0, 0, 0), |(d, s, q), j| {
                let cell = oracle_cell(fss, i, j);
                (
                    d + cell.rho.len() as u64,
                    s + cell.chi.len() as u64,
                    q + cell.eq().len() as u64,
                )
            })
        })
        .collect()
}

/// Unreduced fraction with positive denominator.
#[derive(Debug, Clone, Copy)]
pub struct Frac(pub i128, pub i128);

impl Frac {
    pub fn cmp(&self, other: &Frac) -> Ordering {
        (self.0 * other.1).cmp(&(other.0 * self.1))
    }

    pub fn same(&self, numer: i64, denom: i64) -> bool {
        self.0 * i128::from(denom) == i128::from(numer) * self.1
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OracleMeasures {
    pub g1: Frac,
    pub g2: i128,
    pub g3: Frac,
}

pub fn oracle_measures(fss: &FuzzySoftSet) -> Vec<OracleMeasures> {
    oracle_scores(fss)
        .into_iter()
        .map(|(d, s, q)| {
            let (d, s, q) = (i128::from(d), i128::from(s), i128::from(q));
            OracleMeasures {
                g1: Frac(d * q, s),
                g2: d - s,
                g3: Frac(d + s, q),
            }
        })
        .collect()
}

/// 0 = Γ1, 1 = Γ2, 2 = Γ3.
pub fn oracle_cmp(a: &OracleMeasures, b: &OracleMeasures, measure: usize) -> Ordering {
    match measure {
        0 => a.g1.cmp(&b.g1),
        1 => a.g2.cmp(&b.g2),
        _ => a.g3.cmp(&b.g3),
    }
}

/// Alternative indices in descending order of the measure, ties by input order,
/// via selection of the first maximum among the remaining alternatives.
pub fn oracle_order(values: &[OracleMeasures], measure: usize) -> Vec<usize> {
    let mut remaining: Vec<usize> = (0..values.len()).collect();
    let mut order = Vec::new();
    while !remaining.is_empty() {
        let mut best = 0;
        for k in 1..remaining.len() {
            if oracle_cmp(&values[remaining[k]], &values[remaining[best]], measure) == Ordering::Greater {
                best = k;
            }
        }
        order.push(remaining.remove(best));
    }
    order
}
