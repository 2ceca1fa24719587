use std::cmp::Ordering;

use crate::fss::FuzzySoftSet;

/// Cumulative domination, subjection and equity counts of one alternative.
///
/// Sums run over every opponent including the alternative itself, so each
/// count is at least the number of attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CumulativeScores {
    pub alternative: usize,
    pub dom: u64,
    pub sub: u64,
    pub equity: u64,
}

/// One [`CumulativeScores`] per alternative, in input order.
pub fn cumulative_scores(fss: &FuzzySoftSet) -> Vec<CumulativeScores> {
    let n = fss.n_alternatives();
    (0..n)
        .map(|i| {
            let mut s = CumulativeScores {
                alternative: i,
                dom: 0,
                sub: 0,
                equity: 0,
            };
            let own = fss.row(i);
            for j in 0..n {
                for (a, b) in own.iter().zip(fss.row(j)) {
                    match a.cmp(b) {
                        Ordering::Greater => s.dom += 1,
                        Ordering::Less => s.sub += 1,
                        Ordering::Equal => {
                            s.dom += 1;
                            s.sub += 1;
                            s.equity += 1;
                        }
                    }
                }
            }
            s
        })
        .collect()
}
