//! Monomial orders. Variables are ranked `x_1 > x_2 > ... > x_n`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::chart::Chart;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// Chart-weighted degree first, ties broken by grevlex.
    WeightedGrevlex,
}

fn revlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(self, chart: &Chart, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex_tiebreak(a, b))
            }
            MonomialOrder::WeightedGrevlex => chart
                .weighted_degree(a)
                .cmp(&chart.weighted_degree(b))
                .then_with(|| revlex_tiebreak(a, b)),
        }
    }
}
