//! Maximal exponent sets.
//!
//! From the labelled exponents of one side of a link, pick a largest set of
//! values that are all ≥ 6 and pairwise at least 6 apart.  The pairwise gap
//! forces chosen values to be distinct, so the selection happens on distinct
//! values; smallest-first greedy is optimal by the usual exchange argument.
//! Both reductions are exercised against brute-force oracles in the tests
//! rather than assumed.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;

/// Which exponent family a set was drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    L,
    R,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::L => write!(f, "L"),
            Side::R => write!(f, "R"),
        }
    }
}

/// A maximum-cardinality set of exponent values with min ≥ 6 and pairwise
/// gaps ≥ 6.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalExponentSet {
    pub values: BTreeSet<u64>,
    pub side: Side,
}

impl MaximalExponentSet {
    pub fn cardinality(&self) -> usize {
        self.values.len()
    }
}

/// Greedy selection: ascending through the distinct values ≥ 6, take the
/// smallest, then repeatedly the smallest that is ≥ previous + 6.
///
/// Ties among optima are resolved toward the smallest values, which makes
/// the result deterministic.
pub fn maximal_exponent_set(
    side: Side,
    exponents: impl IntoIterator<Item = u64>,
) -> MaximalExponentSet {
    let distinct: BTreeSet<u64> = exponents.into_iter().filter(|&v| v >= 6).collect();
    let mut values = BTreeSet::new();
    let mut last: Option<u64> = None;
    for v in distinct {
        if last.is_none_or(|p| v >= p + 6) {
            values.insert(v);
            last = Some(v);
        }
    }
    MaximalExponentSet { values, side }
}

/// The guaranteed cardinality `(d - 5) / 6` of a maximal exponent set drawn
/// from `d` distinct values, as an exact rational.  Negative for small `d`;
/// consumers clamp.
pub fn greedy_cardinality_bound(distinct_count: u64) -> Rational64 {
    Rational64::new(distinct_count as i64 - 5, 6)
}

/// Both maximal exponent sets of a link.
pub fn link_maximal_sets(
    link: &crate::codeword::ModularLink,
) -> (MaximalExponentSet, MaximalExponentSet) {
    let (ls, rs) = crate::codeword::labelled_exponents(link);
    (
        maximal_exponent_set(Side::L, ls),
        maximal_exponent_set(Side::R, rs),
    )
}
