//! Volume bounds for modular link complements.
//!
//! Every bound is a rational multiple of `v_tet`, the volume of the regular
//! ideal tetrahedron.  Coefficients are kept exact; the floating value is
//! derived and never used for comparisons.

use std::fmt;

use num_rational::Rational64;
use thiserror::Error;

use crate::codeword::{exponent_sets, CodeWord, ModularLink};
use crate::exponents::link_maximal_sets;

/// Volume of the regular ideal tetrahedron, to full double precision.
pub const V_TET: f64 = 1.0149416064096536;

/// Provenance of a bound value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// Lower bound from maximal exponent set cardinalities.
    LowerThm,
    /// Lower bound from distinct exponent counts.
    LowerCor,
    /// Lower bound for the decreasing-exponent family.
    LowerFamily,
    /// Upper bound for the decreasing-exponent family.
    UpperFamily,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::LowerThm => "lower-thm",
            BoundKind::LowerCor => "lower-cor",
            BoundKind::LowerFamily => "lower-family",
            BoundKind::UpperFamily => "upper-family",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A volume bound `coefficient * v_tet`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeBound {
    pub coefficient: Rational64,
    pub numeric: f64,
    pub kind: BoundKind,
}

impl VolumeBound {
    pub fn new(kind: BoundKind, coefficient: Rational64) -> Self {
        let numeric = (*coefficient.numer() as f64 / *coefficient.denom() as f64) * V_TET;
        VolumeBound {
            coefficient,
            numeric,
            kind,
        }
    }

    /// Canonical `num/den` rendering of the reduced coefficient.
    pub fn coefficient_string(&self) -> String {
        format!("{}/{}", self.coefficient.numer(), self.coefficient.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("NotInFamily: {0}")]
    NotInFamily(String),
}

/// Lower bound `(|Ã| + |B̃|) / 12 · v_tet` from the maximal exponent sets.
pub fn lower_bound_maximal(card_a_tilde: usize, card_b_tilde: usize) -> VolumeBound {
    let coeff = Rational64::new((card_a_tilde + card_b_tilde) as i64, 12);
    VolumeBound::new(BoundKind::LowerThm, coeff)
}

/// Lower bound `(|A| + |B| - 10) / 72 · v_tet` from the distinct exponent
/// counts, clamped at zero where the estimate is vacuous.
pub fn lower_bound_distinct(card_a: usize, card_b: usize) -> VolumeBound {
    let raw = Rational64::new(card_a as i64 + card_b as i64 - 10, 72);
    let coeff = raw.max(Rational64::new(0, 1));
    VolumeBound::new(BoundKind::LowerCor, coeff)
}

/// Two-sided bounds for knots in the family `L^{a_1} R^i ... L^{a_n} R^i`
/// with constant R-exponent and `a_{j-1} - a_j >= 6`.
///
/// The word is checked in its canonical rotation, which for a family word
/// starts at the largest L-exponent.
pub fn family_bounds(word: &CodeWord) -> Result<(VolumeBound, VolumeBound), BoundsError> {
    let sylls = word.syllables();
    let i = sylls[0].r;
    if sylls.iter().any(|s| s.r != i) {
        return Err(BoundsError::NotInFamily(
            "R-exponents are not all equal".into(),
        ));
    }
    for pair in sylls.windows(2) {
        if pair[0].l <= pair[1].l {
            return Err(BoundsError::NotInFamily(
                "L-exponents are not strictly decreasing".into(),
            ));
        }
        if pair[0].l - pair[1].l < 6 {
            return Err(BoundsError::NotInFamily(format!(
                "L-exponent gap {} is below 6",
                pair[0].l - pair[1].l
            )));
        }
    }
    let n = word.period() as i64;
    let lower = VolumeBound::new(BoundKind::LowerFamily, Rational64::new(n, 12));
    let upper = VolumeBound::new(BoundKind::UpperFamily, Rational64::new(8 * (7 * n + 2), 1));
    Ok((lower, upper))
}

/// The better of the two general lower bounds for a link, with the winner
/// recorded in `kind`.  Ties go to the maximal-set bound, which always
/// dominates.
pub fn best_lower_bound(link: &ModularLink) -> VolumeBound {
    let (a_tilde, b_tilde) = link_maximal_sets(link);
    let thm = lower_bound_maximal(a_tilde.cardinality(), b_tilde.cardinality());
    let (a, b) = exponent_sets(link);
    let cor = lower_bound_distinct(a.len(), b.len());
    if cor.coefficient > thm.coefficient {
        cor
    } else {
        thm
    }
}
