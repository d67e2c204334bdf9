//! Winding and linear subwords of `LR` code words.
//!
//! A winding subword `L R^{6k+r} L` (clockwise) or `R L^{6k+r} R`
//! (counter-clockwise) wraps an arc `k` times around the puncture; the run
//! length `m = 6k + r` is its central exponent, decomposed with
//! `k = floor(m / 6)` and `r = m mod 6`.  A word is linear when it occurs as
//! a factor of the substitution image of some slope's cutting sequence;
//! linearity is decided by bounded enumeration over slopes.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::codeword::{CodeWord, Letter, ModularLink};
use crate::cutting::{lr_from_xy, xy_from_slope, SignCase};
use crate::exponents::{link_maximal_sets, Side};

/// Which way the arc of a winding subword wraps the puncture.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindingDirection {
    /// `L R^m L`: wraps clockwise.
    Clockwise,
    /// `R L^m R`: wraps counter-clockwise.
    CounterClockwise,
}

impl WindingDirection {
    pub fn as_str(self) -> &'static str {
        match self {
            WindingDirection::Clockwise => "clockwise",
            WindingDirection::CounterClockwise => "counter-clockwise",
        }
    }
}

impl fmt::Display for WindingDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A maximal run of length ≥ 6 flanked by the other letter, located in the
/// canonical rotation of its host word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindingSubword {
    pub direction: WindingDirection,
    /// Central exponent `m = 6k + r`.
    pub central_exponent: u64,
    pub k: u64,
    pub r: u64,
    /// Letter index of the flanking letter that opens the subword.
    pub position: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubwordError {
    #[error("MissingWinding: no {side}-run of length {value} exists in the link")]
    MissingWinding { side: Side, value: u64 },
}

/// All winding subwords of a word: one per maximal `L`- or `R`-run of
/// length ≥ 6.  In standard form every maximal run is flanked by the other
/// letter on both sides of the cyclic word (wrapping included), so runs of
/// length ≥ 6 qualify outright.
pub fn find_winding_subwords(word: &CodeWord) -> Vec<WindingSubword> {
    let total = word.letter_len();
    let mut out = Vec::new();
    let mut offset = 0u64; // letter index of the current syllable's L-run
    for s in word.syllables() {
        if s.l >= 6 {
            out.push(WindingSubword {
                direction: WindingDirection::CounterClockwise,
                central_exponent: s.l,
                k: s.l / 6,
                r: s.l % 6,
                position: (offset + total - 1) % total,
            });
        }
        if s.r >= 6 {
            out.push(WindingSubword {
                direction: WindingDirection::Clockwise,
                central_exponent: s.r,
                k: s.r / 6,
                r: s.r % 6,
                position: offset + s.l - 1,
            });
        }
        offset += s.l + s.r;
    }
    out
}

/// A slope and sign case whose converted word contains the query as a
/// factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearWitness {
    pub slope: (u64, u64),
    pub case: SignCase,
}

/// Search bound used by [`find_linear_witness`] when none is given.
pub fn default_search_bound(len: usize) -> u64 {
    2 * len as u64 + 4
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Does `needle` occur in the periodic (bi-infinite) repetition of `period`?
fn occurs_in_periodic(needle: &[Letter], period: &[Letter], host: &mut Vec<Letter>) -> bool {
    if needle.is_empty() {
        return true;
    }
    host.clear();
    while host.len() < needle.len() + period.len() {
        host.extend_from_slice(period);
    }
    host.windows(needle.len()).any(|w| w == needle)
}

/// Decide linearity by enumerating coprime slopes `(p, q)` with
/// `p + q <= bound` in increasing complexity and searching the query in the
/// periodic repetition of each converted word (both sign cases).  The first
/// witness found is returned.
///
/// The axis word `LR` equals the same-sign image of slope `1/1`, so axis
/// slopes need no separate pass.
pub fn find_linear_witness(letters: &[Letter], bound: u64) -> Option<LinearWitness> {
    if letters.is_empty() {
        return None;
    }
    let mut host = Vec::new();
    for s in 2..=bound {
        for p in 1..s {
            let q = s - p;
            if gcd(p, q) != 1 {
                continue;
            }
            let word = xy_from_slope(p as i64, q as i64).expect("coprime positive slope");
            for case in [SignCase::SameSign, SignCase::OppositeSign] {
                let period = lr_from_xy(&word, case);
                if occurs_in_periodic(letters, &period, &mut host) {
                    return Some(LinearWitness {
                        slope: (p, q),
                        case,
                    });
                }
            }
        }
    }
    None
}

/// Bounded linearity verdict; see [`find_linear_witness`].
pub fn is_linear(letters: &[Letter], bound: u64) -> bool {
    find_linear_witness(letters, bound).is_some()
}

/// A winding subword found in a specific link component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinkWinding {
    pub component: usize,
    pub subword: WindingSubword,
}

/// For each value chosen in a maximal exponent set of the link, a winding
/// subword realizing that value as its central exponent.
///
/// Every chosen value is ≥ 6 and occurs as some labelled exponent, hence as
/// a maximal run of that length, so `MissingWinding` signals an internal
/// inconsistency rather than a reachable state.
pub fn winding_exponent_correspondence(
    link: &ModularLink,
) -> Result<BTreeMap<(Side, u64), LinkWinding>, SubwordError> {
    let (a_tilde, b_tilde) = link_maximal_sets(link);
    let per_component: Vec<Vec<WindingSubword>> = link
        .components()
        .iter()
        .map(find_winding_subwords)
        .collect();

    let mut map = BTreeMap::new();
    for (side, set, direction) in [
        (Side::L, &a_tilde, WindingDirection::CounterClockwise),
        (Side::R, &b_tilde, WindingDirection::Clockwise),
    ] {
        for &value in &set.values {
            let found = per_component.iter().enumerate().find_map(|(ci, subs)| {
                subs.iter()
                    .find(|w| w.direction == direction && w.central_exponent == value)
                    .map(|w| LinkWinding {
                        component: ci,
                        subword: *w,
                    })
            });
            match found {
                Some(lw) => {
                    map.insert((side, value), lw);
                }
                None => return Err(SubwordError::MissingWinding { side, value }),
            }
        }
    }
    Ok(map)
}
