//! Cutting sequences of rational slopes and the `XY -> LR` substitution.
//!
//! A line of slope `p/q` through the square grid crosses horizontal grid
//! lines (letter `X`) and vertical grid lines (letter `Y`).  One period of
//! the crossing sequence is the `XY` cutting sequence of the slope.  Cutting
//! sequences of simple closed geodesics have one letter isolated and the
//! other letter's blocks of two consecutive lengths; the pair substitution
//! turns them into `LR` words.
//!
//! Cutting sequences are cyclic words; all comparisons in this crate and its
//! tests are up to rotation.

use std::fmt;

use thiserror::Error;

use crate::codeword::Letter;

/// One letter of a cutting sequence: `X` for a horizontal grid-line
/// crossing, `Y` for a vertical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XYLetter {
    X,
    Y,
}

impl XYLetter {
    pub fn as_char(self) -> char {
        match self {
            XYLetter::X => 'X',
            XYLetter::Y => 'Y',
        }
    }
}

impl fmt::Display for XYLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A nonempty cyclic word over `{X, Y}`, with the generating slope when the
/// word came from one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XYWord {
    letters: Vec<XYLetter>,
    slope: Option<(i64, i64)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CuttingError {
    #[error("ZeroDirection: slope 0/0 has no direction")]
    ZeroDirection,
    #[error("NotCoprime: {p}/{q} is not in lowest terms (gcd {g})")]
    NotCoprime { p: i64, q: i64, g: u64 },
    #[error("EmptyWord: an XY word must be nonempty")]
    EmptyWord,
    #[error("SyntaxError: {0}")]
    SyntaxError(String),
}

impl XYWord {
    pub fn from_letters(letters: Vec<XYLetter>) -> Result<Self, CuttingError> {
        if letters.is_empty() {
            return Err(CuttingError::EmptyWord);
        }
        Ok(XYWord {
            letters,
            slope: None,
        })
    }

    /// Parse literal or exponent notation, e.g. `YXXYXXX` or `YX^2YX^3`.
    pub fn parse(text: &str) -> Result<Self, CuttingError> {
        let text = text.trim();
        let mut letters = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            let letter = match c {
                'X' => XYLetter::X,
                'Y' => XYLetter::Y,
                other => {
                    return Err(CuttingError::SyntaxError(format!(
                        "unexpected character {other:?}; expected 'X' or 'Y'"
                    )))
                }
            };
            let mut count: u64 = 1;
            let caret = chars.peek() == Some(&'^');
            if caret {
                chars.next();
            }
            if caret || chars.peek().is_some_and(|d| d.is_ascii_digit()) {
                let mut digits = String::new();
                while let Some(d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(*d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if digits.is_empty() || digits.starts_with('0') {
                    return Err(CuttingError::SyntaxError(format!("bad exponent after {c}")));
                }
                count = digits.parse::<u64>().map_err(|_| {
                    CuttingError::SyntaxError(format!("exponent {digits:?} is too large"))
                })?;
            }
            for _ in 0..count {
                letters.push(letter);
            }
        }
        XYWord::from_letters(letters)
    }

    pub fn letters(&self) -> &[XYLetter] {
        &self.letters
    }

    pub fn slope(&self) -> Option<(i64, i64)> {
        self.slope
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for XYWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Admissibility of a cyclic `XY` word: one letter isolated, the other
/// letter's blocks of length `k` or `k+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub isolated_letter: Option<XYLetter>,
    pub block_length_k: Option<u64>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// One period of the cutting sequence of a line of slope `p/q` (direction
/// `(q, p)`), generated by exact event merging.
///
/// Events in one period, with a generic intercept so that no grid vertex is
/// hit: the vertical crossing `x = m` happens at time `2mp` and the
/// horizontal crossing `y = j` at time `2jq - 1`, both out of `2pq`.  The
/// period is reported starting at the vertical-line crossing that closes
/// it, so the word of a slope with `p, q >= 1` begins with `Y`.
///
/// Axis slopes give the single-letter words: `p = 0` crosses only vertical
/// lines (`Y`), `q = 0` only horizontal ones (`X`).
pub fn xy_from_slope(p: i64, q: i64) -> Result<XYWord, CuttingError> {
    if p == 0 && q == 0 {
        return Err(CuttingError::ZeroDirection);
    }
    let pa = p.unsigned_abs();
    let qa = q.unsigned_abs();
    let g = gcd(pa, qa);
    if g != 1 {
        return Err(CuttingError::NotCoprime { p, q, g });
    }
    if pa == 0 {
        return Ok(XYWord {
            letters: vec![XYLetter::Y],
            slope: Some((p, q)),
        });
    }
    if qa == 0 {
        return Ok(XYWord {
            letters: vec![XYLetter::X],
            slope: Some((p, q)),
        });
    }

    let mut letters = Vec::with_capacity((pa + qa) as usize);
    let mut m = 1u64; // next vertical crossing index
    let mut j = 1u64; // next horizontal crossing index
    let (pw, qw) = (pa as u128, qa as u128);
    while m <= qa || j <= pa {
        let vertical_key = if m <= qa {
            2 * m as u128 * pw
        } else {
            u128::MAX
        };
        let horizontal_key = if j <= pa {
            2 * j as u128 * qw - 1
        } else {
            u128::MAX
        };
        if vertical_key < horizontal_key {
            letters.push(XYLetter::Y);
            m += 1;
        } else {
            letters.push(XYLetter::X);
            j += 1;
        }
    }
    debug_assert_eq!(letters.len() as u64, pa + qa);
    // Report the period starting at its closing vertical crossing.
    letters.rotate_right(1);
    Ok(XYWord {
        letters,
        slope: Some((p, q)),
    })
}

/// Lengths of the maximal cyclic runs of `letter`.
fn cyclic_blocks(letters: &[XYLetter], letter: XYLetter) -> Vec<u64> {
    let n = letters.len();
    if letters.iter().all(|&l| l == letter) {
        return vec![n as u64];
    }
    // Start scanning right after a non-`letter` position.
    let start = letters
        .iter()
        .position(|&l| l != letter)
        .expect("mixed word");
    let mut blocks = Vec::new();
    let mut run = 0u64;
    for i in 0..n {
        let l = letters[(start + 1 + i) % n];
        if l == letter {
            run += 1;
        } else if run > 0 {
            blocks.push(run);
            run = 0;
        }
    }
    if run > 0 {
        blocks.push(run);
    }
    blocks
}

fn isolated_with_blocks(letters: &[XYLetter], isolated: XYLetter) -> Option<u64> {
    let other = match isolated {
        XYLetter::X => XYLetter::Y,
        XYLetter::Y => XYLetter::X,
    };
    if cyclic_blocks(letters, isolated).iter().any(|&b| b > 1) {
        return None;
    }
    let blocks = cyclic_blocks(letters, other);
    if blocks.is_empty() {
        // Word is all `isolated`: admissible only as the single letter.
        return if letters.len() == 1 { Some(1) } else { None };
    }
    let k = *blocks.iter().min().expect("nonempty");
    let max = *blocks.iter().max().expect("nonempty");
    if max <= k + 1 {
        Some(k)
    } else {
        None
    }
}

/// Check the two-case block condition.  When both cases hold (alternating
/// words), the isolated-`Y` reading is reported.
pub fn check_admissible(word: &XYWord) -> AdmissibilityReport {
    if let Some(k) = isolated_with_blocks(word.letters(), XYLetter::Y) {
        return AdmissibilityReport {
            admissible: true,
            isolated_letter: Some(XYLetter::Y),
            block_length_k: Some(k),
        };
    }
    if let Some(k) = isolated_with_blocks(word.letters(), XYLetter::X) {
        return AdmissibilityReport {
            admissible: true,
            isolated_letter: Some(XYLetter::X),
            block_length_k: Some(k),
        };
    }
    AdmissibilityReport {
        admissible: false,
        isolated_letter: None,
        block_length_k: None,
    }
}

/// Orientation class of the slope, which selects the substitution rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignCase {
    SameSign,
    OppositeSign,
    Axis,
}

impl SignCase {
    pub fn as_str(self) -> &'static str {
        match self {
            SignCase::SameSign => "same",
            SignCase::OppositeSign => "opposite",
            SignCase::Axis => "axis",
        }
    }
}

impl fmt::Display for SignCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The sign case an oriented slope `(p, q)` falls into.
pub fn sign_case_for_slope(p: i64, q: i64) -> SignCase {
    if p == 0 || q == 0 {
        SignCase::Axis
    } else if (p > 0) == (q > 0) {
        SignCase::SameSign
    } else {
        SignCase::OppositeSign
    }
}

/// Pair substitution over the cyclic adjacent pairs of `word`.
///
/// Same-sign rules: `YX -> L`, `XY -> R`, `YY -> RL`, `XX -> LR`.
/// Opposite-sign rules: `YX -> R^2`, `XY -> L^2`, `YY -> RL`, `XX -> LR`.
/// The axis case ignores the word and yields `LR`.
pub fn lr_from_xy(word: &XYWord, case: SignCase) -> Vec<Letter> {
    use Letter::{L, R};
    if case == SignCase::Axis {
        return vec![L, R];
    }
    let letters = word.letters();
    let n = letters.len();
    let mut out = Vec::with_capacity(2 * n);
    for (j, &cur) in letters.iter().enumerate() {
        let next = letters[(j + 1) % n];
        match (cur, next, case) {
            (XYLetter::Y, XYLetter::X, SignCase::SameSign) => out.push(L),
            (XYLetter::X, XYLetter::Y, SignCase::SameSign) => out.push(R),
            (XYLetter::Y, XYLetter::X, SignCase::OppositeSign) => out.extend([R, R]),
            (XYLetter::X, XYLetter::Y, SignCase::OppositeSign) => out.extend([L, L]),
            (XYLetter::Y, XYLetter::Y, _) => out.extend([R, L]),
            (XYLetter::X, XYLetter::X, _) => out.extend([L, R]),
            (_, _, SignCase::Axis) => unreachable!(),
        }
    }
    out
}

/// Cutting sequence of an oriented slope converted straight to `LR` letters.
pub fn lr_from_slope(p: i64, q: i64) -> Result<Vec<Letter>, CuttingError> {
    let case = sign_case_for_slope(p, q);
    if case == SignCase::Axis {
        // Validates the slope even though the word is fixed.
        let _ = xy_from_slope(p, q)?;
        return Ok(vec![Letter::L, Letter::R]);
    }
    let word = xy_from_slope(p, q)?;
    Ok(lr_from_xy(&word, case))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codeword::cyclic_eq;
    use proptest::prelude::*;

    fn xy(text: &str) -> XYWord {
        XYWord::parse(text).unwrap()
    }

    fn lr_string(letters: &[Letter]) -> String {
        letters.iter().map(|l| l.as_char()).collect()
    }

    #[test]
    fn slope_5_2_matches_figure() {
        let w = xy_from_slope(5, 2).unwrap();
        assert_eq!(w.to_string(), "YXXYXXX");
        let report = check_admissible(&w);
        assert!(report.admissible);
        assert_eq!(report.isolated_letter, Some(XYLetter::Y));
        assert_eq!(report.block_length_k, Some(2));
    }

    #[test]
    fn slope_1_1_alternates() {
        let w = xy_from_slope(1, 1).unwrap();
        assert!(cyclic_eq(w.letters(), xy("YX").letters()));
        let report = check_admissible(&w);
        assert!(report.admissible);
        assert_eq!(report.block_length_k, Some(1));
    }

    #[test]
    fn slope_7_4_is_cyclic_class_of_example() {
        let w = xy_from_slope(7, 4).unwrap();
        assert!(cyclic_eq(w.letters(), xy("YXXYXXYXYXX").letters()));
    }

    #[test]
    fn axis_slopes() {
        assert_eq!(xy_from_slope(0, 1).unwrap().to_string(), "Y");
        assert_eq!(xy_from_slope(1, 0).unwrap().to_string(), "X");
        assert_eq!(xy_from_slope(0, -1).unwrap().to_string(), "Y");
        assert!(matches!(
            xy_from_slope(0, 0),
            Err(CuttingError::ZeroDirection)
        ));
        assert!(matches!(
            xy_from_slope(4, 2),
            Err(CuttingError::NotCoprime { g: 2, .. })
        ));
    }

    #[test]
    fn negative_slopes_use_magnitudes() {
        let w = xy_from_slope(-5, 2).unwrap();
        assert_eq!(w.to_string(), "YXXYXXX");
        assert_eq!(w.slope(), Some((-5, 2)));
    }

    #[test]
    fn letter_counts_match_slope() {
        for (p, q) in [(5u64, 2u64), (7, 4), (3, 8), (9, 1), (1, 9)] {
            let w = xy_from_slope(p as i64, q as i64).unwrap();
            let x = w.letters().iter().filter(|&&l| l == XYLetter::X).count() as u64;
            let y = w.letters().iter().filter(|&&l| l == XYLetter::Y).count() as u64;
            assert_eq!((x, y), (p, q));
        }
    }

    #[test]
    fn admissibility_examples() {
        let r = check_admissible(&xy("YXXYXXX"));
        assert_eq!(
            (r.admissible, r.isolated_letter, r.block_length_k),
            (true, Some(XYLetter::Y), Some(2))
        );

        let r = check_admissible(&xy("XY"));
        assert_eq!(
            (r.admissible, r.isolated_letter, r.block_length_k),
            (true, Some(XYLetter::Y), Some(1))
        );

        let r = check_admissible(&xy("YXXXYX"));
        assert!(!r.admissible);
        assert_eq!(r.isolated_letter, None);

        // Isolated X with Y-blocks {2,3}.
        let r = check_admissible(&xy("XYYXYYY"));
        assert_eq!(
            (r.admissible, r.isolated_letter, r.block_length_k),
            (true, Some(XYLetter::X), Some(2))
        );

        let r = check_admissible(&xy("X"));
        assert!(r.admissible);
    }

    #[test]
    fn substitution_reproduces_example() {
        let lr = lr_from_xy(&xy("YXXYXXYXYXX"), SignCase::SameSign);
        assert_eq!(lr_string(&lr), "LLRRLLRRLRLLRR");
    }

    #[test]
    fn substitution_small_cases() {
        assert_eq!(lr_string(&lr_from_xy(&xy("YX"), SignCase::SameSign)), "LR");
        assert_eq!(
            lr_string(&lr_from_xy(&xy("YX"), SignCase::OppositeSign)),
            "RRLL"
        );
        assert_eq!(lr_string(&lr_from_xy(&xy("XYX"), SignCase::Axis)), "LR");
    }

    #[test]
    fn conversion_length_formula() {
        for text in ["YXXYXXX", "XYYXYYY", "YX", "XXXXY", "YYYYX"] {
            let w = xy(text);
            let n = w.len();
            let mut single = 0usize;
            let mut double = 0usize;
            for j in 0..n {
                let cur = w.letters()[j];
                let next = w.letters()[(j + 1) % n];
                if cur == next {
                    double += 1;
                } else {
                    single += 1;
                }
            }
            let lr = lr_from_xy(&w, SignCase::SameSign);
            assert_eq!(lr.len(), single + 2 * double);
            assert!(lr.len() >= n && lr.len() <= 2 * n);
        }
    }

    #[test]
    fn same_sign_images_are_balanced() {
        // For coprime p > q > 0 the same-sign image has p letters of each
        // kind; confirmed over all p + q <= 60.
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        for s in 3u64..=60 {
            for p in 1..s {
                let q = s - p;
                if p <= q || gcd(p, q) != 1 {
                    continue;
                }
                let w = xy_from_slope(p as i64, q as i64).unwrap();
                let lr = lr_from_xy(&w, SignCase::SameSign);
                let l = lr.iter().filter(|&&c| c == Letter::L).count() as u64;
                let r = lr.iter().filter(|&&c| c == Letter::R).count() as u64;
                assert_eq!((l, r), (p, p), "slope {p}/{q}");
            }
        }
    }

    #[test]
    fn sign_cases() {
        assert_eq!(sign_case_for_slope(5, 2), SignCase::SameSign);
        assert_eq!(sign_case_for_slope(-5, -2), SignCase::SameSign);
        assert_eq!(sign_case_for_slope(-5, 2), SignCase::OppositeSign);
        assert_eq!(sign_case_for_slope(0, 1), SignCase::Axis);
        assert_eq!(sign_case_for_slope(1, 0), SignCase::Axis);
    }

    proptest! {
        #[test]
        fn rotation_covariance(letters in proptest::collection::vec(prop_oneof![Just(XYLetter::X), Just(XYLetter::Y)], 1..12), shift in 0usize..12) {
            let w = XYWord::from_letters(letters.clone()).unwrap();
            let out = lr_from_xy(&w, SignCase::SameSign);
            let mut rotated = letters;
            let k = shift % rotated.len();
            rotated.rotate_left(k);
            let w2 = XYWord::from_letters(rotated).unwrap();
            let out2 = lr_from_xy(&w2, SignCase::SameSign);
            prop_assert!(cyclic_eq(&out, &out2));
        }
    }
}
