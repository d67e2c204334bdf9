//! Arcs in the once-punctured annulus, coded by `ab` words.
//!
//! An arc crossing the two seam arcs of the annulus picks up a letter in
//! `{a, a⁻¹, b, b⁻¹}` per crossing (written `a A b B` in text form).  Code
//! words are kept freely reduced.  The last winding number reads off the
//! final maximal `(b⁻¹a)^m` block — or `(a⁻¹b)^m` for negative winding —
//! and separates homotopy classes: arcs with different last winding numbers
//! are never homotopic.

use std::fmt;

use thiserror::Error;

/// One seam crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbLetter {
    A,
    AInv,
    B,
    BInv,
}

impl AbLetter {
    pub fn inverse(self) -> AbLetter {
        match self {
            AbLetter::A => AbLetter::AInv,
            AbLetter::AInv => AbLetter::A,
            AbLetter::B => AbLetter::BInv,
            AbLetter::BInv => AbLetter::B,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            AbLetter::A => 'a',
            AbLetter::AInv => 'A',
            AbLetter::B => 'b',
            AbLetter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<AbLetter> {
        match c {
            'a' => Some(AbLetter::A),
            'A' => Some(AbLetter::AInv),
            'b' => Some(AbLetter::B),
            'B' => Some(AbLetter::BInv),
            _ => None,
        }
    }
}

impl fmt::Display for AbLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AbParseError {
    #[error("SyntaxError: unexpected character {0:?}; expected one of a A b B")]
    SyntaxError(char),
}

/// A word over `{a, a⁻¹, b, b⁻¹}`; possibly empty, not necessarily reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbWord {
    pub letters: Vec<AbLetter>,
}

impl AbWord {
    pub fn new(letters: Vec<AbLetter>) -> Self {
        AbWord { letters }
    }

    /// Parse the case-sensitive alphabet `a A b B`; whitespace is ignored.
    pub fn parse(text: &str) -> Result<Self, AbParseError> {
        let mut letters = Vec::new();
        for c in text.chars() {
            if c.is_whitespace() {
                continue;
            }
            letters.push(AbLetter::from_char(c).ok_or(AbParseError::SyntaxError(c))?);
        }
        Ok(AbWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[1] != w[0].inverse())
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Freely reduce: cancel adjacent inverse pairs until none remain.
/// Idempotent, never lengthens, and independent of cancellation order.
pub fn reduce(word: &AbWord) -> AbWord {
    let mut out: Vec<AbLetter> = Vec::with_capacity(word.letters.len());
    for &l in &word.letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    AbWord { letters: out }
}

/// Signed repetition count of the last winding block in a reduced word.
///
/// A winding block is a maximal run of consecutive `(b⁻¹a)` pairs (counted
/// positively) or `(a⁻¹b)` pairs (negatively).  The block occurring last in
/// the word decides the value; words containing neither pattern wind zero
/// times.
pub fn last_winding_number(word: &AbWord) -> i64 {
    let w = reduce(word);
    let ls = &w.letters;
    let mut result = 0i64;
    let mut i = 0usize;
    while i + 1 < ls.len() {
        let sign = match (ls[i], ls[i + 1]) {
            (AbLetter::BInv, AbLetter::A) => 1,
            (AbLetter::AInv, AbLetter::B) => -1,
            _ => {
                i += 1;
                continue;
            }
        };
        let pattern = (ls[i], ls[i + 1]);
        let mut reps = 0i64;
        while i + 1 < ls.len() && (ls[i], ls[i + 1]) == pattern {
            reps += 1;
            i += 2;
        }
        result = sign * reps;
    }
    result
}

/// Verdict of the last-winding-number separation test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassComparison {
    /// Different last winding numbers: the arcs are not homotopic.
    ProvablyDistinct,
    /// Equal last winding numbers prove nothing either way.
    Inconclusive,
}

impl fmt::Display for ClassComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassComparison::ProvablyDistinct => write!(f, "provably-distinct"),
            ClassComparison::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// One-directional separation of homotopy classes; never claims equality.
pub fn distinct_classes(word1: &AbWord, word2: &AbWord) -> ClassComparison {
    if last_winding_number(word1) != last_winding_number(word2) {
        ClassComparison::ProvablyDistinct
    } else {
        ClassComparison::Inconclusive
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(text: &str) -> AbWord {
        AbWord::parse(text).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&word("aA")), word(""));
        assert_eq!(reduce(&word("babA")), word("babA"));
        assert_eq!(reduce(&word("bBaaBb")), word("aa"));
    }

    #[test]
    fn reduce_is_idempotent_and_shortening() {
        let w = word("abABbbBBaAba");
        let once = reduce(&w);
        assert!(once.len() <= w.len());
        assert_eq!(reduce(&once), once);
        assert!(once.is_reduced());
    }

    #[test]
    fn last_winding_examples() {
        assert_eq!(last_winding_number(&word("BaBa")), 2);
        assert_eq!(last_winding_number(&word("")), 0);
        // a (b⁻¹a)³ b a: the block ends before the trailing "ba".
        assert_eq!(last_winding_number(&word("aBaBaBaba")), 3);
    }

    #[test]
    fn negative_pattern_counts_negatively() {
        assert_eq!(last_winding_number(&word("AbAb")), -2);
        assert_eq!(last_winding_number(&word("BaBabAb")), -1);
    }

    #[test]
    fn later_block_wins_regardless_of_size() {
        assert_eq!(last_winding_number(&word("BaBaaBa")), 1);
    }

    #[test]
    fn no_pattern_is_zero() {
        assert_eq!(last_winding_number(&word("ab")), 0);
        assert_eq!(last_winding_number(&word("ba")), 0);
        assert_eq!(last_winding_number(&word("babA")), 0);
    }

    #[test]
    fn distinct_class_examples() {
        assert_eq!(
            distinct_classes(&word("Ba"), &word("BaBa")),
            ClassComparison::ProvablyDistinct
        );
        let w = word("abBA");
        assert_eq!(distinct_classes(&w, &w), ClassComparison::Inconclusive);
        assert_eq!(
            distinct_classes(&word("ab"), &word("ba")),
            ClassComparison::Inconclusive
        );
    }

    #[test]
    fn comparison_is_symmetric() {
        let ws = [word("Ba"), word("AbAb"), word("ab"), word("BaBaBa")];
        for x in &ws {
            for y in &ws {
                assert_eq!(distinct_classes(x, y), distinct_classes(y, x));
            }
        }
    }

    /// Reduce by cancelling a randomly chosen adjacent inverse pair at a
    /// time: order independence oracle.
    fn reduce_random_order(w: &AbWord, seed: u64) -> AbWord {
        let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
        let mut next = move || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            state >> 33
        };
        let mut letters = w.letters.clone();
        loop {
            let cancellable: Vec<usize> = (0..letters.len().saturating_sub(1))
                .filter(|&i| letters[i + 1] == letters[i].inverse())
                .collect();
            if cancellable.is_empty() {
                return AbWord { letters };
            }
            let i = cancellable[(next() % cancellable.len() as u64) as usize];
            letters.drain(i..i + 2);
        }
    }

    fn arb_letters() -> impl Strategy<Value = Vec<AbLetter>> {
        proptest::collection::vec(
            prop_oneof![
                Just(AbLetter::A),
                Just(AbLetter::AInv),
                Just(AbLetter::B),
                Just(AbLetter::BInv)
            ],
            0..30,
        )
    }

    proptest! {
        #[test]
        fn reduction_order_does_not_matter(letters in arb_letters(), seed in 0u64..1000) {
            let w = AbWord::new(letters);
            prop_assert_eq!(reduce(&w), reduce_random_order(&w, seed));
        }

        #[test]
        fn neutral_suffix_letter_keeps_winding(letters in arb_letters(), extra in prop_oneof![
            Just(AbLetter::A),
            Just(AbLetter::AInv),
            Just(AbLetter::B),
            Just(AbLetter::BInv)
        ]) {
            let w = reduce(&AbWord::new(letters));
            let mut extended = w.letters.clone();
            extended.push(extra);
            let v = AbWord::new(extended);
            // Only assert when appending neither cancels nor creates or
            // completes a winding pair.
            let creates = w.letters.last().is_some_and(|&l| {
                extra == l.inverse()
                    || (l == AbLetter::BInv && extra == AbLetter::A)
                    || (l == AbLetter::AInv && extra == AbLetter::B)
            });
            if !creates {
                prop_assert_eq!(last_winding_number(&w), last_winding_number(&v));
            }
        }
    }
}
