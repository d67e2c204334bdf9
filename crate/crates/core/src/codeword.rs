//! Code words of modular geodesics.
//!
//! A code word is a primitive cyclic word in the letters `L`, `R` containing
//! both letters, written in the standard syllable form
//! `L^{a_1} R^{b_1} ... L^{a_n} R^{b_n}` with all exponents positive.  Words
//! are compared and hashed up to cyclic rotation: parsing fixes the
//! representative to the lexicographically least rotation (with `L < R`)
//! among those that start with an `L`-run and end with an `R`-run.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// One letter of a code word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    R,
}

impl Letter {
    pub fn other(self) -> Letter {
        match self {
            Letter::L => Letter::R,
            Letter::R => Letter::L,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A syllable `L^l R^r` of the standard form; both exponents are ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub l: u64,
    pub r: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("EmptyWord: the word has no letters")]
    EmptyWord,
    #[error("SingleLetterWord: the word uses only the letter {0}")]
    SingleLetterWord(char),
    #[error("NonPrimitiveWord: the word is the {power}-th power of {root}")]
    NonPrimitiveWord { root: String, power: u64 },
    #[error("SyntaxError: {0}")]
    SyntaxError(String),
    #[error("DuplicateComponent: component {0} appears more than once")]
    DuplicateComponent(String),
}

/// A primitive cyclic `LR` word in canonical rotation.
///
/// Equality, ordering and hashing look only at the syllables, so two parses
/// of rotations of the same cyclic word compare equal.  The
/// `canonical_rotation` records where (as a letter offset into the parsed
/// input) the canonical representative started.
#[derive(Clone, Debug)]
pub struct CodeWord {
    syllables: Vec<Syllable>,
    canonical_rotation: u64,
}

impl PartialEq for CodeWord {
    fn eq(&self, other: &Self) -> bool {
        self.syllables == other.syllables
    }
}

impl Eq for CodeWord {}

impl PartialOrd for CodeWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CodeWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.syllables.cmp(&other.syllables)
    }
}

impl std::hash::Hash for CodeWord {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.syllables.hash(state);
    }
}

impl CodeWord {
    /// Syllables of the canonical rotation.
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Word period `n`: the number of syllables, which equals the number of
    /// maximal `L`-runs and of maximal `R`-runs.
    pub fn period(&self) -> usize {
        self.syllables.len()
    }

    /// Letter offset into the parsed input at which the canonical rotation
    /// begins.
    pub fn canonical_rotation(&self) -> u64 {
        self.canonical_rotation
    }

    /// Number of letters in the flattened word.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|s| s.l + s.r).sum()
    }

    /// Flattened letters of the canonical rotation.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for s in &self.syllables {
            for _ in 0..s.l {
                out.push(Letter::L);
            }
            for _ in 0..s.r {
                out.push(Letter::R);
            }
        }
        out
    }

    /// L-exponents `a_1..a_n` in canonical order.
    pub fn l_exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.syllables.iter().map(|s| s.l)
    }

    /// R-exponents `b_1..b_n` in canonical order.
    pub fn r_exponents(&self) -> impl Iterator<Item = u64> + '_ {
        self.syllables.iter().map(|s| s.r)
    }
}

impl fmt::Display for CodeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syllables {
            if s.l == 1 {
                write!(f, "L")?;
            } else {
                write!(f, "L^{}", s.l)?;
            }
            if s.r == 1 {
                write!(f, "R")?;
            } else {
                write!(f, "R^{}", s.r)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for CodeWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_code_word(s)
    }
}

/// A run of equal letters with its exponent and the flat letter offset of
/// its first letter in the input.
#[derive(Clone, Copy, Debug)]
struct Run {
    letter: Letter,
    count: u64,
    offset: u64,
}

/// Scan `L`/`R` text into maximal runs.  Accepts literal repetition
/// (`LLRR`), caret exponents (`L^2R^2`) and bare exponents (`L2R2`);
/// adjacent factors with the same letter merge into one run.
fn scan_runs(text: &str) -> Result<Vec<Run>, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseError::EmptyWord);
    }
    let mut runs: Vec<Run> = Vec::new();
    let mut chars = text.chars().peekable();
    let mut offset: u64 = 0;
    while let Some(c) = chars.next() {
        let letter = match c {
            'L' => Letter::L,
            'R' => Letter::R,
            other => {
                return Err(ParseError::SyntaxError(format!(
                    "unexpected character {other:?}; expected 'L' or 'R'"
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
            if digits.is_empty() {
                return Err(ParseError::SyntaxError(
                    "'^' must be followed by a positive integer".into(),
                ));
            }
            if digits.starts_with('0') {
                return Err(ParseError::SyntaxError(format!(
                    "exponent {digits:?} must be a positive integer without leading zeros"
                )));
            }
            count = digits.parse::<u64>().map_err(|_| {
                ParseError::SyntaxError(format!("exponent {digits:?} is too large"))
            })?;
        }
        match runs.last_mut() {
            Some(last) if last.letter == letter => last.count += count,
            _ => runs.push(Run {
                letter,
                count,
                offset,
            }),
        }
        offset += count;
    }
    Ok(runs)
}

/// Flatten `L`/`R` text to a letter sequence without canonicalization.
/// Used for inputs that denote a literal letter stream rather than a cyclic
/// code word (walking, linearity queries).
pub fn letters_from_str(text: &str) -> Result<Vec<Letter>, ParseError> {
    let runs = scan_runs(text)?;
    let total: u64 = runs.iter().map(|r| r.count).sum();
    if total > 1 << 24 {
        return Err(ParseError::SyntaxError(format!(
            "flattening a word of {total} letters is not supported"
        )));
    }
    let total = total as usize;
    let mut out = Vec::with_capacity(total);
    for r in &runs {
        for _ in 0..r.count {
            out.push(r.letter);
        }
    }
    Ok(out)
}

/// Compare the flattened letter sequences of two syllable rotations
/// lexicographically with `L < R`.  On aligned runs, a longer `L`-run is
/// smaller and a shorter `R`-run is smaller, so the comparison runs
/// syllable by syllable.
fn cmp_rotation(sylls: &[Syllable], i: usize, j: usize) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let n = sylls.len();
    for d in 0..n {
        let a = sylls[(i + d) % n];
        let b = sylls[(j + d) % n];
        match b.l.cmp(&a.l) {
            Ordering::Equal => {}
            ord => return ord,
        }
        match a.r.cmp(&b.r) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

/// Parse a code word and canonicalize it.
///
/// The result is the rotation in standard form (starts with `L`, ends with
/// `R`) whose flattened letter sequence is lexicographically least with
/// `L < R`.  Words that are empty, single-lettered, or proper powers are
/// rejected.
pub fn parse_code_word(text: &str) -> Result<CodeWord, ParseError> {
    let mut runs = scan_runs(text)?;

    // Merge the wrap-around run of the cyclic word.
    if runs.len() > 1 && runs[0].letter == runs[runs.len() - 1].letter {
        let first = runs.remove(0);
        let last = runs.last_mut().expect("nonempty");
        last.count += first.count;
    }

    if runs.len() < 2 {
        return Err(ParseError::SingleLetterWord(runs[0].letter.as_char()));
    }

    // Rotate so an L-run leads; runs alternate letters, so the count is even.
    if runs[0].letter == Letter::R {
        runs.rotate_left(1);
    }
    debug_assert!(runs.len() % 2 == 0);
    debug_assert!(runs.iter().step_by(2).all(|r| r.letter == Letter::L));

    let syllables: Vec<Syllable> = runs
        .chunks(2)
        .map(|c| Syllable {
            l: c[0].count,
            r: c[1].count,
        })
        .collect();
    let offsets: Vec<u64> = runs.iter().step_by(2).map(|r| r.offset).collect();

    // A cyclic word over {L, R} is a proper power exactly when its syllable
    // sequence is fixed by a nontrivial rotation.
    let n = syllables.len();
    for d in 1..n {
        if !n.is_multiple_of(d) {
            continue;
        }
        if (0..n).all(|i| syllables[i] == syllables[(i + d) % n]) {
            let root = CodeWord {
                syllables: canonical_rotation_of(&syllables[..d]),
                canonical_rotation: 0,
            };
            return Err(ParseError::NonPrimitiveWord {
                root: root.to_string(),
                power: (n / d) as u64,
            });
        }
    }

    let mut best = 0;
    for i in 1..n {
        if cmp_rotation(&syllables, i, best) == std::cmp::Ordering::Less {
            best = i;
        }
    }
    let mut canonical = syllables;
    canonical.rotate_left(best);
    Ok(CodeWord {
        syllables: canonical,
        canonical_rotation: offsets[best],
    })
}

fn canonical_rotation_of(sylls: &[Syllable]) -> Vec<Syllable> {
    let mut best = 0;
    for i in 1..sylls.len() {
        if cmp_rotation(sylls, i, best) == std::cmp::Ordering::Less {
            best = i;
        }
    }
    let mut out = sylls.to_vec();
    out.rotate_left(best);
    out
}

/// A finite collection of pairwise distinct code words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularLink {
    words: Vec<CodeWord>,
}

impl ModularLink {
    /// Build a link from its components.  Two equal cyclic words would name
    /// the same geodesic twice, so duplicates are rejected.
    pub fn new(words: Vec<CodeWord>) -> Result<Self, ParseError> {
        if words.is_empty() {
            return Err(ParseError::EmptyWord);
        }
        for (i, w) in words.iter().enumerate() {
            if words[..i].contains(w) {
                return Err(ParseError::DuplicateComponent(w.to_string()));
            }
        }
        Ok(ModularLink { words })
    }

    pub fn components(&self) -> &[CodeWord] {
        &self.words
    }

    pub fn component_count(&self) -> usize {
        self.words.len()
    }
}

impl fmt::Display for ModularLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for ModularLink {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_link(s)
    }
}

/// Parse a comma-separated list of code words into a link.
pub fn parse_link(text: &str) -> Result<ModularLink, ParseError> {
    let words = text
        .split(',')
        .map(parse_code_word)
        .collect::<Result<Vec<_>, _>>()?;
    ModularLink::new(words)
}

/// Distinct unlabelled exponent values of a link: `A` on the `L` side and
/// `B` on the `R` side.
pub fn exponent_sets(link: &ModularLink) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    for w in link.components() {
        a.extend(w.l_exponents());
        b.extend(w.r_exponents());
    }
    (a, b)
}

/// Labelled exponents of a link with multiplicity, component by component in
/// canonical order.
pub fn labelled_exponents(link: &ModularLink) -> (Vec<u64>, Vec<u64>) {
    let mut ls = Vec::new();
    let mut rs = Vec::new();
    for w in link.components() {
        ls.extend(w.l_exponents());
        rs.extend(w.r_exponents());
    }
    (ls, rs)
}

/// Cyclic equality of two letter sequences.
pub fn cyclic_eq<T: PartialEq + Clone>(a: &[T], b: &[T]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let doubled: Vec<T> = a.iter().chain(a.iter()).cloned().collect();
    doubled.windows(a.len()).any(|w| w == b)
}
