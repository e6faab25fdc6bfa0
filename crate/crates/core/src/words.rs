//! Signed words over atoms, their two text syntaxes, and the symmetry
//! transforms used by the pair finders.
//!
//! Letters are stored as nonzero signed integers: `3` is the third atom,
//! `-3` its inverse. In compact syntax atom `k` is the `k`-th lowercase
//! letter and its inverse the matching uppercase letter.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GarsideError, Result};

/// A single letter `σ_i^{±1}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Letter(i16);

impl Letter {
    /// Panics if `atom` is zero or exceeds `i16::MAX`.
    pub fn new(atom: usize, exponent: i8) -> Self {
        assert!(atom >= 1 && atom <= i16::MAX as usize, "atom index {atom}");
        assert!(exponent == 1 || exponent == -1, "exponent must be ±1");
        Letter(atom as i16 * exponent as i16)
    }

    pub fn pos(atom: usize) -> Self {
        Self::new(atom, 1)
    }

    pub fn neg(atom: usize) -> Self {
        Self::new(atom, -1)
    }

    /// 1-based atom index.
    pub fn atom(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// 0-based atom index, as used by context tables.
    pub fn atom0(self) -> usize {
        self.atom() - 1
    }

    pub fn exponent(self) -> i8 {
        self.0.signum() as i8
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn value(self) -> i16 {
        self.0
    }

    fn compact_char(self) -> Option<char> {
        let atom = self.atom();
        if atom > 26 {
            return None;
        }
        let base = if self.is_positive() { b'a' } else { b'A' };
        Some((base + atom as u8 - 1) as char)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.compact_char() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "{}", self.0),
        }
    }
}

/// Text syntax for words.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Syntax {
    /// `a..z` for atoms 1..26, uppercase for inverses, whitespace ignored.
    #[default]
    Compact,
    /// Signed nonzero integers separated by spaces or commas.
    Numeric,
}

/// A finite word over `σ_i^{±1}`. The empty word is allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

/// A word produced by a transform, with `origin[k]` the index in the source
/// word of the letter now at position `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformed {
    pub word: Word,
    pub origin: Vec<usize>,
}

impl Transformed {
    /// Index in the source word of position `k` of the transformed word.
    pub fn pull_back(&self, k: usize) -> usize {
        self.origin[k]
    }
}

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word(letters.into_iter().collect())
    }

    /// Positive word from 1-based atom indices.
    pub fn positive(atoms: impl IntoIterator<Item = usize>) -> Self {
        Word(atoms.into_iter().map(Letter::pos).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.0.iter().copied()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| l.is_positive())
    }

    /// Largest atom index used, or 0 for the empty word.
    pub fn max_atom(&self) -> usize {
        self.0.iter().map(|l| l.atom()).max().unwrap_or(0)
    }

    /// Checks every letter against a context with `atoms` atoms.
    pub fn check_atoms(&self, atoms: usize) -> Result<()> {
        match self.0.iter().find(|l| l.atom() > atoms) {
            Some(l) => Err(GarsideError::UnknownAtom { atom: l.atom(), atoms }),
            None => Ok(()),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// The word with letters `i` and `j` removed, other indices stable.
    pub fn delete_pair(&self, i: usize, j: usize) -> Word {
        Word(
            self.0
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, &l)| l)
                .collect(),
        )
    }

    pub fn parse(text: &str, syntax: Syntax) -> Result<Word> {
        match syntax {
            Syntax::Compact => parse_compact(text),
            Syntax::Numeric => parse_numeric(text),
        }
    }

    pub fn format(&self, syntax: Syntax) -> String {
        match syntax {
            Syntax::Compact if self.0.iter().all(|l| l.atom() <= 26) => {
                self.0.iter().map(|l| l.compact_char().unwrap()).collect()
            }
            _ => self
                .0
                .iter()
                .map(|l| l.value().to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    /// Repeatedly cancels adjacent `s^e s^{-e}`; a single stack pass reaches
    /// the fixed point.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    /// Group inverse: reversed with negated exponents.
    pub fn invert(&self) -> Transformed {
        let len = self.len();
        Transformed {
            word: Word(self.0.iter().rev().map(|l| l.inverse()).collect()),
            origin: (0..len).rev().collect(),
        }
    }

    /// Diagram symmetry `σ_i ↦ σ_{atoms+1-i}`.
    pub fn flip(&self, atoms: usize) -> Transformed {
        let word = Word(
            self.0
                .iter()
                .map(|l| Letter::new(atoms + 1 - l.atom(), l.exponent()))
                .collect(),
        );
        Transformed { word, origin: (0..self.len()).collect() }
    }

    /// `w[k..] ++ w[..k]`.
    pub fn cyclic_shift(&self, k: usize) -> Transformed {
        let len = self.len();
        assert!(k <= len, "shift {k} beyond length {len}");
        let mut letters = self.0[k..].to_vec();
        letters.extend_from_slice(&self.0[..k]);
        Transformed {
            word: Word(letters),
            origin: (0..len).map(|p| (p + k) % len.max(1)).collect(),
        }
    }
}

fn parse_compact(text: &str) -> Result<Word> {
    let mut letters = Vec::new();
    for (offset, ch) in text.char_indices() {
        if ch.is_whitespace() {
            continue;
        }
        match ch {
            'a'..='z' => letters.push(Letter::pos((ch as u8 - b'a' + 1) as usize)),
            'A'..='Z' => letters.push(Letter::neg((ch as u8 - b'A' + 1) as usize)),
            _ => return Err(GarsideError::IllegalCharacter { ch, offset }),
        }
    }
    Ok(Word(letters))
}

fn parse_numeric(text: &str) -> Result<Word> {
    let mut letters = Vec::new();
    for token in text.split(|c: char| c.is_whitespace() || c == ',') {
        if token.is_empty() {
            continue;
        }
        let value: i16 = token
            .parse()
            .map_err(|_| GarsideError::InvalidNumber(token.to_string()))?;
        if value == 0 {
            return Err(GarsideError::InvalidNumber(token.to_string()));
        }
        letters.push(Letter(value));
    }
    Ok(Word(letters))
}

impl FromStr for Word {
    type Err = GarsideError;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s, Syntax::Compact)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Syntax::Compact))
    }
}

/// Reads a word corpus: one nonempty compact word per line, `#` starts a
/// comment, blank lines are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<Word>> {
    text.lines()
        .map(|line| line.split('#').next().unwrap_or("").trim())
        .filter(|line| !line.is_empty())
        .map(parse_compact)
        .collect()
}
