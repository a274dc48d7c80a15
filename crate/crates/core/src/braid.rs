//! Braid words, their permutations, and the diagram cell model.
//!
//! Crossing `j` (1-based) is the `j`-th letter of the word, counted from the
//! top of the braid. Gap `g` is the horizontal slice directly below crossing
//! `g`: gap 0 is the top edge and gap `k` the bottom edge. Paths walk the
//! diagram bottom-up, from gap `k` to gap 0.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qops::Letter;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// One letter `σ_index^sign` of a braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: usize,
    pub sign: Sign,
}

impl Generator {
    pub fn new(index: usize, sign: Sign) -> Self {
        Self { index, sign }
    }

    pub fn from_signed(t: i64) -> Self {
        let sign = if t > 0 { Sign::Pos } else { Sign::Neg };
        Self { index: t.unsigned_abs() as usize, sign }
    }

    pub fn signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }

    pub fn inverse(self) -> Self {
        Self { index: self.index, sign: self.sign.flip() }
    }

    /// Moves available to a path sitting at `position` just below this crossing,
    /// as `(letter, position above)`. Empty when the crossing does not involve
    /// `position`; "jump down" is listed before "stay over".
    ///
    /// Positive crossing on `(l, l+1)`: from `l` the path jumps (`a`, stays at
    /// `l`) or follows the over-strand (`c`, to `l+1`); from `l+1` it follows
    /// the under-strand (`b`, to `l`). Negative crossings mirror this with the
    /// over-strand starting at `l+1`.
    pub fn moves(self, position: usize) -> &'static [(Letter, isize)] {
        const OVER_FROM_LEFT: &[(Letter, isize)] = &[(Letter::A, 0), (Letter::C, 1)];
        const UNDER_FROM_RIGHT: &[(Letter, isize)] = &[(Letter::B, -1)];
        const OVER_FROM_RIGHT: &[(Letter, isize)] = &[(Letter::A, 0), (Letter::C, -1)];
        const UNDER_FROM_LEFT: &[(Letter, isize)] = &[(Letter::B, 1)];
        let l = self.index;
        match (self.sign, position) {
            (Sign::Pos, p) if p == l => OVER_FROM_LEFT,
            (Sign::Pos, p) if p == l + 1 => UNDER_FROM_RIGHT,
            (Sign::Neg, p) if p == l + 1 => OVER_FROM_RIGHT,
            (Sign::Neg, p) if p == l => UNDER_FROM_LEFT,
            _ => &[],
        }
    }

    /// The position a path at `position` arrives from, given the letter it took
    /// here. Inverse of [`Generator::moves`] on the first coordinate.
    pub fn origin_of(self, letter: Letter) -> usize {
        let l = self.index;
        match (self.sign, letter) {
            (Sign::Pos, Letter::A | Letter::C) => l,
            (Sign::Pos, Letter::B) => l + 1,
            (Sign::Neg, Letter::A | Letter::C) => l + 1,
            (Sign::Neg, Letter::B) => l,
        }
    }
}

/// A braid word on a fixed number of strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidJson", into = "BraidJson")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

#[derive(Serialize, Deserialize)]
struct BraidJson {
    strands: usize,
    word: Vec<i64>,
}

impl TryFrom<BraidJson> for BraidWord {
    type Error = Error;
    fn try_from(j: BraidJson) -> Result<Self> {
        BraidWord::from_signed(j.strands, &j.word)
    }
}

impl From<BraidWord> for BraidJson {
    fn from(b: BraidWord) -> Self {
        BraidJson { strands: b.strands, word: b.to_signed() }
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::NoStrands);
        }
        for g in &letters {
            if g.index < 1 || g.index >= strands {
                return Err(Error::GeneratorOutOfRange { generator: g.index, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn from_signed(strands: usize, word: &[i64]) -> Result<Self> {
        if let Some(pos) = word.iter().position(|&t| t == 0) {
            return Err(Error::MalformedToken(word[pos].to_string()));
        }
        Self::new(strands, word.iter().map(|&t| Generator::from_signed(t)).collect())
    }

    /// Parses whitespace-separated nonzero integers; token `t` is `σ_|t|` with the sign of `t`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let word = text
            .split_whitespace()
            .map(|tok| match tok.parse::<i64>() {
                Ok(t) if t != 0 => Ok(t),
                _ => Err(Error::MalformedToken(tok.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        if strands < 1 {
            return Err(Error::NoStrands);
        }
        Self::from_signed(strands, &word)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    /// Number of crossings `k`.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The generator at 1-based crossing index `j`.
    pub fn crossing(&self, j: usize) -> Generator {
        self.letters[j - 1]
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters.iter().map(|g| g.signed()).collect()
    }

    /// Canonical token text, e.g. `"1 -2 1 -2"`.
    pub fn to_text(&self) -> String {
        self.to_signed().iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.sign.value()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|g| g.sign == Sign::Pos)
    }

    /// Permutation sending each bottom position to the top position its strand reaches.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut image = Vec::with_capacity(self.strands);
        for start in 1..=self.strands {
            let mut p = start;
            for g in self.letters.iter().rev() {
                if p == g.index {
                    p += 1;
                } else if p == g.index + 1 {
                    p -= 1;
                }
            }
            image.push(p);
        }
        Permutation { image }
    }

    pub fn components(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    pub fn is_knot_closure(&self) -> bool {
        self.components() == 1
    }

    /// Errors unless the closure is a knot.
    pub fn require_knot(&self) -> Result<()> {
        match self.components() {
            1 => Ok(()),
            components => Err(Error::NotAKnot { components }),
        }
    }

    /// `self` stacked on top of `below`.
    pub fn concat(&self, below: &BraidWord) -> Result<BraidWord> {
        let strands = self.strands.max(below.strands);
        let letters = self.letters.iter().chain(&below.letters).copied().collect();
        BraidWord::new(strands, letters)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate(&self, g: Generator) -> Result<BraidWord> {
        let mut letters = vec![g];
        letters.extend_from_slice(&self.letters);
        letters.push(g.inverse());
        BraidWord::new(self.strands, letters)
    }

    /// Markov stabilization: adds strand `m+1` and appends `σ_m^sign`.
    pub fn stabilize(&self, sign: Sign) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push(Generator::new(self.strands, sign));
        BraidWord { strands: self.strands + 1, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] on {} strands", self.to_text(), self.strands)
    }
}

/// A permutation of `{1..m}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Self { image: (1..=m).collect() }
    }

    pub fn from_images(image: Vec<usize>) -> Self {
        Self { image }
    }

    pub fn apply(&self, p: usize) -> usize {
        self.image[p - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { image: other.image.iter().map(|&p| self.apply(p)).collect() }
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.image.len()];
        let mut cycles = 0;
        for s in 0..self.image.len() {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = self.image[p] - 1;
            }
        }
        cycles
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &p)| p == i + 1)
    }
}

/// One cell of the diagram: strand `position` in slice `gap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramCell {
    pub gap: usize,
    pub position: usize,
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `"<strands>: <tokens>"`, e.g. `"3: 1 -2 1 -2"`.
    fn from_str(s: &str) -> Result<Self> {
        let (m, word) = s.split_once(':').ok_or_else(|| Error::MalformedToken(s.to_string()))?;
        let m = m.trim().parse().map_err(|_| Error::MalformedToken(m.to_string()))?;
        BraidWord::parse(word, m)
    }
}
