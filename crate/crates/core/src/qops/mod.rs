//! The per-crossing operator algebra generated by `a`, `b`, `c`.
//!
//! Letters at one crossing q-commute; the products `b^s c^r a^d` form a basis
//! (PBW), so every crossing word reduces to `q^shift · b^s c^r a^d`. The
//! evaluation map `E_N` is then a closed formula in `(r, d)`.
//!
//! Relations, by crossing sign:
//!
//! | sign | `a`,`b`       | `a`,`c`        | `b`,`c`         |
//! |------|---------------|----------------|-----------------|
//! | `+`  | `ab = ba`     | `ac = q ca`    | `bc = q² cb`    |
//! | `-`  | `ab = q² ba`  | `ca = q ac`    | `cb = q² bc`    |

pub mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::Sign;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::scalar::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    /// Jump down from the over-strand.
    A,
    /// Follow the under-strand.
    B,
    /// Follow the over-strand.
    C,
}

impl Letter {
    pub const ALL: [Letter; 3] = [Letter::A, Letter::B, Letter::C];

    /// Position in the normal order `b, c, a`.
    fn rank(self) -> u8 {
        match self {
            Letter::B => 0,
            Letter::C => 1,
            Letter::A => 2,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
            Letter::C => 'c',
        }
    }

    pub fn from_char(ch: char) -> Option<Letter> {
        match ch {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'c' => Some(Letter::C),
            _ => None,
        }
    }
}

/// Exponent of `q` picked up when the adjacent pair `left·right` (out of normal
/// order) is rewritten as `q^e · right·left`.
fn swap_exponent(sign: Sign, left: Letter, right: Letter) -> i64 {
    use Letter::*;
    match (sign, left, right) {
        (Sign::Pos, A, B) => 0,
        (Sign::Pos, A, C) => 1,
        (Sign::Pos, C, B) => -2,
        (Sign::Neg, A, B) => 2,
        (Sign::Neg, A, C) => -1,
        (Sign::Neg, C, B) => 2,
        _ => unreachable!("pair already in normal order"),
    }
}

/// The operator product at one crossing, leftmost letter = leftmost factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingWord {
    pub sign: Sign,
    pub letters: Vec<Letter>,
}

impl CrossingWord {
    pub fn new(sign: Sign, letters: Vec<Letter>) -> Self {
        Self { sign, letters }
    }

    pub fn empty(sign: Sign) -> Self {
        Self { sign, letters: Vec::new() }
    }

    /// Parses a word like `"bca"`.
    pub fn parse(sign: Sign, text: &str) -> Result<Self, Error> {
        let letters = text
            .chars()
            .map(|ch| Letter::from_char(ch).ok_or_else(|| Error::MalformedToken(text.to_string())))
            .collect::<Result<_, _>>()?;
        Ok(Self { sign, letters })
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &CrossingWord) -> CrossingWord {
        debug_assert_eq!(self.sign, other.sign);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        CrossingWord { sign: self.sign, letters }
    }
}

impl fmt::Display for CrossingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// Exponents of the PBW monomial `b^s c^r a^d` at a crossing of the given sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pbw {
    pub sign: Sign,
    pub s: u32,
    pub r: u32,
    pub d: u32,
}

impl Pbw {
    pub fn unit(sign: Sign) -> Self {
        Self { sign, s: 0, r: 0, d: 0 }
    }

    pub fn is_unit(&self) -> bool {
        self.s == 0 && self.r == 0 && self.d == 0
    }

    pub fn count(&self, letter: Letter) -> u32 {
        match letter {
            Letter::A => self.d,
            Letter::B => self.s,
            Letter::C => self.r,
        }
    }

    /// `self · other = q^shift · (self ⊗ other)` with the exponents added.
    ///
    /// Both operands are already normal; only the cross pairs (a left `a` or `c`
    /// against a right `b` or `c`) need swapping.
    pub fn mul(&self, other: &Pbw) -> (i64, Pbw) {
        debug_assert_eq!(self.sign, other.sign);
        use Letter::*;
        let sign = self.sign;
        let shift = i64::from(self.d) * i64::from(other.s) * swap_exponent(sign, A, B)
            + i64::from(self.d) * i64::from(other.r) * swap_exponent(sign, A, C)
            + i64::from(self.r) * i64::from(other.s) * swap_exponent(sign, C, B);
        let prod = Pbw { sign, s: self.s + other.s, r: self.r + other.r, d: self.d + other.d };
        (shift, prod)
    }

    /// The word `b^s c^r a^d`.
    pub fn to_word(&self) -> CrossingWord {
        let mut letters = Vec::with_capacity((self.s + self.r + self.d) as usize);
        letters.extend(std::iter::repeat_n(Letter::B, self.s as usize));
        letters.extend(std::iter::repeat_n(Letter::C, self.r as usize));
        letters.extend(std::iter::repeat_n(Letter::A, self.d as usize));
        CrossingWord { sign: self.sign, letters }
    }
}

impl fmt::Display for Pbw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = match self.sign {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        write!(f, "b{sign}^{} c{sign}^{} a{sign}^{}", self.s, self.r, self.d)
    }
}

/// `q^q_shift · b^s c^r a^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub q_shift: i64,
    pub pbw: Pbw,
}

/// Rewrites a crossing word into PBW normal form.
///
/// Every out-of-order pair contributes its swap exponent exactly once, whatever
/// sequence of adjacent swaps is used, so the shift is a sum over inversions.
pub fn normal_order(w: &CrossingWord) -> NormalForm {
    let mut seen = [0i64; 3];
    let mut q_shift = 0;
    // Scan right to left, counting letters of lower rank to the right of each letter.
    for &letter in w.letters.iter().rev() {
        let rank = letter.rank();
        for right in Letter::ALL {
            if right.rank() < rank {
                q_shift += seen[right.rank() as usize] * swap_exponent(w.sign, letter, right);
            }
        }
        seen[rank as usize] += 1;
    }
    let pbw = Pbw { sign: w.sign, s: seen[0] as u32, r: seen[1] as u32, d: seen[2] as u32 };
    NormalForm { q_shift, pbw }
}

/// `E_N(b^s c^r a^d)` for a crossing of the given sign (without any `q_shift`).
///
/// * `+`: `q^{r(N-1-d)} ∏_{i<d} (1 - q^{N-1-r-i})`
/// * `-`: `q^{-r(N-1)} ∏_{i<d} (1 - q^{r+i+1-N})`
pub fn eval_pbw<R: Coeff>(pbw: &Pbw, n: u32) -> LaurentPoly<R> {
    let n = i64::from(n);
    let r = i64::from(pbw.r);
    let d = i64::from(pbw.d);
    match pbw.sign {
        Sign::Pos => {
            if d > 0 && r < n && n - 1 < r + d {
                return LaurentPoly::zero();
            }
            let lead = LaurentPoly::q_pow(r * (n - 1 - d));
            (0..d).map(|i| LaurentPoly::one_minus_q_pow(n - 1 - r - i)).fold(lead, |acc, f| acc * f)
        }
        Sign::Neg => {
            if d > 0 && r < n && n <= r + d {
                return LaurentPoly::zero();
            }
            let lead = LaurentPoly::q_pow(-r * (n - 1));
            (0..d).map(|i| LaurentPoly::one_minus_q_pow(r + i + 1 - n)).fold(lead, |acc, f| acc * f)
        }
    }
}

/// `E_N` of a normal form: `q^q_shift · E_N(b^s c^r a^d)`.
pub fn eval_crossing<R: Coeff>(nf: &NormalForm, n: u32) -> LaurentPoly<R> {
    eval_pbw::<R>(&nf.pbw, n).shift(nf.q_shift)
}

impl FromStr for Letter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut chars = s.chars();
        match (chars.next().and_then(Letter::from_char), chars.next()) {
            (Some(l), None) => Ok(l),
            _ => Err(Error::MalformedToken(s.to_string())),
        }
    }
}
