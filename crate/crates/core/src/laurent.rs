//! Exact Laurent polynomials in a single variable `q`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::scalar::Coeff;

/// A Laurent polynomial `Σ c_e q^e` with exact coefficients.
///
/// Stored densely from the lowest nonzero exponent to the highest; both ends
/// are always nonzero, and the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<R> {
    low: i64,
    coeffs: Vec<R>,
}

impl<R: Coeff> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::q_pow(0)
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self { low: e, coeffs: vec![R::one()] }
    }

    /// `c · q^e`.
    pub fn monomial(c: R, e: i64) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// Builds a polynomial from consecutive coefficients starting at `low`.
    pub fn from_dense(low: i64, coeffs: Vec<R>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, R)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    /// `1 - q^e`.
    pub fn one_minus_q_pow(e: i64) -> Self {
        Self::one() - Self::q_pow(e)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(i) => {
                let last = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
                self.coeffs.truncate(last + 1);
                if i > 0 {
                    self.coeffs.drain(..i);
                    self.low += i as i64;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^e` (zero outside the support).
    pub fn coeff(&self, e: i64) -> R {
        let i = e - self.low;
        if i < 0 {
            return R::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(R::zero)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Multiplies by `q^e`.
    pub fn shift(mut self, e: i64) -> Self {
        if !self.is_zero() {
            self.low += e;
        }
        self
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division; `None` when `divisor` does not divide `self` in `R[q, q^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Long division on the ordinary polynomials obtained by clearing the low exponents.
        let d = &divisor.coeffs;
        let dlead = d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut quot = vec![R::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + d.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(dlead);
            if !r.is_zero() {
                return None;
            }
            for (j, dj) in d.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * dj.clone();
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(self.low - divisor.low, quot))
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (-e, c.clone())))
    }

    /// Converts the coefficients into another ring.
    pub fn map_coeffs<S: Coeff>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(f).collect())
    }
}

impl<R: Coeff> Default for LaurentPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coeff> From<R> for LaurentPoly<R> {
    fn from(c: R) -> Self {
        Self::monomial(c, 0)
    }
}

fn add_into<R: Coeff>(lhs: &mut LaurentPoly<R>, rhs: &LaurentPoly<R>, negate: bool) {
    if rhs.is_zero() {
        return;
    }
    if lhs.is_zero() {
        *lhs = if negate { -rhs.clone() } else { rhs.clone() };
        return;
    }
    let low = lhs.low.min(rhs.low);
    let high = lhs.high_degree().unwrap().max(rhs.high_degree().unwrap());
    if low < lhs.low {
        let pad = (lhs.low - low) as usize;
        lhs.coeffs.splice(0..0, std::iter::repeat_n(R::zero(), pad));
        lhs.low = low;
    }
    let len = (high - low + 1) as usize;
    lhs.coeffs.resize(len, R::zero());
    let off = (rhs.low - low) as usize;
    for (i, c) in rhs.coeffs.iter().enumerate() {
        let slot = &mut lhs.coeffs[off + i];
        *slot = if negate { slot.clone() - c.clone() } else { slot.clone() + c.clone() };
    }
    lhs.trim();
}

impl<R: Coeff> AddAssign<&LaurentPoly<R>> for LaurentPoly<R> {
    fn add_assign(&mut self, rhs: &LaurentPoly<R>) {
        add_into(self, rhs, false);
    }
}

impl<R: Coeff> AddAssign for LaurentPoly<R> {
    fn add_assign(&mut self, rhs: LaurentPoly<R>) {
        add_into(self, &rhs, false);
    }
}

impl<R: Coeff> SubAssign<&LaurentPoly<R>> for LaurentPoly<R> {
    fn sub_assign(&mut self, rhs: &LaurentPoly<R>) {
        add_into(self, rhs, true);
    }
}

impl<R: Coeff> SubAssign for LaurentPoly<R> {
    fn sub_assign(&mut self, rhs: LaurentPoly<R>) {
        add_into(self, &rhs, true);
    }
}

impl<R: Coeff> Add for LaurentPoly<R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<R: Coeff> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<R: Coeff> Sub for LaurentPoly<R> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<R: Coeff> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<R: Coeff> Neg for LaurentPoly<R> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl<R: Coeff> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, out)
    }
}

impl<R: Coeff> Mul for LaurentPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Coeff> MulAssign<&LaurentPoly<R>> for LaurentPoly<R> {
    fn mul_assign(&mut self, rhs: &LaurentPoly<R>) {
        *self = &*self * rhs;
    }
}

impl<R: Coeff> Sum for LaurentPoly<R> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}

impl<R: Coeff> Product for LaurentPoly<R> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| acc * p)
    }
}

/// Ascending exponents, e.g. `q^-2 - q^-1 + 1 - q + 2q^3`.
impl<R: Coeff> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            if e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl<R: Coeff> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<R: Coeff> FromStr for LaurentPoly<R> {
    type Err = Error;

    /// Parses the text form produced by `Display`. Whitespace is optional.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::PolynomialSyntax(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let bytes = compact.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if pos != 0 {
                return Err(bad());
            }
            let start = pos;
            // A term ends at the next sign that does not follow '^'.
            while pos < bytes.len() {
                let b = bytes[pos];
                if (b == b'+' || b == b'-') && pos > start && bytes[pos - 1] != b'^' {
                    break;
                }
                pos += 1;
            }
            let term = &compact[start..pos];
            if term.is_empty() {
                return Err(bad());
            }
            let (coeff_text, exp) = match term.find('q') {
                None => (term, 0),
                Some(i) => {
                    let rest = &term[i + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').and_then(|t| t.parse::<i64>().ok()).ok_or_else(bad)?
                    };
                    (term[..i].trim_end_matches('*'), exp)
                }
            };
            let coeff = if coeff_text.is_empty() {
                R::one()
            } else {
                R::from_str_radix(coeff_text, 10).map_err(|_| bad())?
            };
            let coeff = if negative { -coeff } else { coeff };
            out += Self::monomial(coeff, exp);
        }
        Ok(out)
    }
}

/// JSON form `{"exp": coeff, ...}` in ascending exponent order. Coefficients that
/// fit in `i64` are numbers, larger ones are decimal strings.
impl<R: Coeff> Serialize for LaurentPoly<R> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            match c.to_i64() {
                Some(v) => map.serialize_entry(&e.to_string(), &v)?,
                None => map.serialize_entry(&e.to_string(), &c.to_string())?,
            }
        }
        map.end()
    }
}

impl<'de, R: Coeff> Deserialize<'de> for LaurentPoly<R> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor<R>(std::marker::PhantomData<R>);

        impl<'de, R: Coeff> Visitor<'de> for PolyVisitor<R> {
            type Value = LaurentPoly<R>;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent to integer coefficient")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Self::Value, A::Error> {
                let mut out = LaurentPoly::zero();
                while let Some((k, v)) = access.next_entry::<String, serde_json::Value>()? {
                    let e: i64 = k.parse().map_err(|_| de::Error::custom(format!("bad exponent {k:?}")))?;
                    let text = match &v {
                        serde_json::Value::Number(n) => n.to_string(),
                        serde_json::Value::String(s) => s.clone(),
                        _ => return Err(de::Error::custom("coefficient must be an integer")),
                    };
                    let c = R::from_str_radix(&text, 10)
                        .map_err(|_| de::Error::custom(format!("bad coefficient {text:?}")))?;
                    out += LaurentPoly::monomial(c, e);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(PolyVisitor(std::marker::PhantomData))
    }
}
