//! Polynomials in the crossing letters of a whole braid.
//!
//! Letters at different crossings commute, so a monomial is a coefficient in
//! `Z[q, q^-1]` together with one [`CrossingWord`] per crossing. Two views
//! exist:
//!
//! * [`OperatorPolynomial`] keeps the raw words, exactly as walks and matrix
//!   products produce them.
//! * [`CanonicalOperator`] normal-orders every word into its PBW monomial and
//!   folds the q-shift into the coefficient. Equal operators have equal
//!   canonical forms, and the form is closed under multiplication.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::Serialize;

use crate::braid::{BraidWord, Sign};
use crate::laurent::LaurentPoly;
use crate::qops::{eval_pbw, normal_order, CrossingWord, Letter, Pbw};
use crate::scalar::Coeff;

/// Per-crossing words keyed by 1-based crossing index; empty words are omitted.
pub type WordFamily = BTreeMap<usize, CrossingWord>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMonomial<R: Coeff> {
    pub coeff: LaurentPoly<R>,
    pub words: WordFamily,
}

impl<R: Coeff> OperatorMonomial<R> {
    pub fn unit() -> Self {
        Self { coeff: LaurentPoly::one(), words: WordFamily::new() }
    }

    /// The single letter `letter_{crossing, sign}`.
    pub fn letter(crossing: usize, sign: Sign, letter: Letter) -> Self {
        let mut words = WordFamily::new();
        words.insert(crossing, CrossingWord::new(sign, vec![letter]));
        Self { coeff: LaurentPoly::one(), words }
    }

    pub fn with_coeff(mut self, coeff: LaurentPoly<R>) -> Self {
        self.coeff = coeff;
        self
    }

    /// Product with `other` on the right; words at a shared crossing concatenate.
    pub fn mul(&self, other: &Self) -> Self {
        Self { coeff: &self.coeff * &other.coeff, words: concat_families(&self.words, &other.words) }
    }

    /// `E_N` of this monomial: the coefficient times the per-crossing evaluations.
    pub fn evaluate(&self, n: u32) -> LaurentPoly<R> {
        let mut out = self.coeff.clone();
        for w in self.words.values() {
            let nf = normal_order(w);
            out = &out * &eval_pbw::<R>(&nf.pbw, n).shift(nf.q_shift);
            if out.is_zero() {
                break;
            }
        }
        out
    }

    pub fn canonical(&self) -> CanonicalOperator<R> {
        let mut shift = 0;
        let key = self
            .words
            .iter()
            .filter(|(_, w)| !w.is_empty())
            .map(|(&j, w)| {
                let nf = normal_order(w);
                shift += nf.q_shift;
                (j as u32, nf.pbw)
            })
            .collect();
        CanonicalOperator::monomial(PbwKey(key), self.coeff.clone().shift(shift))
    }
}

fn concat_families(left: &WordFamily, right: &WordFamily) -> WordFamily {
    let mut out = left.clone();
    for (&j, w) in right {
        out.entry(j)
            .and_modify(|lw| lw.letters.extend_from_slice(&w.letters))
            .or_insert_with(|| w.clone());
    }
    out
}

fn family_text(words: &WordFamily) -> String {
    let mut parts = Vec::new();
    for (j, w) in words {
        let s = match w.sign {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        for l in &w.letters {
            parts.push(format!("{}{j}{s}", l.as_char()));
        }
    }
    parts.join(" ")
}

impl<R: Coeff> fmt::Display for OperatorMonomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.coeff, family_text(&self.words))
    }
}

/// A sum of monomials with raw word keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorPolynomial<R: Coeff> {
    terms: BTreeMap<WordFamily, LaurentPoly<R>>,
}

impl<R: Coeff> Default for OperatorPolynomial<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coeff> OperatorPolynomial<R> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        OperatorMonomial::unit().into()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, m: OperatorMonomial<R>) {
        if m.coeff.is_zero() {
            return;
        }
        let words: WordFamily = m.words.into_iter().filter(|(_, w)| !w.is_empty()).collect();
        let slot = self.terms.entry(words.clone()).or_default();
        *slot += m.coeff;
        if slot.is_zero() {
            self.terms.remove(&words);
        }
    }

    pub fn monomials(&self) -> impl Iterator<Item = OperatorMonomial<R>> + '_ {
        self.terms.iter().map(|(w, c)| OperatorMonomial { coeff: c.clone(), words: w.clone() })
    }

    pub fn scale(&self, c: &LaurentPoly<R>) -> Self {
        let mut out = Self::zero();
        for m in self.monomials() {
            out.add_monomial(OperatorMonomial { coeff: &m.coeff * c, words: m.words });
        }
        out
    }

    /// Bilinear product, left operand's words first at every shared crossing.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (lw, lc) in &self.terms {
            for (rw, rc) in &other.terms {
                out.add_monomial(OperatorMonomial { coeff: lc * rc, words: concat_families(lw, rw) });
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for m in other.monomials() {
            out.add_monomial(m);
        }
        out
    }

    pub fn canonical(&self) -> CanonicalOperator<R> {
        let mut out = CanonicalOperator::zero();
        for m in self.monomials() {
            out.add_assign(&m.canonical());
        }
        out
    }

    pub fn evaluate(&self, n: u32) -> LaurentPoly<R> {
        self.monomials().map(|m| m.evaluate(n)).sum()
    }

    pub fn dump(&self) -> Vec<MonomialDump> {
        self.terms
            .iter()
            .map(|(w, c)| MonomialDump {
                coeff: c.to_string(),
                words: w
                    .iter()
                    .map(|(&j, cw)| WordDump { crossing: j, sign: cw.sign.value(), word: cw.to_string() })
                    .collect(),
            })
            .collect()
    }
}

impl<R: Coeff> From<OperatorMonomial<R>> for OperatorPolynomial<R> {
    fn from(m: OperatorMonomial<R>) -> Self {
        let mut p = Self::zero();
        p.add_monomial(m);
        p
    }
}

impl<R: Coeff> fmt::Display for OperatorPolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.monomials().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// JSON dump entry for one monomial.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct MonomialDump {
    pub coeff: String,
    pub words: Vec<WordDump>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WordDump {
    pub crossing: usize,
    pub sign: i64,
    pub word: String,
}

/// Sorted `(crossing, PBW exponents)` pairs, unit factors omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PbwKey(pub Vec<(u32, Pbw)>);

impl PbwKey {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn get(&self, crossing: usize) -> Option<&Pbw> {
        self.0
            .binary_search_by_key(&(crossing as u32), |(j, _)| *j)
            .ok()
            .map(|i| &self.0[i].1)
    }

    /// `self · other = q^shift · key`.
    pub fn mul(&self, other: &PbwKey) -> (i64, PbwKey) {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut shift = 0;
        let (mut i, mut k) = (0, 0);
        while i < a.len() && k < b.len() {
            match a[i].0.cmp(&b[k].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[k]);
                    k += 1;
                }
                std::cmp::Ordering::Equal => {
                    let (s, p) = a[i].1.mul(&b[k].1);
                    shift += s;
                    out.push((a[i].0, p));
                    i += 1;
                    k += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[k..]);
        (shift, PbwKey(out))
    }

    /// Number of walks in a stack with this key that start at bottom position
    /// `p`. The lowest crossing touching `p` is the first one every such path
    /// meets, and the letter taken there identifies the side it arrived from.
    pub fn bottom_usage(&self, braid: &BraidWord, p: usize) -> u32 {
        let Some(j) = (1..=braid.len()).rev().find(|&j| {
            let g = braid.crossing(j);
            g.index == p || g.index + 1 == p
        }) else {
            return 0;
        };
        let g = braid.crossing(j);
        let Some(pbw) = self.get(j) else { return 0 };
        Letter::ALL
            .iter()
            .filter(|&&l| g.origin_of(l) == p)
            .map(|&l| pbw.count(l))
            .sum()
    }
}

impl fmt::Display for PbwKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut words = WordFamily::new();
        for (j, p) in &self.0 {
            words.insert(*j as usize, p.to_word());
        }
        f.write_str(&family_text(&words))
    }
}

/// An operator in PBW normal form, tensored across crossings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalOperator<R: Coeff> {
    terms: BTreeMap<PbwKey, LaurentPoly<R>>,
}

impl<R: Coeff> Default for CanonicalOperator<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coeff> CanonicalOperator<R> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(PbwKey::unit(), LaurentPoly::one())
    }

    pub fn monomial(key: PbwKey, coeff: LaurentPoly<R>) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwKey, &LaurentPoly<R>)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: PbwKey, coeff: LaurentPoly<R>) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly<R>) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.terms {
            out.add_term(k.clone(), x * c);
        }
        out
    }

    /// Product, keeping only result monomials accepted by `keep`.
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&PbwKey) -> bool) -> Self {
        let mut out = Self::zero();
        for (lk, lc) in &self.terms {
            for (rk, rc) in &other.terms {
                let (shift, key) = lk.mul(rk);
                if keep(&key) {
                    out.add_term(key, (lc * rc).shift(shift));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, n: u32) -> LaurentPoly<R> {
        let mut cache: HashMap<Pbw, LaurentPoly<R>> = HashMap::new();
        let mut total = LaurentPoly::zero();
        for (key, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (_, pbw) in &key.0 {
                let e = cache.entry(*pbw).or_insert_with(|| eval_pbw(pbw, n));
                term = &term * e;
                if term.is_zero() {
                    break;
                }
            }
            total += term;
        }
        total
    }

    /// Converts back to raw words `b^s c^r a^d`.
    pub fn to_operator(&self) -> OperatorPolynomial<R> {
        let mut out = OperatorPolynomial::zero();
        for (k, c) in &self.terms {
            let words = k.0.iter().map(|(j, p)| (*j as usize, p.to_word())).collect();
            out.add_monomial(OperatorMonomial { coeff: c.clone(), words });
        }
        out
    }
}

impl<R: Coeff> Add for &CanonicalOperator<R> {
    type Output = CanonicalOperator<R>;
    fn add(self, rhs: Self) -> CanonicalOperator<R> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<R: Coeff> Neg for CanonicalOperator<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect() }
    }
}

impl<R: Coeff> Mul for &CanonicalOperator<R> {
    type Output = CanonicalOperator<R>;
    fn mul(self, rhs: Self) -> CanonicalOperator<R> {
        self.mul_filtered(rhs, |_| true)
    }
}

impl<R: Coeff> fmt::Display for CanonicalOperator<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c}) {k}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type P = LaurentPoly<i64>;

    fn mono(coeff_exp: i64, letters: &[(usize, Sign, Letter)]) -> OperatorMonomial<i64> {
        letters
            .iter()
            .fold(OperatorMonomial::unit(), |m, &(j, s, l)| m.mul(&OperatorMonomial::letter(j, s, l)))
            .with_coeff(P::q_pow(coeff_exp))
    }

    #[test]
    fn unit_is_two_sided() {
        let m: OperatorPolynomial<i64> = mono(2, &[(1, Sign::Pos, Letter::A), (1, Sign::Pos, Letter::C)]).into();
        assert_eq!(OperatorPolynomial::one().mul(&m), m);
        assert_eq!(m.mul(&OperatorPolynomial::one()), m);
    }

    #[test]
    fn square_expands_to_four_keys() {
        let a: OperatorPolynomial<i64> = mono(1, &[(1, Sign::Neg, Letter::A)]).into();
        let b: OperatorPolynomial<i64> = mono(0, &[(1, Sign::Neg, Letter::C)]).into();
        let s = a.add(&b);
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 4);
        // ac and ca merge after normal ordering.
        assert_eq!(sq.canonical().len(), 3);
    }

    #[test]
    fn raw_words_concatenate_in_order() {
        let l = mono(0, &[(4, Sign::Neg, Letter::B)]);
        let r = mono(0, &[(4, Sign::Neg, Letter::C), (1, Sign::Pos, Letter::C)]);
        let p = l.mul(&r);
        assert_eq!(p.words[&4].to_string(), "bc");
        assert_eq!(r.mul(&l).words[&4].to_string(), "cb");
    }

    fn arb_mono() -> impl Strategy<Value = OperatorMonomial<i64>> {
        (-3i64..4, proptest::collection::vec((1usize..4, 0usize..3), 0..6)).prop_map(|(e, ls)| {
            // Crossing signs fixed per index so that words stay consistent.
            let sign = |j: usize| if j.is_multiple_of(2) { Sign::Neg } else { Sign::Pos };
            let letters: Vec<_> = ls.into_iter().map(|(j, l)| (j, sign(j), Letter::ALL[l])).collect();
            mono(e, &letters)
        })
    }

    proptest! {
        #[test]
        fn canonical_mul_matches_raw(a in arb_mono(), b in arb_mono()) {
            let raw = a.mul(&b).canonical();
            let canon = &a.canonical() * &b.canonical();
            prop_assert_eq!(raw, canon);
        }

        #[test]
        fn evaluation_through_either_view(a in arb_mono(), n in 2u32..5) {
            let direct = a.evaluate(n);
            prop_assert_eq!(a.canonical().evaluate(n), direct.clone());
            prop_assert_eq!(a.canonical().to_operator().evaluate(n), direct);
        }
    }
}
