//! Reference model of the crossing letters as q-difference operators.
//!
//! Used only to verify the normal-ordering and evaluation shortcuts. Letters
//! act on Laurent polynomials in `x, y, u` over `Z[q, q^-1]`:
//!
//! ```text
//! a+ = (û - ŷ τx⁻¹) τy⁻¹        b± = û²        c+ = x̂ τy⁻² τu⁻¹
//! a- = (τy - x̂⁻¹) τx⁻¹ τu                     c- = ŷ⁻¹ τx⁻¹ τu
//! ```
//!
//! where `x̂ f = x f` and `τx f(x, y, u) = f(qx, y, u)`.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CrossingWord, Letter};
use crate::braid::Sign;
use crate::laurent::LaurentPoly;
use crate::scalar::Coeff;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    U,
}

impl Var {
    fn slot(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::U => 2,
        }
    }
}

/// A generator of the q-difference algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    /// Multiply by `var^power`.
    Hat(Var, i64),
    /// `f(.., var, ..) -> f(.., q^power var, ..)`.
    Tau(Var, i64),
}

/// A Laurent polynomial in `x, y, u` with coefficients in `Z[q, q^-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriPoly<R: Coeff> {
    terms: BTreeMap<[i64; 3], LaurentPoly<R>>,
}

impl<R: Coeff> TriPoly<R> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(LaurentPoly::one(), [0, 0, 0])
    }

    pub fn term(coeff: LaurentPoly<R>, exps: [i64; 3]) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff);
        p
    }

    fn add_term(&mut self, exps: [i64; 3], coeff: LaurentPoly<R>) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly<R>) -> Self {
        let mut out = Self::zero();
        for (e, x) in &self.terms {
            out.add_term(*e, x * c);
        }
        out
    }

    pub fn apply_atom(&self, atom: Atom) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            match atom {
                Atom::Hat(v, p) => {
                    let mut e = *e;
                    e[v.slot()] += p;
                    out.add_term(e, c.clone());
                }
                Atom::Tau(v, p) => out.add_term(*e, c.clone().shift(p * e[v.slot()])),
            }
        }
        out
    }

    /// `x, y -> z`, `u -> 1`: the result as a map from `z`-exponent to coefficient.
    pub fn to_z(&self) -> BTreeMap<i64, LaurentPoly<R>> {
        let mut out: BTreeMap<i64, LaurentPoly<R>> = BTreeMap::new();
        for (e, c) in &self.terms {
            *out.entry(e[0] + e[1]).or_default() += c;
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// A linear combination of compositions of atoms; each composition applies its
/// rightmost atom first.
#[derive(Clone, Debug)]
pub struct QDiffOperator {
    pub terms: Vec<(i64, Vec<Atom>)>,
}

impl QDiffOperator {
    pub fn apply<R: Coeff>(&self, f: &TriPoly<R>) -> TriPoly<R> {
        let mut out = TriPoly::zero();
        for (c, atoms) in &self.terms {
            let g = atoms.iter().rev().fold(f.clone(), |g, &a| g.apply_atom(a));
            out = out.add(&g.scale(&LaurentPoly::from(R::from_i64(*c))));
        }
        out
    }
}

/// The defining q-difference operator of a letter at a crossing of sign `sign`.
pub fn letter_operator(sign: Sign, letter: Letter) -> QDiffOperator {
    use Atom::*;
    use Var::*;
    let terms = match (sign, letter) {
        (Sign::Pos, Letter::A) => vec![(1, vec![Hat(U, 1), Tau(Y, -1)]), (-1, vec![Hat(Y, 1), Tau(X, -1), Tau(Y, -1)])],
        (Sign::Neg, Letter::A) => vec![(1, vec![Tau(Y, 1), Tau(X, -1), Tau(U, 1)]), (-1, vec![Hat(X, -1), Tau(X, -1), Tau(U, 1)])],
        (_, Letter::B) => vec![(1, vec![Hat(U, 2)])],
        (Sign::Pos, Letter::C) => vec![(1, vec![Hat(X, 1), Tau(Y, -2), Tau(U, -1)])],
        (Sign::Neg, Letter::C) => vec![(1, vec![Hat(Y, -1), Tau(X, -1), Tau(U, 1)])],
    };
    QDiffOperator { terms }
}

/// Applies the word to `f`, rightmost letter first.
pub fn apply_word<R: Coeff>(w: &CrossingWord, f: &TriPoly<R>) -> TriPoly<R> {
    w.letters.iter().rev().fold(f.clone(), |g, &l| letter_operator(w.sign, l).apply(&g))
}

/// `E(w)` as a polynomial in `z` (coefficients in `Z[q, q^-1]`).
pub fn oracle_e<R: Coeff>(w: &CrossingWord) -> BTreeMap<i64, LaurentPoly<R>> {
    apply_word(w, &TriPoly::one()).to_z()
}

/// `E_N(w)`: act on 1, substitute `x, y -> z`, `u -> 1`, then `z -> q^{N-1}`.
pub fn oracle_apply<R: Coeff>(w: &CrossingWord, n: u32) -> LaurentPoly<R> {
    oracle_e::<R>(w)
        .into_iter()
        .map(|(ze, c)| c.shift(ze * (i64::from(n) - 1)))
        .sum()
}

/// `lhs = q^q_exp · rhs` between two-letter words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: [Letter; 2],
    pub q_exp: i64,
    pub rhs: [Letter; 2],
}

/// The three commutation relations at a crossing of sign `sign`.
pub fn relations(sign: Sign) -> [Relation; 3] {
    use Letter::*;
    let rel = |lhs, q_exp, rhs| Relation { lhs, q_exp, rhs };
    match sign {
        Sign::Pos => [rel([A, B], 0, [B, A]), rel([A, C], 1, [C, A]), rel([B, C], 2, [C, B])],
        Sign::Neg => [rel([A, B], 2, [B, A]), rel([C, A], 1, [A, C]), rel([C, B], 2, [B, C])],
    }
}

fn random_tripoly<R: Coeff>(rng: &mut ChaCha8Rng) -> TriPoly<R> {
    let mut p = TriPoly::zero();
    for _ in 0..rng.gen_range(1..6) {
        let exps = [rng.gen_range(-3..4), rng.gen_range(-3..4), rng.gen_range(-3..4)];
        let coeff = LaurentPoly::monomial(R::from_i64(rng.gen_range(-4..5)), rng.gen_range(-3..4));
        p.add_term(exps, coeff);
    }
    p
}

/// Checks each relation on a seeded basket of random polynomials.
pub fn relation_oracle_check_with<R: Coeff>(sign: Sign, rels: &[Relation], seed: u64) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basket: Vec<TriPoly<R>> = (0..16).map(|_| random_tripoly(&mut rng)).collect();
    rels.iter().all(|rel| {
        let lhs = CrossingWord::new(sign, rel.lhs.to_vec());
        let rhs = CrossingWord::new(sign, rel.rhs.to_vec());
        let q = LaurentPoly::q_pow(rel.q_exp);
        basket.iter().all(|f| apply_word(&lhs, f) == apply_word(&rhs, f).scale(&q))
    })
}

/// True iff all three relations for `sign` hold under the operator model.
pub fn relation_oracle_check(sign: Sign) -> bool {
    relation_oracle_check_with::<i64>(sign, &relations(sign), 0x5eed)
}
