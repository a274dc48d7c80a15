//! Quantum-determinant route to `C`.
//!
//! Each letter `σ_l^±` of the braid becomes the identity matrix with the
//! block at rows/columns `(l, l+1)` replaced by
//!
//! ```text
//! S+ = | a+  b+ |        S- = | 0   c- |
//!      | c+  0  |             | b-  a- |
//! ```
//!
//! and `ρ` is their product in word order. Then
//! `C = Σ_{∅≠J⊆{2..m}} (-1)^{|J|-1} det_q((qρ)_J)`.

use serde::Serialize;

use crate::braid::{BraidWord, Generator, Sign};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::operator::{MonomialDump, OperatorMonomial, OperatorPolynomial};
use crate::qops::Letter;
use crate::scalar::Coeff;

/// A square matrix of operator polynomials, indexed from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix<R: Coeff> {
    dim: usize,
    entries: Vec<OperatorPolynomial<R>>,
}

impl<R: Coeff> OperatorMatrix<R> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![OperatorPolynomial::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 1..=dim {
            m.set(i, i, OperatorPolynomial::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &OperatorPolynomial<R> {
        &self.entries[(row - 1) * self.dim + (col - 1)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: OperatorPolynomial<R>) {
        self.entries[(row - 1) * self.dim + (col - 1)] = value;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = OperatorPolynomial::zero();
                for l in 1..=n {
                    let (a, b) = (self.get(i, l), other.get(l, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly<R>) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    /// The `J × J` submatrix; `indices` ascending and 1-based.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        let mut out = Self::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.set(a + 1, b + 1, self.get(i, j).clone());
            }
        }
        out
    }

    /// Drops the first row and column.
    pub fn minor_first(&self) -> Self {
        self.submatrix(&(2..=self.dim).collect::<Vec<_>>())
    }

    pub fn dump(&self) -> Vec<Vec<Vec<MonomialDump>>> {
        (1..=self.dim).map(|i| (1..=self.dim).map(|j| self.get(i, j).dump()).collect()).collect()
    }
}

/// `σ_l^±` at crossing `j` as an `m × m` operator matrix.
pub fn local_matrix<R: Coeff>(crossing: usize, generator: Generator, strands: usize) -> Result<OperatorMatrix<R>> {
    let l = generator.index;
    if l < 1 || l >= strands {
        return Err(Error::GeneratorOutOfRange { generator: l, strands });
    }
    let sign = generator.sign;
    let letter = |x| OperatorMonomial::letter(crossing, sign, x).into();
    let mut m = OperatorMatrix::identity(strands);
    let block: [[Option<Letter>; 2]; 2] = match sign {
        Sign::Pos => [[Some(Letter::A), Some(Letter::B)], [Some(Letter::C), None]],
        Sign::Neg => [[None, Some(Letter::C)], [Some(Letter::B), Some(Letter::A)]],
    };
    for (di, row) in block.iter().enumerate() {
        for (dj, entry) in row.iter().enumerate() {
            let value = entry.map_or_else(OperatorPolynomial::zero, letter);
            m.set(l + di, l + dj, value);
        }
    }
    Ok(m)
}

/// `ρ(γ)`, the product of the local matrices with the first letter leftmost.
pub fn rho<R: Coeff>(braid: &BraidWord) -> OperatorMatrix<R> {
    let m = braid.strands();
    (1..=braid.len()).fold(OperatorMatrix::identity(m), |acc, j| {
        let local = local_matrix(j, braid.crossing(j), m).expect("validated braid");
        acc.mul(&local)
    })
}

/// `ρ'(γ)`: `ρ` without its first row and column.
pub fn rho_prime<R: Coeff>(braid: &BraidWord) -> OperatorMatrix<R> {
    rho(braid).minor_first()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
}

/// `Σ_π (-q)^{inv π} a_{π1,1} a_{π2,2} ⋯ a_{πn,n}`, factors multiplied left to right.
pub fn det_q<R: Coeff>(a: &OperatorMatrix<R>) -> OperatorPolynomial<R> {
    let n = a.dim();
    let mut out = OperatorPolynomial::zero();
    'perm: for p in permutations(n) {
        let mut term = OperatorPolynomial::one();
        for (col, &row) in p.iter().enumerate() {
            let e = a.get(row + 1, col + 1);
            if e.is_zero() {
                continue 'perm;
            }
            term = term.mul(e);
        }
        let inv = inversions(&p) as i64;
        let sign = if inv % 2 == 0 { R::one() } else { -R::one() };
        out = out.add(&term.scale(&LaurentPoly::monomial(sign, inv)));
    }
    out
}

/// `C = Σ_{∅≠J⊆{2..m}} (-1)^{|J|-1} det_q((qρ)_J)`.
pub fn c_qdet<R: Coeff>(braid: &BraidWord) -> OperatorPolynomial<R> {
    let m = braid.strands();
    let mut out = OperatorPolynomial::zero();
    if m < 2 {
        return out;
    }
    let scaled = rho::<R>(braid).scale(&LaurentPoly::q_pow(1));
    for mask in 1u32..(1 << (m - 1)) {
        let j: Vec<usize> = (2..=m).filter(|i| mask & (1 << (i - 2)) != 0).collect();
        let sign = if j.len() % 2 == 1 { R::one() } else { -R::one() };
        let d = det_q(&scaled.submatrix(&j));
        out = out.add(&d.scale(&LaurentPoly::from(sign)));
    }
    out
}

/// Whether `(a b; c d)` satisfies `ac = q ca`, `bd = q db`, `ad = da + q cb - q⁻¹ bc`
/// as canonical operators.
pub fn is_right_quantum_2x2<R: Coeff>(
    a: &OperatorPolynomial<R>,
    b: &OperatorPolynomial<R>,
    c: &OperatorPolynomial<R>,
    d: &OperatorPolynomial<R>,
) -> bool {
    let q = LaurentPoly::q_pow(1);
    let qi = LaurentPoly::q_pow(-1);
    let first = a.mul(c).canonical() == c.mul(a).canonical().scale(&q);
    let second = b.mul(d).canonical() == d.mul(b).canonical().scale(&q);
    let rhs = d.mul(a).add(&c.mul(b).scale(&q)).add(&b.mul(c).scale(&-qi));
    let third = a.mul(d).canonical() == rhs.canonical();
    first && second && third
}

/// Every 2×2 submatrix is right-quantum.
pub fn is_right_quantum<R: Coeff>(m: &OperatorMatrix<R>) -> bool {
    let n = m.dim();
    for i in 1..=n {
        for i2 in i + 1..=n {
            for j in 1..=n {
                for j2 in j + 1..=n {
                    if !is_right_quantum_2x2(m.get(i, j), m.get(i, j2), m.get(i2, j), m.get(i2, j2)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn right_quantum_check(braid: &BraidWord) -> bool {
    is_right_quantum(&rho::<i64>(braid))
}

/// JSON view of a matrix: rows of entries, each entry a list of monomials.
#[derive(Clone, Debug, Serialize)]
pub struct MatrixDump {
    pub dim: usize,
    pub rows: Vec<Vec<Vec<MonomialDump>>>,
}

impl<R: Coeff> From<&OperatorMatrix<R>> for MatrixDump {
    fn from(m: &OperatorMatrix<R>) -> Self {
        MatrixDump { dim: m.dim(), rows: m.dump() }
    }
}
