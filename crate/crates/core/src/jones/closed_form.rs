//! Gaussian binomials and the double-sum formula for the figure-eight knot.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Coeff;

/// `(n k)_q = ∏_{i<k} (1 - q^{n-i}) / (1 - q^{i+1})`, by exact division.
pub fn qbinomial<R: Coeff>(n: i64, k: i64) -> Result<LaurentPoly<R>> {
    if k < 0 || k > n {
        return Err(Error::BinomialRange { n, k });
    }
    let num: LaurentPoly<R> = (0..k).map(|i| LaurentPoly::one_minus_q_pow(n - i)).product();
    let den: LaurentPoly<R> = (0..k).map(|i| LaurentPoly::one_minus_q_pow(i + 1)).product();
    Ok(num.div_exact(&den).expect("Gaussian binomials are polynomials"))
}

/// `q^{1-N} Σ_{n<N} Σ_{k≤n} (n k)_q q^{n+k(k+1)} ∏_{j=1}^{n}(1-q^{j-N}) ∏_{i=1}^{n-k}(1-q^{k+i-N})`.
pub fn figure_eight_closed_form<R: Coeff>(color: u32) -> LaurentPoly<R> {
    let big_n = i64::from(color);
    let mut total = LaurentPoly::zero();
    for n in 0..big_n {
        let outer: LaurentPoly<R> = (1..=n).map(|j| LaurentPoly::one_minus_q_pow(j - big_n)).product();
        for k in 0..=n {
            let inner: LaurentPoly<R> = (1..=n - k).map(|i| LaurentPoly::one_minus_q_pow(k + i - big_n)).product();
            let term = qbinomial::<R>(n, k).unwrap() * LaurentPoly::q_pow(n + k * (k + 1)) * outer.clone() * inner;
            total += term;
        }
    }
    total.shift(1 - big_n)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    #[test]
    fn binomial_examples() {
        for n in 0..6 {
            assert_eq!(qbinomial::<i64>(n, 0).unwrap(), P::one());
            for k in 0..=n {
                assert_eq!(qbinomial::<i64>(n, k).unwrap(), qbinomial::<i64>(n, n - k).unwrap());
            }
        }
        assert_eq!(qbinomial::<i64>(2, 1).unwrap(), "1 + q".parse().unwrap());
        assert_eq!(qbinomial::<i64>(4, 2).unwrap(), "1 + q + 2q^2 + q^3 + q^4".parse().unwrap());
        assert!(qbinomial::<i64>(2, 3).is_err());
        assert!(qbinomial::<i64>(2, -1).is_err());
    }

    #[test]
    fn binomial_at_q_one_is_ordinary() {
        let sum_at_one = |p: &P| p.terms().map(|(_, c)| *c).sum::<i64>();
        for n in 0..9i64 {
            let mut ordinary = 1i64;
            for k in 0..=n {
                assert_eq!(sum_at_one(&qbinomial(n, k).unwrap()), ordinary);
                ordinary = ordinary * (n - k) / (k + 1);
            }
        }
    }

    #[test]
    fn pascal_recurrence() {
        // (n k) = (n-1 k-1) + q^k (n-1 k)
        for n in 1..8 {
            for k in 1..n {
                let lhs = qbinomial::<i64>(n, k).unwrap();
                let rhs = qbinomial::<i64>(n - 1, k - 1).unwrap() + qbinomial::<i64>(n - 1, k).unwrap().shift(k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn figure_eight_n2() {
        assert_eq!(figure_eight_closed_form::<i64>(2).to_string(), "q^-2 - q^-1 + 1 - q + q^2");
    }
}
