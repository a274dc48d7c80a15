//! The normalized colored Jones polynomial
//! `J'_K(N) = q^{(N-1)(ω-m+1)/2} Σ_n E_N(Cⁿ)`.

pub mod bracket;
pub mod closed_form;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::operator::CanonicalOperator;
use crate::qdet::c_qdet;
use crate::scalar::Coeff;
use crate::walks::{evaluate_series, walk_sum_c};

pub use bracket::bracket_jones_oracle;
pub use closed_form::{figure_eight_closed_form, qbinomial};

/// Which construction of `C` to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Sum over simple walks.
    Walks,
    /// Quantum determinants of `qρ'`.
    Qdet,
    /// Both, and insist they agree.
    #[default]
    Both,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "walks" => Ok(Method::Walks),
            "qdet" => Ok(Method::Qdet),
            "both" => Ok(Method::Both),
            other => Err(format!("unknown method {other:?} (expected walks, qdet or both)")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Walks => "walks",
            Method::Qdet => "qdet",
            Method::Both => "both",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct JonesResult<R: Coeff> {
    pub braid: BraidWord,
    #[serde(rename = "N")]
    pub color: u32,
    pub framing_exponent: i64,
    pub polynomial: LaurentPoly<R>,
    pub method: Method,
}

/// `(N-1)(ω-m+1)/2`; an integer for every knot closure.
pub fn framing_exponent(braid: &BraidWord, n: u32) -> i64 {
    let twice = (i64::from(n) - 1) * (braid.writhe() - braid.strands() as i64 + 1);
    assert!(twice % 2 == 0, "odd framing numerator for {braid}");
    twice / 2
}

/// The canonical `C` of the requested pipeline.
pub fn c_polynomial<R: Coeff>(braid: &BraidWord, method: Method) -> CanonicalOperator<R> {
    match method {
        Method::Walks | Method::Both => walk_sum_c::<R>(braid, true).canonical(),
        Method::Qdet => c_qdet::<R>(braid).canonical(),
    }
}

pub fn colored_jones<R: Coeff>(braid: &BraidWord, n: u32, method: Method) -> Result<JonesResult<R>> {
    braid.require_knot()?;
    if n < 2 {
        return Err(Error::ColorTooSmall(n));
    }
    let framing = framing_exponent(braid, n);
    let series = |m: Method| -> Result<LaurentPoly<R>> {
        if braid.is_empty() {
            return Ok(LaurentPoly::one());
        }
        evaluate_series(&c_polynomial::<R>(braid, m), braid, n)
    };
    let sum = match method {
        Method::Walks | Method::Qdet => series(method)?,
        Method::Both => {
            let walks = series(Method::Walks)?;
            let qdet = series(Method::Qdet)?;
            if walks != qdet {
                return Err(Error::PipelineMismatch {
                    walks: walks.shift(framing).to_string(),
                    qdet: qdet.shift(framing).to_string(),
                });
            }
            walks
        }
    };
    Ok(JonesResult { braid: braid.clone(), color: n, framing_exponent: framing, polynomial: sum.shift(framing), method })
}

/// The leading-coefficient window of a positive braid knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(bound(serialize = ""))]
pub struct PositiveBraidReport<R: Coeff> {
    #[serde(rename = "N")]
    pub color: u32,
    #[serde(rename = "L_N")]
    pub l_n: i64,
    pub lowest_degree: Option<i64>,
    /// Coefficients of `q^{L_N}, ..., q^{L_N+N-1}`.
    #[serde(serialize_with = "coeffs_as_json")]
    pub leading_coefficients: Vec<R>,
    pub verdict: bool,
}

/// Same convention as polynomial JSON: integers, or strings once past `i64`.
fn coeffs_as_json<R: Coeff, S: serde::Serializer>(coeffs: &[R], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(coeffs.len()))?;
    for c in coeffs {
        match c.to_i64() {
            Some(v) => seq.serialize_element(&v)?,
            None => seq.serialize_element(&c.to_string())?,
        }
    }
    seq.end()
}

/// `L_N = (N-1)(k-m+1)/2` with `k` the number of letters.
pub fn predicted_lowest_degree(braid: &BraidWord, n: u32) -> i64 {
    (i64::from(n) - 1) * (braid.len() as i64 - braid.strands() as i64 + 1) / 2
}

/// Checks that `J'(N)` starts `q^{L_N} + 0·q^{L_N+1} + ... + 0·q^{L_N+N-1}`.
pub fn positive_braid_report<R: Coeff>(braid: &BraidWord, n: u32, method: Method) -> Result<PositiveBraidReport<R>> {
    if let Some(j) = braid.letters().iter().position(|g| g.sign == crate::braid::Sign::Neg) {
        return Err(Error::NotPositive(j + 1));
    }
    let result = colored_jones::<R>(braid, n, method)?;
    Ok(report_for(braid, &result.polynomial, n))
}

pub fn report_for<R: Coeff>(braid: &BraidWord, poly: &LaurentPoly<R>, n: u32) -> PositiveBraidReport<R> {
    let l_n = predicted_lowest_degree(braid, n);
    let leading: Vec<R> = (0..i64::from(n)).map(|i| poly.coeff(l_n + i)).collect();
    let verdict = poly.low_degree() == Some(l_n)
        && leading[0].is_one()
        && leading[1..].iter().all(|c| c.is_zero());
    PositiveBraidReport { color: n, l_n, lowest_degree: poly.low_degree(), leading_coefficients: leading, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    fn braid(text: &str, m: usize) -> BraidWord {
        BraidWord::parse(text, m).unwrap()
    }

    #[test]
    fn figure_eight_n2() {
        let r = colored_jones::<i64>(&braid("1 -2 1 -2", 3), 2, Method::Both).unwrap();
        assert_eq!(r.polynomial.to_string(), "q^-2 - q^-1 + 1 - q + q^2");
        assert_eq!(r.framing_exponent, -1);
    }

    #[test]
    fn unknot_is_one() {
        for n in 2..6 {
            assert_eq!(colored_jones::<i64>(&braid("", 1), n, Method::Both).unwrap().polynomial, P::one());
            // Stabilized unknots as well.
            assert_eq!(colored_jones::<i64>(&braid("1", 2), n, Method::Both).unwrap().polynomial, P::one());
            assert_eq!(colored_jones::<i64>(&braid("-1 2", 3), n, Method::Both).unwrap().polynomial, P::one());
        }
    }

    #[test]
    fn trefoil_n2() {
        let r = colored_jones::<i64>(&braid("1 1 1", 2), 2, Method::Both).unwrap();
        assert_eq!(r.polynomial, "q + q^3 - q^4".parse().unwrap());
    }

    #[test]
    fn rejects_links_and_small_colors() {
        assert_eq!(
            colored_jones::<i64>(&braid("1 1", 2), 2, Method::Walks).unwrap_err(),
            Error::NotAKnot { components: 2 }
        );
        assert_eq!(colored_jones::<i64>(&braid("1", 2), 1, Method::Walks).unwrap_err(), Error::ColorTooSmall(1));
    }

    #[test]
    fn positive_reports() {
        let r = positive_braid_report::<i64>(&braid("1 1 1", 2), 3, Method::Both).unwrap();
        assert_eq!(r.l_n, 2);
        assert!(r.verdict, "{r:?}");
        let r = positive_braid_report::<i64>(&braid("1 2 1 2 1 2 1 2", 3), 2, Method::Walks).unwrap();
        assert_eq!(r.l_n, 3);
        assert!(r.verdict, "{r:?}");
        assert_eq!(
            positive_braid_report::<i64>(&braid("1 -2 1 -2", 3), 2, Method::Both).unwrap_err(),
            Error::NotPositive(2)
        );
    }

    #[test]
    fn report_detects_bad_window() {
        let b = braid("1 1 1", 2);
        let good: P = "q + q^3 - q^4".parse().unwrap();
        assert!(report_for(&b, &good, 2).verdict);
        let bad: P = "q + q^2".parse().unwrap();
        assert!(!report_for(&b, &bad, 2).verdict);
        let shifted: P = "q^2 + q^4".parse().unwrap();
        assert!(!report_for(&b, &shifted, 2).verdict);
    }

    #[test]
    fn bigint_agrees_with_i64() {
        use num_bigint::BigInt;
        let b = braid("1 -2 1 -2", 3);
        let small = colored_jones::<i64>(&b, 3, Method::Both).unwrap().polynomial;
        let big = colored_jones::<BigInt>(&b, 3, Method::Both).unwrap().polynomial;
        assert_eq!(small.map_coeffs(|c| BigInt::from(*c)), big);
    }

    #[test]
    fn json_result_schema() {
        let r = colored_jones::<i64>(&braid("1 -2 1 -2", 3), 2, Method::Both).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["N"], 2);
        assert_eq!(v["method"], "both");
        assert_eq!(v["framing_exponent"], -1);
        assert_eq!(v["braid"]["word"], serde_json::json!([1, -2, 1, -2]));
        assert_eq!(v["polynomial"]["-2"], 1);
    }
}
