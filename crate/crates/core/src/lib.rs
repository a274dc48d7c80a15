//! Exact colored Jones polynomials of braid closures.
//!
//! Two independent constructions of the operator polynomial `C` are provided:
//! a sum over walks along the braid ([`walks`]) and a sum of quantum
//! determinants of a deformed Burau matrix ([`qdet`]). Either one feeds the
//! series `J'_K(N) = q^{(N-1)(ω-m+1)/2} Σ_n E_N(Cⁿ)` assembled in [`jones`].
//!
//! All arithmetic is exact. Polynomials are generic over an integer
//! coefficient ring ([`Coeff`]); the aliases below fix the common choices.

pub mod braid;
pub mod corpus;
pub mod error;
pub mod jones;
pub mod laurent;
pub mod operator;
pub mod qdet;
pub mod qops;
pub mod scalar;
pub mod walks;

pub use braid::{BraidWord, DiagramCell, Generator, Permutation, Sign};
pub use error::{Error, Result};
pub use jones::{colored_jones, positive_braid_report, JonesResult, Method, PositiveBraidReport};
pub use laurent::LaurentPoly;
pub use operator::{CanonicalOperator, OperatorMonomial, OperatorPolynomial, PbwKey};
pub use qops::{CrossingWord, Letter, NormalForm, Pbw};
pub use scalar::Coeff;

/// Laurent polynomial over `i64`.
pub type Poly = LaurentPoly<i64>;
/// Laurent polynomial over arbitrary-precision integers.
pub type BigPoly = LaurentPoly<num_bigint::BigInt>;
pub type Operator = OperatorPolynomial<i64>;
pub type Canonical = CanonicalOperator<i64>;
