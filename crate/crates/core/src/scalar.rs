//! Coefficient ring abstraction.
//!
//! Every polynomial in this crate has coefficients in an exact integer ring.
//! `i64` is the fast default; `i128` and `BigInt` trade speed for headroom.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// An exact integer coefficient type.
pub trait Coeff:
    Clone + Debug + Display + Eq + Ord + Integer + Signed + ToPrimitive + From<i32> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
}

impl Coeff for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}
