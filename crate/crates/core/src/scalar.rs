//! Exact rational scalars.
//!
//! All arithmetic in this crate happens over `Scalar`, an
//! arbitrary-precision rational number. `num_rational::BigRational`
//! already maintains the two invariants we rely on everywhere: the
//! fraction is kept in lowest terms and the denominator is positive.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Scalar = BigRational;

/// Integer-valued scalar.
pub fn from_int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a scalar as `p` or `p/q`, the form used in all reports.
pub fn render(s: &Scalar) -> String {
    if s.denom().is_one() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Smallest integer `>= s`.
pub fn ceil_int(s: &Scalar) -> BigInt {
    s.ceil().to_integer()
}

/// Clears denominators and the content of a rational vector, returning
/// a primitive integer vector spanning the same line. The zero vector
/// maps to the zero vector. The sign is normalized so that the first
/// nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Scalar]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for s in v {
        if !s.is_zero() {
            lcm = lcm.lcm(s.denom());
        }
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|s| s.numer() * (&lcm / s.denom()))
        .collect();
    let mut gcd = BigInt::zero();
    for n in &ints {
        gcd = gcd.gcd(n);
    }
    if gcd.is_zero() {
        return ints;
    }
    let first_negative = ints
        .iter()
        .find(|n| !n.is_zero())
        .map(|n| n.is_negative())
        .unwrap_or(false);
    if first_negative {
        gcd = -gcd;
    }
    for n in &mut ints {
        *n /= &gcd;
    }
    ints
}
