//! Exact rational arithmetic and the Pochhammer/binomial primitives.
//!
//! Everything here is arbitrary-precision and canonical: `Rational` values
//! always carry a positive denominator and gcd-reduced numerator, and no
//! operation ever rounds. The rising factorial
//!
//! ```text
//! (x)^(n) = x (x+1) ... (x+n-1),    (x)^(0) = 1
//! ```
//!
//! is the primitive every identity in this crate is built from; the falling
//! factorial, the extended binomial symbol C(alpha, n) = falling(alpha, n)/n!
//! and the gamma ratio Gamma(x+n)/Gamma(x) are thin derivations of it.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar. `num_rational::BigRational` keeps the
/// canonical form (positive denominator, reduced) after every operation.
pub type Rational = num_rational::BigRational;

/// Integer as a `Rational`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a reduced `Rational`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `p`, `-p/q` or `p/q` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let mk_err = || Error::Parse(format!("invalid rational literal `{s}`"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| mk_err())?;
        let den: BigInt = den.trim().parse().map_err(|_| mk_err())?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        Ok(Rational::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|_| mk_err())?;
        Ok(Rational::from_integer(num))
    }
}

/// Nearest f64 to an exact rational.
pub fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// True iff `x` is an integer `<= 0`.
pub fn is_nonpos_int(x: &Rational) -> bool {
    x.is_integer() && !x.numer().is_positive()
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n as u64 {
        acc *= k;
    }
    acc
}

/// Ordinary binomial coefficient C(n, k); zero when k > n.
pub fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Rising factorial (x)^(n) = x (x+1) ... (x+n-1), exact.
pub fn rising(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..n as i64 {
        acc *= x + int(j);
    }
    acc
}

/// Falling factorial (a)_(n) = a (a-1) ... (a-n+1), exact.
pub fn falling(a: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..n as i64 {
        acc *= a - int(j);
    }
    acc
}

/// Extended binomial symbol C(alpha, n) = falling(alpha, n) / n!.
pub fn binom_ext(alpha: &Rational, n: u32) -> Rational {
    falling(alpha, n) / Rational::from_integer(factorial(n))
}

/// Gamma(x+n)/Gamma(x), computed exactly as rising(x, n).
///
/// Exists to make the gamma-ratio form of the rising factorial explicit and
/// testable without evaluating Gamma itself. Errors when x is a pole of
/// Gamma (a non-positive integer), where the ratio is not defined even
/// though the plain product may be.
pub fn gamma_ratio(x: &Rational, n: u32) -> Result<Rational> {
    if is_nonpos_int(x) {
        return Err(Error::Pole(format!("gamma ratio at non-positive integer x = {x}")));
    }
    Ok(rising(x, n))
}

/// A rising-factorial value bundled with the base and order it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct PochhammerValue {
    pub value: Rational,
    pub base: Rational,
    pub order: u32,
}

impl PochhammerValue {
    pub fn rising(base: Rational, order: u32) -> Self {
        let value = rising(&base, order);
        PochhammerValue { value, base, order }
    }
}
