//! Jacobi polynomials in two normalizations, their coefficient families,
//! basis conversions, symmetries, special values and norms.
//!
//! The K family is orthogonal on [0,1] with respect to the Beta density
//! x^(a-1) (1-x)^(b-1) / B(a,b); the J family is its affine image on
//! [-1,1]. Both are given by explicit coefficients in powers of (x-1):
//!
//! ```text
//! K_n(x|a,b) = (1/n!) sum_m C(n,m) (a+b+n-1)^(m) (b+m)^(n-m) (x-1)^m
//! J_n(x|a,b) = same with (x-1)^m / 2^m
//! ```
//!
//! so J_n(2x-1|a,b) = K_n(x|a,b). The connection coefficients e_{n,m}
//! (polynomial -> powers) and their inverses ~e_{n,m} (powers ->
//! polynomials) are exact rational functions of (a, b).
//!
//! Exact evaluation goes through these coefficient formulas directly. The
//! floating path `k_poly_f` instead uses the classical three-term
//! recurrence: direct coefficient summation loses about 0.3 n decimal
//! digits to cancellation for x inside (0,1), which is unusable past
//! n ~ 25 in f64, while the recurrence is stable.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, binom, factorial, int, rising, Rational};
use crate::hypergeom::{pfq_exact_partial, PfqSpec};

/// Which normalization a basis uses: J on [-1,1] or K on [0,1].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    J,
    K,
}

/// A Jacobi basis: the (a, b) parameter pair plus variant tag.
///
/// Evaluation and coefficient formulas are defined for all rational (a, b);
/// orthogonality statements (norms, integrals) additionally need a, b > 0.
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiBasis {
    pub a: Rational,
    pub b: Rational,
    pub variant: Variant,
}

/// A polynomial stored as coefficients of powers of (x-1):
/// p(x) = sum_m coeffs[m] (x-1)^m.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyXm1 {
    pub coeffs: Vec<Rational>,
}

impl PolyXm1 {
    pub fn constant(c: Rational) -> Self {
        PolyXm1 { coeffs: vec![c] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation in the (x-1) variable.
    pub fn eval(&self, x: &Rational) -> Rational {
        let u = x - int(1);
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &u + c;
        }
        acc
    }

    /// Product of two polynomials (convolution of coefficients).
    pub fn mul(&self, other: &PolyXm1) -> PolyXm1 {
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyXm1 { coeffs }
    }

    /// Coefficients in the monomial basis: p(x) = sum_k out[k] x^k,
    /// via (x-1)^m = sum_k C(m,k) (-1)^(m-k) x^k.
    pub fn to_monomial(&self) -> Vec<Rational> {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (m, c) in self.coeffs.iter().enumerate() {
            for k in 0..=m {
                let sign = if (m - k) % 2 == 0 { 1 } else { -1 };
                out[k] += c * Rational::from_integer(binom(m as u32, k as u32) * sign);
            }
        }
        out
    }
}

/// x^t expressed in powers of (x-1): sum_i C(t,i) (x-1)^i.
pub fn pow_x_in_xm1(t: u32) -> PolyXm1 {
    let coeffs = (0..=t).map(|i| Rational::from_integer(binom(t, i))).collect();
    PolyXm1 { coeffs }
}

/// Connection coefficient e_{n,m}(a,b) = C(n,m) (a+b+n-1)^(m) (b+m)^(n-m) / n!.
pub fn e_coeff(n: u32, m: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    if m > n {
        return Err(Error::Index(format!("e_coeff index m = {m} > n = {n}")));
    }
    let ab = a + b;
    Ok(Rational::from_integer(binom(n, m))
        * rising(&(&ab + int(n as i64 - 1)), m)
        * rising(&(b + int(m as i64)), n - m)
        / Rational::from_integer(factorial(n)))
}

fn etilde_guard(n: u32, m: u32, a: &Rational, b: &Rational) -> Result<()> {
    let ab = a + b;
    let d1 = rising(&(&ab + int(m as i64 - 1)), m) * rising(&(&ab + int(2 * m as i64)), n - m);
    let d2 = rising(&(&ab + int(m as i64 - 1)), n + 1);
    if d1.is_zero() || d2.is_zero() {
        return Err(Error::DomainViolation(format!(
            "inverse connection coefficient pole at a+b = {ab}, n = {n}, m = {m}"
        )));
    }
    Ok(())
}

/// Inverse connection coefficient ~e_{n,m}(a,b), first closed form:
/// (-1)^(n-m) n! (b+m)^(n-m) / [ (n-m)! (a+b+m-1)^(m) (a+b+2m)^(n-m) ].
pub fn etilde_coeff(n: u32, m: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    if m > n {
        return Err(Error::Index(format!("etilde_coeff index m = {m} > n = {n}")));
    }
    etilde_guard(n, m, a, b)?;
    let ab = a + b;
    let sign = if (n - m) % 2 == 0 { 1 } else { -1 };
    Ok(Rational::from_integer(factorial(n) * sign)
        * rising(&(b + int(m as i64)), n - m)
        / (Rational::from_integer(factorial(n - m))
            * rising(&(&ab + int(m as i64 - 1)), m)
            * rising(&(&ab + int(2 * m as i64)), n - m)))
}

/// Second closed form of ~e_{n,m}(a,b):
/// (-1)^(n-m) n! (b+m)^(n-m) (a+b+2m-1) / [ (n-m)! (a+b+m-1)^(n+1) ].
/// Equal to `etilde_coeff` wherever both are defined.
pub fn etilde_coeff_alt(n: u32, m: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    if m > n {
        return Err(Error::Index(format!("etilde_coeff_alt index m = {m} > n = {n}")));
    }
    etilde_guard(n, m, a, b)?;
    let ab = a + b;
    let sign = if (n - m) % 2 == 0 { 1 } else { -1 };
    Ok(Rational::from_integer(factorial(n) * sign)
        * rising(&(b + int(m as i64)), n - m)
        * (&ab + int(2 * m as i64 - 1))
        / (Rational::from_integer(factorial(n - m)) * rising(&(&ab + int(m as i64 - 1)), n + 1)))
}

/// K_n(x|a,b) as coefficients of (x-1)^m.
pub fn k_poly(n: u32, a: &Rational, b: &Rational) -> PolyXm1 {
    let coeffs = (0..=n).map(|m| e_coeff(n, m, a, b).expect("m <= n")).collect();
    PolyXm1 { coeffs }
}

/// J_n(x|a,b) as coefficients of (x-1)^m (each carrying the extra 1/2^m).
pub fn j_poly(n: u32, a: &Rational, b: &Rational) -> PolyXm1 {
    let mut p = k_poly(n, a, b);
    let mut pow2 = Rational::one();
    let half = exact::rat(1, 2);
    for c in p.coeffs.iter_mut() {
        *c *= &pow2;
        pow2 *= &half;
    }
    p
}

/// Exact evaluation of K_n(x|a,b).
pub fn eval_k(n: u32, a: &Rational, b: &Rational, x: &Rational) -> Rational {
    k_poly(n, a, b).eval(x)
}

/// Exact evaluation of J_n(x|a,b).
pub fn eval_j(n: u32, a: &Rational, b: &Rational, x: &Rational) -> Rational {
    j_poly(n, a, b).eval(x)
}

/// Coefficients [~e_{n,0}, ..., ~e_{n,n}] expanding (x-1)^n in the K basis
/// (or (x-1)^n / 2^n in the J basis; the coefficients are shared).
pub fn monomial_to_jacobi(n: u32, a: &Rational, b: &Rational) -> Result<Vec<Rational>> {
    (0..=n).map(|m| etilde_coeff(n, m, a, b)).collect()
}

/// Coefficient of x^n in K_n(x|a,b); equals (a+b+n-1)^(n) / n! by expanding
/// the (x-1)-power form (only the top power contributes to x^n).
pub fn leading_coeff_k(n: u32, a: &Rational, b: &Rational) -> Rational {
    e_coeff(n, n, a, b).expect("m = n")
}

/// Squared norm of K_n against the Beta density on [0,1]:
/// (a)^(n) (b)^(n) / [ n! (a+b+2n-1) (a+b)^(n-1) ], for a, b > 0.
pub fn norm_sq_k(n: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::DomainViolation(format!(
            "norm_sq_k needs a, b > 0, got a = {a}, b = {b}"
        )));
    }
    if n == 0 {
        return Ok(Rational::one());
    }
    let ab = a + b;
    Ok(rising(a, n) * rising(b, n)
        / (Rational::from_integer(factorial(n))
            * (&ab + int(2 * n as i64 - 1))
            * rising(&ab, n - 1)))
}

/// Verdicts for the three reflection/argument symmetries at a point:
/// (-1)^n J_n(-x|a,b) = J_n(x|b,a);
/// J_n(2x-1|a,b) = K_n(x|a,b);
/// (-1)^n K_n(x|a,b) = K_n(1-x|b,a).
pub fn symmetry_check(n: u32, a: &Rational, b: &Rational, x: &Rational) -> (bool, bool, bool) {
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    let s1 = &sign * eval_j(n, a, b, &(-x.clone())) == eval_j(n, b, a, x);
    let s2 = eval_j(n, a, b, &(int(2) * x - int(1))) == eval_k(n, a, b, x);
    let s3 = sign * eval_k(n, a, b, x) == eval_k(n, b, a, &(int(1) - x));
    (s1, s2, s3)
}

/// K_n via the terminating hypergeometric representation
/// (a)^(n)/n! 2F1(-n, a+b+n-1; a; x) = (-1)^n K_n(x|a,b), exact.
pub fn k_via_2f1(n: u32, a: &Rational, b: &Rational, x: &Rational) -> Result<Rational> {
    if rising(a, n).is_zero() {
        return Err(Error::DomainViolation(format!(
            "2F1 route pole: (a)^({n}) = 0 at a = {a}"
        )));
    }
    let spec = PfqSpec::new(
        vec![int(-(n as i64)), a + b + int(n as i64 - 1)],
        vec![a.clone()],
    );
    let f = pfq_exact_partial(&spec, x, n)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    Ok(rising(a, n) * f * int(sign) / Rational::from_integer(factorial(n)))
}

/// K_n via the reflected representation
/// (b)^(n)/n! 2F1(-n, a+b+n-1; b; 1-x) = K_n(x|a,b), exact.
pub fn k_via_2f1_fk1(n: u32, a: &Rational, b: &Rational, x: &Rational) -> Result<Rational> {
    if rising(b, n).is_zero() {
        return Err(Error::DomainViolation(format!(
            "2F1 route pole: (b)^({n}) = 0 at b = {b}"
        )));
    }
    let spec = PfqSpec::new(
        vec![int(-(n as i64)), a + b + int(n as i64 - 1)],
        vec![b.clone()],
    );
    let f = pfq_exact_partial(&spec, &(int(1) - x), n)?;
    Ok(rising(b, n) * f / Rational::from_integer(factorial(n)))
}

/// J_n via (b)^(n)/n! 2F1(-n, a+b+n-1; b; (1-x)/2) = J_n(x|a,b), exact.
pub fn j_via_2f1(n: u32, a: &Rational, b: &Rational, x: &Rational) -> Result<Rational> {
    if rising(b, n).is_zero() {
        return Err(Error::DomainViolation(format!(
            "2F1 route pole: (b)^({n}) = 0 at b = {b}"
        )));
    }
    let spec = PfqSpec::new(
        vec![int(-(n as i64)), a + b + int(n as i64 - 1)],
        vec![b.clone()],
    );
    let arg = (int(1) - x) / int(2);
    let f = pfq_exact_partial(&spec, &arg, n)?;
    Ok(rising(b, n) * f / Rational::from_integer(factorial(n)))
}

/// Floating K_n(x|a,b) by the classical Jacobi three-term recurrence
/// (K_n(x|a,b) is the classical P_n^{(b-1,a-1)} at 2x-1). Stable for n in
/// the hundreds where the coefficient form has already lost all precision.
pub fn k_poly_f(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let al = b - 1.0;
    let be = a - 1.0;
    let y = 2.0 * x - 1.0;
    if n == 0 {
        return 1.0;
    }
    let mut p0 = 1.0;
    let mut p1 = (al + 1.0) + (al + be + 2.0) * (y - 1.0) / 2.0;
    for k in 1..n {
        let k = k as f64;
        let c1 = 2.0 * (k + 1.0) * (k + al + be + 1.0) * (2.0 * k + al + be);
        let c2 = (2.0 * k + al + be + 1.0) * (al * al - be * be);
        let c3 = (2.0 * k + al + be) * (2.0 * k + al + be + 1.0) * (2.0 * k + al + be + 2.0);
        let c4 = 2.0 * (k + al) * (k + be) * (2.0 * k + al + be + 2.0);
        let p2 = ((c2 + c3 * y) * p1 - c4 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Floating J_n(x|a,b) = K_n((1+x)/2 | a,b).
pub fn j_poly_f(n: u32, a: f64, b: f64, x: f64) -> f64 {
    k_poly_f(n, a, b, (1.0 + x) / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn e_coeff_small() {
        let (a, b) = (rat(5, 3), rat(-7, 4));
        assert_eq!(e_coeff(1, 0, &a, &b).unwrap(), b.clone());
        assert_eq!(e_coeff(1, 1, &a, &b).unwrap(), &a + &b);
        assert_eq!(e_coeff(0, 0, &a, &b).unwrap(), int(1));
        assert!(matches!(e_coeff(1, 2, &a, &b), Err(Error::Index(_))));
    }

    #[test]
    fn etilde_small() {
        let (a, b) = (rat(5, 3), rat(3, 4));
        let ab = &a + &b;
        assert_eq!(etilde_coeff(0, 0, &a, &b).unwrap(), int(1));
        // ~e_{1,0} = -b/(a+b), both closed forms
        assert_eq!(etilde_coeff(1, 0, &a, &b).unwrap(), -b.clone() / &ab);
        assert_eq!(etilde_coeff_alt(1, 0, &a, &b).unwrap(), -b.clone() / &ab);
        // ~e_{n,n} = n!/(a+b+n-1)^(n)
        for n in 1..6u32 {
            let expect = Rational::from_integer(factorial(n))
                / rising(&(&ab + int(n as i64 - 1)), n);
            assert_eq!(etilde_coeff(n, n, &a, &b).unwrap(), expect);
        }
        // ~e_{1,1} = 1/(a+b)
        assert_eq!(etilde_coeff(1, 1, &a, &b).unwrap(), int(1) / &ab);
        // pole guard
        assert!(matches!(
            etilde_coeff(2, 0, &int(1), &int(-1)),
            Err(Error::DomainViolation(_))
        ));
    }

    #[test]
    fn k_poly_degree_one() {
        // K_1(x|a,b) = b + (a+b)(x-1) = (a+b)x - a
        let (a, b) = (rat(1, 2), rat(7, 5));
        let p = k_poly(1, &a, &b);
        assert_eq!(p.coeffs, vec![b.clone(), &a + &b]);
        let mono = p.to_monomial();
        assert_eq!(mono, vec![-a.clone(), &a + &b]);
        assert_eq!(eval_k(1, &int(1), &int(1), &rat(1, 2)), int(0));
    }

    #[test]
    fn special_values_k01() {
        for n in 0..=12u32 {
            let (a, b) = (rat(7, 3), rat(2, 5));
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let at0 = rising(&a, n) * int(sign) / Rational::from_integer(factorial(n));
            let at1 = rising(&b, n) / Rational::from_integer(factorial(n));
            assert_eq!(eval_k(n, &a, &b, &int(0)), at0);
            assert_eq!(eval_k(n, &a, &b, &int(1)), at1);
        }
        // eval_k(3, a=2, b=5, x=0) = -(2*3*4)/6 = -4
        assert_eq!(eval_k(3, &int(2), &int(5), &int(0)), int(-4));
    }

    #[test]
    fn roundtrip_monomial_jacobi() {
        // (x-1)^n = sum_m ~e_{n,m} K_m exactly, by polynomial algebra
        let (a, b) = (rat(1, 2), int(3));
        for n in 0..=6u32 {
            let etil = monomial_to_jacobi(n, &a, &b).unwrap();
            let mut acc = vec![Rational::zero(); n as usize + 1];
            for (m, w) in etil.iter().enumerate() {
                let km = k_poly(m as u32, &a, &b);
                for (i, c) in km.coeffs.iter().enumerate() {
                    acc[i] += w * c;
                }
            }
            for (i, c) in acc.iter().enumerate() {
                let expect = if i == n as usize { int(1) } else { int(0) };
                assert_eq!(*c, expect, "n = {n}, power {i}");
            }
        }
    }

    #[test]
    fn leading_coefficients() {
        let (a, b) = (rat(3, 2), rat(4, 7));
        assert_eq!(leading_coeff_k(0, &a, &b), int(1));
        assert_eq!(leading_coeff_k(1, &a, &b), &a + &b);
        for n in 0..=8u32 {
            let expect = rising(&(&a + &b + int(n as i64 - 1)), n)
                / Rational::from_integer(factorial(n));
            assert_eq!(leading_coeff_k(n, &a, &b), expect);
            // J_n carries an extra 1/2^n on the top coefficient
            let top_j = j_poly(n, &a, &b).to_monomial()[n as usize].clone();
            let pow2 = Rational::from_integer(num_bigint::BigInt::from(1i64 << n));
            assert_eq!(top_j, expect / pow2);
        }
    }

    #[test]
    fn norm_small() {
        assert_eq!(norm_sq_k(1, &int(1), &int(1)).unwrap(), rat(1, 3));
        // n = 1 general: ab / ((a+b+1)(a+b)^(0)) ... = ab/(a+b+1)
        let (a, b) = (rat(2, 3), rat(5, 2));
        let expect = &a * &b / (&a + &b + int(1));
        assert_eq!(norm_sq_k(1, &a, &b).unwrap(), expect);
        assert!(norm_sq_k(2, &int(0), &int(1)).is_err());
        assert!(norm_sq_k(2, &int(1), &rat(-1, 2)).is_err());
    }

    #[test]
    fn symmetries_hold() {
        let (a, b) = (int(1), int(2));
        let x = rat(1, 3);
        assert_eq!(symmetry_check(1, &a, &b, &x), (true, true, true));
        assert_eq!(symmetry_check(0, &a, &b, &x), (true, true, true));
        for n in 0..=8u32 {
            let (a, b) = (rat(7, 5), rat(-2, 3));
            assert_eq!(symmetry_check(n, &a, &b, &rat(-4, 7)), (true, true, true));
        }
    }

    #[test]
    fn hypergeometric_routes_match() {
        let (a, b) = (int(1), int(1));
        assert_eq!(k_via_2f1(0, &a, &b, &rat(1, 4)).unwrap(), int(1));
        let got = k_via_2f1(2, &a, &b, &rat(1, 4)).unwrap();
        assert_eq!(got, eval_k(2, &a, &b, &rat(1, 4)));
        for n in 0..=7u32 {
            let (a, b, x) = (rat(5, 4), rat(2, 7), rat(-3, 5));
            let direct = eval_k(n, &a, &b, &x);
            assert_eq!(k_via_2f1(n, &a, &b, &x).unwrap(), direct);
            assert_eq!(k_via_2f1_fk1(n, &a, &b, &x).unwrap(), direct);
            // FJ route at the mapped argument x' with (1-x')/2 = 1-x,
            // i.e. J_n(2x-1) = K_n(x)
            let xj = int(2) * &x - int(1);
            assert_eq!(j_via_2f1(n, &a, &b, &xj).unwrap(), direct);
        }
    }

    #[test]
    fn float_recurrence_matches_exact() {
        for n in [0u32, 1, 2, 5, 12, 30] {
            for xq in [rat(3, 10), rat(0, 1), rat(1, 1), rat(87, 100)] {
                let exact_v = exact::to_f64(&eval_k(n, &rat(3, 2), &rat(7, 10), &xq));
                let float_v = k_poly_f(n, 1.5, 0.7, exact::to_f64(&xq));
                assert!(
                    (exact_v - float_v).abs() <= 1e-10 * exact_v.abs().max(1.0),
                    "n = {n}, x = {xq}: {exact_v} vs {float_v}"
                );
            }
        }
        // J variant
        let v = j_poly_f(3, 1.5, 0.7, -0.4);
        let e = exact::to_f64(&eval_j(3, &rat(3, 2), &rat(7, 10), &rat(-2, 5)));
        assert!((v - e).abs() < 1e-12);
    }
}
