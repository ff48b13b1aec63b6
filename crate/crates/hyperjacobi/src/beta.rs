//! Beta densities, exact moment-based integration of polynomials against
//! them, and closed-form integrals of 2F1 x Jacobi x Beta with a
//! series-moment oracle.
//!
//! The density on [0,1] is f(x|a,b) = x^(a-1) (1-x)^(b-1) / B(a,b); its
//! affine image h on [-1,1] satisfies 2 h(2x-1|a,b) = f(x|a,b), so every
//! h-side integral reduces to the f side and a single exact moment engine
//! suffices:
//!
//! ```text
//! M_k(a,b) = int_0^1 (x-1)^k f(x|a,b) dx = (-1)^k (b)^(k) / (a+b)^(k)
//! ```
//!
//! Polynomial integrands are summed against these moments exactly; the
//! 2F1 x Beta integrals are done termwise with an explicit remainder bound.
//! No numerical quadrature appears anywhere.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, int, rising, Rational};
use crate::gamma::gamma_ratio_f;
use crate::hypergeom::{effective_max_terms, pfq_eval_f, rising_f, SeriesValue};
use crate::jacobi::{k_poly, pow_x_in_xm1, PolyXm1};

/// Beta density parameters, both strictly positive.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaParams {
    pub a: Rational,
    pub b: Rational,
}

impl BetaParams {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::DomainViolation(format!(
                "Beta density needs a, b > 0, got a = {a}, b = {b}"
            )));
        }
        Ok(BetaParams { a, b })
    }
}

fn check_pos(a: &Rational, b: &Rational, who: &str) -> Result<()> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::DomainViolation(format!(
            "{who} needs a, b > 0, got a = {a}, b = {b}"
        )));
    }
    Ok(())
}

/// Shifted moment M_k = int (x-1)^k f(x|a,b) dx = (-1)^k (b)^(k)/(a+b)^(k).
pub fn moment_shifted(k: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    check_pos(a, b, "moment_shifted")?;
    let sign = if k % 2 == 0 { 1 } else { -1 };
    Ok(int(sign) * rising(b, k) / rising(&(a + b), k))
}

/// Power moment int x^n f(x|a,b) dx = (a)^(n)/(a+b)^(n); equals the
/// binomial recombination sum_k C(n,k) M_k(a,b).
pub fn moment_power(n: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    check_pos(a, b, "moment_power")?;
    Ok(rising(a, n) / rising(&(a + b), n))
}

/// Exact integral of a (x-1)-power polynomial against f(x|a,b):
/// sum_m c_m M_m(a,b).
pub fn integrate_poly_exact(p: &PolyXm1, a: &Rational, b: &Rational) -> Result<Rational> {
    check_pos(a, b, "integrate_poly_exact")?;
    let mut acc = Rational::zero();
    for (m, c) in p.coeffs.iter().enumerate() {
        acc += c * moment_shifted(m as u32, a, b)?;
    }
    Ok(acc)
}

/// Which closed-form cross-integral of a K polynomial against a mismatched
/// Beta weight to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossForm {
    /// int K_n(x|a,c) f(x|a,b) dx = (a)^(n) (c-b)^(n) / (n! (a+b)^(n))
    First,
    /// int K_n(x|c,b) f(x|a,b) dx = (-1)^n (b)^(n) (c-a)^(n) / (n! (a+b)^(n))
    Second,
}

pub fn cross_integral_closed(
    n: u32,
    a: &Rational,
    b: &Rational,
    c: &Rational,
    which: CrossForm,
) -> Result<Rational> {
    check_pos(a, b, "cross_integral_closed")?;
    if !c.is_positive() {
        return Err(Error::DomainViolation(format!(
            "cross_integral_closed needs c > 0, got c = {c}"
        )));
    }
    let nf = Rational::from_integer(exact::factorial(n));
    let den = nf * rising(&(a + b), n);
    Ok(match which {
        CrossForm::First => rising(a, n) * rising(&(c - b), n) / den,
        CrossForm::Second => {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            int(sign) * rising(b, n) * rising(&(c - a), n) / den
        }
    })
}

/// Closed form of int_0^1 2F1(a,b;c;x) K_j(x|f,d) f(x|f,d) dx:
/// (f)^(j) (d)^(j) (a)^(j) (b)^(j) / [ j! (f+d)^(2j) (c)^(j) ]
/// x 3F2(a+j, b+j, f+j; c+j, d+f+2j; 1).
pub fn integral_2f1_k_closed(
    j: u32,
    a: f64,
    b: f64,
    c: f64,
    f: f64,
    d: f64,
    tol: f64,
) -> Result<SeriesValue> {
    if f <= 0.0 || d <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "integral_2f1_k_closed needs f, d > 0, got f = {f}, d = {d}"
        )));
    }
    if c - a - b <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "integral_2f1_k_closed needs c-a-b > 0, got {}",
            c - a - b
        )));
    }
    let jf = j as f64;
    let mut fact = 1.0;
    for t in 2..=j {
        fact *= t as f64;
    }
    let pref = rising_f(f, j) * rising_f(d, j) * rising_f(a, j) * rising_f(b, j)
        / (fact * rising_f(f + d, 2 * j) * rising_f(c, j));
    if rising_f(c, j) == 0.0 {
        return Err(Error::Pole(format!("(c)^({j}) = 0 at c = {c}")));
    }
    let inner = pfq_eval_f(
        &[a + jf, b + jf, f + jf],
        &[c + jf, d + f + 2.0 * jf],
        1.0,
        tol / pref.abs().max(f64::MIN_POSITIVE),
        effective_max_terms().max(2_000_000),
    )?;
    Ok(SeriesValue {
        value: pref * inner.value,
        abs_error_bound: pref.abs() * inner.abs_error_bound,
        terms_used: inner.terms_used,
    })
}

/// Independent oracle for the same integral: expand the 2F1 as a power
/// series and integrate each x^t K_j(x|f,d) f(x|f,d) term exactly through
/// the moments. Stops once the term bound stays under tol/10 for five
/// consecutive t, closing the tail with a Raabe-style bound driven by
/// s = (c-a-b) + d > 0 (power moments decay like t^-d).
pub fn integrate_series_oracle(
    j: u32,
    a: f64,
    b: f64,
    c: f64,
    f: &Rational,
    d: &Rational,
    tol: f64,
) -> Result<SeriesValue> {
    check_pos(f, d, "integrate_series_oracle")?;
    if c - a - b <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "integrate_series_oracle needs c-a-b > 0, got {}",
            c - a - b
        )));
    }
    let kj = k_poly(j, f, d);
    // |K_j| <= sum |coeffs| on [0,1]; rigorous cap for the term bound
    let k_cap: f64 = kj.coeffs.iter().map(|q| exact::to_f64(&q.abs())).sum();
    let d_f = exact::to_f64(d);
    let s = (c - a - b) + d_f;

    // exact inner integrals E_t = int x^t K_j f dx by polynomial moments
    let exact_term = |t: u32| -> Result<Rational> {
        let p = pow_x_in_xm1(t).mul(&kj);
        integrate_poly_exact(&p, f, d)
    };

    let mut g = 1.0f64; // 2F1 series coefficient (a)^t (b)^t / ((c)^t t!)
    let mut sum = 0.0f64;
    let mut quiet = 0u32;
    let max_t = effective_max_terms().min(20_000);
    for t in 0..max_t as u32 {
        let e_t = exact::to_f64(&exact_term(t)?);
        sum += g * e_t;
        let tf = t as f64;
        let moment = rising_f(exact::to_f64(f), t) / rising_f(exact::to_f64(f) + d_f, t);
        let term_bound = g.abs() * k_cap * moment;
        if term_bound < tol / 10.0 {
            quiet += 1;
            if quiet >= 5 {
                let tail = term_bound * (tf + 1.0) / s;
                return Ok(SeriesValue {
                    value: sum,
                    abs_error_bound: tail + tol / 2.0,
                    terms_used: t as usize + 1,
                });
            }
        } else {
            quiet = 0;
        }
        g *= (a + tf) * (b + tf) / ((c + tf) * (tf + 1.0));
    }
    Err(Error::NoConvergence { max_terms: max_t, last_bound: g.abs() })
}

/// Both candidate right-hand sides of a two-term combination identity,
/// next to its gamma-ratio left side.
#[derive(Debug, Clone, Copy)]
pub struct TwoTermIdentity {
    pub lhs: f64,
    pub rhs_corrected: f64,
    pub rhs_printed: f64,
}

/// Gamma-ratio vs two 4F3(1) values:
/// G(c)G(c-a-b)G(c+d-a)G(c+d-b) / [G(c-a)G(c-b)G(c+d)G(c+d-a-b)]
///   = 4F3(a,b,d,c+d-1; c, c+d-a, c+d-b; 1)
///   + w 4F3(a+1,b+1,d+1,c+d; c+1, c+d-a+1, c+d-b+1; 1),
/// corrected weight w = 2abd / (c (c+d-a)(c+d-b)); the printed weight
/// carries an extra factor (c+d-1).
pub fn combination_4f3(a: f64, b: f64, c: f64, d: f64, tol: f64) -> Result<TwoTermIdentity> {
    if c - a - b <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "combination_4f3 needs c-a-b > 0, got {}",
            c - a - b
        )));
    }
    let lhs = gamma_ratio_f(&[c, c - a - b, c + d - a, c + d - b], &[c - a, c - b, c + d, c + d - a - b])?;
    let mt = effective_max_terms().max(2_000_000);
    let f1 = pfq_eval_f(&[a, b, d, c + d - 1.0], &[c, c + d - a, c + d - b], 1.0, tol, mt)?;
    let f2 = pfq_eval_f(
        &[a + 1.0, b + 1.0, d + 1.0, c + d],
        &[c + 1.0, c + d - a + 1.0, c + d - b + 1.0],
        1.0,
        tol,
        mt,
    )?;
    let w = 2.0 * a * b * d / (c * (c + d - a) * (c + d - b));
    Ok(TwoTermIdentity {
        lhs,
        rhs_corrected: f1.value + w * f2.value,
        rhs_printed: f1.value + w * (c + d - 1.0) * f2.value,
    })
}

/// Gamma-ratio vs two 3F2(-1) values:
/// G(c+d-a)G(c+d-b) / [G(c+d)G(c+d-a-b)]
///   = 3F2(a,b,c+d-1; c+d-a, c+d-b; -1)
///   - w 3F2(a+1,b+1,c+d; L1, L2; -1),  w = 2ab/((c+d-a)(c+d-b));
/// corrected lower pair (L1,L2) = (c+d-a+1, c+d-b+1), printed pair
/// (c+d+1, c+d+1).
pub fn combination_3f2_neg(a: f64, b: f64, c: f64, d: f64, tol: f64) -> Result<TwoTermIdentity> {
    if c - a - b <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "combination_3f2_neg needs c-a-b > 0, got {}",
            c - a - b
        )));
    }
    let lhs = gamma_ratio_f(&[c + d - a, c + d - b], &[c + d, c + d - a - b])?;
    let mt = effective_max_terms().max(2_000_000);
    let f1 = pfq_eval_f(&[a, b, c + d - 1.0], &[c + d - a, c + d - b], -1.0, tol, mt)?;
    let w = 2.0 * a * b / ((c + d - a) * (c + d - b));
    let f2c = pfq_eval_f(
        &[a + 1.0, b + 1.0, c + d],
        &[c + d - a + 1.0, c + d - b + 1.0],
        -1.0,
        tol,
        mt,
    )?;
    let f2p = pfq_eval_f(&[a + 1.0, b + 1.0, c + d], &[c + d + 1.0, c + d + 1.0], -1.0, tol, mt)?;
    Ok(TwoTermIdentity {
        lhs,
        rhs_corrected: f1.value - w * f2c.value,
        rhs_printed: f1.value - w * f2p.value,
    })
}

/// Finite-sum expression for 3F2(a+n, b+n, 1+n; c+n, 1+m+2n; 1) next to a
/// direct series evaluation. The k-truncated Gauss residual inside uses
/// gauss_sum(a-j-m, b-j-m; c-j-m) minus the first j+m series terms.
pub fn cor4_values(n: u32, m: u32, a: f64, b: f64, c: f64, tol: f64) -> Result<(f64, f64)> {
    if c - a - b <= 0.0 {
        return Err(Error::DomainViolation(format!(
            "cor4_values needs c-a-b > 0, got {}",
            c - a - b
        )));
    }
    let (nf, mf) = (n as f64, m as f64);
    // guard: (c-j-m) must stay off the Gamma poles for every 0 <= j <= n
    for j in 0..=n {
        let arg = c - j as f64 - mf;
        if arg == arg.round() && arg <= 0.0 {
            return Err(Error::Pole(format!("cor4 pole: c-j-m = {arg} at j = {j}")));
        }
    }
    let direct = pfq_eval_f(
        &[a + nf, b + nf, 1.0 + nf],
        &[c + nf, 1.0 + mf + 2.0 * nf],
        1.0,
        tol,
        effective_max_terms().max(2_000_000),
    )?
    .value;

    let mut fact2nm = 1.0; // (2n+m)!
    for t in 2..=(2 * n + m) {
        fact2nm *= t as f64;
    }
    let mut factn = 1.0;
    for t in 2..=n {
        factn *= t as f64;
    }
    let mut binom = 1.0; // C(n, j)
    let mut sum = 0.0;
    for j in 0..=n {
        let jf = j as f64;
        let shift = jf + mf;
        let pref = binom
            * rising_f(nf + mf, j)
            * rising_f(c - shift, j + m)
            / (rising_f(a - shift, j + m) * rising_f(b - shift, j + m));
        let gauss = gamma_ratio_f(&[c - shift, c - a - b + shift], &[c - a, c - b])?;
        let mut partial = 0.0;
        let mut term = 1.0;
        for k in 0..(j + m) {
            let kf = k as f64;
            partial += term;
            term *= (a - shift + kf) * (b - shift + kf) / ((c - shift + kf) * (kf + 1.0));
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * pref * (gauss - partial);
        binom *= (nf - jf) / (jf + 1.0);
    }
    let finite = fact2nm * rising_f(c, n) / (factn * rising_f(a, n) * rising_f(b, n)) * sum;
    Ok((direct, finite))
}
