//! Generalized hypergeometric series nFm: exact truncated sums, floating
//! evaluation with rigorous tail bounds, convergence classification, and the
//! classical summation theorems (Gauss, Watson, Pfaff-Saalschutz) plus the
//! two-term Thomae rewrites of a 3F2 at unit argument.
//!
//! The series is
//!
//! ```text
//! nFm(a1..an; b1..bm; x) = sum_{j>=0} [prod (a_k)^(j) / prod (b_k)^(j)] x^j / j!
//! ```
//!
//! Evaluation policy: a series terminates when an upper parameter is a
//! non-positive integer; otherwise n <= m converges on |x| <= 1, n = m+1
//! converges for |x| < 1 and at |x| = 1 iff sum(lower) - sum(upper) > 0,
//! and n > m+1 diverges for x != 0.

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{self, is_nonpos_int, rising, Rational};
use crate::gamma::{gamma_ratio_f, ln_gamma_signed};

/// Default cap on series terms; `HYPERJACOBI_MAX_TERMS` overrides it.
pub const DEFAULT_MAX_TERMS: usize = 100_000;

/// Default tolerance for floating series evaluation.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Lower parameters within this distance of a non-positive integer are
/// rejected in float mode (catastrophic cancellation).
const NEAR_POLE_EPS: f64 = 1e-9;

pub fn effective_max_terms() -> usize {
    static CACHE: std::sync::OnceLock<usize> = std::sync::OnceLock::new();
    *CACHE.get_or_init(|| {
        std::env::var("HYPERJACOBI_MAX_TERMS")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_TERMS)
    })
}

/// Floating-point rising factorial (x)^(n).
pub fn rising_f(x: f64, n: u32) -> f64 {
    let mut acc = 1.0;
    for j in 0..n {
        acc *= x + j as f64;
    }
    acc
}

/// Parameter lists of a generalized hypergeometric series, exact form.
#[derive(Debug, Clone, PartialEq)]
pub struct PfqSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
}

/// Convergence class of a series at a given argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// An upper parameter is a non-positive integer: polynomial in x.
    Terminating,
    /// Converges for the given |x| < 1 but not on the whole closed disc.
    ConvergentOpenDisc,
    /// Converges on the closed disc |x| <= 1 (includes the given x).
    ConvergentClosedDisc,
    /// Diverges at the given x.
    Divergent,
}

impl PfqSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        PfqSpec { upper, lower }
    }

    /// Smallest d >= 0 with some upper parameter equal to -d, if any.
    pub fn termination_degree(&self) -> Option<u32> {
        self.upper
            .iter()
            .filter(|a| is_nonpos_int(a))
            .map(|a| (-a.to_integer()).to_u32().unwrap_or(u32::MAX))
            .min()
    }

    /// Classify convergence at rational argument x.
    pub fn classify(&self, x: &Rational) -> Classification {
        if self.termination_degree().is_some() {
            return Classification::Terminating;
        }
        if x.is_zero() {
            return Classification::ConvergentClosedDisc;
        }
        let n = self.upper.len();
        let m = self.lower.len();
        let abs_x = x.abs();
        if n <= m {
            return if abs_x <= Rational::one() {
                Classification::ConvergentClosedDisc
            } else {
                Classification::Divergent
            };
        }
        if n == m + 1 {
            if abs_x < Rational::one() {
                return Classification::ConvergentOpenDisc;
            }
            if abs_x == Rational::one() {
                let s: Rational = self.lower.iter().sum::<Rational>() - self.upper.iter().sum::<Rational>();
                return if s.is_positive() {
                    Classification::ConvergentClosedDisc
                } else {
                    Classification::Divergent
                };
            }
        }
        Classification::Divergent
    }
}

/// Classify a float-parameter series at argument x; parameters within
/// `NEAR_POLE_EPS` of a non-positive integer count as exact.
pub fn classify_f(upper: &[f64], lower: &[f64], x: f64) -> Classification {
    if upper.iter().any(|&a| near_nonpos_int(a).is_some()) {
        return Classification::Terminating;
    }
    if x == 0.0 {
        return Classification::ConvergentClosedDisc;
    }
    let (n, m) = (upper.len(), lower.len());
    if n <= m {
        return if x.abs() <= 1.0 {
            Classification::ConvergentClosedDisc
        } else {
            Classification::Divergent
        };
    }
    if n == m + 1 {
        if x.abs() < 1.0 {
            return Classification::ConvergentOpenDisc;
        }
        if x.abs() == 1.0 {
            let s: f64 = lower.iter().sum::<f64>() - upper.iter().sum::<f64>();
            return if s > 0.0 {
                Classification::ConvergentClosedDisc
            } else {
                Classification::Divergent
            };
        }
    }
    Classification::Divergent
}

fn near_nonpos_int(x: f64) -> Option<u32> {
    let r = x.round();
    if r <= 0.0 && (x - r).abs() < NEAR_POLE_EPS {
        Some((-r) as u32)
    } else {
        None
    }
}

/// Exact partial sum through term N of the series at rational x.
/// For a terminating series of degree d <= N this is the exact value.
pub fn pfq_exact_partial(spec: &PfqSpec, x: &Rational, n_top: u32) -> Result<Rational> {
    // terms beyond the termination degree vanish identically
    let top = match spec.termination_degree() {
        Some(d) => n_top.min(d),
        None => n_top,
    };
    // a lower parameter -p poles the series at term p+1
    for b in &spec.lower {
        if is_nonpos_int(b) {
            let p = (-b.to_integer()).to_u32().unwrap_or(u32::MAX);
            if p < top {
                return Err(Error::Pole(format!(
                    "lower parameter {b} poles the series at term {}",
                    p + 1
                )));
            }
        }
    }
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for j in 0..top as i64 {
        let jr = exact::int(j);
        for a in &spec.upper {
            term *= a + &jr;
        }
        for b in &spec.lower {
            term /= b + &jr;
        }
        term /= exact::int(j + 1);
        term *= x;
        sum += &term;
    }
    Ok(sum)
}

/// A floating series value with a truncation-error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub abs_error_bound: f64,
    pub terms_used: usize,
}

/// Evaluate an exact-parameter series in floating point.
pub fn pfq_eval(spec: &PfqSpec, x: f64, tol: f64) -> Result<SeriesValue> {
    let upper: Vec<f64> = spec.upper.iter().map(exact::to_f64).collect();
    let lower: Vec<f64> = spec.lower.iter().map(exact::to_f64).collect();
    pfq_eval_f(&upper, &lower, x, tol, effective_max_terms())
}

/// Sum the series until a rigorous tail bound drops below `tol`.
///
/// Tail bounds: once every shifted parameter is positive, each factor of the
/// term ratio is bounded by a quantity non-increasing in the index, so
/// `r = |x| prod (1 + max(0, a-b)/(b+j))` dominates every later ratio and the
/// tail is bounded by |t| r/(1-r) when r < 1. At |x| = 1 with n = m+1 that
/// envelope tends to 1 and the Raabe-style bound |t| (N+1)/s with
/// s = sum(lower) - sum(upper) > 0 is used instead.
pub fn pfq_eval_f(
    upper: &[f64],
    lower: &[f64],
    x: f64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesValue> {
    let term_degree = upper.iter().filter_map(|&a| near_nonpos_int(a)).min();

    // reject lower parameters at or near a pole that the series reaches
    for &b in lower {
        if let Some(p) = near_nonpos_int(b) {
            let reached = match term_degree {
                Some(d) => p < d,
                None => true,
            };
            if reached {
                return Err(Error::DomainViolation(format!(
                    "lower parameter {b} is (near) a non-positive integer"
                )));
            }
        }
    }

    if upper.iter().any(|&a| a == 0.0) || x == 0.0 {
        return Ok(SeriesValue { value: 1.0, abs_error_bound: 0.0, terms_used: 1 });
    }

    // terminating: finite sum, no truncation error
    if let Some(d) = term_degree {
        let mut term = 1.0f64;
        let mut sum = 1.0f64;
        let mut abs_sum = 1.0f64;
        for j in 0..d {
            let jf = j as f64;
            for &a in upper {
                term *= a + jf;
            }
            for &b in lower {
                term /= b + jf;
            }
            term *= x / (jf + 1.0);
            sum += term;
            abs_sum += term.abs();
        }
        return Ok(SeriesValue {
            value: sum,
            abs_error_bound: 4.0 * f64::EPSILON * abs_sum,
            terms_used: d as usize + 1,
        });
    }

    match classify_f(upper, lower, x) {
        Classification::Divergent => {
            return Err(Error::Divergent(format!(
                "{}F{} at x = {x}",
                upper.len(),
                lower.len()
            )))
        }
        _ => {}
    }

    let n = upper.len();
    let m = lower.len();
    let s: f64 = lower.iter().sum::<f64>() - upper.iter().sum::<f64>();
    let at_unit = n == m + 1 && x.abs() == 1.0;

    // index from which every shifted parameter is strictly positive
    let mut j_pos = 0.0f64;
    for &a in upper.iter().chain(lower.iter()) {
        if a <= 0.0 {
            j_pos = j_pos.max(1.0 - a);
        }
    }

    // sorted parameter lists for the envelope pairing; lowers get the
    // implicit 1 from j!
    let mut up_sorted = upper.to_vec();
    let mut lo_sorted = lower.to_vec();
    lo_sorted.push(1.0);
    up_sorted.sort_by(|p, q| q.partial_cmp(p).unwrap());
    lo_sorted.sort_by(|p, q| q.partial_cmp(p).unwrap());

    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for j in 0..max_terms {
        let jf = j as f64;
        let mut ratio = x / (jf + 1.0);
        for &a in upper {
            ratio *= a + jf;
        }
        for &b in lower {
            ratio /= b + jf;
        }
        term *= ratio;
        sum += term;

        let next = jf + 1.0;
        if next <= j_pos {
            continue;
        }
        let bound = if at_unit {
            term.abs() * (next + 1.0) / s
        } else {
            // r bounds |t_{k+1}/t_k| for every k >= j+1
            let mut r = x.abs();
            for (i, &b) in lo_sorted.iter().enumerate() {
                match up_sorted.get(i) {
                    Some(&a) => r *= 1.0 + (a - b).max(0.0) / (b + next),
                    None => r /= b + next,
                }
            }
            if r < 1.0 {
                term.abs() * r / (1.0 - r)
            } else {
                f64::INFINITY
            }
        };
        if bound <= tol {
            return Ok(SeriesValue { value: sum, abs_error_bound: bound, terms_used: j + 2 });
        }
    }
    Err(Error::NoConvergence { max_terms, last_bound: term.abs() })
}

/// Gauss: 2F1(a,b;c;1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)),
/// valid for c-a-b > 0 with c off the poles.
pub fn gauss_sum(a: f64, b: f64, c: f64) -> Result<f64> {
    if c - a - b <= 0.0 {
        return Err(Error::DomainViolation(format!("gauss_sum needs c-a-b > 0, got {}", c - a - b)));
    }
    if near_nonpos_int(c).is_some() {
        return Err(Error::DomainViolation(format!("gauss_sum pole at c = {c}")));
    }
    gamma_ratio_f(&[c, c - a - b], &[c - a, c - b])
}

/// Both sides of the Euler transformation
/// 2F1(a,b;c;x) = (1-x)^(c-a-b) 2F1(c-a,c-b;c;x), |x| < 1.
pub fn euler_transform_check(a: f64, b: f64, c: f64, x: f64) -> Result<(SeriesValue, SeriesValue)> {
    if x.abs() >= 1.0 {
        return Err(Error::DomainViolation(format!("euler transform needs |x| < 1, got {x}")));
    }
    if near_nonpos_int(c).is_some() {
        return Err(Error::DomainViolation(format!("pole at c = {c}")));
    }
    let lhs = pfq_eval_f(&[a, b], &[c], x, DEFAULT_TOL, effective_max_terms())?;
    let rhs = pfq_eval_f(&[c - a, c - b], &[c], x, DEFAULT_TOL, effective_max_terms())?;
    let scale = (1.0 - x).powf(c - a - b);
    Ok((
        lhs,
        SeriesValue {
            value: scale * rhs.value,
            abs_error_bound: scale.abs() * rhs.abs_error_bound,
            terms_used: rhs.terms_used,
        },
    ))
}

/// Pfaff-Saalschutz closed form of the balanced terminating
/// 3F2(-n, a, b; c, 1+a+b-c-n; 1):
/// (c-a)^(n) (c-b)^(n) / [ (c)^(n) (c-a-b)^(n) ], exact.
pub fn pfaff_saalschutz(n: u32, a: &Rational, b: &Rational, c: &Rational) -> Result<Rational> {
    let cab = c - a - b;
    let den = rising(c, n) * rising(&cab, n);
    if den.is_zero() {
        return Err(Error::Pole(format!(
            "pfaff_saalschutz pole: (c)^({n}) (c-a-b)^({n}) = 0 at c = {c}, c-a-b = {cab}"
        )));
    }
    Ok(rising(&(c - a), n) * rising(&(c - b), n) / den)
}

/// The balanced 3F2 spec that `pfaff_saalschutz` sums, for dual-route tests.
pub fn pfaff_saalschutz_spec(n: u32, a: &Rational, b: &Rational, c: &Rational) -> PfqSpec {
    let d2 = exact::int(1) + a + b - c - exact::int(n as i64);
    PfqSpec::new(
        vec![exact::int(-(n as i64)), a.clone(), b.clone()],
        vec![c.clone(), d2],
    )
}

/// Watson: 3F2(a, b, f; (a+b+1)/2, 2f; 1) as a gamma product, for 2f+1 > a+b.
pub fn watson_sum(a: f64, b: f64, f: f64) -> Result<f64> {
    watson_sum_shifted(a, b, f, 0)
}

/// Watson's sum applied to the j-shifted series
/// 3F2(a+j, b+j, f+j; (a+b+1)/2+j, 2f+2j; 1), which stays Watson-shaped.
pub fn watson_sum_shifted(a: f64, b: f64, f: f64, j: u32) -> Result<f64> {
    if 2.0 * f + 1.0 <= a + b {
        return Err(Error::DomainViolation(format!(
            "watson_sum needs 2f+1 > a+b, got 2f+1 = {}, a+b = {}",
            2.0 * f + 1.0,
            a + b
        )));
    }
    let jf = j as f64;
    let (aj, bj, fj) = (a + jf, b + jf, f + jf);
    let sqrt_pi_ln = 0.5 * std::f64::consts::PI.ln();
    let (l1, s1) = ln_gamma_signed(fj + 0.5)?;
    let (l2, s2) = ln_gamma_signed((aj + bj + 1.0) / 2.0)?;
    let (l3, s3) = ln_gamma_signed(f + (1.0 - a - b) / 2.0)?;
    let (l4, s4) = ln_gamma_signed((aj + 1.0) / 2.0)?;
    let (l5, s5) = ln_gamma_signed((bj + 1.0) / 2.0)?;
    let (l6, s6) = ln_gamma_signed(f + (1.0 - a + jf) / 2.0)?;
    let (l7, s7) = ln_gamma_signed(f + (1.0 - b + jf) / 2.0)?;
    let ln = sqrt_pi_ln + l1 + l2 + l3 - l4 - l5 - l6 - l7;
    Ok(s1 * s2 * s3 * s4 * s5 * s6 * s7 * ln.exp())
}

/// The 3F2(a+j, b+j, f+j; c+j, d+f+2j; 1) together with its four Thomae
/// rewrites; all five agree wherever the guards hold.
pub fn thomae_3f2_forms(a: f64, b: f64, f: f64, c: f64, d: f64, j: u32) -> Result<[f64; 5]> {
    let jf = j as f64;
    // unit-argument tails close like N^-s; target 1e-8 relative to the
    // original value, spread over each transform's gamma prefactor
    let mt = effective_max_terms().max(4_000_000);
    let e = d + f + 2.0 * jf;

    let orig = pfq_eval_f(&[a + jf, b + jf, f + jf], &[c + jf, e], 1.0, 1e-8, mt)?.value;
    let target = 1e-8 * orig.abs().max(1.0);
    let eval = |pref: f64, upper: &[f64], lower: &[f64]| -> Result<f64> {
        let tol = target / pref.abs().max(f64::MIN_POSITIVE);
        Ok(pref * pfq_eval_f(upper, lower, 1.0, tol, mt)?.value)
    };

    let p1 = gamma_ratio_f(&[c + jf, c + d - a - b], &[c - a, c + d - b + jf])?;
    let t1 = eval(p1, &[a + jf, d + f - b + jf, d + jf], &[d + c - b + jf, e])?;

    let p2 = gamma_ratio_f(&[c + jf, c + d - a - b], &[c - f, c + d + f - a - b + jf])?;
    let t2 = eval(
        p2,
        &[f + jf, d + f - b + jf, d + f - a + jf],
        &[c + d + f - a - b + jf, e],
    )?;

    let p3 = gamma_ratio_f(&[e, c + d - a - b], &[d + f - a + jf, d + c - b + jf])?;
    let t3 = eval(p3, &[a + jf, c - b, c - f], &[c + jf, d + c - b + jf])?;

    let p4 = gamma_ratio_f(&[e, c + d - a - b], &[d + jf, c + d + f - a - b + jf])?;
    let t4 = eval(p4, &[f + jf, c - a, c - b], &[c + jf, c + d + f - a - b + jf])?;

    Ok([orig, t1, t2, t3, t4])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn classify_cases() {
        // terminating regardless of x
        let spec = PfqSpec::new(vec![int(-3), int(5)], vec![int(2)]);
        assert_eq!(spec.classify(&int(7)), Classification::Terminating);
        // 2F1(1/2,1/2;2;1): c-a-b = 1 > 0
        let spec = PfqSpec::new(vec![rat(1, 2), rat(1, 2)], vec![int(2)]);
        assert_eq!(spec.classify(&int(1)), Classification::ConvergentClosedDisc);
        assert_eq!(spec.classify(&rat(1, 2)), Classification::ConvergentOpenDisc);
        // 3F1 diverges
        let spec = PfqSpec::new(vec![int(1), int(1), int(1)], vec![int(1)]);
        assert_eq!(spec.classify(&rat(1, 2)), Classification::Divergent);
        // 2F1(a,b;a+b;1) diverges at the unit circle
        let spec = PfqSpec::new(vec![int(1), int(1)], vec![int(2)]);
        assert_eq!(spec.classify(&int(1)), Classification::Divergent);
        // 1F1 converges on the closed disc
        let spec = PfqSpec::new(vec![rat(1, 2)], vec![rat(5, 4)]);
        assert_eq!(spec.classify(&int(1)), Classification::ConvergentClosedDisc);
    }

    #[test]
    fn exact_partial_basics() {
        let any = PfqSpec::new(vec![rat(7, 2), rat(-1, 3)], vec![rat(9, 4)]);
        assert_eq!(pfq_exact_partial(&any, &rat(1, 2), 0).unwrap(), int(1));
        // 2F1(-1, b; c; x) = 1 - bx/c
        let spec = PfqSpec::new(vec![int(-1), rat(3, 2)], vec![int(4)]);
        let got = pfq_exact_partial(&spec, &rat(2, 3), 5).unwrap();
        assert_eq!(got, int(1) - rat(3, 2) * rat(2, 3) / int(4));
        // geometric: 2F1(1, b; b; x) partial sums; at x = 1/2, N = 30 the sum
        // is 2 (1 - 2^{-31}) = 2 - 2^{-30}
        let spec = PfqSpec::new(vec![int(1), rat(5, 3)], vec![rat(5, 3)]);
        let got = pfq_exact_partial(&spec, &rat(1, 2), 30).unwrap();
        assert_eq!(got, int(2) - rat(1, 1 << 30));
    }

    #[test]
    fn exact_partial_pole() {
        let spec = PfqSpec::new(vec![rat(1, 2)], vec![int(-2)]);
        assert!(matches!(pfq_exact_partial(&spec, &rat(1, 2), 5), Err(Error::Pole(_))));
        // but a termination before the pole keeps it finite
        let spec = PfqSpec::new(vec![int(-2), rat(1, 2)], vec![int(-3)]);
        assert!(pfq_exact_partial(&spec, &rat(1, 2), 10).is_ok());
    }

    #[test]
    fn eval_closed_forms() {
        // 2F1(1,1;2;1/2) = 2 ln 2
        let v = pfq_eval_f(&[1.0, 1.0], &[2.0], 0.5, 1e-12, 100_000).unwrap();
        assert!((v.value - 2.0 * std::f64::consts::LN_2).abs() < 1e-12);
        assert!(v.abs_error_bound <= 1e-12);
        // 2F1(1,1;3;1) = 2 (telescoping: partial sums are 2 - 2/(N+2), so the
        // truncation error genuinely decays like 1/N and the bound must say so)
        let v = pfq_eval_f(&[1.0, 1.0], &[3.0], 1.0, 1e-5, 1_000_000).unwrap();
        assert!((v.value - 2.0).abs() <= v.abs_error_bound);
        assert!(v.abs_error_bound <= 1e-5);
        // upper parameter 0
        let v = pfq_eval_f(&[0.0, 5.0], &[3.0], 0.9, 1e-12, 100).unwrap();
        assert_eq!(v.value, 1.0);
        assert_eq!(v.terms_used, 1);
    }

    #[test]
    fn eval_binomial_family() {
        // (m+1)Fm with matched lists = (1-x)^{-b}
        let v = pfq_eval_f(&[0.7, 1.3], &[0.7], 0.25, 1e-12, 100_000).unwrap();
        assert!((v.value - 0.75f64.powf(-1.3)).abs() < 1e-12);
        let v = pfq_eval_f(&[0.7, 2.0, 1.3], &[0.7, 2.0], -0.5, 1e-12, 100_000).unwrap();
        assert!((v.value - 1.5f64.powf(-1.3)).abs() < 1e-12);
    }

    #[test]
    fn eval_guards() {
        assert!(matches!(
            pfq_eval_f(&[1.0, 1.0, 1.0], &[1.0], 0.5, 1e-10, 1000),
            Err(Error::Divergent(_))
        ));
        assert!(matches!(
            pfq_eval_f(&[0.5, 0.5], &[-2.0 + 1e-12], 0.5, 1e-10, 1000),
            Err(Error::DomainViolation(_))
        ));
        // x = 1 with c-a-b <= 0
        assert!(matches!(
            pfq_eval_f(&[1.0, 1.0], &[2.0], 1.0, 1e-10, 1000),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn tail_bound_honesty() {
        // tightening the tolerance moves the value by less than the bound
        // reported at the looser tolerance
        let interior: [(&[f64], &[f64], f64); 3] = [
            (&[0.5, 1.5], &[2.25], 0.9),
            (&[1.0, 0.25], &[2.5], -0.95),
            (&[0.75], &[0.4, 1.7], 1.0),
        ];
        for (upper, lower, x) in interior {
            let v1 = pfq_eval_f(upper, lower, x, 1e-7, 100_000).unwrap();
            let v2 = pfq_eval_f(upper, lower, x, 1e-13, 1_000_000).unwrap();
            assert!(
                (v1.value - v2.value).abs() <= v1.abs_error_bound,
                "bound {:.3e} but moved {:.3e}",
                v1.abs_error_bound,
                (v1.value - v2.value).abs()
            );
        }
        // unit-circle Raabe bound, checked against the Gauss closed form
        let v = pfq_eval_f(&[0.5, 0.5], &[2.0], 1.0, 1e-5, 400_000).unwrap();
        let truth = gauss_sum(0.5, 0.5, 2.0).unwrap();
        assert!((v.value - truth).abs() <= v.abs_error_bound);
        let v = pfq_eval_f(&[0.3, 0.8], &[2.9], 1.0, 1e-7, 400_000).unwrap();
        let truth = gauss_sum(0.3, 0.8, 2.9).unwrap();
        assert!((v.value - truth).abs() <= v.abs_error_bound);
    }

    #[test]
    fn gauss_values() {
        assert!((gauss_sum(1.0, 1.0, 3.0).unwrap() - 2.0).abs() < 1e-12);
        assert!((gauss_sum(0.7, 0.0, 2.3).unwrap() - 1.0).abs() < 1e-12);
        let v = gauss_sum(0.5, 0.5, 2.0).unwrap();
        assert!((v - 4.0 / std::f64::consts::PI).abs() < 1e-12);
        // matches the series at x = 1 within the series' own bound
        let s = pfq_eval_f(&[0.5, 0.5], &[2.0], 1.0, 1e-6, 400_000).unwrap();
        assert!((v - s.value).abs() <= s.abs_error_bound);
        assert!(gauss_sum(1.0, 2.0, 2.5).is_err());
    }

    #[test]
    fn euler_transform() {
        let (l, r) = euler_transform_check(1.0, 1.0, 3.0, 0.5).unwrap();
        assert!((l.value - r.value).abs() < 1e-10);
        let (l, r) = euler_transform_check(0.5, 0.5, 2.0, 0.25).unwrap();
        assert!((l.value - r.value).abs() < 1e-10);
        let (l, r) = euler_transform_check(0.3, 0.9, 1.4, 0.0).unwrap();
        assert_eq!((l.value, r.value), (1.0, 1.0));
    }

    #[test]
    fn pfaff_saalschutz_exact() {
        assert_eq!(pfaff_saalschutz(0, &rat(1, 2), &rat(1, 3), &int(3)).unwrap(), int(1));
        // n=1, a=b=1, c=3: closed form 4/3, direct two-term sum 4/3
        let closed = pfaff_saalschutz(1, &int(1), &int(1), &int(3)).unwrap();
        assert_eq!(closed, rat(4, 3));
        let spec = pfaff_saalschutz_spec(1, &int(1), &int(1), &int(3));
        assert_eq!(pfq_exact_partial(&spec, &int(1), 1).unwrap(), rat(4, 3));
        // a couple of rational cases against the partial-sum route
        for (a, b, c, n) in [
            (rat(1, 2), rat(2, 3), rat(7, 2), 2u32),
            (rat(-3, 4), rat(5, 2), rat(9, 4), 3),
            (rat(1, 5), rat(1, 7), rat(13, 3), 4),
        ] {
            let closed = pfaff_saalschutz(n, &a, &b, &c).unwrap();
            let spec = pfaff_saalschutz_spec(n, &a, &b, &c);
            assert_eq!(closed, pfq_exact_partial(&spec, &int(1), n).unwrap());
        }
    }

    #[test]
    fn watson_consistency() {
        let (a, b, f) = (1.0 / 3.0, 0.5, 2.0);
        let closed = watson_sum(a, b, f).unwrap();
        let series = pfq_eval_f(&[a, b, f], &[(a + b + 1.0) / 2.0, 2.0 * f], 1.0, 1e-10, 400_000)
            .unwrap();
        assert!((closed - series.value).abs() < 1e-8);
        // a = 0 degenerates to 1
        assert!((watson_sum(0.0, b, f).unwrap() - 1.0).abs() < 1e-12);
        // j-shift
        let closed = watson_sum_shifted(a, b, f, 1);
        let series = pfq_eval_f(
            &[a + 1.0, b + 1.0, f + 1.0],
            &[(a + b + 1.0) / 2.0 + 1.0, 2.0 * f + 2.0],
            1.0,
            1e-10,
            400_000,
        )
        .unwrap();
        assert!((closed.unwrap() - series.value).abs() < 1e-8);
    }

    #[test]
    fn thomae_forms_agree() {
        let v = thomae_3f2_forms(0.5, 1.0 / 3.0, 1.5, 3.0, 2.0, 0).unwrap();
        for w in &v[1..] {
            assert!((w - v[0]).abs() < 5e-8, "{v:?}");
        }
        let v = thomae_3f2_forms(0.5, 1.0 / 3.0, 1.5, 3.0, 2.0, 2).unwrap();
        for w in &v[1..] {
            assert!((w - v[0]).abs() < 1e-7 * v[0].abs(), "{v:?}");
        }
        // degenerate b = 0: all five are 1
        let v = thomae_3f2_forms(0.5, 0.0, 1.5, 3.0, 2.0, 0).unwrap();
        for w in &v {
            assert!((w - 1.0).abs() < 5e-8, "{v:?}");
        }
    }
}
