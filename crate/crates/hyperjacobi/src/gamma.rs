//! Log-gamma via the Lanczos approximation (g = 7, 9 coefficients) with
//! reflection for negative non-integer arguments.
//!
//! Used only for gamma-ratio closed forms (Gauss, Watson, Thomae
//! prefactors), never for series terms.

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const LN_SQRT_2PI: f64 = 0.918938533204672741780329736406;

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // reflection keeps the Lanczos argument away from the small-x region
        return std::f64::consts::PI.ln() - (std::f64::consts::PI * x).sin().ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (z + 0.5) * t.ln() - t + a.ln()
}

/// (ln |Gamma(x)|, sign of Gamma(x)). Errors at the poles x = 0, -1, -2, ...
pub fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if x > 0.0 {
        return Ok((ln_gamma(x), 1.0));
    }
    if x == x.round() {
        return Err(Error::Pole(format!("Gamma pole at x = {x}")));
    }
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    let s = (std::f64::consts::PI * x).sin();
    let ln_abs = std::f64::consts::PI.ln() - s.abs().ln() - ln_gamma(1.0 - x);
    Ok((ln_abs, s.signum()))
}

/// prod Gamma(num_i) / prod Gamma(den_j), sign-aware, via log-gamma.
pub fn gamma_ratio_f(num: &[f64], den: &[f64]) -> Result<f64> {
    let mut ln_acc = 0.0;
    let mut sign = 1.0;
    for &x in num {
        let (l, s) = ln_gamma_signed(x)?;
        ln_acc += l;
        sign *= s;
    }
    for &x in den {
        let (l, s) = ln_gamma_signed(x)?;
        ln_acc -= l;
        sign *= s;
    }
    Ok(sign * ln_acc.exp())
}
