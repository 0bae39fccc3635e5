//! Complex-valued special functions for the analytic solutions: Jacobi
//! polynomials with complex parameters and argument, and generalized
//! binomial coefficients.
//!
//! The evaluator is the explicit finite sum
//!
//! ```text
//! P_n^(a,b)(z) = 2^-n sum_{k=0}^{n} C(n+a, k) C(n+b, n-k) (z-1)^(n-k) (z+1)^k
//! ```
//!
//! with C(w, m) the falling-factorial binomial. The parameter regime used
//! here (negative, possibly imaginary upper parameters) puts the classical
//! three-term recurrence's denominators near zero, and gamma-function
//! ratios off the real axis are a liability; the finite sum has no
//! denominator other than m! and is valid for all complex a, b. The
//! recurrence survives only as a cross-check oracle in the tests.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest polynomial degree the finite sum is allowed to evaluate.
pub const MAX_DEGREE: usize = 64;

/// Largest order accepted by [`gen_binomial`].
pub const MAX_BINOMIAL_ORDER: usize = 128;

/// Degree and the two complex parameters of a Jacobi polynomial.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    /// Upper parameter (the exponent side paired with (1-z)).
    pub a: Complex64,
    /// Lower parameter (paired with (1+z)).
    pub b: Complex64,
    /// Degree; the evaluated polynomial has degree exactly `n` for
    /// generic parameters.
    pub n: usize,
}

impl JacobiParams {
    pub fn new(a: Complex64, b: Complex64, n: usize) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite("jacobi parameters".into()));
        }
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge { n, max: MAX_DEGREE });
        }
        Ok(Self { a, b, n })
    }
}

/// Generalized binomial coefficient C(w, m) = w (w-1) ... (w-m+1) / m!
/// for complex `w` and integer `m >= 0`; `m = 0` returns 1.
pub fn gen_binomial(w: Complex64, m: usize) -> Result<Complex64> {
    if m > MAX_BINOMIAL_ORDER {
        return Err(Error::OrderTooLarge {
            m,
            max: MAX_BINOMIAL_ORDER,
        });
    }
    // Interleave numerator factors with the factorial division so the
    // running product never grows past ~|w|^m before being tamed.
    let mut out = Complex64::new(1.0, 0.0);
    for j in 0..m {
        out = out * (w - j as f64) / (j as f64 + 1.0);
    }
    Ok(out)
}

/// Evaluates P_n^(a,b)(z) by the finite sum. Valid for all finite complex
/// parameters and arguments; errors only on a degree above [`MAX_DEGREE`].
pub fn jacobi_poly(p: JacobiParams, z: Complex64) -> Result<Complex64> {
    if !z.is_finite() {
        return Err(Error::NonFinite("jacobi argument".into()));
    }
    let n = p.n;
    let zm = z - 1.0;
    let zp = z + 1.0;

    // (z-1)^(n-k) and (z+1)^k tables, k = 0..=n.
    let mut pow_m = vec![Complex64::new(1.0, 0.0); n + 1];
    let mut pow_p = vec![Complex64::new(1.0, 0.0); n + 1];
    for k in 1..=n {
        pow_m[k] = pow_m[k - 1] * zm;
        pow_p[k] = pow_p[k - 1] * zp;
    }

    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..=n {
        let c1 = gen_binomial(p.a + n as f64, k)?;
        let c2 = gen_binomial(p.b + n as f64, n - k)?;
        sum += c1 * c2 * pow_m[n - k] * pow_p[k];
    }
    Ok(sum * 0.5f64.powi(n as i32))
}
