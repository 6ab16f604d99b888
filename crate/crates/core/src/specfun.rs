//! Kummer's confluent hypergeometric function `M(a, b, z)` and the
//! Pochhammer symbol.
//!
//! These are the only special functions the exact similarity solutions
//! need. `M` is evaluated by direct power series,
//!
//! ```text
//! M(a, b, z) = sum_s (a)_s / ((b)_s s!) z^s
//! ```
//!
//! with one precaution: for `z < 0` the direct series alternates and
//! cancels badly, so the Kummer transformation
//! `M(a, b, z) = e^z M(b - a, b, -z)` is applied first. Every argument
//! this crate produces has `b - a > 0`, which makes all summed terms of
//! the transformed series nonnegative.

use core::fmt;

/// Truncation control for the `M` series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    /// Relative truncation tolerance, `0 < rel_tol < 1e-6`.
    pub rel_tol: f64,
    /// Hard cap on the number of summed terms, at least 50.
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Self {
        assert!(
            rel_tol > 0.0 && rel_tol < 1e-6,
            "rel_tol out of range: {rel_tol}"
        );
        assert!(max_terms >= 50, "max_terms too small: {max_terms}");
        Self { rel_tol, max_terms }
    }
}

impl Default for SeriesControl {
    /// `rel_tol = 1e-14`, `max_terms = 500`: front coefficients are
    /// compared at 4 decimals, this leaves ~10 digits of headroom.
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_terms: 500,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpecFunError {
    /// `b` is zero or a negative integer: `M(a, b, z)` has a pole there.
    NonpositiveIntegerB(f64),
    /// The series tail did not fall below `rel_tol` within `max_terms`.
    NoConvergence { terms: usize },
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonpositiveIntegerB(b) => {
                write!(f, "M(a, b, z) is undefined for nonpositive integer b = {b}")
            }
            Self::NoConvergence { terms } => {
                write!(f, "Kummer series did not converge within {terms} terms")
            }
        }
    }
}

/// Rising factorial `(a)_s = a (a+1) ... (a+s-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, s: u32) -> f64 {
    let mut prod = 1.0;
    for k in 0..s {
        prod *= a + k as f64;
    }
    prod
}

/// Kummer's function `M(a, b, z)` to relative accuracy `ctrl.rel_tol`.
///
/// Negative arguments are routed through the Kummer transformation; see
/// the module docs. Fails with [`SpecFunError::NonpositiveIntegerB`] when
/// `b` is zero or a negative integer, and with
/// [`SpecFunError::NoConvergence`] when `max_terms` is exhausted first.
pub fn kummer_m(a: f64, b: f64, z: f64, ctrl: &SeriesControl) -> Result<f64, SpecFunError> {
    if b <= 0.0 && libm::floor(b) == b {
        return Err(SpecFunError::NonpositiveIntegerB(b));
    }
    if z < 0.0 {
        Ok(libm::exp(z) * kummer_series(b - a, b, -z, ctrl)?)
    } else {
        kummer_series(a, b, z, ctrl)
    }
}

/// Direct power series for `M(a, b, z)`.
///
/// Stops when the current term has stayed below `rel_tol * |sum|` for two
/// consecutive terms, guarding against a single accidentally small term.
/// A nonpositive integer `a` terminates the series naturally through an
/// exactly-zero term.
pub(crate) fn kummer_series(
    a: f64,
    b: f64,
    z: f64,
    ctrl: &SeriesControl,
) -> Result<f64, SpecFunError> {
    let mut sum = 1.0_f64;
    let mut term = 1.0_f64;
    let mut quiet = 0u32;
    for s in 0..ctrl.max_terms {
        let sf = s as f64;
        term *= (a + sf) / ((b + sf) * (sf + 1.0)) * z;
        sum += term;
        if term.abs() <= ctrl.rel_tol * sum.abs() {
            quiet += 1;
            if quiet >= 2 {
                return Ok(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(SpecFunError::NoConvergence {
        terms: ctrl.max_terms,
    })
}

/// The auxiliary function `f(z) = 1 / (z M(alpha/2 + 1, 3/2, z^2))` of
/// the exact front equations; strictly positive and strictly decreasing
/// on `z > 0`.
pub fn f_aux(z: f64, alpha: f64, ctrl: &SeriesControl) -> Result<f64, SpecFunError> {
    assert!(z > 0.0, "f_aux requires z > 0, got {z}");
    let m = kummer_m(alpha / 2.0 + 1.0, 1.5, z * z, ctrl)?;
    Ok(1.0 / (z * m))
}
