//! Exact similarity solutions for the Dirichlet and Robin problems.
//!
//! The temperature is
//!
//! ```text
//! T(x,t) = t^(alpha/2) [ A M(-alpha/2, 1/2, -eta^2)
//!                      + B eta M(-alpha/2 + 1/2, 3/2, -eta^2) ]
//! ```
//!
//! with similarity variable `eta = x / (2 a sqrt(t))`, and the front
//! coefficient `nu` solves
//!
//! ```text
//! Ste / 2^(alpha+1) * f(z)                = z^(alpha+1)   (Dirichlet)
//! Ste / 2^(alpha+1) / [ 1/f(z)
//!     + M(alpha/2 + 1/2, 1/2, z^2)/(2 Bi) ] = z^(alpha+1)   (Robin)
//! ```
//!
//! where `f(z) = 1 / (z M(alpha/2 + 1, 3/2, z^2))`. Both left-hand sides
//! are strictly decreasing from `+inf`, so the root is unique; the Robin
//! root increases with Bi toward the Dirichlet one.

use crate::problem::{
    Boundary, EvalError, MethodKind, ProblemParams, Scheme, SimilaritySolution, SolveError,
};
use crate::rootfind::{bisect, scan_brackets, SolveControl};
use crate::specfun::{f_aux, kummer_m, SeriesControl};

/// Lower end of every root scan; the residuals blow up at z = 0.
const SCAN_EPS: f64 = 1e-9;
/// Initial and maximal upper ends of the root scan for Ste >= 1.
const SCAN_HI: f64 = 5.0;
const SCAN_HI_MAX: f64 = 40.0;

/// Runs the scan-and-bisect pipeline shared by every front equation.
/// Searches (eps, 1) when `ste < 1` (the unique root is known to lie
/// there), otherwise (eps, 5) with doubling up to 40. Returns every root
/// found, ascending.
pub(crate) fn solve_front_equation<F: Fn(f64) -> f64>(
    residual: F,
    ste: f64,
) -> Result<alloc::vec::Vec<f64>, SolveError> {
    let ctrl = SolveControl::tight();
    let mut hi = if ste < 1.0 { 1.0 } else { SCAN_HI };
    loop {
        let brackets = scan_brackets(&residual, SCAN_EPS, hi, ctrl.scan_points);
        if !brackets.is_empty() {
            let mut roots = alloc::vec::Vec::with_capacity(brackets.len());
            for b in &brackets {
                roots.push(
                    bisect(&residual, b, &ctrl)
                        .map_err(|_| SolveError::NoRoot { lo: b.lo, hi: b.hi })?,
                );
            }
            return Ok(roots);
        }
        if hi >= SCAN_HI_MAX {
            return Err(SolveError::NoRoot { lo: SCAN_EPS, hi });
        }
        hi = (hi * 2.0).min(SCAN_HI_MAX);
    }
}

/// Solves the Dirichlet problem exactly.
///
/// The stored coefficients are normalized by `theta_inf`: `coeff_a = 1`
/// and `coeff_b = -M(-a/2, 1/2, -nu^2) / (nu M(-a/2 + 1/2, 3/2, -nu^2))`.
/// For `Ste < 1` the front coefficient lies in (0, 1).
pub fn solve_exact_dirichlet(p: &ProblemParams) -> Result<SimilaritySolution, SolveError> {
    p.validate()?;
    let series = SeriesControl::default();
    let scale = p.ste / libm::pow(2.0, p.alpha + 1.0);
    let residual = |z: f64| match f_aux(z, p.alpha, &series) {
        Ok(f) => scale * f - libm::pow(z, p.alpha + 1.0),
        Err(_) => f64::NAN,
    };
    let nu = solve_front_equation(residual, p.ste)?[0];
    let (m1, m2) = front_kummer_pair(p.alpha, nu, &series)?;
    Ok(SimilaritySolution {
        method: MethodKind::new(Scheme::Exact, Boundary::Dirichlet),
        nu,
        coeff_a: 1.0,
        coeff_b: -m1 / (nu * m2),
    })
}

/// Solves the Robin problem exactly.
///
/// Normalized coefficients per the closed forms
/// `B = -M1 / (M1/(2 Bi) + nu M2)` and `A = -nu M2 B / M1`, with
/// `M1 = M(-a/2, 1/2, -nu^2)` and `M2 = M(-a/2 + 1/2, 3/2, -nu^2)`.
pub fn solve_exact_robin(p: &ProblemParams) -> Result<SimilaritySolution, SolveError> {
    p.validate()?;
    let bi = p.require_bi()?;
    let series = SeriesControl::default();
    let scale = p.ste / libm::pow(2.0, p.alpha + 1.0);
    let residual = |z: f64| {
        let inv_f = z * match kummer_m(p.alpha / 2.0 + 1.0, 1.5, z * z, &series) {
            Ok(m) => m,
            Err(_) => return f64::NAN,
        };
        let correction = match kummer_m(p.alpha / 2.0 + 0.5, 0.5, z * z, &series) {
            Ok(m) => m / (2.0 * bi),
            Err(_) => return f64::NAN,
        };
        scale / (inv_f + correction) - libm::pow(z, p.alpha + 1.0)
    };
    let nu = solve_front_equation(residual, p.ste)?[0];
    let (m1, m2) = front_kummer_pair(p.alpha, nu, &series)?;
    let coeff_b = -m1 / (m1 / (2.0 * bi) + nu * m2);
    let coeff_a = -nu * m2 / m1 * coeff_b;
    Ok(SimilaritySolution {
        method: MethodKind::new(Scheme::Exact, Boundary::Robin),
        nu,
        coeff_a,
        coeff_b,
    })
}

/// `M(-a/2, 1/2, -nu^2)` and `M(-a/2 + 1/2, 3/2, -nu^2)`.
fn front_kummer_pair(
    alpha: f64,
    nu: f64,
    series: &SeriesControl,
) -> Result<(f64, f64), SolveError> {
    let m1 = kummer_m(-alpha / 2.0, 0.5, -nu * nu, series)?;
    let m2 = kummer_m(-alpha / 2.0 + 0.5, 1.5, -nu * nu, series)?;
    Ok((m1, m2))
}

/// Free-boundary position `s(t) = 2 a_diff nu sqrt(t)`.
pub fn free_boundary(p: &ProblemParams, sol: &SimilaritySolution, t: f64) -> f64 {
    assert!(t >= 0.0, "free_boundary requires t >= 0, got {t}");
    2.0 * p.a_diff * sol.nu * libm::sqrt(t)
}

/// Exact temperature at `(x, t)`; `x` must lie in the liquid region
/// `[0, s(t)]` and `t` must be positive.
pub fn eval_exact_temperature(
    p: &ProblemParams,
    sol: &SimilaritySolution,
    x: f64,
    t: f64,
) -> Result<f64, EvalError> {
    if !(t > 0.0) {
        return Err(EvalError::NonPositiveTime(t));
    }
    let front = free_boundary(p, sol, t);
    if !(0.0..=front).contains(&x) {
        return Err(EvalError::OutsideLiquidRegion { x, front });
    }
    similarity_temperature(p, sol, x, t)
}

/// The analytic similarity form behind [`eval_exact_temperature`],
/// without the liquid-region restriction. The physical solution lives on
/// `0 <= x <= s(t)` only; evaluating outside is useful for difference
/// quotients that straddle the boundaries.
pub fn similarity_temperature(
    p: &ProblemParams,
    sol: &SimilaritySolution,
    x: f64,
    t: f64,
) -> Result<f64, EvalError> {
    assert!(
        sol.method.scheme == Scheme::Exact,
        "similarity_temperature expects an exact solution, got {}",
        sol.method
    );
    assert!(t > 0.0, "similarity form requires t > 0, got {t}");
    let series = SeriesControl::default();
    let eta = x / (2.0 * p.a_diff * libm::sqrt(t));
    let m1 = kummer_m(-p.alpha / 2.0, 0.5, -eta * eta, &series)?;
    let m2 = kummer_m(-p.alpha / 2.0 + 0.5, 1.5, -eta * eta, &series)?;
    let profile = sol.coeff_a * m1 + sol.coeff_b * eta * m2;
    Ok(libm::pow(t, p.alpha / 2.0) * p.theta_inf * profile)
}
