//! Integral-method approximations with a quadratic temperature profile.
//!
//! All three methods assume
//!
//! ```text
//! T(x,t) = t^(alpha/2) theta_inf [ A (1 - x/s) + B (1 - x/s)^2 ],
//! s(t)   = 2 a nu sqrt(t),
//! ```
//!
//! and differ in which equations of the melting problem they keep:
//!
//! * classical HBIM (`p1`/`p1h`): spatially integrated heat equation plus
//!   a Stefan condition rewritten through the phase-change identity;
//! * modified HBIM (`p2`/`p2h`): integrated heat equation, original
//!   Stefan condition;
//! * refined integral method (`p3`/`p3h`): doubly integrated heat
//!   equation, original Stefan condition.
//!
//! Each choice closes into a single transcendental equation for `nu`
//! ([`residual_p1`] .. [`residual_p3h`]) plus closed forms for A and B.
//! The modified and refined residuals are strictly increasing with a
//! single positive root; the classical residual is a genuine polynomial
//! of degree `2 alpha + 4` that can have several positive roots, so its
//! solver reports every root it finds in (0, 1) and selects the
//! smallest.

use alloc::vec::Vec;

use crate::exact::{free_boundary, solve_front_equation};
use crate::problem::{
    Boundary, EvalError, MethodKind, ProblemParams, Scheme, SimilaritySolution, SolveError,
};
use crate::rootfind::{bisect, scan_brackets, SolveControl};

fn pow2(e: f64) -> f64 {
    libm::pow(2.0, e)
}

/// Left-hand side of the classical-HBIM front equation (Dirichlet).
/// `w1(0) = 18 Ste^2` for `alpha > 0`; `w1(1) < 0` whenever `Ste < 1`.
pub fn residual_p1(z: f64, alpha: f64, ste: f64) -> f64 {
    let (a, s) = (alpha, ste);
    libm::pow(z, 2.0 * a + 4.0) * -3.0 * pow2(2.0 * a + 1.0) * (a - 2.0)
        + libm::pow(z, 2.0 * a + 2.0) * -9.0 * pow2(2.0 * a + 1.0)
        + libm::pow(z, a + 4.0) * -3.0 * pow2(a) * (a - 3.0) * (a + 1.0) * s
        + libm::pow(z, a + 2.0) * -3.0 * pow2(a + 1.0) * (a + 7.0) * s
        + libm::pow(z, a) * 9.0 * pow2(a) * s
        + libm::pow(z, 4.0) * 2.0 * (a + 1.0) * (a + 1.0) * s * s
        + libm::pow(z, 2.0) * -12.0 * (a + 1.0) * s * s
        + 18.0 * s * s
}

/// Left-hand side of the modified-HBIM front equation (Dirichlet);
/// strictly increasing from `-3 Ste` with a unique positive root.
pub fn residual_p2(z: f64, alpha: f64, ste: f64) -> f64 {
    let (a, s) = (alpha, ste);
    libm::pow(z, a + 4.0) * pow2(a) * (a + 1.0)
        + libm::pow(z, a + 2.0) * 3.0 * pow2(a + 1.0)
        + z * z * s * (a + 1.0)
        - 3.0 * s
}

/// Left-hand side of the RIM front equation (Dirichlet); at `alpha = 0`
/// it collapses to `(12 + 2 Ste) z^2 - 6 Ste`.
pub fn residual_p3(z: f64, alpha: f64, ste: f64) -> f64 {
    let (a, s) = (alpha, ste);
    libm::pow(z, a + 4.0) * pow2(a + 1.0) * a
        + libm::pow(z, a + 2.0) * 3.0 * pow2(a + 2.0)
        + z * z * s * (2.0 + 3.0 * a)
        - 6.0 * s
}

/// Classical-HBIM front equation with a Robin fixed face; reduces to
/// [`residual_p1`] term by term as `Bi -> inf`.
pub fn residual_p1h(z: f64, alpha: f64, ste: f64, bi: f64) -> f64 {
    let (a, s) = (alpha, ste);
    libm::pow(z, 2.0 * a + 4.0) * -3.0 * pow2(2.0 * a + 1.0) * (a - 2.0)
        + libm::pow(z, 2.0 * a + 3.0) * -3.0 * (pow2(2.0 * a) / bi) * (5.0 * a - 7.0)
        + libm::pow(z, 2.0 * a + 2.0) * -3.0 * pow2(2.0 * a + 1.0) * ((a - 2.0) / (bi * bi) + 3.0)
        + libm::pow(z, 2.0 * a + 1.0) * -9.0 * (pow2(2.0 * a) / bi)
        + libm::pow(z, a + 4.0) * -3.0 * pow2(a) * s * (a - 3.0) * (a + 1.0)
        + libm::pow(z, a + 3.0) * -3.0 * (pow2(a + 1.0) / bi) * s * (a - 1.0) * (a + 1.0)
        + libm::pow(z, a + 2.0) * -3.0 * pow2(a + 1.0) * s * (a + 7.0)
        + libm::pow(z, a + 1.0) * 3.0 * (pow2(a + 1.0) / bi) * s * (a - 5.0)
        + libm::pow(z, a) * 9.0 * pow2(a) * s
        + libm::pow(z, 4.0) * 2.0 * s * s * (1.0 + a) * (1.0 + a)
        + libm::pow(z, 2.0) * -12.0 * s * s * (a + 1.0)
        + 18.0 * s * s
}

/// Modified-HBIM front equation with a Robin fixed face.
pub fn residual_p2h(z: f64, alpha: f64, ste: f64, bi: f64) -> f64 {
    let (a, s) = (alpha, ste);
    libm::pow(z, a + 4.0) * pow2(a) * (a + 1.0)
        + libm::pow(z, a + 3.0) * (pow2(a + 1.0) / bi) * (a + 1.0)
        + libm::pow(z, a + 2.0) * 3.0 * pow2(a + 1.0)
        + libm::pow(z, a + 1.0) * 3.0 * (pow2(a) / bi)
        + z * z * s * (a + 1.0)
        - 3.0 * s
}

/// RIM front equation with a Robin fixed face.
pub fn residual_p3h(z: f64, alpha: f64, ste: f64, bi: f64) -> f64 {
    let (a, s) = (alpha, ste);
    libm::pow(z, a + 4.0) * pow2(a + 1.0) * a
        + libm::pow(z, a + 3.0) * (pow2(a) * (2.0 + 5.0 * a) / bi)
        + libm::pow(z, a + 2.0) * 3.0 * pow2(a + 2.0)
        + libm::pow(z, a + 1.0) * 3.0 * pow2(a + 1.0) / bi
        + z * z * s * (2.0 + 3.0 * a)
        - 6.0 * s
}

/// Result of the classical HBIM, whose front equation may have several
/// roots in (0, 1). `solution.nu` is always the smallest root found;
/// `roots` lists all of them in increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalSolution {
    pub solution: SimilaritySolution,
    /// Every root of the front equation found in (0, 1), ascending.
    pub roots: Vec<f64>,
}

impl ClassicalSolution {
    /// True when the scan found more than one root in (0, 1); the
    /// returned solution is then only the smallest-root branch.
    pub fn has_multiple_roots(&self) -> bool {
        self.roots.len() > 1
    }
}

const SCAN_EPS: f64 = 1e-9;

/// All roots of `residual` in (0, 1), ascending.
fn roots_in_unit_interval<F: Fn(f64) -> f64>(residual: F) -> Result<Vec<f64>, SolveError> {
    let ctrl = SolveControl::tight();
    let brackets = scan_brackets(&residual, SCAN_EPS, 1.0, ctrl.scan_points);
    if brackets.is_empty() {
        return Err(SolveError::NoRoot {
            lo: SCAN_EPS,
            hi: 1.0,
        });
    }
    let mut roots = Vec::with_capacity(brackets.len());
    for b in &brackets {
        roots.push(
            bisect(&residual, b, &ctrl).map_err(|_| SolveError::NoRoot { lo: b.lo, hi: b.hi })?,
        );
    }
    Ok(roots)
}

/// Classical HBIM, Dirichlet face.
///
/// Existence in (0, 1) is guaranteed for `0 < Ste < 1`; other positive
/// Stefan numbers are attempted anyway and fail with
/// [`SolveError::NoRoot`] when the scan finds no root there.
pub fn solve_p1(p: &ProblemParams) -> Result<ClassicalSolution, SolveError> {
    p.validate()?;
    let roots = roots_in_unit_interval(|z| residual_p1(z, p.alpha, p.ste))?;
    let nu = roots[0];
    let (a, s) = (p.alpha, p.ste);
    let denom = s * (3.0 + (1.0 + a) * nu * nu);
    let coeff_a =
        -2.0 * (3.0 * pow2(a) * libm::pow(nu, a + 2.0) + s * (-3.0 + (1.0 + a) * nu * nu)) / denom;
    let coeff_b =
        3.0 * (pow2(a + 1.0) * libm::pow(nu, a + 2.0) + s * (-1.0 + (1.0 + a) * nu * nu)) / denom;
    Ok(ClassicalSolution {
        solution: SimilaritySolution {
            method: MethodKind::new(Scheme::ClassicalHbim, Boundary::Dirichlet),
            nu,
            coeff_a,
            coeff_b,
        },
        roots,
    })
}

/// Classical HBIM, Robin face. Needs a "large enough" Biot number for a
/// root to exist in (0, 1); too-small values surface as
/// [`SolveError::NoRoot`].
pub fn solve_p1h(p: &ProblemParams) -> Result<ClassicalSolution, SolveError> {
    p.validate()?;
    let bi = p.require_bi()?;
    let roots = roots_in_unit_interval(|z| residual_p1h(z, p.alpha, p.ste, bi))?;
    let nu = roots[0];
    let (coeff_a, coeff_b) = robin_balance_coefficients(p.alpha, p.ste, bi, nu);
    Ok(ClassicalSolution {
        solution: SimilaritySolution {
            method: MethodKind::new(Scheme::ClassicalHbim, Boundary::Robin),
            nu,
            coeff_a,
            coeff_b,
        },
        roots,
    })
}

/// Modified HBIM, Dirichlet face. The front equation has exactly one
/// positive root for any `Ste > 0`.
pub fn solve_p2(p: &ProblemParams) -> Result<SimilaritySolution, SolveError> {
    p.validate()?;
    let nu = solve_front_equation(|z| residual_p2(z, p.alpha, p.ste), p.ste)?[0];
    let coeff_a = pow2(p.alpha + 1.0) * libm::pow(nu, p.alpha + 2.0) / p.ste;
    Ok(SimilaritySolution {
        method: MethodKind::new(Scheme::ModifiedHbim, Boundary::Dirichlet),
        nu,
        coeff_a,
        coeff_b: 1.0 - coeff_a,
    })
}

/// Refined integral method, Dirichlet face; unique positive root.
pub fn solve_p3(p: &ProblemParams) -> Result<SimilaritySolution, SolveError> {
    p.validate()?;
    let nu = solve_front_equation(|z| residual_p3(z, p.alpha, p.ste), p.ste)?[0];
    let coeff_a = pow2(p.alpha + 1.0) * libm::pow(nu, p.alpha + 2.0) / p.ste;
    Ok(SimilaritySolution {
        method: MethodKind::new(Scheme::Rim, Boundary::Dirichlet),
        nu,
        coeff_a,
        coeff_b: 1.0 - coeff_a,
    })
}

/// Modified HBIM, Robin face; unique positive root for any `Ste, Bi > 0`,
/// increasing in Bi toward the Dirichlet root.
pub fn solve_p2h(p: &ProblemParams) -> Result<SimilaritySolution, SolveError> {
    p.validate()?;
    let bi = p.require_bi()?;
    let nu = solve_front_equation(|z| residual_p2h(z, p.alpha, p.ste, bi), p.ste)?[0];
    let coeff_a = pow2(p.alpha + 1.0) * libm::pow(nu, p.alpha + 2.0) / p.ste;
    let coeff_b = (2.0 * bi * nu - coeff_a * (1.0 + 2.0 * bi * nu)) / (2.0 * (1.0 + bi * nu));
    Ok(SimilaritySolution {
        method: MethodKind::new(Scheme::ModifiedHbim, Boundary::Robin),
        nu,
        coeff_a,
        coeff_b,
    })
}

/// Refined integral method, Robin face. The coefficient formulas come
/// from the doubly-integrated heat equation and the Robin closure, so
/// unlike `p2h` they are not Ste-normalized.
pub fn solve_p3h(p: &ProblemParams) -> Result<SimilaritySolution, SolveError> {
    p.validate()?;
    let bi = p.require_bi()?;
    let a = p.alpha;
    let nu = solve_front_equation(|z| residual_p3h(z, a, p.ste, bi), p.ste)?[0];
    let denom = 2.0 * a * nu * nu * nu + (5.0 * a + 2.0) / bi * nu * nu + 6.0 / bi + 12.0 * nu;
    let coeff_a = 12.0 * nu * (1.0 - nu * nu * (a / 2.0 + 1.0 / 3.0)) / denom;
    let coeff_b = 12.0 * nu * nu * nu * (2.0 * a / 3.0 + 1.0 / 3.0) / denom;
    Ok(SimilaritySolution {
        method: MethodKind::new(Scheme::Rim, Boundary::Robin),
        nu,
        coeff_a,
        coeff_b,
    })
}

/// A and B from the integrated heat equation plus the Robin closure;
/// shared by `p1h` and `p2h` (the methods differ only in the third
/// relation, which becomes the front equation).
fn robin_balance_coefficients(alpha: f64, ste: f64, bi: f64, nu: f64) -> (f64, f64) {
    let (a, s) = (alpha, ste);
    let denom = s * (nu * nu * (a + 1.0) + 2.0 / bi * nu * (a + 1.0) + 3.0);
    let coeff_a = (6.0 * s
        - 2.0 * s * nu * nu * (a + 1.0)
        - 3.0 / bi * pow2(a + 1.0) * libm::pow(nu, a + 1.0)
        - 3.0 * pow2(a + 1.0) * libm::pow(nu, a + 2.0))
        / denom;
    let coeff_b = (-3.0 * s
        + 3.0 * s * nu * nu * (a + 1.0)
        + 3.0 / bi * pow2(a) * libm::pow(nu, a + 1.0)
        + 3.0 * pow2(a + 1.0) * libm::pow(nu, a + 2.0))
        / denom;
    (coeff_a, coeff_b)
}

/// Quadratic-profile temperature at `(x, t)` for any integral-method or
/// least-squares solution.
pub fn eval_quadratic_temperature(
    p: &ProblemParams,
    sol: &SimilaritySolution,
    x: f64,
    t: f64,
) -> Result<f64, EvalError> {
    assert!(
        sol.method.scheme != Scheme::Exact,
        "quadratic evaluator called with an exact solution"
    );
    if !(t > 0.0) {
        return Err(EvalError::NonPositiveTime(t));
    }
    let front = free_boundary(p, sol, t);
    if !(0.0..=front).contains(&x) {
        return Err(EvalError::OutsideLiquidRegion { x, front });
    }
    let u = 1.0 - x / front;
    Ok(libm::pow(t, p.alpha / 2.0) * p.theta_inf * (sol.coeff_a * u + sol.coeff_b * u * u))
}
