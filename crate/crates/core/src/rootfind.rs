//! Bracketing root finder and scalar minimizer.
//!
//! Every front equation in this crate is solved the same way: a uniform
//! scan locates sign changes, bisection polishes each bracket. Bisection
//! rather than Newton because the residuals involve real powers
//! `z^(2 alpha + 4)` with real `alpha`; robustness beats speed at this
//! scale. Minimization is a coarse scan followed by golden-section
//! refinement.

use alloc::vec::Vec;
use core::fmt;

/// An interval on which a function changes sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo < hi, "bracket requires lo < hi, got [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Tolerances for root finding and minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveControl {
    /// Absolute tolerance on the argument.
    pub abs_tol: f64,
    /// Iteration cap for the refinement loops.
    pub max_iter: usize,
    /// Grid size for bracketing and minimization scans.
    pub scan_points: usize,
}

impl SolveControl {
    pub fn new(abs_tol: f64, max_iter: usize, scan_points: usize) -> Self {
        assert!(abs_tol > 0.0, "abs_tol must be positive, got {abs_tol}");
        assert!(max_iter >= 50, "max_iter too small: {max_iter}");
        assert!(scan_points >= 100, "scan_points too small: {scan_points}");
        Self {
            abs_tol,
            max_iter,
            scan_points,
        }
    }

    /// Control used by the solvers themselves: refine until f64 runs out
    /// of resolution, so algebraic identities between the returned
    /// coefficients hold to near machine precision.
    pub(crate) fn tight() -> Self {
        Self {
            abs_tol: 1e-15,
            max_iter: 200,
            scan_points: 2000,
        }
    }
}

impl Default for SolveControl {
    /// `abs_tol = 1e-12`, `max_iter = 200`, `scan_points = 2000`; 2000
    /// points resolve the closely spaced roots the classical-HBIM
    /// residual can develop on (0, 3).
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_iter: 200,
            scan_points: 2000,
        }
    }
}

/// The bracket handed to [`bisect`] does not straddle a sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BadBracket {
    pub lo: f64,
    pub hi: f64,
}

impl fmt::Display for BadBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no sign change on [{}, {}]", self.lo, self.hi)
    }
}

/// Scans `[lo, hi]` on a uniform grid of `scan_points` subintervals and
/// returns every subinterval where `f` changes sign, in increasing
/// order. Returns an empty list when no sign change is found. NaN
/// values (e.g. from a failed special-function evaluation) never form a
/// bracket.
pub fn scan_brackets<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    scan_points: usize,
) -> Vec<Bracket> {
    assert!(lo < hi, "scan requires lo < hi, got [{lo}, {hi}]");
    assert!(scan_points >= 1);
    let n = scan_points;
    let mut out = Vec::new();
    let mut x_prev = lo;
    let mut f_prev = f(lo);
    for i in 1..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        let fx = f(x);
        if f_prev == 0.0 || f_prev * fx < 0.0 {
            out.push(Bracket { lo: x_prev, hi: x });
        }
        x_prev = x;
        f_prev = fx;
    }
    out
}

/// Bisection on a sign-changing bracket.
///
/// Deterministic; refines until the bracket width drops below
/// `ctrl.abs_tol`, `ctrl.max_iter` halvings have run, or the midpoint
/// can no longer be distinguished from the endpoints in f64.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    bracket: &Bracket,
    ctrl: &SolveControl,
) -> Result<f64, BadBracket> {
    let (mut lo, mut hi) = (bracket.lo, bracket.hi);
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo * f_hi < 0.0) {
        return Err(BadBracket { lo, hi });
    }
    let lo_positive = f_lo > 0.0;
    for _ in 0..ctrl.max_iter {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid > 0.0) == lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= ctrl.abs_tol {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Minimizes `f` over `[lo, hi]`: coarse scan on `ctrl.scan_points`
/// subintervals, then golden-section refinement of the best cell down to
/// `ctrl.abs_tol`. Ties are broken toward the smallest argument.
pub fn minimize_scalar<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, ctrl: &SolveControl) -> f64 {
    assert!(lo < hi, "minimize requires lo < hi, got [{lo}, {hi}]");
    let n = ctrl.scan_points;
    let grid = |i: usize| lo + (hi - lo) * i as f64 / n as f64;
    let mut best_i = 0usize;
    let mut best = f(lo);
    for i in 1..=n {
        let v = f(grid(i));
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let a = grid(best_i.saturating_sub(1));
    let b = grid(if best_i + 1 > n { n } else { best_i + 1 });
    golden_section(f, a, b, ctrl)
}

/// Golden-section search on a bracket assumed to contain a minimum.
fn golden_section<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, ctrl: &SolveControl) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    if a >= b {
        return a;
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..ctrl.max_iter {
        if b - a <= ctrl.abs_tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        if !(a < c && c < d && d < b) {
            break; // interval exhausted in f64
        }
    }
    0.5 * (a + b)
}
