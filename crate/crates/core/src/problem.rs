//! Problem parameters, method identifiers and the shared solution type.

use core::fmt;

use crate::specfun::SpecFunError;

/// Approximation scheme behind a similarity solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Scheme {
    /// Exact solution in terms of Kummer functions.
    Exact,
    /// Classical heat balance integral method (replaces both the heat
    /// equation and the Stefan condition).
    ClassicalHbim,
    /// Modified integral method (replaces only the heat equation).
    ModifiedHbim,
    /// Refined integral method (double spatial integral of the heat
    /// equation).
    Rim,
    /// Quadratic profile whose front coefficient minimizes the integrated
    /// squared heat-equation residual.
    LeastSquares,
}

/// Condition imposed at the fixed face `x = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// Prescribed temperature `theta_inf t^(alpha/2)`.
    Dirichlet,
    /// Convective flux `k T_x(0,t) = (h/sqrt(t)) [T(0,t) - theta_inf t^(alpha/2)]`.
    Robin,
}

/// One of the ten solvable problem variants: scheme x boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MethodKind {
    pub scheme: Scheme,
    pub boundary: Boundary,
}

impl MethodKind {
    pub const fn new(scheme: Scheme, boundary: Boundary) -> Self {
        Self { scheme, boundary }
    }

    /// Short stable name used by the CLI and in table headers: `exact`,
    /// `p1`, `p2`, `p3`, `p4` for Dirichlet problems and `exacth`,
    /// `p1h`, `p2h`, `p3h`, `p4h` for their Robin counterparts.
    pub fn name(&self) -> &'static str {
        match (self.scheme, self.boundary) {
            (Scheme::Exact, Boundary::Dirichlet) => "exact",
            (Scheme::ClassicalHbim, Boundary::Dirichlet) => "p1",
            (Scheme::ModifiedHbim, Boundary::Dirichlet) => "p2",
            (Scheme::Rim, Boundary::Dirichlet) => "p3",
            (Scheme::LeastSquares, Boundary::Dirichlet) => "p4",
            (Scheme::Exact, Boundary::Robin) => "exacth",
            (Scheme::ClassicalHbim, Boundary::Robin) => "p1h",
            (Scheme::ModifiedHbim, Boundary::Robin) => "p2h",
            (Scheme::Rim, Boundary::Robin) => "p3h",
            (Scheme::LeastSquares, Boundary::Robin) => "p4h",
        }
    }

    /// Inverse of [`MethodKind::name`].
    pub fn parse(name: &str) -> Option<Self> {
        let (scheme, boundary) = match name {
            "exact" => (Scheme::Exact, Boundary::Dirichlet),
            "p1" => (Scheme::ClassicalHbim, Boundary::Dirichlet),
            "p2" => (Scheme::ModifiedHbim, Boundary::Dirichlet),
            "p3" => (Scheme::Rim, Boundary::Dirichlet),
            "p4" => (Scheme::LeastSquares, Boundary::Dirichlet),
            "exacth" => (Scheme::Exact, Boundary::Robin),
            "p1h" => (Scheme::ClassicalHbim, Boundary::Robin),
            "p2h" => (Scheme::ModifiedHbim, Boundary::Robin),
            "p3h" => (Scheme::Rim, Boundary::Robin),
            "p4h" => (Scheme::LeastSquares, Boundary::Robin),
            _ => return None,
        };
        Some(Self { scheme, boundary })
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dimensionless and scale parameters of the melting problem.
///
/// The physical constants k, rho, c and gamma never enter individually:
/// a solution depends on them only through the generalized Stefan number
/// `Ste = k theta_inf / (gamma a^(alpha+2))` and, for Robin problems, the
/// Biot number `Bi = a h / k`. `theta_inf` and `a_diff` are pure output
/// scales for temperatures and lengths.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProblemParams {
    /// Exponent of the space-dependent latent heat, `alpha >= 0`.
    pub alpha: f64,
    /// Generalized Stefan number, `Ste > 0`.
    pub ste: f64,
    /// Biot number; required by the Robin-side solvers.
    pub bi: Option<f64>,
    /// Temperature scale `theta_inf > 0` (defaults to 1).
    pub theta_inf: f64,
    /// Diffusion length scale `a > 0` (defaults to 1).
    pub a_diff: f64,
}

impl ProblemParams {
    /// Parameters for a Dirichlet problem with unit scales.
    pub fn dirichlet(alpha: f64, ste: f64) -> Result<Self, ParamError> {
        let p = Self {
            alpha,
            ste,
            bi: None,
            theta_inf: 1.0,
            a_diff: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    /// Parameters for a Robin problem with unit scales.
    pub fn robin(alpha: f64, ste: f64, bi: f64) -> Result<Self, ParamError> {
        let p = Self {
            alpha,
            ste,
            bi: Some(bi),
            theta_inf: 1.0,
            a_diff: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    /// Replaces the temperature and length scales.
    pub fn with_scales(mut self, theta_inf: f64, a_diff: f64) -> Result<Self, ParamError> {
        self.theta_inf = theta_inf;
        self.a_diff = a_diff;
        self.validate()?;
        Ok(self)
    }

    /// Checks every field invariant.
    pub fn validate(&self) -> Result<(), ParamError> {
        if !(self.alpha >= 0.0) {
            return Err(ParamError::AlphaNegative(self.alpha));
        }
        if !(self.ste > 0.0) {
            return Err(ParamError::SteNotPositive(self.ste));
        }
        if let Some(bi) = self.bi {
            if !(bi > 0.0) {
                return Err(ParamError::BiNotPositive(bi));
            }
        }
        if !(self.theta_inf > 0.0) {
            return Err(ParamError::ThetaInfNotPositive(self.theta_inf));
        }
        if !(self.a_diff > 0.0) {
            return Err(ParamError::DiffusionScaleNotPositive(self.a_diff));
        }
        Ok(())
    }

    pub(crate) fn require_bi(&self) -> Result<f64, SolveError> {
        self.bi.ok_or(SolveError::MissingBiot)
    }
}

/// A similarity solution: the front coefficient plus the two profile
/// coefficients, normalized by `theta_inf`.
///
/// For every method the free boundary is `s(t) = 2 a_diff nu sqrt(t)`.
/// Quadratic-profile methods evaluate the temperature as
/// `t^(alpha/2) theta_inf [A (1 - x/s) + B (1 - x/s)^2]`; the exact
/// solution uses Kummer functions of the similarity variable instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimilaritySolution {
    pub method: MethodKind,
    /// Dimensionless front coefficient, `nu > 0`.
    pub nu: f64,
    /// Profile coefficient A divided by `theta_inf`.
    pub coeff_a: f64,
    /// Profile coefficient B divided by `theta_inf`.
    pub coeff_b: f64,
}

/// A parameter field violates its invariant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ParamError {
    AlphaNegative(f64),
    SteNotPositive(f64),
    BiNotPositive(f64),
    ThetaInfNotPositive(f64),
    DiffusionScaleNotPositive(f64),
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AlphaNegative(v) => write!(f, "alpha must be >= 0, got {v}"),
            Self::SteNotPositive(v) => write!(f, "Ste must be > 0, got {v}"),
            Self::BiNotPositive(v) => write!(f, "Bi must be > 0, got {v}"),
            Self::ThetaInfNotPositive(v) => write!(f, "theta_inf must be > 0, got {v}"),
            Self::DiffusionScaleNotPositive(v) => write!(f, "a_diff must be > 0, got {v}"),
        }
    }
}

/// A solver could not produce a solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolveError {
    Params(ParamError),
    /// A Robin-side solver was called without a Biot number.
    MissingBiot,
    /// The bracketing scan found no sign change on the search interval.
    NoRoot {
        lo: f64,
        hi: f64,
    },
    SpecFun(SpecFunError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Params(e) => write!(f, "invalid parameters: {e}"),
            Self::MissingBiot => f.write_str("Robin problem requires a Biot number"),
            Self::NoRoot { lo, hi } => {
                write!(f, "no sign change found on ({lo}, {hi})")
            }
            Self::SpecFun(e) => write!(f, "special function evaluation failed: {e}"),
        }
    }
}

impl From<ParamError> for SolveError {
    fn from(e: ParamError) -> Self {
        Self::Params(e)
    }
}

impl From<SpecFunError> for SolveError {
    fn from(e: SpecFunError) -> Self {
        Self::SpecFun(e)
    }
}

/// A temperature evaluation was requested outside the liquid region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalError {
    NonPositiveTime(f64),
    /// `x` lies outside `[0, s(t)]`.
    OutsideLiquidRegion {
        x: f64,
        front: f64,
    },
    SpecFun(SpecFunError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPositiveTime(t) => write!(f, "time must be positive, got {t}"),
            Self::OutsideLiquidRegion { x, front } => {
                write!(f, "x = {x} lies outside the liquid region [0, {front}]")
            }
            Self::SpecFun(e) => write!(f, "special function evaluation failed: {e}"),
        }
    }
}

impl From<SpecFunError> for EvalError {
    fn from(e: SpecFunError) -> Self {
        Self::SpecFun(e)
    }
}
