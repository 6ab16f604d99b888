//! Accuracy tables, Biot-convergence sweeps and sampled temperature
//! fields.
//!
//! A table row compares the exact front coefficient against any subset
//! of the approximate methods at one sweep value (Ste for Dirichlet
//! tables, Bi for convective ones) and records the percentage error of
//! each. Rows are independent of each other, and a method failing on one
//! row degrades that cell to an error note instead of aborting the
//! table.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::exact::{
    eval_exact_temperature, free_boundary, solve_exact_dirichlet, solve_exact_robin,
};
use crate::hbim::{
    eval_quadratic_temperature, solve_p1, solve_p1h, solve_p2, solve_p2h, solve_p3, solve_p3h,
};
use crate::leastsq::{solve_p4, solve_p4h};
use crate::problem::{
    Boundary, EvalError, MethodKind, ProblemParams, Scheme, SimilaritySolution, SolveError,
};

/// Percentage relative error `100 |nu_exact - nu_approx| / nu_exact`.
pub fn error_pct(nu_exact: f64, nu_approx: f64) -> f64 {
    assert!(
        nu_exact > 0.0,
        "error_pct requires nu_exact > 0, got {nu_exact}"
    );
    100.0 * (nu_exact - nu_approx).abs() / nu_exact
}

/// One method's entry in a table row. `nu` and `pct_error` are absent
/// when the solver failed; `note` then carries the failure text. A
/// populated cell may still carry a note (e.g. a multiple-root warning).
#[derive(Debug, Clone, PartialEq)]
pub struct MethodCell {
    pub method: MethodKind,
    pub nu: Option<f64>,
    pub pct_error: Option<f64>,
    pub note: Option<String>,
}

/// One table row: sweep value, exact coefficient, per-method entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    /// Ste for Dirichlet tables, Bi for convective ones.
    pub sweep_value: f64,
    pub nu_exact: f64,
    pub entries: Vec<MethodCell>,
}

/// A table or sweep failed outright at one sweep value (only the exact
/// reference solver can do that; method failures stay inside their
/// cells).
#[derive(Debug, Clone, PartialEq)]
pub struct SweepError {
    pub sweep_value: f64,
    pub error: SolveError,
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at sweep value {}: {}", self.sweep_value, self.error)
    }
}

/// Solves one approximate method, returning the solution plus an
/// optional warning note.
fn solve_method(
    p: &ProblemParams,
    kind: MethodKind,
) -> Result<(SimilaritySolution, Option<String>), SolveError> {
    match (kind.scheme, kind.boundary) {
        (Scheme::Exact, Boundary::Dirichlet) => Ok((solve_exact_dirichlet(p)?, None)),
        (Scheme::Exact, Boundary::Robin) => Ok((solve_exact_robin(p)?, None)),
        (Scheme::ClassicalHbim, boundary) => {
            let c = if boundary == Boundary::Dirichlet {
                solve_p1(p)?
            } else {
                solve_p1h(p)?
            };
            let note = c
                .has_multiple_roots()
                .then(|| format!("{} roots in (0, 1); smallest selected", c.roots.len()));
            Ok((c.solution, note))
        }
        (Scheme::ModifiedHbim, Boundary::Dirichlet) => Ok((solve_p2(p)?, None)),
        (Scheme::ModifiedHbim, Boundary::Robin) => Ok((solve_p2h(p)?, None)),
        (Scheme::Rim, Boundary::Dirichlet) => Ok((solve_p3(p)?, None)),
        (Scheme::Rim, Boundary::Robin) => Ok((solve_p3h(p)?, None)),
        (Scheme::LeastSquares, boundary) => {
            let l = if boundary == Boundary::Dirichlet {
                solve_p4(p)?
            } else {
                solve_p4h(p)?
            };
            let note = (l.closed_form_hypotheses == Some(false))
                .then(|| "closed-root hypotheses violated; minimizer returned".to_string());
            Ok((l.solution, note))
        }
    }
}

fn build_row(
    p: &ProblemParams,
    sweep_value: f64,
    boundary: Boundary,
    methods: &[Scheme],
) -> Result<ErrorRow, SweepError> {
    let exact = match boundary {
        Boundary::Dirichlet => solve_exact_dirichlet(p),
        Boundary::Robin => solve_exact_robin(p),
    }
    .map_err(|error| SweepError { sweep_value, error })?;

    let entries = methods
        .iter()
        .map(|&scheme| {
            assert!(
                scheme != Scheme::Exact,
                "exact is the reference column, not a table method"
            );
            let method = MethodKind::new(scheme, boundary);
            match solve_method(p, method) {
                Ok((sol, note)) => MethodCell {
                    method,
                    nu: Some(sol.nu),
                    pct_error: Some(error_pct(exact.nu, sol.nu)),
                    note,
                },
                Err(e) => MethodCell {
                    method,
                    nu: None,
                    pct_error: None,
                    note: Some(e.to_string()),
                },
            }
        })
        .collect();

    Ok(ErrorRow {
        sweep_value,
        nu_exact: exact.nu,
        entries,
    })
}

/// Accuracy table for the Dirichlet problem: one row per Stefan number.
pub fn table_dirichlet(
    alpha: f64,
    ste_list: &[f64],
    methods: &[Scheme],
) -> Result<Vec<ErrorRow>, SweepError> {
    ste_list
        .iter()
        .map(|&ste| {
            let p = ProblemParams::dirichlet(alpha, ste).map_err(|e| SweepError {
                sweep_value: ste,
                error: e.into(),
            })?;
            build_row(&p, ste, Boundary::Dirichlet, methods)
        })
        .collect()
}

/// Accuracy table for the Robin problem: one row per Biot number at
/// fixed `(alpha, Ste)`.
pub fn table_convective(
    alpha: f64,
    ste: f64,
    bi_list: &[f64],
    methods: &[Scheme],
) -> Result<Vec<ErrorRow>, SweepError> {
    bi_list
        .iter()
        .map(|&bi| {
            let p = ProblemParams::robin(alpha, ste, bi).map_err(|e| SweepError {
                sweep_value: bi,
                error: e.into(),
            })?;
            build_row(&p, bi, Boundary::Robin, methods)
        })
        .collect()
}

/// One point of a Biot-convergence sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergencePoint {
    pub bi: f64,
    /// Robin-side front coefficient at this Bi.
    pub nu_h: f64,
    /// Front coefficient of the matching Dirichlet problem.
    pub nu_limit: f64,
    /// `|nu_h - nu_limit|`; non-increasing along an increasing Bi grid.
    pub gap: f64,
}

/// Sweeps the Robin solver of `scheme` over an increasing Bi grid and
/// reports the gap to its Dirichlet limit. A failure of the limit solve
/// is reported with sweep value `+inf`.
pub fn convergence_sweep(
    alpha: f64,
    ste: f64,
    bi_grid: &[f64],
    scheme: Scheme,
) -> Result<Vec<ConvergencePoint>, SweepError> {
    assert!(
        bi_grid.windows(2).all(|w| w[0] < w[1]),
        "bi_grid must be strictly increasing"
    );
    let dirichlet = ProblemParams::dirichlet(alpha, ste).map_err(|e| SweepError {
        sweep_value: f64::INFINITY,
        error: e.into(),
    })?;
    let nu_limit = solve_method(&dirichlet, MethodKind::new(scheme, Boundary::Dirichlet))
        .map_err(|error| SweepError {
            sweep_value: f64::INFINITY,
            error,
        })?
        .0
        .nu;
    bi_grid
        .iter()
        .map(|&bi| {
            let p = ProblemParams::robin(alpha, ste, bi).map_err(|e| SweepError {
                sweep_value: bi,
                error: e.into(),
            })?;
            let nu_h = solve_method(&p, MethodKind::new(scheme, Boundary::Robin))
                .map_err(|error| SweepError {
                    sweep_value: bi,
                    error,
                })?
                .0
                .nu;
            Ok(ConvergencePoint {
                bi,
                nu_h,
                nu_limit,
                gap: (nu_h - nu_limit).abs(),
            })
        })
        .collect()
}

/// Temperature samples over an (x, t) rectangle. Cells beyond the front
/// are `None`; `0` would be ambiguous with the phase-change temperature.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldGrid {
    pub method: MethodKind,
    pub x_values: Vec<f64>,
    pub t_values: Vec<f64>,
    /// One row per `t_values` entry, one column per `x_values` entry.
    pub temperature: Vec<Vec<Option<f64>>>,
    /// Front position `s(t)` per time row.
    pub front_position: Vec<f64>,
}

/// Samples the temperature field of `sol` on a uniform `nx` x `nt` grid
/// covering `[0, x_max] x [t_range.0, t_range.1]`, using the evaluator
/// that matches the solution's scheme.
pub fn sample_field(
    p: &ProblemParams,
    sol: &SimilaritySolution,
    x_max: f64,
    t_range: (f64, f64),
    nx: usize,
    nt: usize,
) -> Result<FieldGrid, EvalError> {
    assert!(nx >= 2 && nt >= 2, "grid needs at least 2 samples per axis");
    assert!(x_max > 0.0, "x_max must be positive");
    let (t0, t1) = t_range;
    if !(t0 > 0.0) {
        return Err(EvalError::NonPositiveTime(t0));
    }
    assert!(t0 <= t1, "t_range must be ordered");

    let x_values: Vec<f64> = (0..nx)
        .map(|i| x_max * i as f64 / (nx - 1) as f64)
        .collect();
    let t_values: Vec<f64> = (0..nt)
        .map(|j| t0 + (t1 - t0) * j as f64 / (nt - 1) as f64)
        .collect();

    let mut temperature = Vec::with_capacity(nt);
    let mut front_position = Vec::with_capacity(nt);
    for &t in &t_values {
        let front = free_boundary(p, sol, t);
        front_position.push(front);
        let mut row = Vec::with_capacity(nx);
        for &x in &x_values {
            if x <= front {
                let value = match sol.method.scheme {
                    Scheme::Exact => eval_exact_temperature(p, sol, x, t)?,
                    _ => eval_quadratic_temperature(p, sol, x, t)?,
                };
                row.push(Some(value));
            } else {
                row.push(None);
            }
        }
        temperature.push(row);
    }
    Ok(FieldGrid {
        method: sol.method,
        x_values,
        t_values,
        temperature,
        front_position,
    })
}
