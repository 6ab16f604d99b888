//! Similarity solutions for the one-phase Stefan problem with a
//! space-dependent latent heat.
//!
//! The melting of a semi-infinite slab `0 < x < s(t)` is governed by the
//! heat equation `T_t = a^2 T_xx` together with a Stefan condition in
//! which the latent heat per unit volume grows as a power of position,
//! `(gamma / rho) x^alpha`. Heat enters at the fixed face `x = 0` either
//! through a prescribed temperature `theta_inf t^(alpha/2)` (Dirichlet)
//! or through a convective flux proportional to the temperature defect
//! (Robin). Every solution here is of similarity type: the front moves as
//! `s(t) = 2 a nu sqrt(t)` and the problem reduces to finding the
//! dimensionless coefficient `nu` and two profile coefficients.
//!
//! Five solution families are implemented, each for both boundary
//! conditions:
//!
//! | scheme            | front equation                    | profile   |
//! |-------------------|-----------------------------------|-----------|
//! | [`exact`]         | transcendental, Kummer functions  | Kummer    |
//! | classical HBIM    | polynomial in `nu` (degree 2a+4)  | quadratic |
//! | modified HBIM     | polynomial in `nu`                | quadratic |
//! | refined (RIM)     | polynomial in `nu`                | quadratic |
//! | least squares     | minimizer of the L2 heat residual | quadratic |
//!
//! The integral methods and the least-squares profile live in [`hbim`]
//! and [`leastsq`]; [`report`] builds accuracy tables, Biot-convergence
//! sweeps and sampled temperature fields from them.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required); all
//! functions are pure and safe to call concurrently.

// NaN-rejecting comparisons (`!(x > 0.0)`) are used on purpose in the
// validators; a NaN parameter must fail validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod exact;
pub mod hbim;
pub mod leastsq;
pub mod problem;
pub mod report;
pub mod rootfind;
pub mod specfun;

pub use problem::{
    Boundary, EvalError, MethodKind, ParamError, ProblemParams, Scheme, SimilaritySolution,
    SolveError,
};
