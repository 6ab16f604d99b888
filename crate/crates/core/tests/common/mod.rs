//! Shared helpers and reference data for the integration tests.
#![allow(dead_code)]

pub mod fixtures;

/// Asserts `|got - want| <= tol` with a readable failure message.
pub fn assert_close(got: f64, want: f64, tol: f64, ctx: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{ctx}: got {got}, want {want} (diff {:.3e}, tol {:.1e})",
        (got - want).abs(),
        tol
    );
}

/// Maclaurin-series error function, the independent oracle for the
/// Kummer identities: erf(x) = 2/sqrt(pi) sum (-1)^n x^(2n+1) / (n! (2n+1)).
pub fn erf_series(x: f64) -> f64 {
    let mut term = x;
    let mut sum = x;
    let mut n = 1.0_f64;
    while term.abs() > 1e-18 {
        term *= -x * x / n;
        sum += term / (2.0 * n + 1.0);
        n += 1.0;
    }
    2.0 / std::f64::consts::PI.sqrt() * sum
}

/// Naive Kummer series in f64, summed directly with no transformation:
/// returns the value together with the sum of term magnitudes (the
/// cancellation budget that bounds its own rounding error).
pub fn kummer_naive(a: f64, b: f64, z: f64) -> (f64, f64) {
    let mut sum = 1.0_f64;
    let mut budget = 1.0_f64;
    let mut term = 1.0_f64;
    for s in 0..1000 {
        let sf = s as f64;
        term *= (a + sf) / ((b + sf) * (sf + 1.0)) * z;
        sum += term;
        budget += term.abs();
        if term.abs() <= 1e-17 * budget {
            break;
        }
    }
    (sum, budget)
}
