#![allow(clippy::excessive_precision)] // oracle values kept at full printed precision
//! Exact-solver tests: reference front coefficients, classical
//! reductions, boundary identities and differential checks.

mod common;

use common::{assert_close, erf_series};
use stefan_core::exact::{
    eval_exact_temperature, free_boundary, similarity_temperature, solve_exact_dirichlet,
    solve_exact_robin,
};
use stefan_core::problem::{
    Boundary, EvalError, MethodKind, ProblemParams, Scheme, SimilaritySolution,
};
use stefan_core::specfun::{f_aux, SeriesControl};

fn dirichlet(alpha: f64, ste: f64) -> ProblemParams {
    ProblemParams::dirichlet(alpha, ste).unwrap()
}

fn robin(alpha: f64, ste: f64, bi: f64) -> ProblemParams {
    ProblemParams::robin(alpha, ste, bi).unwrap()
}

#[test]
fn dirichlet_reference_coefficients() {
    let s = solve_exact_dirichlet(&dirichlet(0.0, 0.5)).unwrap();
    assert_close(s.nu, 0.4648, 1e-4, "nu(0, 0.5) vs published");
    assert_close(s.nu, 0.46478592064624445, 1e-12, "nu(0, 0.5) vs oracle");
    assert_eq!(s.coeff_a, 1.0);

    let s = solve_exact_dirichlet(&dirichlet(5.0, 0.1)).unwrap();
    assert_close(s.nu, 0.3793, 1e-4, "nu(5, 0.1) vs published");
    assert_close(s.nu, 0.37932746603856801, 1e-12, "nu(5, 0.1) vs oracle");
}

#[test]
fn alpha_zero_reduces_to_neumann_relation() {
    // at alpha = 0 the front equation collapses to the classical
    // sqrt(pi) nu e^(nu^2) erf(nu) = Ste; erf from its Maclaurin series
    for &ste in &[0.1, 0.5, 1.0] {
        let nu = solve_exact_dirichlet(&dirichlet(0.0, ste)).unwrap().nu;
        let lhs = std::f64::consts::PI.sqrt() * nu * (nu * nu).exp() * erf_series(nu);
        assert_close(lhs, ste, 1e-10, "Neumann relation");
    }
}

#[test]
fn robin_reference_coefficients() {
    let s = solve_exact_robin(&robin(0.0, 0.5, 10.0)).unwrap();
    assert_close(s.nu, 0.4422, 1e-4, "nu_h(0, 0.5, 10) vs published");
    assert_close(
        s.nu,
        0.44217808830107265,
        1e-12,
        "nu_h(0, 0.5, 10) vs oracle",
    );

    // the published alpha = 5 / alpha = 0.5 convective tables carry each
    // other's captions; both Bi = 1 values are pinned here by the
    // defining equation instead
    let s = solve_exact_robin(&robin(5.0, 0.5, 1.0)).unwrap();
    assert_close(s.nu, 0.4072901244895686, 1e-12, "nu_h(5, 0.5, 1) vs oracle");
    let s = solve_exact_robin(&robin(0.5, 0.5, 1.0)).unwrap();
    assert_close(s.nu, 0.3274, 1e-4, "nu_h(0.5, 0.5, 1) vs published");
    assert_close(
        s.nu,
        0.32738610729329403,
        1e-12,
        "nu_h(0.5, 0.5, 1) vs oracle",
    );
}

#[test]
fn robin_approaches_dirichlet_for_large_biot() {
    let nu_d = solve_exact_dirichlet(&dirichlet(0.0, 0.5)).unwrap().nu;
    let nu_h = solve_exact_robin(&robin(0.0, 0.5, 1e6)).unwrap().nu;
    assert_close(nu_h, nu_d, 1e-5, "Bi = 1e6 limit");
}

#[test]
fn robin_monotone_in_biot_below_dirichlet() {
    for &(alpha, ste) in &[(0.0, 0.5), (1.0, 0.3), (5.0, 0.5)] {
        let nu_d = solve_exact_dirichlet(&dirichlet(alpha, ste)).unwrap().nu;
        let mut prev = 0.0;
        for &bi in &[1.0, 10.0, 100.0, 1e3, 1e4] {
            let nu_h = solve_exact_robin(&robin(alpha, ste, bi)).unwrap().nu;
            assert!(nu_h > prev, "nu_h not increasing at Bi={bi}");
            assert!(
                nu_h < nu_d,
                "nu_h above the Dirichlet coefficient at Bi={bi}"
            );
            prev = nu_h;
        }
    }
}

#[test]
fn front_equation_residual_at_root() {
    let series = SeriesControl::default();
    for &alpha in &[0.0, 0.5, 1.0, 2.0, 5.0] {
        for i in 1..=10 {
            let ste = i as f64 / 10.0;
            let nu = solve_exact_dirichlet(&dirichlet(alpha, ste)).unwrap().nu;
            let lhs = ste / 2f64.powf(alpha + 1.0) * f_aux(nu, alpha, &series).unwrap();
            let rhs = nu.powf(alpha + 1.0);
            assert!(
                (lhs - rhs).abs() <= 1e-10,
                "residual {:.2e} at alpha={alpha}, ste={ste}",
                (lhs - rhs).abs()
            );
        }
    }
}

#[test]
fn nu_stays_inside_unit_interval_for_small_stefan() {
    for &alpha in &[0.0, 0.5, 2.0, 5.0, 11.0] {
        for i in 1..10 {
            let ste = i as f64 / 10.0;
            let nu = solve_exact_dirichlet(&dirichlet(alpha, ste)).unwrap().nu;
            assert!(
                nu > 0.0 && nu < 1.0,
                "nu = {nu} at alpha={alpha}, ste={ste}"
            );
        }
    }
}

#[test]
fn temperature_vanishes_at_front_and_matches_fixed_face() {
    let p = dirichlet(5.0, 0.5).with_scales(30.0, 1.0).unwrap();
    let sol = solve_exact_dirichlet(&p).unwrap();
    for &t in &[0.2, 1.0, 4.0] {
        let front = free_boundary(&p, &sol, t);
        let at_front = eval_exact_temperature(&p, &sol, front, t).unwrap();
        let scale = p.theta_inf * t.powf(p.alpha / 2.0);
        assert!(at_front.abs() <= 1e-10 * scale, "front value {at_front}");
        let at_face = eval_exact_temperature(&p, &sol, 0.0, t).unwrap();
        assert_close(at_face, scale, 1e-10 * scale, "fixed face value");
    }
}

#[test]
fn robin_flux_identity_at_fixed_face() {
    // k T_x(0,t) = (h / sqrt(t)) [T(0,t) - theta_inf t^(alpha/2)] with
    // k = a = 1, so h = Bi; checked by a central difference of step
    // 1e-6 s(1) across the face
    let p = robin(0.0, 0.5, 10.0);
    let sol = solve_exact_robin(&p).unwrap();
    let bi = 10.0;
    let h = 1e-6 * free_boundary(&p, &sol, 1.0);
    let tp = similarity_temperature(&p, &sol, h, 1.0).unwrap();
    let tm = similarity_temperature(&p, &sol, -h, 1.0).unwrap();
    let flux = (tp - tm) / (2.0 * h);
    let face = eval_exact_temperature(&p, &sol, 0.0, 1.0).unwrap();
    assert!(
        face > 0.0 && face < p.theta_inf,
        "face temperature out of (0, theta_inf)"
    );
    assert_close(
        flux,
        bi * (face - p.theta_inf),
        1e-6 * flux.abs(),
        "Robin flux",
    );
}

#[test]
fn robin_coefficients_satisfy_face_identity() {
    // the normalized coefficients obey B = 2 Bi (A - 1), the similarity
    // image of the convective condition
    for &(alpha, ste, bi) in &[(0.0, 0.5, 10.0), (5.0, 0.5, 1.0), (0.5, 0.5, 7.0)] {
        let s = solve_exact_robin(&robin(alpha, ste, bi)).unwrap();
        assert_close(
            s.coeff_b,
            2.0 * bi * (s.coeff_a - 1.0),
            1e-12 * s.coeff_b.abs(),
            "B = 2 Bi (A - 1)",
        );
    }
}

#[test]
fn free_boundary_values() {
    let p = dirichlet(0.0, 0.5);
    let half = SimilaritySolution {
        method: MethodKind::new(Scheme::Exact, Boundary::Dirichlet),
        nu: 0.5,
        coeff_a: 1.0,
        coeff_b: -0.5,
    };
    assert_eq!(free_boundary(&p, &half, 1.0), 1.0);
    let published = SimilaritySolution { nu: 0.4648, ..half };
    assert_close(free_boundary(&p, &published, 4.0), 1.8592, 1e-12, "s(4)");
    assert_eq!(free_boundary(&p, &half, 0.0), 0.0);
}

#[test]
fn eval_rejects_out_of_domain_points() {
    let p = dirichlet(0.0, 0.5);
    let sol = solve_exact_dirichlet(&p).unwrap();
    assert!(matches!(
        eval_exact_temperature(&p, &sol, -0.1, 1.0),
        Err(EvalError::OutsideLiquidRegion { .. })
    ));
    let front = free_boundary(&p, &sol, 1.0);
    assert!(matches!(
        eval_exact_temperature(&p, &sol, front * 1.01, 1.0),
        Err(EvalError::OutsideLiquidRegion { .. })
    ));
    assert!(matches!(
        eval_exact_temperature(&p, &sol, 0.1, 0.0),
        Err(EvalError::NonPositiveTime(_))
    ));
}

#[test]
fn heat_equation_spot_check() {
    // light version of the acceptance-test differential check
    let p = dirichlet(1.0, 0.5);
    let sol = solve_exact_dirichlet(&p).unwrap();
    let t = 1.0;
    let front = free_boundary(&p, &sol, t);
    let hx = 1e-4 * front;
    let ht = 1e-5 * t;
    let x = 0.4 * front;
    let tt = (similarity_temperature(&p, &sol, x, t + ht).unwrap()
        - similarity_temperature(&p, &sol, x, t - ht).unwrap())
        / (2.0 * ht);
    let txx = (similarity_temperature(&p, &sol, x + hx, t).unwrap()
        - 2.0 * similarity_temperature(&p, &sol, x, t).unwrap()
        + similarity_temperature(&p, &sol, x - hx, t).unwrap())
        / (hx * hx);
    assert!(
        (tt - p.a_diff * p.a_diff * txx).abs() <= 1e-6 * p.theta_inf,
        "heat equation residual {:.2e}",
        (tt - txx).abs()
    );
}
