use cauchy_semiaxis::gfun::{
    count_zeros, g_eval, g_fourier_oracle, g_hat, g_hat_all, g_normalized, ln_norm, ode_residual, v_eval, zeros, Basis,
};
use cauchy_semiaxis::pv::{integral_semiaxis, pv_fullaxis, PvConfig};
use cauchy_semiaxis::specfun::hermite;

/// ∫_0^∞ G_a G_b ξ^{−1/2} dξ = 2∫_0^∞ ĝ ĝ dx over the x = √ξ axis.
fn gram_entry(basis: Basis, a: usize, b: usize) -> f64 {
    let (i, j) = (basis.index(a), basis.index(b));
    let cfg = PvConfig::default().with_tol(1e-10);
    let v: f64 = integral_semiaxis(|x: f64| g_hat(i, x).unwrap() * g_hat(j, x).unwrap(), &cfg).unwrap();
    2.0 * v
}

#[test]
fn gram_matrices_are_identity() {
    for basis in [Basis::First, Basis::Second] {
        for a in 0..=4 {
            for b in a..=4 {
                let g = gram_entry(basis, a, b);
                let target = if a == b { 1.0 } else { 0.0 };
                assert!((g - target).abs() <= 1e-5, "{basis:?} ({a},{b}): {g}");
            }
        }
    }
}

#[test]
fn closed_form_against_fourier_oracle() {
    for n in 0..=12 {
        for &x in &[0.05f64, 0.7, 1.9, 3.3, 6.0, 11.0, 25.0] {
            let closed = g_eval(n, x).unwrap();
            let oracle = g_fourier_oracle(n, x, 1e-13).unwrap();
            let scale = ln_norm::<f64>(n).exp();
            assert!((closed - oracle).abs() < 1e-10 * scale, "n={n} x={x}: {closed} vs {oracle}");
        }
    }
}

#[test]
fn closed_form_against_pv_oracle() {
    let cfg = PvConfig::default().with_tol(1e-11);
    for n in [0usize, 2, 5, 7] {
        for &x in &[0.5f64, 1.0, 2.0, 5.0] {
            let direct: f64 = pv_fullaxis(|t: f64| (-t * t / 2.0).exp() * hermite(n, t), x, &cfg).unwrap();
            let closed = g_eval(n, x).unwrap();
            assert!((direct - closed).abs() < 1e-8 * ln_norm::<f64>(n).exp(), "n={n} x={x}");
        }
    }
}

#[test]
fn v_functions_against_pv_oracle() {
    let cfg = PvConfig::default().with_tol(1e-11);
    for n in 0..6 {
        for &x in &[0.3f64, 1.5, 4.0] {
            let direct: f64 = pv_fullaxis(|t: f64| (-t * t).exp() * hermite(n, t), x, &cfg).unwrap();
            let v = v_eval(n, x).unwrap();
            assert!((direct - v).abs() < 1e-8 * v.abs().max(1.0), "n={n} x={x}: {direct} vs {v}");
        }
    }
}

#[test]
fn ode_residuals_on_probe_points() {
    for n in 0..=7 {
        for &x in &[0.5f64, 1.0, 2.0, 5.0] {
            let r = ode_residual(n, x).unwrap();
            assert!(r.abs() <= 1e-5, "n={n} x={x}: {r}");
        }
    }
}

#[test]
fn basis_zero_counts() {
    for m in 0..=4 {
        assert_eq!(count_zeros::<f64>(Basis::First, m, None).unwrap(), m + 1);
        assert_eq!(count_zeros::<f64>(Basis::Second, m, None).unwrap(), m + 1);
    }
}

#[test]
fn zeros_bracket_sign_changes_of_the_oracle() {
    for m in 1..=3 {
        for z in zeros::<f64>(Basis::Second, m, None).unwrap() {
            let (lo, hi) = ((z - 1e-4).max(0.0).sqrt(), (z + 1e-4).sqrt());
            let n = Basis::Second.index(m);
            let a = g_fourier_oracle(n, lo, 1e-13).unwrap();
            let b = g_fourier_oracle(n, hi, 1e-13).unwrap();
            assert!(a * b < 0.0, "m={m} zero {z}");
        }
    }
}

#[test]
fn batch_matches_single_index() {
    for &x in &[0.2f64, 2.5, 9.0, 40.0] {
        let all = g_hat_all(45, x).unwrap();
        for n in [0usize, 7, 20, 21, 33, 45] {
            let one = g_hat(n, x).unwrap();
            assert!((all[n] - one).abs() < 1e-13, "n={n} x={x}: {} vs {one}", all[n]);
        }
    }
}

#[test]
fn normalized_bases_follow_the_square_root_map() {
    for m in 0..3 {
        for &xi in &[0.25f64, 4.0, 16.0] {
            let first = g_normalized(Basis::First, m, xi).unwrap();
            let second = g_normalized(Basis::Second, m, xi).unwrap();
            assert_eq!(first, g_hat(2 * m, xi.sqrt()).unwrap());
            assert_eq!(second, g_hat(2 * m + 1, xi.sqrt()).unwrap());
        }
    }
    assert!(g_normalized(Basis::First, 0, -1.0f64).is_err());
}
