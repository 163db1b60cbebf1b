use cauchy_semiaxis::gfun::{g_hat, g_hat_all, v_eval};
use cauchy_semiaxis::pv::{pv_semiaxis, PvConfig};
use cauchy_semiaxis::quad::{remainder_bound, singular_quad, GaussLaguerreRule, QnEvaluator};
use cauchy_semiaxis::relations::{check_relation, RelationId, RelationParams};
use cauchy_semiaxis::specfun::{gamma_real, kummer_phi};
use proptest::prelude::*;

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * t + a)
}

fn away_from_integers() -> impl Strategy<Value = f64> {
    (-0.9f64..2.9).prop_filter("near an integer", |a| (a - a.round()).abs() > 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn g_functions_have_definite_parity(n in 0usize..30, x in 0.01f64..40.0) {
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        let (a, b) = (g_hat(n, x).unwrap(), g_hat(n, -x).unwrap());
        prop_assert!((b - sign * a).abs() <= 1e-13);
    }

    #[test]
    fn v_functions_have_definite_parity(n in 0usize..=20, x in 0.01f64..8.0) {
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        let (a, b) = (v_eval(n, x).unwrap(), v_eval(n, -x).unwrap());
        prop_assert!((b - sign * a).abs() <= 1e-12 * a.abs().max(1.0));
    }

    #[test]
    fn normalized_g_functions_are_bounded(nmax in 0usize..60, x in 0.0f64..60.0) {
        // |ĝ_n| ≤ ‖ĝ_n‖_∞ of a unit-norm Hilbert transform stays well below 1
        for v in g_hat_all(nmax, x).unwrap() {
            prop_assert!(v.abs() < 1.0);
        }
    }

    #[test]
    fn gauss_laguerre_moments(n in 1usize..25, alpha in -0.9f64..3.0, k in 0usize..6) {
        let k = k.min(2 * n - 1);
        let rule = GaussLaguerreRule::new(n, alpha).unwrap();
        let got = rule.integrate(|t| t.powi(k as i32));
        let exact = gamma_real(alpha + k as f64 + 1.0).unwrap();
        prop_assert!((got - exact).abs() <= 1e-10 * exact);
    }

    #[test]
    fn singular_quadrature_reproduces_polynomials(
        n in 2usize..9,
        alpha in away_from_integers().prop_filter("order above -1", |a| *a < 1.95),
        coeffs in prop::collection::vec(-1.0f64..1.0, 1..9),
        x in 0.1f64..10.0,
    ) {
        let c: Vec<f64> = coeffs.into_iter().take(n).collect();
        let rule = GaussLaguerreRule::new(n, alpha).unwrap();
        let q = QnEvaluator::without_zeros(n, alpha).unwrap();
        let got = singular_quad(&rule, &q, |t| horner(&c, t), x).unwrap();
        let cfg = PvConfig::default().with_tol(1e-11);
        let exact: f64 = pv_semiaxis(|t: f64| t.powf(alpha) * (-t).exp() * horner(&c, t), x, &cfg).unwrap();
        prop_assert!((got - exact).abs() <= 1e-6 * (1.0 + exact.abs()), "{got} vs {exact}");
    }

    #[test]
    fn principal_value_is_linear(a in -3.0f64..3.0, x in 0.2f64..6.0) {
        let cfg = PvConfig::default().with_tol(1e-11);
        let f = |t: f64| (-t).exp();
        let g = |t: f64| 1.0 / (1.0 + t * t);
        let pf: f64 = pv_semiaxis(f, x, &cfg).unwrap();
        let pg: f64 = pv_semiaxis(g, x, &cfg).unwrap();
        let both: f64 = pv_semiaxis(|t| a * f(t) + g(t), x, &cfg).unwrap();
        prop_assert!((both - (a * pf + pg)).abs() <= 1e-9);
    }

    #[test]
    fn remainder_bound_is_linear(n in 2usize..10, e in 0.0f64..1.0, x in 0.1f64..15.0) {
        let rule = GaussLaguerreRule::new(n, 0.5).unwrap();
        let q = QnEvaluator::without_zeros(n, 0.5).unwrap();
        let one = remainder_bound(&rule, &q, x, e).unwrap();
        let two = remainder_bound(&rule, &q, x, 2.0 * e).unwrap();
        prop_assert!(one >= 0.0);
        prop_assert!((two - 2.0 * one).abs() <= 1e-14 * two.max(1.0));
    }

    #[test]
    fn kummer_transformation(a in -4.0f64..4.0, c in 0.3f64..5.0, x in -12.0f64..12.0) {
        let lhs = kummer_phi(a, c, x).unwrap().value;
        let rhs = x.exp() * kummer_phi(c - a, c, -x).unwrap().value;
        prop_assert!((lhs - rhs).abs() <= 1e-10 * lhs.abs().max(rhs.abs()).max(1.0));
    }

    #[test]
    fn general_order_transform_holds(n in 0usize..4, alpha in away_from_integers(), x in 0.1f64..12.0) {
        let p = RelationParams { n, alpha, ..RelationParams::default() };
        let r = check_relation(RelationId::R4_7, &p, &[x], 1e-6, 1e-6).unwrap();
        prop_assert!(r.pass, "dev {} / {}", r.max_abs_dev, r.max_rel_dev);
    }
}
