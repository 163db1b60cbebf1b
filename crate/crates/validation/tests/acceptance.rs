//! Acceptance criteria 1 to 9, one PASS/FAIL line each. Exits non-zero if any fails.

use cauchy_semiaxis::contact::{mu_limit, residual, ChiCache, ContactConfig, ContactProblem};
use cauchy_semiaxis::gfun::{count_zeros, g_hat, ode_residual, Basis};
use cauchy_semiaxis::pv::{integral_semiaxis, pv_semiaxis, PvConfig};
use cauchy_semiaxis::quad::{pv_at_xi, remainder_bound, singular_quad, GaussLaguerreRule, QnEvaluator};
use cauchy_semiaxis::relations::{check_relation, RelationId};
use cauchy_semiaxis::sie::{solve_characteristic, solve_system, Kernel, Rhs, SieConfig, SolutionClass};
use cauchy_semiaxis::specfun::expint_ei;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::f64::consts::PI;
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * t + a)
}

fn weighted_pv<F: Fn(f64) -> f64>(alpha: f64, f: F, x: f64) -> f64 {
    let cfg = PvConfig::default().with_tol(1e-12);
    pv_semiaxis(|t: f64| t.powf(alpha) * (-t).exp() * f(t), x, &cfg).unwrap()
}

fn identity_catalog() -> Outcome {
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut worst_passing = 0.0f64;
    let mut runs = 0;
    for id in RelationId::ALL {
        for params in id.default_param_sets() {
            if params.n > 3 {
                continue;
            }
            runs += 1;
            let grid = id.default_grid(&params);
            match check_relation(id, &params, &grid, 1e-5, 1e-5) {
                Ok(r) if r.pass => worst_passing = worst_passing.max(r.max_abs_dev.min(r.max_rel_dev)),
                Ok(r) => failed.push(format!("{id} n={} dev={:.2e}", params.n, r.max_abs_dev)),
                Err(e) => failed.push(format!("{id} n={}: {e}", params.n)),
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    failed.dedup_by(|a, b| a.split(' ').next() == b.split(' ').next());
    outcome(
        failed.is_empty() && secs < 120.0,
        format!(
            "{runs} checks in {secs:.1}s, worst passing deviation {worst_passing:.1e}; failing: {}",
            if failed.is_empty() { "none".to_string() } else { failed.join(", ") }
        ),
    )
}

fn root_density_quadrature() -> Outcome {
    let alpha = -0.5;
    let mut worst = Vec::new();
    for n in [5usize, 10] {
        let rule = GaussLaguerreRule::new(n, alpha).unwrap();
        let q = QnEvaluator::new(n, alpha).unwrap();
        let dev = (0..40)
            .map(|i| 0.1 + 7.9 * i as f64 / 39.0)
            .map(|x| {
                let exact = -(-x).exp() * expint_ei(x).unwrap() / PI;
                (singular_quad(&rule, &q, |t: f64| t.sqrt(), x).unwrap() - exact).abs()
            })
            .fold(0.0f64, f64::max);
        worst.push((n, dev));
    }
    let pass = worst.iter().all(|&(_, d)| d <= 1e-6);
    outcome(pass, format!("max deviation n=5: {:.2e}, n=10: {:.2e} (tolerance 1e-6)", worst[0].1, worst[1].1))
}

fn quadrature_exactness() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20240601);
    let (mut worst_low, mut worst_high) = (0.0f64, 0.0f64);
    for n in [3usize, 5, 8] {
        for alpha in [-0.5f64, 1.0 / 3.0] {
            let rule = GaussLaguerreRule::new(n, alpha).unwrap();
            let q = QnEvaluator::new(n, alpha).unwrap();
            for _ in 0..20 {
                let deg = rng.random_range(0..n);
                let c: Vec<f64> = (0..=deg).map(|_| rng.random_range(-1.0..1.0)).collect();
                let x: f64 = rng.random_range(0.1..10.0);
                let exact = weighted_pv(alpha, |t| horner(&c, t), x);
                let got = singular_quad(&rule, &q, |t| horner(&c, t), x).unwrap();
                worst_low = worst_low.max((got - exact).abs() / (1.0 + exact.abs()));
            }
            let c: Vec<f64> = (0..=2 * n).map(|_| rng.random_range(-1.0..1.0)).collect();
            for &xi in &q.zeros {
                let exact = weighted_pv(alpha, |t| horner(&c, t), xi);
                let got = pv_at_xi(&rule, xi, |t| horner(&c, t)).unwrap();
                worst_high = worst_high.max((got - exact).abs() / (1.0 + exact.abs()));
            }
        }
    }
    outcome(
        worst_low <= 1e-6 && worst_high <= 1e-6,
        format!("degree < n: {worst_low:.1e}; degree 2n at zeros of Q_n: {worst_high:.1e} (tolerance 1e-6, relative to 1+|oracle|)"),
    )
}

fn orthonormality() -> Outcome {
    let cfg = PvConfig::default().with_tol(1e-10);
    let mut worst = 0.0f64;
    for basis in [Basis::First, Basis::Second] {
        for a in 0..=4 {
            for b in a..=4 {
                let (i, j) = (basis.index(a), basis.index(b));
                let v: f64 = integral_semiaxis(|x: f64| g_hat(i, x).unwrap() * g_hat(j, x).unwrap(), &cfg).unwrap();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((2.0 * v - target).abs());
            }
        }
    }
    outcome(worst <= 1e-5, format!("max |Gram − I| = {worst:.1e} (tolerance 1e-5)"))
}

fn zero_counts() -> Outcome {
    let mut bad = Vec::new();
    for m in 0..=4 {
        for (name, basis) in [("G1", Basis::First), ("G2", Basis::Second)] {
            let k = count_zeros::<f64>(basis, m, None).unwrap();
            if k != m + 1 {
                bad.push(format!("{name}_{m}: {k}"));
            }
        }
    }
    let mut q_counts = Vec::new();
    for (n, alpha) in [(5usize, 1.0f64 / 3.0), (10, -0.5)] {
        let k = QnEvaluator::new(n, alpha).unwrap().zeros.len();
        q_counts.push(format!("Q_{n}^{alpha:.3}: {k} (expected {})", n + 1));
        if k != n + 1 {
            bad.push(format!("Q_{n}^{alpha:.3}"));
        }
    }
    outcome(bad.is_empty(), format!("G-functions m ≤ 4 {}; {}", if bad.iter().any(|b| b.starts_with('G')) { "mismatch" } else { "all m+1" }, q_counts.join(", ")))
}

fn ode_residuals() -> Outcome {
    let mut worst = 0.0f64;
    for n in 0..=7 {
        for x in [0.5f64, 1.0, 2.0, 5.0] {
            worst = worst.max(ode_residual(n, x).unwrap().abs());
        }
    }
    outcome(worst <= 1e-5, format!("max residual {worst:.1e} (tolerance 1e-5)"))
}

fn sie_round_trip() -> Outcome {
    let f = |x: f64| x.sqrt() * (-x / 2.0).exp();
    let norm = (-0.5f64).exp();
    let cfg = SieConfig::default();
    let sol = solve_characteristic(f, SolutionClass::UnboundedAtZero, 12, &cfg).unwrap();
    let rel = sol.residual_estimate / norm;

    let zero = |_: f64, _: f64| 0.0;
    let k: Kernel = &zero;
    let g = |x: f64| (-x).exp();
    let rhs: [Rhs; 2] = [&f, &g];
    let sys = solve_system([[k, k], [k, k]], rhs, 12, &cfg).unwrap();
    let other = solve_characteristic(g, SolutionClass::UnboundedAtZero, 12, &cfg).unwrap();
    let coupled = sys
        .first
        .coeffs
        .iter()
        .zip(&sol.coeffs)
        .chain(sys.second.coeffs.iter().zip(&other.coeffs))
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    outcome(
        rel <= 1e-4 && coupled <= 1e-12,
        format!("N=12 residual/‖f‖ = {rel:.2e} (tolerance 1e-4); K≡0 system vs characteristic {coupled:.1e} (tolerance 1e-12)"),
    )
}

fn contact_demo() -> Outcome {
    let p = ContactProblem::new(0.3, 1.0, |x: f64| (-x).exp()).unwrap();
    let cfg = ContactConfig::default();
    let cache = ChiCache::build(&p, &cfg).unwrap();
    let probes = [0.25, 0.5, 1.0, 2.0, 4.0];
    let worst = residual(&p, &cache, &probes, &cfg).unwrap().into_iter().fold(0.0f64, f64::max);
    let norm = p.f(0.0).abs();
    let rel = worst / norm;
    let mu_dev = (mu_limit() - 0.17484958).abs();
    outcome(
        rel <= 1e-3 && mu_dev <= 1e-8,
        format!("residual/‖f‖ = {rel:.1e} (tolerance 1e-3); μ(0+) = {:.10} (deviation {mu_dev:.1e}, tolerance 1e-8)", mu_limit()),
    )
}

/// Uniform error of the degree-(n−1) Chebyshev interpolant of f′ on [0, b], floored at ε.
fn e_tilde<F: Fn(f64) -> f64>(df: F, n: usize, b: f64, eps: f64) -> f64 {
    let theta = |j: usize| PI * (j as f64 + 0.5) / n as f64;
    let nodes: Vec<f64> = (0..n).map(|j| 0.5 * b * (1.0 + theta(j).cos())).collect();
    let vals: Vec<f64> = nodes.iter().map(|&t| df(t)).collect();
    let interp = |t: f64| {
        let (mut num, mut den) = (0.0, 0.0);
        for j in 0..n {
            if t == nodes[j] {
                return vals[j];
            }
            let w = if j % 2 == 0 { theta(j).sin() } else { -theta(j).sin() } / (t - nodes[j]);
            num += w * vals[j];
            den += w;
        }
        num / den
    };
    let e = (0..=4000).map(|i| b * i as f64 / 4000.0).map(|t| (df(t) - interp(t)).abs()).fold(0.0f64, f64::max);
    e.max(eps)
}

fn remainder_bound_holds() -> Outcome {
    let n = 8;
    let eps = 1e-2f64;
    let b = 1.01 / eps.sqrt();
    let et = e_tilde(|t| -1.0 / ((t + 1.0) * (t + 1.0)), n, b, eps);
    let f = |t: f64| 1.0 / (t + 1.0);
    let mut worst_ratio = 0.0f64;
    for alpha in [-0.5f64, 1.0 / 3.0] {
        let rule = GaussLaguerreRule::new(n, alpha).unwrap();
        let q = QnEvaluator::new(n, alpha).unwrap();
        for i in 0..10 {
            let x = 0.163 + 0.8 * i as f64;
            let err = (singular_quad(&rule, &q, f, x).unwrap() - weighted_pv(alpha, f, x)).abs();
            worst_ratio = worst_ratio.max(err / remainder_bound(&rule, &q, x, et).unwrap());
        }
    }
    outcome(worst_ratio <= 1.0, format!("max |R_n|/bound = {worst_ratio:.2e} over 10 probes, α ∈ {{−1/2, 1/3}}, ẽ = {et:.2e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("identity catalog", identity_catalog),
        ("root-density singular quadrature", root_density_quadrature),
        ("quadrature exactness", quadrature_exactness),
        ("orthonormality", orthonormality),
        ("zero counts", zero_counts),
        ("ODE residuals", ode_residuals),
        ("SIE round trip", sie_round_trip),
        ("contact demo", contact_demo),
        ("remainder bound", remainder_bound_holds),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failures += 1;
        }
        println!("criterion {}: {} ({name}): {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria pass", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
