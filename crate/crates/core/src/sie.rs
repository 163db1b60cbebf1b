//! Series solutions of (1/π)·PV∫_0^∞ χ(t)/(t−x) dt = f(x) in weighted Laguerre form,
//! the closed-form inversion, bilinear expansions of the Cauchy kernel and coupled systems.

use crate::error::{Error, Result};
use crate::gfun::{g_hat_all, ln_norm};
use crate::integrate::gauss_legendre;
use crate::pv::{pv_semiaxis, PvConfig};
use crate::quad::GaussLaguerreRule;
use crate::specfun::{laguerre_l, ln_factorial};
use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolutionClass {
    /// χ = x^{−1/2} e^{−x/2} Σ b_n L_n^{−1/2}(x)
    UnboundedAtZero,
    /// χ = x^{1/2} e^{−x/2} Σ b_n L_n^{1/2}(x)
    BoundedAtZero,
}

impl SolutionClass {
    fn order(self) -> f64 {
        match self {
            SolutionClass::UnboundedAtZero => -0.5,
            SolutionClass::BoundedAtZero => 0.5,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesSolution {
    pub class: SolutionClass,
    #[serde(rename = "N")]
    pub truncation: usize,
    #[serde(rename = "b")]
    pub coeffs: Vec<f64>,
    /// max |PV[χ](x) − f(x)| over the probe points.
    pub residual_estimate: f64,
    /// |b_{N−1}| / max |b_n|.
    pub tail_ratio: f64,
}

impl SeriesSolution {
    fn from_coeffs(class: SolutionClass, coeffs: Vec<f64>) -> Self {
        let top = coeffs.iter().fold(0.0f64, |m, b| m.max(b.abs()));
        let tail_ratio = match coeffs.last() {
            Some(b) if top > 0.0 => b.abs() / top,
            _ => 0.0,
        };
        Self { class, truncation: coeffs.len(), coeffs, residual_estimate: 0.0, tail_ratio }
    }

    /// Reconstructed χ(x), x > 0.
    pub fn eval(&self, x: f64) -> f64 {
        let a = self.class.order();
        let s: f64 = self.coeffs.iter().enumerate().map(|(n, b)| b * laguerre_l(n, a, x)).sum();
        x.powf(a) * (-x / 2.0).exp() * s
    }

    /// Whether the last coefficient is below 1e-4 of the largest.
    pub fn converged(&self) -> bool {
        self.tail_ratio < 1e-4
    }

    pub fn write_csv<W: Write>(&self, grid: &[f64], out: W) -> Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# class={} N={} residual_estimate={:.16e}",
            serde_json::to_value(self.class)?.as_str().unwrap_or(""),
            self.truncation,
            self.residual_estimate
        )?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "chi"])?;
        for &x in grid {
            w.write_record([format!("{:.16e}", x), format!("{:.16e}", self.eval(x))])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[derive(Debug, Clone)]
pub struct SieConfig {
    /// Points where f is not smooth (jumps); coefficient integrals are split there.
    pub breakpoints: Vec<f64>,
    /// Upper end of the coefficient integrals in t; `None` continues on geometric panels
    /// until their contributions fall below 1e-16 of the running sums. The system
    /// assembly truncates its outer integral at this value or at 4096.
    pub cutoff: Option<f64>,
    /// Gauss–Legendre order per panel of the coefficient rule.
    pub order: usize,
    /// Abscissae for the PV residual check.
    pub probes: Vec<f64>,
    pub pv: PvConfig<f64>,
    /// Gauss–Laguerre nodes of the inner t-integral in [`solve_system`].
    pub inner_nodes: usize,
}

impl Default for SieConfig {
    fn default() -> Self {
        Self {
            breakpoints: Vec::new(),
            cutoff: None,
            order: 16,
            probes: vec![0.5, 1.0, 2.0, 4.0, 8.0],
            pv: PvConfig::default(),
            inner_nodes: 64,
        }
    }
}

/// α_n = (−1)^n π^{−1/4} √((2n)!!/(2n−1)!!), the factor between ∫ f G_n^{(1)} and b_n.
pub fn alpha_n(n: usize) -> f64 {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    // n! 2^n / √((2n)!)
    let l = ln_factorial::<f64>(n) + n as f64 * std::f64::consts::LN_2 - 0.5 * ln_factorial::<f64>(2 * n);
    sign * PI.powf(-0.25) * l.exp()
}

fn panel_nodes(edges: &[f64], order: usize) -> Vec<(f64, f64)> {
    let (z, w) = gauss_legendre::<f64>(order);
    let mut out = Vec::with_capacity(edges.len() * order);
    for e in edges.windows(2) {
        let (a, b) = (e[0], e[1]);
        for (zi, wi) in z.iter().zip(&w) {
            let u = 0.5 * (a + b) + 0.5 * (b - a) * zi;
            out.push((u * u, wi * 0.5 * (b - a) * 2.0 * u));
        }
    }
    out
}

/// Panel edges in u = √t: quarter-unit panels up to u = 12, then ratio 1.35 up to `umax`,
/// split at the breakpoints.
fn base_edges(breakpoints: &[f64], umax: f64) -> Vec<f64> {
    let mut edges: Vec<f64> = (0..=48).map(|k| k as f64 * 0.25).filter(|&u| u < umax).collect();
    let mut u = 12.0;
    while u < umax {
        u = (u * 1.35).min(umax);
        edges.push(u);
    }
    edges.push(umax);
    edges.extend(breakpoints.iter().filter(|&&b| b > 0.0 && b.sqrt() < umax).map(|b| b.sqrt()));
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    edges.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    edges
}

/// Nodes and weights for ∫_0^{cutoff} g(t) dt (cutoff 4096 when unset): composite
/// Gauss–Legendre in u = √t.
pub fn projection_rule(cfg: &SieConfig) -> Vec<(f64, f64)> {
    panel_nodes(&base_edges(&cfg.breakpoints, cfg.cutoff.unwrap_or(4096.0).sqrt()), cfg.order)
}

/// ĝ_k(√t) for k ≤ kmax at every node.
fn g_table(rule: &[(f64, f64)], kmax: usize) -> Result<Vec<Vec<f64>>> {
    rule.par_iter().map(|&(t, _)| g_hat_all(kmax, t.sqrt())).collect()
}

fn panel_sums(table: &[Vec<f64>], fv: &[f64], kmax: usize) -> Vec<f64> {
    (0..=kmax).map(|k| fv.iter().zip(table).map(|(a, g)| a * g[k]).sum()).collect()
}

/// S_k = ∫_0^∞ F(t) ĝ_k(√t) dt for k ≤ kmax.
fn project<F: Fn(f64) -> f64 + Sync>(f: &F, kmax: usize, cfg: &SieConfig) -> Result<Vec<f64>> {
    let last_bp = cfg.breakpoints.iter().cloned().fold(0.0f64, f64::max);
    let umax = match cfg.cutoff {
        Some(c) => c.sqrt(),
        None => 12f64.max(last_bp.sqrt() * 1.01),
    };
    let rule = panel_nodes(&base_edges(&cfg.breakpoints, umax), cfg.order);
    let table = g_table(&rule, kmax)?;
    let fv: Vec<f64> = rule.iter().map(|&(t, w)| f(t) * w).collect();
    let mut sums = panel_sums(&table, &fv, kmax);
    if cfg.cutoff.is_some() {
        return Ok(sums);
    }
    // geometric panels; slowly decaying integrands are closed off by extrapolating the
    // ratio of successive panel contributions
    let mut a = umax;
    let mut prev: Option<Vec<f64>> = None;
    loop {
        if a > 1e20 {
            return Err(Error::NonConvergence { what: "projection tail", estimate: a * a });
        }
        let b = a * 1.35;
        let rule = panel_nodes(&[a, b], cfg.order);
        let table = g_table(&rule, kmax)?;
        let fv: Vec<f64> = rule.iter().map(|&(t, w)| f(t) * w).collect();
        let c = panel_sums(&table, &fv, kmax);
        for (s, v) in sums.iter_mut().zip(&c) {
            *s += v;
        }
        a = b;
        let scale = sums.iter().fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
        if let Some(p) = prev.as_ref() {
            let rest: Vec<Option<f64>> = c
                .iter()
                .zip(p)
                .map(|(&ck, &pk)| {
                    if ck.abs() <= 1e-17 * scale {
                        Some(0.0)
                    } else {
                        let r = ck / pk;
                        (r.is_finite() && r.abs() < 0.9).then(|| ck * r / (1.0 - r))
                    }
                })
                .collect();
            if rest.iter().all(|r| r.is_some_and(|v| v.abs() <= 1e-13 * scale)) {
                for (s, r) in sums.iter_mut().zip(rest) {
                    *s += r.unwrap();
                }
                return Ok(sums);
            }
        }
        prev = Some(c);
    }
}

/// b_0..b_{N−1} by projection of f onto G_n^{(1)} (unbounded) or G_n^{(2)}/√t (bounded).
fn coefficients<F: Fn(f64) -> f64 + Sync>(f: &F, class: SolutionClass, n: usize, cfg: &SieConfig) -> Result<Vec<f64>> {
    Ok(match class {
        SolutionClass::UnboundedAtZero => {
            let s = project(f, 2 * n, cfg)?;
            (0..n).map(|k| alpha_n(k) * s[2 * k]).collect()
        }
        SolutionClass::BoundedAtZero => {
            let s = project(&|t: f64| f(t) / t.sqrt(), 2 * n + 1, cfg)?;
            (0..n).map(|k| alpha_n(k) * (2.0 / (2 * k + 1) as f64).sqrt() * s[2 * k + 1]).collect()
        }
    })
}

/// max over the probes of |(1/π)PV∫ χ/(t−x) − f(x)|.
pub fn pv_residual<F: Fn(f64) -> f64>(sol: &SeriesSolution, f: &F, probes: &[f64], cfg: &PvConfig<f64>) -> Result<f64> {
    let mut worst = 0.0f64;
    for &x in probes {
        let v: f64 = pv_semiaxis(|t: f64| sol.eval(t), x, cfg)?;
        worst = worst.max((v - f(x)).abs());
    }
    Ok(worst)
}

/// Solves the characteristic equation with N Laguerre terms in the requested class.
pub fn solve_characteristic<F: Fn(f64) -> f64 + Sync>(
    f: F,
    class: SolutionClass,
    n: usize,
    cfg: &SieConfig,
) -> Result<SeriesSolution> {
    let coeffs = coefficients(&f, class, n, cfg)?;
    let mut sol = SeriesSolution::from_coeffs(class, coeffs);
    sol.residual_estimate = pv_residual(&sol, &f, &cfg.probes, &cfg.pv)?;
    Ok(sol)
}

/// χ(x) from the closed-form inversion:
/// unbounded −(1/(π√x))·PV∫ √t f(t)/(t−x) dt, bounded −(√x/π)·PV∫ f(t)/(√t (t−x)) dt.
pub fn invert_closed<F: Fn(f64) -> f64>(f: F, class: SolutionClass, x: f64, cfg: &PvConfig<f64>) -> Result<f64> {
    match class {
        SolutionClass::UnboundedAtZero => {
            let v: f64 = pv_semiaxis(|t: f64| t.sqrt() * f(t), x, cfg)?;
            Ok(-v / x.sqrt())
        }
        SolutionClass::BoundedAtZero => {
            let v: f64 = pv_semiaxis(|t: f64| f(t) / t.sqrt(), x, cfg)?;
            Ok(-v * x.sqrt())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelSeries {
    /// through L_n^{−1/2}(x) and G_{2n}(√t)
    A,
    /// through L_n^{1/2}(x) and G_{2n+1}(√t)
    B,
}

/// Partial sum (terms n < N) of the bilinear Laguerre/G expansion of 1/(t−x).
pub fn kernel_expansion(which: KernelSeries, t: f64, x: f64, n_terms: usize) -> Result<f64> {
    if !(t > 0.0 && x > 0.0) {
        return Err(Error::Domain(format!("kernel expansion needs t, x > 0, got t={t}, x={x}")));
    }
    if (t - x).abs() < 1e-10 {
        return Err(Error::Diagonal(t));
    }
    if n_terms == 0 {
        return Ok(0.0);
    }
    let g = g_hat_all(2 * n_terms, t.sqrt())?;
    let mut s = 0.0;
    for n in 0..n_terms {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        // n!/(2n)! · G_{2n} = n!/(2n)! · c_{2n} · ĝ_{2n}, likewise for 2n+1
        let k = match which {
            KernelSeries::A => 2 * n,
            KernelSeries::B => 2 * n + 1,
        };
        if k >= g.len() {
            break;
        }
        let l = ln_factorial::<f64>(n) - ln_factorial::<f64>(k) + ln_norm::<f64>(k);
        let lag = match which {
            KernelSeries::A => laguerre_l(n, -0.5, x),
            KernelSeries::B => laguerre_l(n, 0.5, x),
        };
        s += sign * l.exp() * lag * g[k];
    }
    let pre = match which {
        KernelSeries::A => -(PI / t).sqrt(),
        KernelSeries::B => -PI.sqrt(),
    };
    Ok(pre * (-x / 2.0).exp() * s)
}

pub type Kernel<'a> = &'a (dyn Fn(f64, f64) -> f64 + Sync);
pub type Rhs<'a> = &'a (dyn Fn(f64) -> f64 + Sync);

#[derive(Debug, Clone, Serialize)]
pub struct SystemSolution {
    pub first: SeriesSolution,
    pub second: SeriesSolution,
    #[serde(rename = "N")]
    pub truncation: usize,
    /// 1-norm condition number of I + C.
    pub condition: f64,
    /// max row sum of |C|; below 1 the truncated system is a contraction perturbation of I.
    pub row_sum_norm: f64,
}

/// The truncated system (I + C) b = f, with C in 2×2 block layout.
#[derive(Debug, Clone)]
pub struct AssembledSystem {
    pub c: DMatrix<f64>,
    pub rhs: DVector<f64>,
}

/// Assembles c_{nm}^{(j,l)} = (α_n/π)∫∫ K_{jl}(t,x) e^{−t/2}t^{−1/2}L_m^{−1/2}(t) G_n^{(1)}(x) dt dx
/// and f_n^{(j)} = α_n ∫ f_j G_n^{(1)}; the x-integral uses [`projection_rule`] without breakpoints.
pub fn assemble_system(kernels: [[Kernel; 2]; 2], f: [Rhs; 2], n: usize, cfg: &SieConfig) -> Result<AssembledSystem> {
    if n == 0 {
        return Err(Error::Domain("system truncation must be at least 1".into()));
    }
    // inner: t = 2s, ∫ K(2s,x) L_m(2s) √2 s^{−1/2} e^{−s} ds
    let inner = GaussLaguerreRule::new(cfg.inner_nodes, -0.5)?;
    let outer = projection_rule(&SieConfig { breakpoints: Vec::new(), ..cfg.clone() });
    let g: Vec<Vec<f64>> = g_table(&outer, 2 * n)?.into_iter().map(|row| (0..n).map(|k| row[2 * k]).collect()).collect();
    let lag: Vec<Vec<f64>> =
        inner.nodes.iter().map(|&s| (0..n).map(|m| laguerre_l(m, -0.5, 2.0 * s)).collect()).collect();
    let mut c = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for j in 0..2 {
        for l in 0..2 {
            let k = kernels[j][l];
            // h[p][m] = ∫ K(t, x_p) w_m(t) dt
            let h: Vec<Vec<f64>> = outer
                .par_iter()
                .map(|&(x, _)| {
                    let mut row = vec![0.0; n];
                    for (i, (&s, &a)) in inner.nodes.iter().zip(&inner.weights).enumerate() {
                        let kv = k(2.0 * s, x) * a * std::f64::consts::SQRT_2;
                        for m in 0..n {
                            row[m] += kv * lag[i][m];
                        }
                    }
                    row
                })
                .collect();
            for row in 0..n {
                for m in 0..n {
                    let mut acc = 0.0;
                    for (p, &(_, w)) in outer.iter().enumerate() {
                        acc += w * g[p][row] * h[p][m];
                    }
                    c[(j * n + row, l * n + m)] = alpha_n(row) / PI * acc;
                }
            }
        }
    }
    let mut rhs = DVector::<f64>::zeros(2 * n);
    for j in 0..2 {
        let fj = f[j];
        let coeffs = coefficients(&|t: f64| fj(t), SolutionClass::UnboundedAtZero, n, cfg)?;
        for (i, v) in coeffs.into_iter().enumerate() {
            rhs[j * n + i] = v;
        }
    }
    Ok(AssembledSystem { c, rhs })
}

/// Reduction-method solution of the coupled pair of singular equations with regular kernels K_{jl}.
pub fn solve_system(kernels: [[Kernel; 2]; 2], f: [Rhs; 2], n: usize, cfg: &SieConfig) -> Result<SystemSolution> {
    let sys = assemble_system(kernels, f, n, cfg)?;
    let dim = 2 * n;
    let a = DMatrix::<f64>::identity(dim, dim) + &sys.c;
    let lu = a.clone().lu();
    let b = lu.solve(&sys.rhs).ok_or(Error::SingularSystem)?;
    let inv = lu.try_inverse().ok_or(Error::SingularSystem)?;
    let norm1 = |m: &DMatrix<f64>| (0..m.ncols()).map(|j| m.column(j).iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
    let condition = norm1(&a) * norm1(&inv);
    let row_sum_norm = (0..dim).map(|i| sys.c.row(i).iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
    let first = SeriesSolution::from_coeffs(SolutionClass::UnboundedAtZero, b.rows(0, n).iter().cloned().collect());
    let second = SeriesSolution::from_coeffs(SolutionClass::UnboundedAtZero, b.rows(n, n).iter().cloned().collect());
    Ok(SystemSolution { first, second, truncation: n, condition, row_sum_norm })
}
