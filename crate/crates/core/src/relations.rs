//! Catalog of semi-axis Hilbert-transform identities, each checked numerically:
//! the left side by the principal-value quadrature of [`crate::pv`], the right side in closed form.

use crate::error::{Error, Result};
use crate::gfun::g_eval_any;
use crate::pv::{integral_semiaxis, pv_semiaxis, Oscillation, PvConfig};
use crate::sie::{kernel_expansion, KernelSeries};
use crate::specfun::{bessel_i, bessel_j, factorial, gamma_real, kummer_phi_scaled, laguerre_l, tricomi_psi};
use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

type C64 = Complex<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationId {
    R2_13a,
    R2_13b,
    R2_22a,
    R2_22b,
    R2_34_4a,
    R2_34_4b,
    R4_7,
    R4_15,
    R4_25,
    R4_30,
    R4_25p,
    R4_28,
    R5_8_0a,
    R5_8_0b,
}

impl RelationId {
    pub const ALL: [RelationId; 14] = [
        RelationId::R2_13a,
        RelationId::R2_13b,
        RelationId::R2_22a,
        RelationId::R2_22b,
        RelationId::R2_34_4a,
        RelationId::R2_34_4b,
        RelationId::R4_7,
        RelationId::R4_15,
        RelationId::R4_25,
        RelationId::R4_30,
        RelationId::R4_25p,
        RelationId::R4_28,
        RelationId::R5_8_0a,
        RelationId::R5_8_0b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationId::R2_13a => "R2_13a",
            RelationId::R2_13b => "R2_13b",
            RelationId::R2_22a => "R2_22a",
            RelationId::R2_22b => "R2_22b",
            RelationId::R2_34_4a => "R2_34_4a",
            RelationId::R2_34_4b => "R2_34_4b",
            RelationId::R4_7 => "R4_7",
            RelationId::R4_15 => "R4_15",
            RelationId::R4_25 => "R4_25",
            RelationId::R4_30 => "R4_30",
            RelationId::R4_25p => "R4_25p",
            RelationId::R4_28 => "R4_28",
            RelationId::R5_8_0a => "R5_8_0a",
            RelationId::R5_8_0b => "R5_8_0b",
        }
    }

    /// Formula in words; H denotes (1/π)·PV∫_0^∞ ·/(t−x) dt.
    pub fn label(self) -> &'static str {
        match self {
            RelationId::R2_13a => "H[e^{-t/2} t^{-1/2} L_m^{-1/2}](x) = (-1)^m G_{2m}(√x) / (4^m m! √x)",
            RelationId::R2_13b => "H[e^{-t/2} t^{1/2} L_m^{1/2}](x) = (-1)^m G_{2m+1}(√x) / (2^{2m+1} m!)",
            RelationId::R2_22a => "H[e^{-t} t^{-1/2} L_m^{-1/2}](x) = -(2/√π) e^{-x} Φ(1/2-m, 3/2; x)",
            RelationId::R2_22b => "H[e^{-t} t^{1/2} L_m^{1/2}](x) = (1/√π) e^{-x} Φ(-1/2-m, 1/2; x)",
            RelationId::R2_34_4a => "H[t^{1/2} e^{-t} Φ(1/2-m, 3/2; t)](x) = (√π/2) e^{-x} L_m^{-1/2}(x)",
            RelationId::R2_34_4b => "H[t^{-1/2} e^{-t} Φ(-1/2-m, 1/2; t)](x) = -√π e^{-x} L_m^{1/2}(x)",
            RelationId::R4_7 => {
                "PV∫ t^α e^{-t} L_n^α(t)/(t-x) dt = Γ(α) e^{-x} Φ(-n-α, 1-α; x) - π cot(πα) x^α e^{-x} L_n^α(x)"
            }
            RelationId::R4_15 => "∫ t^α e^{-t} L_n^α(t)/(t-x) dt = Γ(n+α+1) Ψ(n+1, 1-α; -x), x < 0",
            RelationId::R4_25 => {
                "H[t^{α/2} J_α(λ√t)](x) + i tanh(πμ) x^{α/2} J_α(λ√x) = -x^{α/2} J_{-α}(λ√x) / cosh(πμ), α = -1/2-iμ"
            }
            RelationId::R4_30 => {
                "H[t^{α/2} J_α(λ√t)](x) = (-x)^{α/2} (I_α - I_{-α})(λ√(-x)) / cosh(πμ), α = -1/2-iμ, x < 0"
            }
            RelationId::R4_25p => "H[t^{-1/2+iμ}](x) = i tanh(πμ) x^{-1/2+iμ}",
            RelationId::R4_28 => "H[cos(λ√t)/√t](x) = -sin(λ√x)/√x",
            RelationId::R5_8_0a => {
                "1/(t-x) = -√(π/t) e^{-x/2} Σ_n (-1)^n n!/(2n)! L_n^{-1/2}(x) G_{2n}(√t), partial sum to N"
            }
            RelationId::R5_8_0b => {
                "1/(t-x) = -√π e^{-x/2} Σ_n (-1)^n n!/(2n+1)! L_n^{1/2}(x) G_{2n+1}(√t), partial sum to N"
            }
        }
    }

    /// Parameters the relation reads.
    pub fn schema(self) -> &'static [&'static str] {
        match self {
            RelationId::R2_13a
            | RelationId::R2_13b
            | RelationId::R2_22a
            | RelationId::R2_22b
            | RelationId::R2_34_4a
            | RelationId::R2_34_4b => &["n"],
            RelationId::R4_7 | RelationId::R4_15 => &["n", "alpha"],
            RelationId::R4_25 | RelationId::R4_30 => &["mu", "lambda"],
            RelationId::R4_25p => &["mu"],
            RelationId::R4_28 => &["lambda"],
            RelationId::R5_8_0a | RelationId::R5_8_0b => &["t", "truncation"],
        }
    }

    fn negative_axis(self) -> bool {
        matches!(self, RelationId::R4_15 | RelationId::R4_30)
    }

    fn is_complex(self) -> bool {
        matches!(self, RelationId::R4_25 | RelationId::R4_30 | RelationId::R4_25p)
    }

    pub fn default_grid(self, params: &RelationParams) -> Vec<f64> {
        match self {
            RelationId::R4_15 | RelationId::R4_30 => vec![-0.5, -2.0, -10.0],
            RelationId::R5_8_0a | RelationId::R5_8_0b => {
                DEFAULT_GRID.iter().cloned().filter(|x| (x - params.t).abs() >= 0.5).collect()
            }
            _ => DEFAULT_GRID.to_vec(),
        }
    }

    /// Small-parameter sets the catalog is expected to pass on.
    pub fn default_param_sets(self) -> Vec<RelationParams> {
        let base = RelationParams::default();
        match self {
            RelationId::R2_13a
            | RelationId::R2_13b
            | RelationId::R2_22a
            | RelationId::R2_22b
            | RelationId::R2_34_4a
            | RelationId::R2_34_4b => (0..=3).map(|n| RelationParams { n, ..base }).collect(),
            RelationId::R4_7 | RelationId::R4_15 => {
                let mut v = Vec::new();
                for n in 0..=3 {
                    for alpha in [-0.5, 1.0 / 3.0, 0.5] {
                        v.push(RelationParams { n, alpha, ..base });
                    }
                }
                v
            }
            RelationId::R4_25 | RelationId::R4_30 => {
                let mut v = Vec::new();
                for mu in [0.0, 0.1] {
                    for lambda in [1.0, 2.0] {
                        v.push(RelationParams { mu, lambda, ..base });
                    }
                }
                v
            }
            RelationId::R4_25p => [0.0, 0.1].iter().map(|&mu| RelationParams { mu, ..base }).collect(),
            RelationId::R4_28 => [1.0, 2.0].iter().map(|&lambda| RelationParams { lambda, ..base }).collect(),
            RelationId::R5_8_0a | RelationId::R5_8_0b => vec![base],
        }
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RelationId::ALL
            .iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::UnknownRelation(s.to_string()))
    }
}

pub const DEFAULT_GRID: [f64; 7] = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelationParams {
    /// Polynomial degree (m or n).
    pub n: usize,
    pub alpha: f64,
    pub mu: f64,
    pub lambda: f64,
    /// The fixed variable of the kernel expansions.
    pub t: f64,
    /// Number of terms of the kernel expansions.
    pub truncation: usize,
}

impl Default for RelationParams {
    fn default() -> Self {
        Self { n: 0, alpha: 1.0 / 3.0, mu: 0.0, lambda: 1.0, t: 4.0, truncation: 10 }
    }
}

/// A value that is real for most relations and complex for the Bessel ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Num {
    Real(f64),
    Complex([f64; 2]),
}

impl Num {
    fn new(z: C64, complex: bool) -> Self {
        if complex {
            Num::Complex([z.re, z.im])
        } else {
            Num::Real(z.re)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointReport {
    pub x: f64,
    pub lhs: Num,
    pub rhs: Num,
    pub dev: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationReport {
    pub id: RelationId,
    pub params: RelationParams,
    pub tol: Tolerance,
    pub points: Vec<PointReport>,
    pub max_abs_dev: f64,
    pub max_rel_dev: f64,
    pub pass: bool,
}

impl RelationReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: RelationId,
    pub label: &'static str,
    pub schema: &'static [&'static str],
    pub default_grid: Vec<f64>,
}

pub fn list_relations() -> Vec<CatalogEntry> {
    RelationId::ALL
        .iter()
        .map(|&id| CatalogEntry {
            id,
            label: id.label(),
            schema: id.schema(),
            default_grid: id.default_grid(&RelationParams::default()),
        })
        .collect()
}

fn validate(id: RelationId, p: &RelationParams, grid: &[f64]) -> Result<()> {
    let bad = |msg: String| Err(Error::ParamSchema(format!("{id}: {msg}")));
    match id {
        RelationId::R4_7 | RelationId::R4_15 => {
            if !(p.alpha > -1.0) {
                return bad(format!("alpha must exceed -1, got {}", p.alpha));
            }
            if (PI * p.alpha).sin().abs() < 1e-6 {
                return bad(format!("alpha = {} is too close to an integer", p.alpha));
            }
        }
        RelationId::R4_25 | RelationId::R4_30 | RelationId::R4_28 => {
            if !(p.lambda > 0.0) {
                return bad(format!("lambda must be positive, got {}", p.lambda));
            }
        }
        RelationId::R5_8_0a | RelationId::R5_8_0b => {
            if !(p.t > 0.0) || p.truncation == 0 {
                return bad(format!("needs t > 0 and truncation >= 1, got t = {}, N = {}", p.t, p.truncation));
            }
        }
        _ => {}
    }
    if !p.mu.is_finite() {
        return bad("mu must be finite".into());
    }
    for &x in grid {
        let ok = if id.negative_axis() { x < 0.0 } else { x > 0.0 };
        if !ok || !x.is_finite() {
            let side = if id.negative_axis() { "negative" } else { "positive" };
            return bad(format!("grid point {x} is not on the {side} axis"));
        }
    }
    Ok(())
}

fn pv_cfg() -> PvConfig<f64> {
    PvConfig::default().with_tol(1e-10)
}

fn sign(m: usize) -> f64 {
    if m % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn real(v: f64) -> C64 {
    C64::new(v, 0.0)
}

/// Complex order α = −1/2 − iμ of the Bessel relations.
fn bessel_order(mu: f64) -> C64 {
    C64::new(-0.5, -mu)
}

/// t^{α/2} J_α(λ√t) on t > 0.
fn bessel_density(alpha: C64, lambda: f64, t: f64) -> Result<C64> {
    let j = bessel_j(alpha, real(lambda * t.sqrt()))?;
    Ok(real(t).powc(alpha * 0.5) * j)
}

/// The left-hand side at x.
pub fn lhs(id: RelationId, p: &RelationParams, x: f64) -> Result<C64> {
    let m = p.n;
    let cfg = pv_cfg();
    let v = match id {
        RelationId::R2_13a => {
            real(pv_semiaxis(|t: f64| (-t / 2.0).exp() * laguerre_l(m, -0.5, t) / t.sqrt(), x, &cfg)?)
        }
        RelationId::R2_13b => {
            real(pv_semiaxis(|t: f64| (-t / 2.0).exp() * laguerre_l(m, 0.5, t) * t.sqrt(), x, &cfg)?)
        }
        RelationId::R2_22a => real(pv_semiaxis(|t: f64| (-t).exp() * laguerre_l(m, -0.5, t) / t.sqrt(), x, &cfg)?),
        RelationId::R2_22b => real(pv_semiaxis(|t: f64| (-t).exp() * laguerre_l(m, 0.5, t) * t.sqrt(), x, &cfg)?),
        RelationId::R2_34_4a => {
            let a = 0.5 - m as f64;
            real(pv_semiaxis(|t: f64| t.sqrt() * scaled_phi(a, 1.5, t), x, &cfg)?)
        }
        RelationId::R2_34_4b => {
            let a = -0.5 - m as f64;
            real(pv_semiaxis(|t: f64| scaled_phi(a, 0.5, t) / t.sqrt(), x, &cfg)?)
        }
        RelationId::R4_7 => {
            let a = p.alpha;
            real(PI * pv_semiaxis(|t: f64| t.powf(a) * (-t).exp() * laguerre_l(m, a, t), x, &cfg)?)
        }
        RelationId::R4_15 => {
            let a = p.alpha;
            real(integral_semiaxis(|t: f64| t.powf(a) * (-t).exp() * laguerre_l(m, a, t) / (t - x), &cfg)?)
        }
        RelationId::R4_25 => {
            let alpha = bessel_order(p.mu);
            let cfg = cfg.with_oscillation(Oscillation::Sqrt(p.lambda));
            let h: C64 = pv_semiaxis(|t: f64| bessel_density(alpha, p.lambda, t).unwrap_or(C64::new(f64::NAN, 0.0)), x, &cfg)?;
            h + C64::i() * (PI * p.mu).tanh() * bessel_density(alpha, p.lambda, x)?
        }
        RelationId::R4_30 => {
            let alpha = bessel_order(p.mu);
            let cfg = cfg.with_oscillation(Oscillation::Sqrt(p.lambda));
            let v: C64 = integral_semiaxis(
                |t: f64| bessel_density(alpha, p.lambda, t).unwrap_or(C64::new(f64::NAN, 0.0)) / (t - x),
                &cfg,
            )?;
            v / PI
        }
        RelationId::R4_25p => {
            let e = C64::new(-0.5, p.mu);
            pv_semiaxis(|t: f64| real(t).powc(e), x, &cfg)?
        }
        RelationId::R4_28 => {
            let l = p.lambda;
            let cfg = cfg.with_oscillation(Oscillation::Sqrt(l));
            real(pv_semiaxis(|t: f64| (l * t.sqrt()).cos() / t.sqrt(), x, &cfg)?)
        }
        RelationId::R5_8_0a => real(kernel_expansion(KernelSeries::A, p.t, x, p.truncation)?),
        RelationId::R5_8_0b => real(kernel_expansion(KernelSeries::B, p.t, x, p.truncation)?),
    };
    Ok(v)
}

fn scaled_phi(a: f64, c: f64, x: f64) -> f64 {
    kummer_phi_scaled(a, c, x).map(|r| r.value).unwrap_or(f64::NAN)
}

/// The right-hand side at x.
pub fn rhs(id: RelationId, p: &RelationParams, x: f64) -> Result<C64> {
    let m = p.n;
    let mf = m as f64;
    let v = match id {
        RelationId::R2_13a => {
            let g = g_eval_any(2 * m, x.sqrt())?;
            sign(m) * g / (4f64.powi(m as i32) * factorial::<f64>(m) * x.sqrt())
        }
        RelationId::R2_13b => {
            let g = g_eval_any(2 * m + 1, x.sqrt())?;
            sign(m) * g / (2f64.powi(2 * m as i32 + 1) * factorial::<f64>(m))
        }
        RelationId::R2_22a => -2.0 / PI.sqrt() * kummer_phi_scaled(0.5 - mf, 1.5, x)?.value,
        RelationId::R2_22b => kummer_phi_scaled(-0.5 - mf, 0.5, x)?.value / PI.sqrt(),
        RelationId::R2_34_4a => PI.sqrt() / 2.0 * (-x).exp() * laguerre_l(m, -0.5, x),
        RelationId::R2_34_4b => -PI.sqrt() * (-x).exp() * laguerre_l(m, 0.5, x),
        RelationId::R4_7 => {
            let a = p.alpha;
            gamma_real(a)? * kummer_phi_scaled(-mf - a, 1.0 - a, x)?.value
                - PI / (PI * a).tan() * x.powf(a) * (-x).exp() * laguerre_l(m, a, x)
        }
        RelationId::R4_15 => gamma_real(mf + p.alpha + 1.0)? * tricomi_psi(mf + 1.0, 1.0 - p.alpha, -x)?.value,
        RelationId::R4_25 => {
            let alpha = bessel_order(p.mu);
            let j = bessel_j(-alpha, real(p.lambda * x.sqrt()))?;
            return Ok(-real(x).powc(alpha * 0.5) * j / (PI * p.mu).cosh());
        }
        RelationId::R4_30 => {
            let alpha = bessel_order(p.mu);
            let z = real(p.lambda * (-x).sqrt());
            let d = bessel_i(alpha, z)? - bessel_i(-alpha, z)?;
            return Ok(real(-x).powc(alpha * 0.5) * d / (PI * p.mu).cosh());
        }
        RelationId::R4_25p => {
            return Ok(C64::i() * (PI * p.mu).tanh() * real(x).powc(C64::new(-0.5, p.mu)));
        }
        RelationId::R4_28 => -(p.lambda * x.sqrt()).sin() / x.sqrt(),
        RelationId::R5_8_0a | RelationId::R5_8_0b => 1.0 / (p.t - x),
    };
    Ok(real(v))
}

/// Γ(α)Φ(n+1, 1−α; −x) + Γ(−α)Γ(n+α+1)/n! · (−x)^α Φ(n+1+α, 1+α; −x), x < 0: the
/// confluent-hypergeometric expansion of the negative-axis integral.
pub fn negative_axis_phi_form(n: usize, alpha: f64, x: f64) -> Result<f64> {
    let s = -x;
    let nf = n as f64;
    let first = gamma_real(alpha)? * crate::specfun::kummer_phi(nf + 1.0, 1.0 - alpha, s)?.value;
    let second = gamma_real(-alpha)? * gamma_real(nf + alpha + 1.0)? / factorial::<f64>(n)
        * s.powf(alpha)
        * crate::specfun::kummer_phi(nf + 1.0 + alpha, 1.0 + alpha, s)?.value;
    Ok(first + second)
}

/// Evaluates both sides of `id` on `grid` and compares them.
pub fn check_relation(
    id: RelationId,
    params: &RelationParams,
    grid: &[f64],
    tol_abs: f64,
    tol_rel: f64,
) -> Result<RelationReport> {
    validate(id, params, grid)?;
    let points: Vec<PointReport> = grid
        .par_iter()
        .map(|&x| {
            let l = lhs(id, params, x)?;
            let r = rhs(id, params, x)?;
            let complex = id.is_complex();
            Ok(PointReport { x, lhs: Num::new(l, complex), rhs: Num::new(r, complex), dev: (l - r).norm() })
        })
        .collect::<Result<_>>()?;
    let max_abs_dev = points.iter().fold(0.0f64, |m, p| m.max(p.dev));
    let max_rel_dev = points.iter().fold(0.0f64, |m, p| {
        let scale = match p.rhs {
            Num::Real(v) => v.abs(),
            Num::Complex([a, b]) => a.hypot(b),
        };
        let r = if p.dev == 0.0 { 0.0 } else { p.dev / scale };
        m.max(r)
    });
    let pass = max_abs_dev <= tol_abs || max_rel_dev <= tol_rel;
    Ok(RelationReport {
        id,
        params: *params,
        tol: Tolerance { abs: tol_abs, rel: tol_rel },
        points,
        max_abs_dev,
        max_rel_dev,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_complete() {
        let cat = list_relations();
        assert_eq!(cat.len(), 14);
        let mut labels: Vec<_> = cat.iter().map(|e| e.label).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 14);
        assert!(RelationId::R5_8_0a.schema().contains(&"truncation"));
    }

    #[test]
    fn id_round_trip() {
        for id in RelationId::ALL {
            assert_eq!(id.name().parse::<RelationId>().unwrap(), id);
            let j = serde_json::to_string(&id).unwrap();
            assert_eq!(j, format!("\"{}\"", id.name()));
        }
        assert!(matches!("R9_9".parse::<RelationId>(), Err(Error::UnknownRelation(_))));
    }

    #[test]
    fn schema_violations() {
        let p = RelationParams { alpha: 1.0, ..RelationParams::default() };
        assert!(matches!(check_relation(RelationId::R4_7, &p, &[1.0], 1e-6, 1e-6), Err(Error::ParamSchema(_))));
        let p = RelationParams::default();
        assert!(matches!(check_relation(RelationId::R4_15, &p, &[1.0], 1e-6, 1e-6), Err(Error::ParamSchema(_))));
        assert!(matches!(check_relation(RelationId::R2_13a, &p, &[-1.0], 1e-6, 1e-6), Err(Error::ParamSchema(_))));
    }

    #[test]
    fn first_even_transform() {
        let p = RelationParams::default();
        let r = check_relation(RelationId::R2_13a, &p, &[0.5, 1.0, 4.0], 1e-6, 0.0).unwrap();
        assert!(r.pass, "{}", r.max_abs_dev);
        assert_eq!(r.points.len(), 3);
    }

    #[test]
    fn power_eigenfunction() {
        let p = RelationParams { mu: 0.3, ..RelationParams::default() };
        let x = 2.0;
        let l = lhs(RelationId::R4_25p, &p, x).unwrap();
        let ratio = l / (C64::i() * real(x).powc(C64::new(-0.5, 0.3)));
        assert!((ratio - real((0.3 * PI).tanh())).norm() < 1e-6);
    }

    #[test]
    fn general_order_matches_half_order() {
        // at α = 1/2 the general-order right side is π times the half-order one
        let p = RelationParams { n: 2, alpha: 0.5, ..RelationParams::default() };
        for &x in &DEFAULT_GRID {
            let a = rhs(RelationId::R4_7, &p, x).unwrap().re;
            let b = rhs(RelationId::R2_22b, &p, x).unwrap().re;
            assert!((a - PI * b).abs() <= 1e-10 * (1.0 + a.abs()), "x={x}: {a} vs {}", PI * b);
        }
    }

    #[test]
    fn negative_axis_forms_agree() {
        for n in 0..=3 {
            for &a in &[-0.5, 1.0 / 3.0] {
                for &x in &[-0.5, -2.0, -10.0] {
                    let p = RelationParams { n, alpha: a, ..RelationParams::default() };
                    let psi = rhs(RelationId::R4_15, &p, x).unwrap().re;
                    let phi = negative_axis_phi_form(n, a, x).unwrap();
                    // the two Φ terms grow like e^{|x|} and cancel
                    assert!((psi - phi).abs() <= 1e-6, "n={n} α={a} x={x}: {psi} vs {phi}");
                }
            }
        }
    }

    #[test]
    fn real_order_bessel_side_is_real() {
        let p = RelationParams { mu: 0.0, lambda: 2.0, ..RelationParams::default() };
        for &x in &[-0.5, -2.0, -10.0] {
            assert!(lhs(RelationId::R4_30, &p, x).unwrap().im.abs() <= 1e-10);
            assert!(rhs(RelationId::R4_30, &p, x).unwrap().im.abs() <= 1e-10);
        }
    }
}
