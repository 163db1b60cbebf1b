//! Semi-infinite stamp on an elastic half-plane with friction-free adhesion: the boundary
//! density φ = p + iτ solves (1/π)·PV∫_0^∞ φ(t)/(t−x) dt + i·tanh(πμ)·φ(x) = f(x) and is
//! represented as φ(x) = x^{α/2}∫_0^∞ χ(λ) J_α(λ√x) dλ with α = −1/2 − iμ.

use crate::error::{Error, Result};
use crate::integrate::{adaptive, AdaptiveConfig};
use crate::pv::{integral_semiaxis, pv_semiaxis, Oscillation, PvConfig};
use crate::specfun::bessel_j;
use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::io::Write;

type C64 = Complex<f64>;

/// μ(ν) = ln(3 − 4ν)/(2π).
pub fn mu_of_nu(nu: f64) -> f64 {
    (3.0 - 4.0 * nu).ln() / (2.0 * PI)
}

/// Limit of μ(ν) as ν → 0⁺: ln 3/(2π).
pub fn mu_limit() -> f64 {
    3f64.ln() / (2.0 * PI)
}

pub struct ContactProblem<G> {
    /// Poisson ratio in (0, 1/2).
    pub nu: f64,
    pub shear_modulus: f64,
    /// Slope g′(x) of the stamp profile.
    pub g_prime: G,
}

impl<G: Fn(f64) -> f64 + Sync> ContactProblem<G> {
    pub fn new(nu: f64, shear_modulus: f64, g_prime: G) -> Result<Self> {
        if !(nu > 0.0 && nu < 0.5) {
            return Err(Error::Domain(format!("Poisson ratio must lie in (0, 1/2), got {nu}")));
        }
        if !(shear_modulus > 0.0) {
            return Err(Error::Domain(format!("shear modulus must be positive, got {shear_modulus}")));
        }
        Ok(Self { nu, shear_modulus, g_prime })
    }

    pub fn kappa(&self) -> f64 {
        3.0 - 4.0 * self.nu
    }

    pub fn mu(&self) -> f64 {
        mu_of_nu(self.nu)
    }

    pub fn alpha(&self) -> C64 {
        C64::new(-0.5, -self.mu())
    }

    /// Right-hand side f(x) = −4G g′(x)/(κ + 1).
    pub fn f(&self, x: f64) -> f64 {
        -4.0 * self.shear_modulus * (self.g_prime)(x) / (self.kappa() + 1.0)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContactConfig {
    pub tol: f64,
    /// χ is truncated where its envelope drops below this fraction of its maximum
    /// (or below 10·tol, whichever is larger).
    pub envelope: f64,
    /// Chebyshev degree of the cached χ.
    pub degree: usize,
    /// Tolerance of the residual principal values.
    pub residual_tol: f64,
    /// Truncation of the residual principal values.
    pub residual_cut: f64,
}

impl Default for ContactConfig {
    fn default() -> Self {
        Self { tol: 1e-10, envelope: 1e-12, degree: 64, residual_tol: 1e-7, residual_cut: 2000.0 }
    }
}

/// χ(λ) = −(λ/2)·cosh(πμ)·∫_0^∞ f(x) x^{−α/2} J_{−α}(λ√x) dx for α = −1/2 − iμ.
pub fn chi_for_order<F: Fn(f64) -> f64>(f: F, mu: f64, lambda: f64, tol: f64) -> Result<C64> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("λ must be positive, got {lambda}")));
    }
    let alpha = C64::new(-0.5, -mu);
    let cfg = PvConfig::default().with_tol(tol).with_oscillation(Oscillation::Sqrt(lambda));
    let integral: C64 = integral_semiaxis(
        |x: f64| {
            let j = bessel_j(-alpha, C64::new(lambda * x.sqrt(), 0.0)).unwrap_or(C64::new(f64::NAN, 0.0));
            C64::new(x, 0.0).powc(-alpha * 0.5) * j * f(x)
        },
        &cfg,
    )?;
    Ok(-0.5 * lambda * (PI * mu).cosh() * integral)
}

pub fn chi_density<G: Fn(f64) -> f64 + Sync>(p: &ContactProblem<G>, lambda: f64, cfg: &ContactConfig) -> Result<C64> {
    chi_for_order(|x| p.f(x), p.mu(), lambda, cfg.tol)
}

/// χ on [0, Λ] as λ^{1−α}·h(λ), h a Chebyshev interpolant.
#[derive(Debug, Clone)]
pub struct ChiCache {
    pub alpha: C64,
    pub lambda_max: f64,
    coeffs: Vec<C64>,
}

impl ChiCache {
    pub fn build<G: Fn(f64) -> f64 + Sync>(p: &ContactProblem<G>, cfg: &ContactConfig) -> Result<Self> {
        let alpha = p.alpha();
        // envelope scan on a geometric grid; below ~10·tol the samples are quadrature noise
        let floor = cfg.envelope.max(10.0 * cfg.tol);
        let mut lam = 0.05;
        let mut peak = 0.0f64;
        let mut quiet = 0;
        let mut lambda_max = None;
        while lam < 400.0 {
            let v = chi_density(p, lam, cfg)?.norm();
            peak = peak.max(v);
            if peak > 0.0 && v < floor * peak {
                quiet += 1;
                if quiet >= 2 {
                    lambda_max = Some(lam);
                    break;
                }
            } else {
                quiet = 0;
            }
            lam *= 1.15;
        }
        if peak == 0.0 {
            return Ok(Self { alpha, lambda_max: 1.0, coeffs: vec![C64::new(0.0, 0.0)] });
        }
        let lambda_max =
            lambda_max.ok_or(Error::NonConvergence { what: "χ envelope", estimate: peak })?;
        let n = cfg.degree;
        let nodes: Vec<f64> =
            (0..n).map(|j| 0.5 * lambda_max * (1.0 + (PI * (j as f64 + 0.5) / n as f64).cos())).collect();
        let h: Vec<C64> = nodes
            .par_iter()
            .map(|&l| Ok(chi_density(p, l, cfg)? / C64::new(l, 0.0).powc(1.0 - alpha)))
            .collect::<Result<_>>()?;
        let coeffs = (0..n)
            .map(|k| {
                let s: C64 = h
                    .iter()
                    .enumerate()
                    .map(|(j, v)| v * (PI * k as f64 * (j as f64 + 0.5) / n as f64).cos())
                    .sum();
                s * (if k == 0 { 1.0 } else { 2.0 } / n as f64)
            })
            .collect();
        Ok(Self { alpha, lambda_max, coeffs })
    }

    /// Size of the last Chebyshev coefficients relative to the first; a resolution flag.
    pub fn tail_ratio(&self) -> f64 {
        let top = self.coeffs.iter().fold(0.0f64, |m, c| m.max(c.norm()));
        let n = self.coeffs.len();
        let tail = self.coeffs[n.saturating_sub(4)..].iter().fold(0.0f64, |m, c| m.max(c.norm()));
        if top == 0.0 {
            0.0
        } else {
            tail / top
        }
    }

    pub fn eval(&self, lambda: f64) -> C64 {
        if lambda <= 0.0 || lambda > self.lambda_max {
            return C64::new(0.0, 0.0);
        }
        let s = 2.0 * lambda / self.lambda_max - 1.0;
        // Clenshaw
        let (mut b1, mut b2) = (C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        for c in self.coeffs.iter().skip(1).rev() {
            let b0 = c + b1 * (2.0 * s) - b2;
            b2 = b1;
            b1 = b0;
        }
        let h = self.coeffs[0] + b1 * s - b2;
        h * C64::new(lambda, 0.0).powc(1.0 - self.alpha)
    }

    /// φ(x) = x^{α/2}∫_0^Λ χ(λ) J_α(λ√x) dλ.
    pub fn phi(&self, x: f64, tol: f64) -> Result<C64> {
        if !(x > 0.0) {
            return Err(Error::Domain(format!("φ needs x > 0, got {x}")));
        }
        let r = x.sqrt();
        let step = (PI / r).min(1.0);
        let mut points = vec![0.0];
        let mut l = step;
        while l < self.lambda_max {
            points.push(l);
            l += step;
        }
        points.push(self.lambda_max);
        let cfg = AdaptiveConfig { abs_tol: tol, rel_tol: tol, max_subdivisions: 20 * points.len() + 1000 };
        let alpha = self.alpha;
        let v = adaptive(
            &|l: f64| {
                if l == 0.0 {
                    return C64::new(0.0, 0.0);
                }
                self.eval(l) * bessel_j(alpha, C64::new(l * r, 0.0)).unwrap_or(C64::new(f64::NAN, 0.0))
            },
            &points,
            &cfg,
        )?
        .value;
        Ok(C64::new(x, 0.0).powc(alpha * 0.5) * v)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ContactPoint {
    pub x: f64,
    pub pressure: f64,
    pub shear: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContactSolution {
    pub nu: f64,
    pub mu: f64,
    pub kappa: f64,
    pub lambda_max: f64,
    pub tolerances: ContactConfig,
    pub points: Vec<ContactPoint>,
}

impl ContactSolution {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut out = out;
        writeln!(
            out,
            "# contact nu={} mu={:.16e} kappa={} lambda_max={:.16e} tol={:e}",
            self.nu, self.mu, self.kappa, self.lambda_max, self.tolerances.tol
        )?;
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["x", "pressure", "shear"])?;
        for p in &self.points {
            w.write_record([format!("{:.16e}", p.x), format!("{:.16e}", p.pressure), format!("{:.16e}", p.shear)])?;
        }
        w.flush()?;
        Ok(())
    }

    /// Metadata only: {nu, mu, kappa, tolerances}.
    pub fn metadata_json(&self) -> Result<String> {
        let v = serde_json::json!({
            "nu": self.nu,
            "mu": self.mu,
            "kappa": self.kappa,
            "tolerances": self.tolerances,
        });
        Ok(serde_json::to_string_pretty(&v)?)
    }
}

/// φ = p + iτ on `x_grid`.
pub fn contact_solve<G: Fn(f64) -> f64 + Sync>(
    p: &ContactProblem<G>,
    x_grid: &[f64],
    cfg: &ContactConfig,
) -> Result<ContactSolution> {
    let cache = ChiCache::build(p, cfg)?;
    let points = x_grid
        .par_iter()
        .map(|&x| {
            let v = cache.phi(x, cfg.tol)?;
            Ok(ContactPoint { x, pressure: v.re, shear: v.im })
        })
        .collect::<Result<_>>()?;
    Ok(ContactSolution {
        nu: p.nu,
        mu: p.mu(),
        kappa: p.kappa(),
        lambda_max: cache.lambda_max,
        tolerances: cfg.clone(),
        points,
    })
}

/// |(1/π)PV∫ φ(t)/(t−x) dt + i·tanh(πμ)φ(x) − f(x)| at each probe.
pub fn residual<G: Fn(f64) -> f64 + Sync>(
    p: &ContactProblem<G>,
    cache: &ChiCache,
    probes: &[f64],
    cfg: &ContactConfig,
) -> Result<Vec<f64>> {
    let inner = cfg.residual_tol * 0.01;
    let pv = PvConfig::default().with_tol(cfg.residual_tol).with_tail_cut(cfg.residual_cut);
    probes
        .iter()
        .map(|&x| {
            let h: C64 = pv_semiaxis(|t: f64| cache.phi(t, inner).unwrap_or(C64::new(f64::NAN, 0.0)), x, &pv)?;
            let lhs = h + C64::i() * (PI * p.mu()).tanh() * cache.phi(x, inner)?;
            Ok((lhs - p.f(x)).norm())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_endpoint() {
        assert!((mu_limit() - 0.17484958).abs() < 1e-8);
        assert!(mu_of_nu(0.3) < mu_of_nu(0.1));
        assert!(mu_of_nu(0.4999999) < 1e-6);
    }

    #[test]
    fn zero_load() {
        assert_eq!(chi_for_order(|_| 0.0, 0.1, 1.3, 1e-10).unwrap(), C64::new(0.0, 0.0));
    }

    #[test]
    fn exponential_load_closed_form() {
        // ∫ e^{−x} x^{−α/2} J_{−α}(λ√x) dx = λ^{−α} 2^α e^{−λ²/4}
        let mu = 0.1;
        let alpha = C64::new(-0.5, -mu);
        for &l in &[0.3, 1.0, 2.5] {
            let v = chi_for_order(|x| (-x).exp(), mu, l, 1e-11).unwrap();
            let lc = C64::new(l, 0.0);
            let exact = -0.5 * l * (PI * mu).cosh() * lc.powc(-alpha) * C64::new(2.0, 0.0).powc(alpha) * (-l * l / 4.0).exp();
            assert!((v - exact).norm() < 1e-8, "λ={l}: {v} vs {exact}");
        }
    }

    #[test]
    fn half_order_is_sine_transform() {
        // μ = 0: x^{1/4} J_{1/2}(λ√x) = √(2/(πλ)) sin(λ√x)
        let f = |x: f64| (-x).exp() * (1.0 + x);
        for &l in &[0.5, 2.0] {
            let v = chi_for_order(f, 0.0, l, 1e-11).unwrap();
            let cfg = PvConfig::default().with_tol(1e-11).with_oscillation(Oscillation::Sqrt(l));
            let s: f64 = integral_semiaxis(|x: f64| f(x) * (l * x.sqrt()).sin(), &cfg).unwrap();
            let direct = -0.5 * l * (2.0 / (PI * l)).sqrt() * s;
            assert!((v.re - direct).abs() < 1e-8 && v.im.abs() < 1e-12, "{v} vs {direct}");
        }
    }

    #[test]
    fn rejects_bad_ratio() {
        assert!(ContactProblem::new(0.5, 1.0, |x: f64| x).is_err());
        assert!(ContactProblem::new(0.3, 0.0, |x: f64| x).is_err());
    }

    #[test]
    fn cache_reproduces_chi() {
        let p = ContactProblem::new(0.3, 1.0, |x: f64| (-x).exp()).unwrap();
        let cfg = ContactConfig::default();
        let cache = ChiCache::build(&p, &cfg).unwrap();
        for &l in &[0.2, 1.0, 3.0] {
            let a = cache.eval(l);
            let b = chi_density(&p, l, &cfg).unwrap();
            assert!((a - b).norm() < 1e-9, "λ={l}: {a} vs {b}");
        }
    }
}
