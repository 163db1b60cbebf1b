//! Brute-force Cauchy principal values (1/π)·PV∫ f(t)/(t−x) dt on [0, ∞) and on ℝ.
//!
//! The singular point is handled by folding a window of radius δ around x,
//! ∫_{x−δ}^{x+δ} f(t)/(t−x) dt = ∫_0^δ (f(x+s) − f(x−s))/s ds,
//! which has a smooth integrand. Everything else is ordinary adaptive quadrature.

use crate::error::{Error, Result};
use crate::integrate::{adaptive, from_origin, tail_geometric, tail_oscillatory, AdaptiveConfig};
use crate::real::{lit, Quantity, Real};

/// Oscillation of the integrand at infinity, used to panel the tail at half periods.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Oscillation<T> {
    /// like cos(λt)
    Linear(T),
    /// like cos(λ√t)
    Sqrt(T),
}

#[derive(Debug, Clone, Copy)]
pub struct PvConfig<T> {
    pub tol: T,
    /// Radius of the folded window around the singular point; `None` means 1e-3·max(1, |x|).
    pub excision_radius: Option<T>,
    /// Hard truncation of the integration range; `None` integrates the tail until panels fall below `tail_eps`.
    pub tail_cut: Option<T>,
    pub tail_eps: T,
    pub max_subdivisions: usize,
    pub oscillation: Option<Oscillation<T>>,
}

impl<T: Real> Default for PvConfig<T> {
    fn default() -> Self {
        Self {
            tol: lit(1e-9),
            excision_radius: None,
            tail_cut: None,
            tail_eps: lit(1e-16),
            max_subdivisions: 2000,
            oscillation: None,
        }
    }
}

impl<T: Real> PvConfig<T> {
    pub fn with_tol(mut self, tol: T) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_excision(mut self, delta: T) -> Self {
        self.excision_radius = Some(delta);
        self
    }

    pub fn with_tail_cut(mut self, cut: T) -> Self {
        self.tail_cut = Some(cut);
        self
    }

    pub fn with_oscillation(mut self, osc: Oscillation<T>) -> Self {
        self.oscillation = Some(osc);
        self
    }

    pub fn radius(&self, x: T) -> T {
        self.excision_radius.unwrap_or_else(|| lit::<T>(1e-3) * x.abs().max(T::one()))
    }

    fn validate(&self) -> Result<()> {
        if !(self.tol > T::zero()) || self.max_subdivisions == 0 {
            return Err(Error::Domain("PV tolerance must be positive and max_subdivisions at least 1".into()));
        }
        if let Some(d) = self.excision_radius {
            if !(d > T::zero()) {
                return Err(Error::Domain(format!("excision radius must be positive, got {}", d)));
            }
        }
        Ok(())
    }

    fn adaptive_cfg(&self) -> AdaptiveConfig<T> {
        AdaptiveConfig { abs_tol: self.tol * lit(0.1), rel_tol: self.tol, max_subdivisions: self.max_subdivisions }
    }
}

/// Integral of `g` over [a, cut] with doubling breakpoints.
fn up_to_cut<T, V, G>(g: &G, a: T, cut: T, acfg: &AdaptiveConfig<T>) -> Result<V>
where
    T: Real,
    V: Quantity<T>,
    G: Fn(T) -> V,
{
    if cut <= a {
        return Ok(V::zero());
    }
    let mut points = vec![a];
    let mut width = a.abs().max(T::one());
    let mut p = a + width;
    while p < cut {
        points.push(p);
        width = width * lit(2.0);
        p = p + width;
    }
    points.push(cut);
    Ok(adaptive(g, &points, acfg)?.value)
}

/// Integral of `g` over [a, ∞) according to the tail settings of `cfg`.
fn tail<T, V, G>(g: &G, a: T, cfg: &PvConfig<T>, acfg: &AdaptiveConfig<T>) -> Result<V>
where
    T: Real,
    V: Quantity<T>,
    G: Fn(T) -> V,
{
    if let Some(cut) = cfg.tail_cut {
        return up_to_cut(g, a, cut, acfg);
    }
    let pi = T::PI();
    match cfg.oscillation {
        Some(Oscillation::Linear(lambda)) => {
            let h = pi / lambda.abs();
            Ok(tail_oscillatory(g, |k| a + h * lit::<T>(k as f64), cfg.tol, cfg.max_subdivisions, acfg)?.value)
        }
        Some(Oscillation::Sqrt(lambda)) => {
            let h = pi / lambda.abs();
            let r = a.sqrt();
            Ok(tail_oscillatory(
                g,
                |k| {
                    let u = r + h * lit::<T>(k as f64);
                    u * u
                },
                cfg.tol,
                cfg.max_subdivisions,
                acfg,
            )?
            .value)
        }
        None => Ok(tail_geometric(g, a, cfg.tail_eps, acfg)?.value),
    }
}

/// (1/π)·PV∫_0^∞ f(t)/(t−x) dt for x > 0.
///
/// `f` may carry an integrable algebraic singularity at t = 0.
pub fn pv_semiaxis<T, V, F>(f: F, x: T, cfg: &PvConfig<T>) -> Result<V>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V,
{
    cfg.validate()?;
    let delta = cfg.radius(x);
    if !(x > delta) {
        return Err(Error::SingularityAtBoundary { x: x.to_f64().unwrap_or(f64::NAN), delta: delta.to_f64().unwrap_or(f64::NAN) });
    }
    let acfg = cfg.adaptive_cfg();
    let window = |s: T| (f(x + s) - f(x - s)) * s.recip();
    let g = |t: T| f(t) * (t - x).recip();

    let lo = x - delta;
    let hi = x + delta;
    let mid = window_integral(&window, delta, &acfg)?;
    let c = lo.min(T::one());
    let mut left = from_origin(&g, c, &acfg)?.value;
    if lo > c {
        left = left + adaptive(&g, &[c, lo], &acfg)?.value;
    }
    let right = tail(&g, hi, cfg, &acfg)?;
    Ok((left + mid + right) * T::FRAC_1_PI())
}

/// Ordinary ∫_0^∞ f(t) dt with the same origin and tail treatment as [`pv_semiaxis`].
pub fn integral_semiaxis<T, V, F>(f: F, cfg: &PvConfig<T>) -> Result<V>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V,
{
    cfg.validate()?;
    let acfg = cfg.adaptive_cfg();
    let head = from_origin(&f, T::one(), &acfg)?.value;
    Ok(head + tail(&f, T::one(), cfg, &acfg)?)
}

/// (1/π)·PV∫_{−∞}^∞ f(t)/(t−x) dt.
pub fn pv_fullaxis<T, V, F>(f: F, x: T, cfg: &PvConfig<T>) -> Result<V>
where
    T: Real,
    V: Quantity<T>,
    F: Fn(T) -> V,
{
    cfg.validate()?;
    if let Some(Oscillation::Sqrt(_)) = cfg.oscillation {
        return Err(Error::Domain("square-root oscillation is only meaningful on the semi-axis".into()));
    }
    let delta = cfg.radius(x);
    let acfg = cfg.adaptive_cfg();
    let folded = |s: T| (f(x + s) - f(x - s)) * s.recip();
    let mid = window_integral(&folded, delta, &acfg)?;
    let rest = match cfg.tail_cut {
        Some(cut) => up_to_cut(&folded, delta, (cut - x).abs().max((cut + x).abs()), &acfg)?,
        None => tail(&folded, delta, cfg, &acfg)?,
    };
    Ok((mid + rest) * T::FRAC_1_PI())
}

fn window_integral<T, V, G>(w: &G, delta: T, acfg: &AdaptiveConfig<T>) -> Result<V>
where
    T: Real,
    V: Quantity<T>,
    G: Fn(T) -> V,
{
    Ok(adaptive(w, &[T::zero(), delta], acfg)?.value)
}
