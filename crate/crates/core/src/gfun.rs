//! G_n = (1/π)·PV∫ e^{−t²/2}H_n(t)/(t−x) dt and V_n (same with weight e^{−t²}),
//! the orthonormal semi-axis bases G_m^{(1)}, G_m^{(2)}, asymptotics and zeros.

use crate::error::{Error, Result};
use crate::integrate::{adaptive, gauss_legendre, AdaptiveConfig};
use crate::real::{from_usize, lit, Compensated, Real};
use crate::specfun::{factorial, gamma_real, hermite_function, kummer_phi_scaled, ln_factorial};

/// Largest index accepted by the closed-form evaluator.
pub const CLOSED_FORM_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    ClosedForm,
    FourierOracle,
}

/// Selects n = 2m + j and the evaluation path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GFamilyParams {
    pub index: usize,
    pub parity: Parity,
    pub method: EvalMethod,
}

impl GFamilyParams {
    pub fn new(index: usize, parity: Parity, method: EvalMethod) -> Result<Self> {
        let p = Self { index, parity, method };
        if method == EvalMethod::ClosedForm && p.n() > CLOSED_FORM_LIMIT {
            return Err(Error::IndexTooLarge { index: p.n(), limit: CLOSED_FORM_LIMIT });
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        2 * self.index + if self.parity == Parity::Odd { 1 } else { 0 }
    }

    pub fn eval<T: Real>(&self, x: T) -> Result<T> {
        match self.method {
            EvalMethod::ClosedForm => g_eval(self.n(), x),
            EvalMethod::FourierOracle => g_fourier_oracle(self.n(), x, lit(1e-12)),
        }
    }
}

/// The two semi-axis bases: G_m^{(1)}(ξ) = ĝ_{2m}(√ξ), G_m^{(2)}(ξ) = ĝ_{2m+1}(√ξ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    First,
    Second,
}

impl Basis {
    pub fn index(self, m: usize) -> usize {
        match self {
            Basis::First => 2 * m,
            Basis::Second => 2 * m + 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Small,
    Large,
}

/// ln(π^{1/4} 2^{n/2} √n!), the norm of e^{−x²/2}H_n on ℝ and of G_n.
pub fn ln_norm<T: Real>(n: usize) -> T {
    lit::<T>(0.25) * T::PI().ln() + lit::<T>(0.5) * from_usize::<T>(n) * T::LN_2() + lit::<T>(0.5) * ln_factorial::<T>(n)
}

fn guard(n: usize) -> Result<()> {
    if n > CLOSED_FORM_LIMIT {
        return Err(Error::IndexTooLarge { index: n, limit: CLOSED_FORM_LIMIT });
    }
    Ok(())
}

/// Finite Φ-sum of G_n without the leading factorial, x ≥ 0.
fn closed_sum<T: Real>(n: usize, x: T) -> Result<T> {
    let m = n / 2;
    let y = x * x * lit(0.5);
    let half = lit::<T>(0.5);
    let mut acc = Compensated::new();
    let mut p2 = T::one();
    for k in 0..=m {
        let kf = from_usize::<T>(k);
        let (a, c, g) = if n % 2 == 0 {
            (half - kf, lit(1.5), gamma_real(kf + half)?)
        } else {
            (-half - kf, half, gamma_real(kf + lit(1.5))?)
        };
        let phi = kummer_phi_scaled(a, c, y)?.value;
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        acc.add(sign * p2 * phi / (factorial::<T>(m - k) * g));
        p2 = p2 * lit(2.0);
    }
    Ok(acc.value())
}

/// G_n(x) from its finite confluent-hypergeometric representation, n ≤ 20.
pub fn g_eval<T: Real>(n: usize, x: T) -> Result<T> {
    guard(n)?;
    let ax = x.abs();
    let s = closed_sum(n, ax)? * lit::<T>(2.0).sqrt() * factorial::<T>(n);
    if n % 2 == 0 {
        Ok(-s * x)
    } else {
        Ok(s)
    }
}

/// Signed Fourier representation: ĝ_n(x) = ±√(2/π)∫_0^∞ ψ_n(λ)·{sin, cos}(λx) dλ,
/// ψ_n the orthonormal Hermite function.
fn fourier_hat<T: Real>(n: usize, x: T, tol: T) -> Result<T> {
    let m = n / 2;
    let even = n % 2 == 0;
    let sign = if (m % 2 == 0) == even { -T::one() } else { T::one() };
    if even && x == T::zero() {
        return Ok(T::zero());
    }
    let turning = (lit::<T>(2.0) * from_usize::<T>(n) + T::one()).sqrt();
    let mut cap = turning + lit(6.0);
    while hermite_function::<T>(n, cap).abs() > lit(1e-19) {
        cap = cap + T::one();
    }
    let mut points = vec![T::zero()];
    let ax = x.abs();
    let half_period = if ax > T::zero() { T::PI() / ax } else { cap };
    let step = half_period.max(cap / lit(4000.0));
    let mut p = step;
    while p < cap {
        points.push(p);
        p = p + step;
    }
    if turning < cap && !points.iter().any(|&q| (q - turning).abs() < lit(1e-3)) {
        points.push(turning);
        points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    }
    points.push(cap);
    // below ~1e-14 the estimate is dominated by rounding in the Hermite recurrence
    let cfg = AdaptiveConfig { abs_tol: tol.max(lit(1e-14)), rel_tol: lit(1e-14), max_subdivisions: 20 * points.len() + 2000 };
    let integral = if even {
        adaptive(&|l: T| hermite_function::<T>(n, l) * (l * x).sin(), &points, &cfg)?
    } else {
        adaptive(&|l: T| hermite_function::<T>(n, l) * (l * x).cos(), &points, &cfg)?
    };
    Ok(sign * (lit::<T>(2.0) / T::PI()).sqrt() * integral.value)
}

/// G_n(x) by numerical sine/cosine transform; independent of the Φ path.
pub fn g_fourier_oracle<T: Real>(n: usize, x: T, tol: T) -> Result<T> {
    if !(tol > T::zero()) {
        return Err(Error::Domain(format!("tolerance must be positive, got {}", tol)));
    }
    let ln_c = ln_norm::<T>(n);
    let hat = fourier_hat(n, x, tol / ln_c.exp())?;
    Ok(hat * ln_c.exp())
}

/// Large-|x| series ĝ_n(x) ~ −(1/π) Σ_k M_{n,k}/c_n · x^{−k−1}, with M_{n,k} = ∫ t^k e^{−t²/2}H_n(t) dt.
/// All terms share one sign; `None` if optimal truncation does not reach `rel`.
fn moment_series_hat<T: Real>(n: usize, x: T, rel: T) -> Option<T> {
    let ax = x.abs();
    // optimal truncation never reaches working precision this close to the turning point
    if ax < (lit::<T>(2.0) * from_usize::<T>(n) + T::one()).sqrt() + lit(4.0) {
        return None;
    }
    let ln_lead = lit::<T>(0.5) * (T::PI() + T::PI()).ln() + ln_factorial::<T>(n) - ln_norm::<T>(n) - T::PI().ln();
    let lx = ax.ln();
    let mut acc = Compensated::new();
    let mut prev = T::infinity();
    let mut lf: Vec<T> = (0..=n).map(ln_factorial::<T>).collect();
    let mut k = n % 2;
    loop {
        while lf.len() <= k {
            lf.push(ln_factorial::<T>(lf.len()));
        }
        // ln Σ_b 2^b/(a! b! c! 2^c), b ≡ n (mod 2), a = (n−b)/2, c = (k−b)/2
        let mut logs = Vec::new();
        let mut b = n % 2;
        while b <= n.min(k) {
            let a = (n - b) / 2;
            let c = (k - b) / 2;
            logs.push(
                from_usize::<T>(b) * T::LN_2() - lf[a] - lf[b] - lf[c] - from_usize::<T>(c) * T::LN_2(),
            );
            b += 2;
        }
        let top = logs.iter().cloned().fold(T::neg_infinity(), T::max);
        let ls = top + logs.iter().map(|&l| (l - top).exp()).fold(T::zero(), |s, v| s + v).ln();
        let term = (ln_lead + lf[k] + ls - from_usize::<T>(k + 1) * lx).exp();
        if term > prev {
            return None;
        }
        acc.add(term);
        if term <= rel * acc.value() {
            break;
        }
        prev = term;
        k += 2;
        if k > 4000 {
            return None;
        }
    }
    let v = -acc.value();
    // G_{2m} is odd, G_{2m+1} even
    Some(if n % 2 == 0 && x < T::zero() { -v } else { v })
}

/// ĝ_0..=ĝ_nmax on a fixed composite Gauss–Legendre rule over the Fourier representation;
/// one Hermite-function recurrence per node serves every index.
fn fourier_batch<T: Real>(nmax: usize, x: T) -> Vec<T> {
    let two = lit::<T>(2.0);
    let turning = (two * from_usize::<T>(nmax) + T::one()).sqrt();
    let mut cap = turning + lit(6.0);
    while hermite_function::<T>(nmax, cap).abs() > lit(1e-19) {
        cap = cap + T::one();
    }
    let ax = x.abs();
    let width = (T::PI() / (ax + turning)).min(lit(0.5));
    let panels = (cap / width).ceil().to_usize().unwrap_or(1).max(1);
    let h = cap / from_usize::<T>(panels);
    let (z, w) = gauss_legendre::<T>(12);
    let mut sin_acc = vec![T::zero(); nmax + 1];
    let mut cos_acc = vec![T::zero(); nmax + 1];
    let mut psi = vec![T::zero(); nmax + 1];
    let c0 = T::PI().powf(lit(-0.25));
    let ra: Vec<T> = (0..nmax).map(|k| (two / (from_usize::<T>(k) + T::one())).sqrt()).collect();
    let rb: Vec<T> = (0..nmax).map(|k| (from_usize::<T>(k) / (from_usize::<T>(k) + T::one())).sqrt()).collect();
    for p in 0..panels {
        let a = h * from_usize::<T>(p);
        for (zi, wi) in z.iter().zip(&w) {
            let l = a + h * (*zi + T::one()) / two;
            let wt = *wi * h / two;
            psi[0] = c0 * (-l * l / two).exp();
            if nmax >= 1 {
                psi[1] = two.sqrt() * l * psi[0];
            }
            for k in 1..nmax {
                psi[k + 1] = ra[k] * l * psi[k] - rb[k] * psi[k - 1];
            }
            let (sn, cs) = (l * x).sin_cos();
            for k in 0..=nmax {
                if k % 2 == 0 {
                    sin_acc[k] = sin_acc[k] + wt * psi[k] * sn;
                } else {
                    cos_acc[k] = cos_acc[k] + wt * psi[k] * cs;
                }
            }
        }
    }
    let pre = (two / T::PI()).sqrt();
    (0..=nmax)
        .map(|n| {
            let even = n % 2 == 0;
            let sign = if ((n / 2) % 2 == 0) == even { -T::one() } else { T::one() };
            sign * pre * if even { sin_acc[n] } else { cos_acc[n] }
        })
        .collect()
}

/// Orthonormal ĝ_n(x) = G_n(x)/(π^{1/4}2^{n/2}√n!) for any n; n > 20 falls back to the
/// large-x series or the Fourier representation.
pub fn g_hat<T: Real>(n: usize, x: T) -> Result<T> {
    if n <= CLOSED_FORM_LIMIT {
        return Ok(g_eval(n, x)? / ln_norm::<T>(n).exp());
    }
    if let Some(v) = moment_series_hat(n, x, lit::<T>(4.0) * T::epsilon()) {
        return Ok(v);
    }
    Ok(fourier_batch(n, x)[n])
}

/// ĝ_0(x), …, ĝ_nmax(x) in one pass; cheaper than repeated [`g_hat`] calls for large indices.
pub fn g_hat_all<T: Real>(nmax: usize, x: T) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax.min(CLOSED_FORM_LIMIT) {
        out.push(g_eval(n, x)? / ln_norm::<T>(n).exp());
    }
    if nmax > CLOSED_FORM_LIMIT {
        let rel = lit::<T>(4.0) * T::epsilon();
        let mut tail: Vec<Option<T>> = Vec::new();
        for n in CLOSED_FORM_LIMIT + 1..=nmax {
            let v = if tail.last().is_some_and(|v| v.is_none()) { None } else { moment_series_hat(n, x, rel) };
            tail.push(v);
        }
        let batch = if tail.iter().any(|v| v.is_none()) { Some(fourier_batch(nmax, x)) } else { None };
        for (i, v) in tail.into_iter().enumerate() {
            let n = CLOSED_FORM_LIMIT + 1 + i;
            out.push(v.unwrap_or_else(|| batch.as_ref().unwrap()[n]));
        }
    }
    Ok(out)
}

/// G_n(x) for any n (see [`g_hat`]).
pub fn g_eval_any<T: Real>(n: usize, x: T) -> Result<T> {
    Ok(g_hat(n, x)? * ln_norm::<T>(n).exp())
}

/// G_m^{(1)}(ξ) or G_m^{(2)}(ξ), orthonormal on [0, ∞) with weight ξ^{−1/2}.
pub fn g_normalized<T: Real>(basis: Basis, m: usize, xi: T) -> Result<T> {
    if xi < T::zero() {
        return Err(Error::Domain(format!("normalized G-functions need ξ ≥ 0, got {}", xi)));
    }
    g_hat(basis.index(m), xi.sqrt())
}

/// V_n(x) = (1/π)·PV∫ e^{−t²}H_n(t)/(t−x) dt, n ≤ 20.
pub fn v_eval<T: Real>(n: usize, x: T) -> Result<T> {
    guard(n)?;
    let m = n / 2;
    let half = lit::<T>(0.5);
    let pre = lit::<T>(2.0).powi(2 * m as i32 + 1) * factorial::<T>(m) / T::PI().sqrt();
    let sign = if m % 2 == 0 { T::one() } else { -T::one() };
    let y = x * x;
    let mf = from_usize::<T>(m);
    if n % 2 == 0 {
        Ok(-sign * pre * x * kummer_phi_scaled(half - mf, lit(1.5), y)?.value)
    } else {
        Ok(sign * pre * kummer_phi_scaled(-half - mf, half, y)?.value)
    }
}

/// Right-hand side constant of the G-function ODE: B_m^{(1)} for n = 2m, B_m^{(2)} for n = 2m+1.
pub fn ode_constant<T: Real>(n: usize) -> T {
    let m = n / 2;
    let base = (lit::<T>(2.0) / T::PI()).sqrt() * factorial::<T>(n) / factorial::<T>(m);
    if n % 2 == 0 {
        base
    } else {
        base * lit(2.0)
    }
}

/// Residual of G'' + (2n+1−x²)G − B x (even n) or − B (odd n), with a five-point second difference.
pub fn ode_residual<T: Real>(n: usize, x: T) -> Result<T> {
    guard(n)?;
    let h = lit::<T>(1e-3) * x.abs().max(T::one());
    let g0 = g_eval(n, x)?;
    let d2 = (-g_eval(n, x + h + h)? + lit::<T>(16.0) * (g_eval(n, x + h)? + g_eval(n, x - h)?)
        - lit::<T>(30.0) * g0
        - g_eval(n, x - h - h)?)
        / (lit::<T>(12.0) * h * h);
    let coef = lit::<T>(2.0) * from_usize::<T>(n) + T::one() - x * x;
    let rhs = if n % 2 == 0 { ode_constant::<T>(n) * x } else { ode_constant::<T>(n) };
    Ok(d2 + coef * g0 - rhs)
}

/// Slope a_0 (n = 2m, G ≈ a_0 x) or value a_1 (n = 2m+1) at the origin.
pub fn origin_constant<T: Real>(n: usize) -> Result<T> {
    guard(n)?;
    let m = n / 2;
    let half = lit::<T>(0.5);
    let mut acc = Compensated::new();
    let mut p2 = T::one();
    for k in 0..=m {
        let kf = from_usize::<T>(k);
        let g = if n % 2 == 0 { gamma_real(kf + half)? } else { gamma_real(kf + lit(1.5))? };
        let sign = if k % 2 == 0 { T::one() } else { -T::one() };
        acc.add(sign * p2 / (factorial::<T>(m - k) * g));
        p2 = p2 * lit(2.0);
    }
    let s = lit::<T>(2.0).sqrt() * factorial::<T>(n) * acc.value();
    Ok(if n % 2 == 0 { -s } else { s })
}

/// Leading small-x term, or the large-x expansion (four terms for even n, one for odd n).
pub fn g_asymptotic<T: Real>(n: usize, x: T, regime: Regime) -> Result<T> {
    let ax = x.abs();
    let m = n / 2;
    match regime {
        Regime::Small => {
            if ax > lit(0.1) {
                return Err(Error::Regime { regime: "small", x: x.to_f64().unwrap_or(f64::NAN) });
            }
            let a = origin_constant::<T>(n)?;
            Ok(if n % 2 == 0 { a * x } else { a })
        }
        Regime::Large => {
            if ax < lit(10.0) {
                return Err(Error::Regime { regime: "large", x: x.to_f64().unwrap_or(f64::NAN) });
            }
            let mf = from_usize::<T>(m);
            if n % 2 == 0 {
                let c3 = lit::<T>(4.0) * mf + T::one();
                let c5 = lit::<T>(16.0) * mf * mf + lit::<T>(8.0) * mf + lit(3.0);
                let c7 = lit::<T>(64.0) * mf * mf * mf + lit::<T>(48.0) * mf * mf + lit::<T>(68.0) * mf + lit(15.0);
                let u = (x * x).recip();
                let series = T::one() + u * (c3 + u * (c5 + u * c7));
                Ok(-ode_constant::<T>(n) * series / x)
            } else {
                let lead = (lit::<T>(2.0) * mf + lit(2.5)) * T::LN_2() + crate::specfun::ln_gamma(mf + lit(1.5));
                Ok(-lead.exp() / (T::PI() * x * x))
            }
        }
    }
}

/// Zeros of G_m^{(j)} on [0, cap]: sign changes on a 0.01 grid refined by bisection,
/// plus ξ = 0 for the first basis.
pub fn zeros<T: Real>(basis: Basis, m: usize, cap: Option<T>) -> Result<Vec<T>> {
    let cap = cap.unwrap_or_else(|| lit::<T>(10.0) * from_usize::<T>(2 * m + 3));
    let step = lit::<T>(0.01);
    let f = |xi: T| g_normalized(basis, m, xi);
    let mut out = Vec::new();
    if basis == Basis::First {
        out.push(T::zero());
    }
    let mut a = step;
    let mut fa = f(a)?;
    let count = (cap / step).to_usize().unwrap_or(0);
    for i in 2..=count {
        let b = step * from_usize::<T>(i);
        let fb = f(b)?;
        if fa == T::zero() {
            out.push(a);
        } else if fa * fb < T::zero() {
            out.push(bisect(&f, a, b, fa)?);
        }
        a = b;
        fa = fb;
    }
    Ok(out)
}

pub(crate) fn bisect<T: Real, F: Fn(T) -> Result<T>>(f: &F, mut a: T, mut b: T, mut fa: T) -> Result<T> {
    for _ in 0..200 {
        let mid = lit::<T>(0.5) * (a + b);
        if (b - a) <= lit::<T>(1e-10) * mid.abs().max(T::one()) {
            return Ok(mid);
        }
        let fm = f(mid)?;
        if fm == T::zero() {
            return Ok(mid);
        }
        if (fm < T::zero()) == (fa < T::zero()) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(lit::<T>(0.5) * (a + b))
}

/// Number of zeros of G_m^{(j)} on [0, cap], counting ξ = 0 for the first basis.
pub fn count_zeros<T: Real>(basis: Basis, m: usize, cap: Option<T>) -> Result<usize> {
    Ok(zeros(basis, m, cap)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pv::{pv_fullaxis, PvConfig};
    use crate::specfun::hermite;
    use std::f64::consts::PI;

    #[test]
    fn even_index_vanishes_at_origin() {
        for m in 0..5 {
            assert_eq!(g_eval(2 * m, 0.0f64).unwrap(), 0.0);
        }
    }

    #[test]
    fn g0_against_pv_oracle() {
        let cfg = PvConfig::default();
        for &x in &[0.5f64, 1.0, 3.0] {
            let o: f64 = pv_fullaxis(|t: f64| (-t * t / 2.0).exp(), x, &cfg).unwrap();
            assert!((g_eval(0, x).unwrap() - o).abs() < 1e-7, "x={x}");
        }
    }

    #[test]
    fn g3_against_pv_oracle() {
        let cfg = PvConfig::default();
        let x = 1.7f64;
        let o: f64 = pv_fullaxis(|t: f64| (-t * t / 2.0).exp() * hermite(3, t), x, &cfg).unwrap();
        assert!((g_eval(3, x).unwrap() - o).abs() < 1e-7);
    }

    #[test]
    fn parity() {
        for n in 0..12 {
            for &x in &[0.3f64, 2.2, 7.9] {
                let s = if n % 2 == 0 { -1.0 } else { 1.0 };
                assert!((g_eval(n, -x).unwrap() - s * g_eval(n, x).unwrap()).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn fourier_oracle_agrees() {
        let tol = 1e-9;
        for n in 0..10 {
            for &x in &[0.3f64, 1.0, 4.0] {
                let a = g_eval(n, x).unwrap();
                let b = g_fourier_oracle(n, x, tol).unwrap();
                assert!((a - b).abs() <= 10.0 * tol, "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn odd_index_flat_at_origin() {
        let h = 1e-4;
        for m in 0..4 {
            let n = 2 * m + 1;
            let d: f64 = (g_fourier_oracle(n, h, 1e-12).unwrap() - g_fourier_oracle(n, -h, 1e-12).unwrap()) / (2.0 * h);
            assert!(d.abs() < 1e-6, "m={m}: {d}");
        }
    }

    #[test]
    fn even_index_negative_far_out() {
        for m in 0..4 {
            assert!(g_fourier_oracle(2 * m, 50.0f64, 1e-10).unwrap() < 0.0);
        }
    }

    #[test]
    fn v_small_cases() {
        assert_eq!(v_eval(0, 0.0f64).unwrap(), 0.0);
        assert!((v_eval(1, 0.0f64).unwrap() - 2.0 / PI.sqrt()).abs() < 1e-15);
        let cfg = PvConfig::default();
        let o: f64 = pv_fullaxis(|t: f64| (-t * t).exp() * hermite(3, t), 1.5, &cfg).unwrap();
        assert!((v_eval(3, 1.5f64).unwrap() - o).abs() < 1e-7);
    }

    #[test]
    fn ode_constants() {
        assert!((ode_constant::<f64>(0) - (2.0 / PI).sqrt()).abs() < 1e-15);
        assert!((ode_constant::<f64>(1) - 2.0 * (2.0 / PI).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn ode_residuals_small() {
        for n in 0..8 {
            for &x in &[0.5f64, 1.0, 2.0, 5.0] {
                let r = ode_residual(n, x).unwrap();
                assert!(r.abs() <= 1e-5, "n={n} x={x}: {r}");
            }
        }
    }

    #[test]
    fn small_x_slope() {
        for m in 0..4 {
            let x = 1e-4f64;
            let ratio = g_eval(2 * m, x).unwrap() / x;
            let a0 = origin_constant::<f64>(2 * m).unwrap();
            assert!((ratio - a0).abs() < 1e-6 * a0.abs());
            assert!((g_asymptotic(2 * m, x, Regime::Small).unwrap() - a0 * x).abs() < 1e-20);
        }
    }

    #[test]
    fn large_x_expansions() {
        for m in 0..4 {
            let x = 20.0f64;
            let exact = g_fourier_oracle(2 * m, x, 1e-13).unwrap();
            let four = g_asymptotic(2 * m, x, Regime::Large).unwrap();
            let one = -ode_constant::<f64>(2 * m) / x;
            assert!((four - exact).abs() < (one - exact).abs(), "m={m}");
        }
        for m in 0..3 {
            let x = 1e3f64;
            let g = g_eval(2 * m + 1, x).unwrap();
            let lead = g_asymptotic(2 * m + 1, x, Regime::Large).unwrap();
            assert!((g / lead - 1.0).abs() < 0.01);
        }
        assert!(g_asymptotic(0, 5.0f64, Regime::Large).is_err());
        assert!(g_asymptotic(0, 0.5f64, Regime::Small).is_err());
    }

    #[test]
    fn extended_evaluator_matches_closed_form_at_limit() {
        for &x in &[0.4f64, 3.0, 9.0, 30.0] {
            for n in [19usize, 20] {
                let closed = g_hat(n, x).unwrap();
                let four = fourier_hat(n, x, 1e-15).unwrap();
                assert!((closed - four).abs() < 1e-9, "n={n} x={x}: {closed} vs {four}");
            }
        }
    }

    #[test]
    fn moment_series_matches_fourier() {
        for n in [3usize, 8, 24, 31] {
            let x = 25.0f64;
            let a = moment_series_hat(n, x, 1e-15).unwrap();
            let b = fourier_hat(n, x, 1e-16).unwrap();
            assert!((a - b).abs() < 1e-12, "n={n}: {a} vs {b}");
        }
    }

    #[test]
    fn closed_form_rejects_large_index() {
        assert!(matches!(g_eval(21, 1.0f64), Err(Error::IndexTooLarge { .. })));
        assert!(GFamilyParams::new(10, Parity::Odd, EvalMethod::ClosedForm).is_err());
        assert!(GFamilyParams::new(10, Parity::Odd, EvalMethod::FourierOracle).is_ok());
    }

    #[test]
    fn zero_counts() {
        for m in 0..5 {
            assert_eq!(count_zeros::<f64>(Basis::First, m, None).unwrap(), m + 1, "first m={m}");
            assert_eq!(count_zeros::<f64>(Basis::Second, m, None).unwrap(), m + 1, "second m={m}");
        }
    }
}
