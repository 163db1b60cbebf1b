use crate::error::{Error, Result};
use crate::integrate::{adaptive, tail_geometric, AdaptiveConfig};
use crate::real::{from_usize, lit, Compensated, Real};
use crate::specfun::gamma::{gamma_real, ln_gamma};

/// A series evaluation with its truncation/rounding estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<V, T = V> {
    pub value: V,
    pub abs_error_estimate: T,
    pub terms_used: usize,
}

/// Series controls.
#[derive(Debug, Clone, Copy)]
pub struct SeriesConfig<T> {
    pub max_terms: usize,
    pub tol: T,
}

impl<T: Real> Default for SeriesConfig<T> {
    fn default() -> Self {
        Self { max_terms: 500, tol: lit(1e-14) }
    }
}

fn nonpositive_integer<T: Real>(a: T) -> Option<usize> {
    if a <= T::zero() && a == a.round() {
        a.neg().to_usize()
    } else {
        None
    }
}

/// 1/Γ(x) for real x, zero at the poles.
pub(crate) fn rgamma_real<T: Real>(x: T) -> T {
    if nonpositive_integer(x).is_some() {
        T::zero()
    } else {
        T::one() / gamma_real(x).unwrap_or(T::infinity())
    }
}

/// Direct power series Σ (a)_k x^k / ((c)_k k!).
fn phi_series<T: Real>(a: T, c: T, x: T, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    let eps = T::epsilon();
    let stop = nonpositive_integer(a);
    let mut term = T::one();
    let mut acc = Compensated::new();
    acc.add(T::one());
    let mut abs_sum = T::one();
    let (aa, ac, ax) = (a.abs(), c.abs(), x.abs());
    for k in 0..cfg.max_terms {
        if stop == Some(k) {
            return Ok(EvalResult { value: acc.value(), abs_error_estimate: eps * abs_sum, terms_used: k + 1 });
        }
        let kf = from_usize::<T>(k);
        term = term * (a + kf) * x / ((c + kf) * (kf + T::one()));
        acc.add(term);
        abs_sum = abs_sum + term.abs();
        let next = kf + T::one();
        if next > aa + ac && next + T::one() > ax {
            let r = (next + aa) * ax / ((next - ac) * (next + T::one()));
            if r < T::one() {
                let tail = term.abs() * r / (T::one() - r);
                let sum = acc.value();
                if tail <= cfg.tol * sum.abs() || tail == T::zero() {
                    return Ok(EvalResult { value: sum, abs_error_estimate: tail + eps * abs_sum, terms_used: k + 2 });
                }
            }
        }
    }
    Err(Error::NonConvergence { what: "confluent hypergeometric series", estimate: term.abs().to_f64().unwrap_or(f64::NAN) })
}

fn check_c<T: Real>(c: T) -> Result<()> {
    if c <= T::zero() && (c - c.round()).abs() < lit(1e-12) {
        return Err(Error::CDomain(c.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(())
}

/// Kummer's function Φ(a, c; x) with default series controls.
pub fn kummer_phi<T: Real>(a: T, c: T, x: T) -> Result<EvalResult<T>> {
    kummer_phi_with(a, c, x, &SeriesConfig::default())
}

/// Φ(a, c; x). Negative arguments go through Kummer's transformation e^x Φ(c−a, c; −x),
/// which turns the alternating series into one of constant sign.
pub fn kummer_phi_with<T: Real>(a: T, c: T, x: T, cfg: &SeriesConfig<T>) -> Result<EvalResult<T>> {
    check_c(c)?;
    if x == T::zero() {
        return Ok(EvalResult { value: T::one(), abs_error_estimate: T::zero(), terms_used: 1 });
    }
    if x > T::zero() || nonpositive_integer(a).is_some() {
        return phi_series(a, c, x, cfg);
    }
    let r = phi_series(c - a, c, -x, cfg)?;
    let s = x.exp();
    Ok(EvalResult { value: s * r.value, abs_error_estimate: s * r.abs_error_estimate, terms_used: r.terms_used })
}

/// Large-x expansion of e^{-x}Φ(a,c;x) = Γ(c)/Γ(a) x^{a−c} Σ (c−a)_s (1−a)_s /(s! x^s);
/// `None` when the subdominant branch is not negligible or the series does not settle.
fn phi_scaled_asymptotic<T: Real>(a: T, c: T, x: T) -> Option<EvalResult<T>> {
    let eps = T::epsilon();
    // subdominant/dominant ratio |Γ(a)/Γ(c−a)| x^{c−2a} e^{−x}
    if nonpositive_integer(c - a).is_none() {
        let lr = ln_gamma(a) - ln_gamma(c - a) + (c - lit::<T>(2.0) * a) * x.ln() - x;
        if lr > eps.ln() + lit(-2.0) {
            return None;
        }
    }
    let mut term = T::one();
    let mut acc = Compensated::new();
    acc.add(T::one());
    let mut prev = T::infinity();
    for s in 0..200usize {
        let sf = from_usize::<T>(s);
        term = term * (c - a + sf) * (T::one() - a + sf) / ((sf + T::one()) * x);
        if term == T::zero() {
            break;
        }
        if term.abs() > prev {
            return None;
        }
        prev = term.abs();
        acc.add(term);
        if term.abs() <= eps * acc.value().abs() {
            let sign = gamma_real(a).ok()?.signum() * gamma_real(c).ok()?.signum();
            let lpre = ln_gamma(c) - ln_gamma(a) + (a - c) * x.ln();
            let pre = sign * lpre.exp();
            let v = pre * acc.value();
            return Some(EvalResult { value: v, abs_error_estimate: lit::<T>(4.0) * eps * v.abs() * (T::one() + lpre.abs()), terms_used: s + 2 });
        }
    }
    if term == T::zero() {
        let sign = gamma_real(a).ok()?.signum() * gamma_real(c).ok()?.signum();
        let v = sign * (ln_gamma(c) - ln_gamma(a) + (a - c) * x.ln()).exp() * acc.value();
        return Some(EvalResult { value: v, abs_error_estimate: eps * v.abs(), terms_used: 0 });
    }
    None
}

/// e^{-x} Φ(a, c; x): the exponentially scaled function, finite for large x.
pub fn kummer_phi_scaled<T: Real>(a: T, c: T, x: T) -> Result<EvalResult<T>> {
    check_c(c)?;
    if x < T::zero() {
        return phi_series(c - a, c, -x, &SeriesConfig::default());
    }
    if nonpositive_integer(a).is_some() {
        let r = phi_series(a, c, x, &SeriesConfig::default())?;
        let s = (-x).exp();
        return Ok(EvalResult { value: s * r.value, abs_error_estimate: s * r.abs_error_estimate, terms_used: r.terms_used });
    }
    if x >= lit(25.0) {
        if let Some(r) = phi_scaled_asymptotic(a, c, x) {
            return Ok(r);
        }
    }
    if x > lit(700.0) {
        return Err(Error::NonConvergence { what: "scaled confluent hypergeometric function", estimate: f64::INFINITY });
    }
    let cfg = SeriesConfig { max_terms: 4000, tol: lit(1e-15) };
    let r = phi_series(a, c, x, &cfg)?;
    let s = (-x).exp();
    Ok(EvalResult { value: s * r.value, abs_error_estimate: s * r.abs_error_estimate, terms_used: r.terms_used })
}

fn psi_asymptotic<T: Real>(a: T, c: T, x: T) -> Option<EvalResult<T>> {
    let eps = T::epsilon();
    let mut term = T::one();
    let mut acc = Compensated::new();
    acc.add(T::one());
    let mut prev = T::infinity();
    for s in 0..400usize {
        let sf = from_usize::<T>(s);
        term = -term * (a + sf) * (a - c + T::one() + sf) / ((sf + T::one()) * x);
        if term == T::zero() {
            let v = x.powf(-a) * acc.value();
            return Some(EvalResult { value: v, abs_error_estimate: eps * v.abs(), terms_used: s + 1 });
        }
        if term.abs() > prev {
            return None;
        }
        prev = term.abs();
        acc.add(term);
        if term.abs() <= eps * acc.value().abs() {
            let v = x.powf(-a) * acc.value();
            return Some(EvalResult { value: v, abs_error_estimate: lit::<T>(2.0) * prev * x.powf(-a), terms_used: s + 2 });
        }
    }
    None
}

/// Tricomi's function Ψ(a, c; x), x > 0.
///
/// Large x: the asymptotic series. Otherwise, for a > 0, the Laplace-type integral
/// Γ(a)^{-1}∫_0^∞ e^{-xt} t^{a−1}(1+t)^{c−a−1} dt; for a ≤ 0, the two-Φ connection
/// formula (noninteger c only).
pub fn tricomi_psi<T: Real>(a: T, c: T, x: T) -> Result<EvalResult<T>> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("tricomi_psi needs x > 0, got {}", x)));
    }
    if let Some(n) = nonpositive_integer(a) {
        // polynomial case: Ψ(-n, c; x) = (-1)^n (c)_n Φ(-n, c; x)
        let mut poch = T::one();
        for k in 0..n {
            poch = poch * (c + from_usize::<T>(k));
        }
        let sign = if n % 2 == 0 { T::one() } else { -T::one() };
        if nonpositive_integer(c).is_none() {
            let r = phi_series(a, c, x, &SeriesConfig::default())?;
            return Ok(EvalResult { value: sign * poch * r.value, abs_error_estimate: (poch * r.abs_error_estimate).abs(), terms_used: r.terms_used });
        }
    }
    if let Some(r) = psi_asymptotic(a, c, x) {
        return Ok(r);
    }
    if a > T::zero() {
        return psi_integral(a, c, x);
    }
    if (c - c.round()).abs() < lit(1e-12) {
        return Err(Error::CDomain(c.to_f64().unwrap_or(f64::NAN)));
    }
    psi_connection(a, c, x)
}

fn psi_connection<T: Real>(a: T, c: T, x: T) -> Result<EvalResult<T>> {
    let one = T::one();
    let p1 = kummer_phi(a, c, x)?;
    let p2 = kummer_phi(a - c + one, lit::<T>(2.0) - c, x)?;
    let k1 = gamma_real(one - c)? * rgamma_real(a - c + one);
    let k2 = gamma_real(c - one)? * rgamma_real(a) * x.powf(one - c);
    let v = k1 * p1.value + k2 * p2.value;
    let err = (k1 * p1.abs_error_estimate).abs()
        + (k2 * p2.abs_error_estimate).abs()
        + T::epsilon() * ((k1 * p1.value).abs() + (k2 * p2.value).abs());
    Ok(EvalResult { value: v, abs_error_estimate: err, terms_used: p1.terms_used + p2.terms_used })
}

fn psi_integral<T: Real>(a: T, c: T, x: T) -> Result<EvalResult<T>> {
    let one = T::one();
    let f = |t: T| {
        if t == T::zero() {
            if a > one {
                return T::zero();
            }
            if a == one {
                return one;
            }
        }
        (-x * t + (a - one) * t.ln() + (c - a - one) * t.ln_1p()).exp()
    };
    let cfg = AdaptiveConfig::new(lit::<T>(5e-14), 4000);
    let scale = one / x;
    let mut points = vec![T::zero()];
    let mut p = scale * lit(1e-8);
    while p < scale {
        points.push(p);
        p = p * lit(10.0);
    }
    points.push(scale);
    let head = adaptive(&f, &points, &cfg)?;
    let tail = tail_geometric(&f, scale, T::min_positive_value(), &cfg)?;
    let g = gamma_real(a)?;
    let v = (head.value + tail.value) / g;
    Ok(EvalResult { value: v, abs_error_estimate: (head.error + tail.error) / g.abs(), terms_used: head.evaluations + tail.evaluations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument_is_one() {
        assert_eq!(kummer_phi(0.3, 1.7, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn forbidden_c() {
        assert!(matches!(kummer_phi(0.5, -2.0, 1.0), Err(Error::CDomain(_))));
    }

    #[test]
    fn kummer_transformation_residual() {
        let (a, c, x) = (0.3f64, 1.7, 5.0);
        let lhs = kummer_phi(a, c, x).unwrap().value;
        let rhs = x.exp() * kummer_phi(c - a, c, -x).unwrap().value;
        assert!((lhs - rhs).abs() < 1e-12 * lhs.abs());
    }

    #[test]
    fn terminating_series_against_finite_sum() {
        for &x in &[-3.0f64, 0.7, 4.5, 12.0] {
            // Φ(-2, 3/2; x) = 1 - 4x/3 + 4x²/15
            let direct = 1.0 - 4.0 * x / 3.0 + 4.0 * x * x / 15.0;
            let r = kummer_phi(-2.0, 1.5, x).unwrap();
            assert!((r.value - direct).abs() <= 1e-14 * direct.abs().max(1.0), "x={x}");
            assert!(r.terms_used <= 3);
        }
    }

    #[test]
    fn scaled_matches_unscaled_and_asymptotic() {
        for &(a, c) in &[(0.5f64, 1.5f64), (-1.5, 1.5), (-2.5, 0.5), (1.3, 0.4)] {
            for &x in &[3.0f64, 24.0, 26.0, 60.0] {
                let s = kummer_phi_scaled(a, c, x).unwrap().value;
                let u = kummer_phi(a, c, x).unwrap().value * (-x as f64).exp();
                assert!((s - u).abs() <= 1e-12 * u.abs(), "a={a} c={c} x={x}: {s} vs {u}");
            }
        }
        let big = kummer_phi_scaled(0.5f64, 1.5, 5000.0).unwrap().value;
        // Γ(3/2)/Γ(1/2) x^{-1}(1 + 1/(2x) + ...)
        assert!((big * 5000.0 / 0.5 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn tricomi_large_x_normalisation() {
        let (a, c) = (1.2f64, 0.4);
        let x = 1e3f64;
        let r = tricomi_psi(a, c, x).unwrap();
        assert!((x.powf(a) * r.value - 1.0).abs() < 0.01);
    }

    #[test]
    fn tricomi_against_connection_formula() {
        let (a, c, x) = (1.2f64, 0.4, 3.0);
        let r = tricomi_psi(a, c, x).unwrap().value;
        let k1 = gamma_real(1.0 - c).unwrap() / gamma_real(a - c + 1.0).unwrap();
        let k2 = gamma_real(c - 1.0).unwrap() / gamma_real(a).unwrap() * x.powf(1.0 - c);
        let conn = k1 * kummer_phi(a, c, x).unwrap().value + k2 * kummer_phi(a - c + 1.0, 2.0 - c, x).unwrap().value;
        assert!((r - conn).abs() <= 1e-10 * conn.abs(), "{r} {conn}");
    }

    #[test]
    fn tricomi_regimes_agree() {
        for &(a, c) in &[(2.0f64, 2.0f64 / 3.0), (4.0, 0.5)] {
            let x = 90.0;
            let asym = psi_asymptotic(a, c, x).unwrap().value;
            let int = psi_integral(a, c, x).unwrap().value;
            assert!((asym - int).abs() < 1e-11 * asym.abs());
        }
    }
}
