use crate::error::{Error, Result};
use crate::real::{from_usize, lit, Real};
use crate::specfun::gamma::{gamma, rgamma};
use crate::specfun::kummer::rgamma_real;
use num_complex::Complex;

/// Largest |z| for which the power series is attempted.
pub const SERIES_RANGE: f64 = 40.0;
/// Smallest |z| for which the Hankel expansion is attempted.
const HANKEL_FROM: f64 = 10.0;
/// Below this |z| the power series is used as is.
const SERIES_DIRECT: f64 = 8.0;
/// Largest |z| for the backward recurrence.
const MILLER_RANGE: f64 = 60.0;

struct Candidate<V, T> {
    value: V,
    err: T,
}

fn negative_integer_order<T: Real>(nu: Complex<T>) -> Option<usize> {
    if nu.im == T::zero() && nu.re < T::zero() && nu.re == nu.re.round() {
        nu.re.neg().to_usize()
    } else {
        None
    }
}

fn at_origin<T: Real>(nu: Complex<T>) -> Result<Complex<T>> {
    if nu.re > T::zero() {
        Ok(Complex::new(T::zero(), T::zero()))
    } else if nu.re == T::zero() && nu.im == T::zero() {
        Ok(Complex::new(T::one(), T::zero()))
    } else {
        Err(Error::Domain(format!("Bessel function of order {} at z = 0", nu)))
    }
}

fn series_c<T: Real>(nu: Complex<T>, z: Complex<T>, sign: T) -> Option<Candidate<Complex<T>, T>> {
    if z.norm() > lit(SERIES_RANGE) {
        return None;
    }
    let half = z * lit::<T>(0.5);
    let q = half * half * sign;
    let one = Complex::new(T::one(), T::zero());
    let mut term = (nu * half.ln()).exp() * rgamma(nu + one);
    let mut sum = term;
    let mut abs_sum = term.norm();
    let kmin = half.norm();
    for k in 0..400usize {
        let kf = from_usize::<T>(k);
        term = term * q / ((nu + kf + T::one()) * (kf + T::one()));
        sum = sum + term;
        abs_sum = abs_sum + term.norm();
        if kf > kmin && term.norm() <= T::epsilon() * sum.norm() {
            break;
        }
    }
    Some(Candidate { value: sum, err: lit::<T>(2.0) * T::epsilon() * abs_sum })
}

/// Miller backward recurrence normalised by (z/2)^ν = Σ_j (ν+2j)Γ(ν+j)/j! J_{ν+2j}(z).
fn miller_c<T: Real>(nu: Complex<T>, z: Complex<T>) -> Option<Candidate<Complex<T>, T>> {
    if z.norm() > lit(MILLER_RANGE) {
        return None;
    }
    let one = Complex::new(T::one(), T::zero());
    let n = (z.norm() + lit(60.0)).ceil().to_usize()? & !1;
    let mut coef = Vec::with_capacity(n / 2 + 1);
    let g1 = gamma(nu + one).ok()?;
    coef.push(g1);
    let mut g = g1;
    for j in 1..=n / 2 {
        let jf = from_usize::<T>(j);
        if j > 1 {
            g = g * (nu + jf - T::one()) / jf;
        }
        coef.push(g * (nu + jf * lit(2.0)));
    }
    let big = lit::<T>(1e100);
    let mut f_next = Complex::new(T::zero(), T::zero());
    let mut f = Complex::new(T::one(), T::zero());
    let mut norm = coef[n / 2] * f;
    let mut abs_norm = norm.norm();
    for k in (1..=n).rev() {
        let kf = from_usize::<T>(k);
        let f_prev = (nu + kf) * lit::<T>(2.0) / z * f - f_next;
        f_next = f;
        f = f_prev;
        if (k - 1) % 2 == 0 {
            let t = coef[(k - 1) / 2] * f;
            norm = norm + t;
            abs_norm = abs_norm + t.norm();
        }
        if f.norm() > big {
            let s = T::one() / big;
            f = f * s;
            f_next = f_next * s;
            norm = norm * s;
            abs_norm = abs_norm * s;
        }
    }
    let value = (nu * (z * lit::<T>(0.5)).ln()).exp() * f / norm;
    let err = lit::<T>(8.0) * T::epsilon() * value.norm() * (abs_norm / norm.norm());
    Some(Candidate { value, err })
}

fn miller_r<T: Real>(nu: T, x: T) -> Option<Candidate<T, T>> {
    if x > lit(MILLER_RANGE) {
        return None;
    }
    let n = (x + lit(60.0)).ceil().to_usize()? & !1;
    let mut coef = Vec::with_capacity(n / 2 + 1);
    let g1 = crate::specfun::gamma::gamma_real(nu + T::one()).ok()?;
    coef.push(g1);
    let mut g = g1;
    for j in 1..=n / 2 {
        let jf = from_usize::<T>(j);
        if j > 1 {
            g = g * (nu + jf - T::one()) / jf;
        }
        coef.push(g * (nu + jf * lit(2.0)));
    }
    let big = lit::<T>(1e100);
    let mut f_next = T::zero();
    let mut f = T::one();
    let mut norm = coef[n / 2] * f;
    let mut abs_norm = norm.abs();
    for k in (1..=n).rev() {
        let kf = from_usize::<T>(k);
        let f_prev = (nu + kf) * lit::<T>(2.0) / x * f - f_next;
        f_next = f;
        f = f_prev;
        if (k - 1) % 2 == 0 {
            let t = coef[(k - 1) / 2] * f;
            norm = norm + t;
            abs_norm = abs_norm + t.abs();
        }
        if f.abs() > big {
            let s = T::one() / big;
            f = f * s;
            f_next = f_next * s;
            norm = norm * s;
            abs_norm = abs_norm * s;
        }
    }
    let value = (nu * (x * lit::<T>(0.5)).ln()).exp() * f / norm;
    let err = lit::<T>(8.0) * T::epsilon() * value.abs() * (abs_norm / norm.abs());
    Some(Candidate { value, err })
}

/// Hankel coefficients a_k(ν)/z^k, returned lazily; stops when terms grow.
fn hankel_terms<T: Real>(nu: Complex<T>, z: Complex<T>) -> (Vec<Complex<T>>, bool) {
    let mu4 = nu * nu * lit::<T>(4.0);
    let mut terms = vec![Complex::new(T::one(), T::zero())];
    let mut t = Complex::new(T::one(), T::zero());
    let mut prev = T::infinity();
    for k in 1..200usize {
        let odd = from_usize::<T>(2 * k - 1);
        t = t * (mu4 - odd * odd) / (z * lit::<T>(8.0) * from_usize::<T>(k));
        let m = t.norm();
        if m > prev {
            return (terms, false);
        }
        prev = m;
        terms.push(t);
        if m <= T::epsilon() * lit(0.1) || m == T::zero() {
            return (terms, true);
        }
    }
    (terms, false)
}

fn hankel_j<T: Real>(nu: Complex<T>, z: Complex<T>) -> Option<Candidate<Complex<T>, T>> {
    if z.norm() < lit(HANKEL_FROM) || z.re <= T::zero() {
        return None;
    }
    let (terms, converged) = hankel_terms(nu, z);
    let mut p = Complex::new(T::zero(), T::zero());
    let mut q = Complex::new(T::zero(), T::zero());
    for (k, t) in terms.iter().enumerate() {
        let s = if (k / 2) % 2 == 0 { T::one() } else { -T::one() };
        if k % 2 == 0 {
            p = p + *t * s;
        } else {
            q = q + *t * s;
        }
    }
    let pi = T::PI();
    let omega = z - nu * (pi * lit(0.5)) - pi * lit(0.25);
    let pre = (Complex::new(lit::<T>(2.0) / pi, T::zero()) / z).sqrt();
    let (c, s) = (omega.cos(), omega.sin());
    let value = pre * (p * c - q * s);
    let last = terms.last().map(|t| t.norm()).unwrap_or(T::zero());
    let scale = pre.norm() * (c.norm() + s.norm());
    let trunc = if converged { last } else { last.max(lit(1e-3)) };
    Some(Candidate { value, err: scale * (trunc + lit::<T>(4.0) * T::epsilon()) })
}

fn hankel_i<T: Real>(nu: Complex<T>, z: Complex<T>) -> Option<Candidate<Complex<T>, T>> {
    if z.norm() < lit(SERIES_RANGE) || z.re <= T::zero() {
        return None;
    }
    let (terms, converged) = hankel_terms(nu, z);
    if !converged {
        return None;
    }
    let mut sum = Complex::new(T::zero(), T::zero());
    for (k, t) in terms.iter().enumerate() {
        sum = if k % 2 == 0 { sum + *t } else { sum - *t };
    }
    let two_pi = T::PI() + T::PI();
    let value = z.exp() / (z * two_pi).sqrt() * sum;
    Some(Candidate { value, err: value.norm() * lit::<T>(4.0) * T::epsilon() })
}

fn pick<V, T: Real>(a: Option<Candidate<V, T>>, b: Option<Candidate<V, T>>) -> Option<Candidate<V, T>> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.err < x.err { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// J_ν(z) for complex order and argument (principal branch of z^ν).
pub fn bessel_j<T: Real>(nu: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = negative_integer_order(nu) {
        let j = bessel_j(Complex::new(from_usize::<T>(n), T::zero()), z)?;
        return Ok(if n % 2 == 0 { j } else { -j });
    }
    if z.norm() == T::zero() {
        return at_origin(nu);
    }
    let chosen = if z.norm() <= lit(SERIES_DIRECT) || z.re.abs() < z.im.abs() {
        series_c(nu, z, -T::one())
    } else {
        match hankel_j(nu, z) {
            Some(h) if h.err <= lit::<T>(1e-15) * h.value.norm() => Some(h),
            h => pick(miller_c(nu, z), h),
        }
    };
    match chosen {
        Some(c) => Ok(c.value),
        None => Err(Error::NonConvergence { what: "Bessel J", estimate: z.norm().to_f64().unwrap_or(f64::NAN) }),
    }
}

/// I_ν(z) for complex order and argument.
pub fn bessel_i<T: Real>(nu: Complex<T>, z: Complex<T>) -> Result<Complex<T>> {
    if let Some(n) = negative_integer_order(nu) {
        return bessel_i(Complex::new(from_usize::<T>(n), T::zero()), z);
    }
    if z.norm() == T::zero() {
        return at_origin(nu);
    }
    match pick(series_c(nu, z, T::one()), hankel_i(nu, z)) {
        Some(c) => Ok(c.value),
        None => Err(Error::NonConvergence { what: "Bessel I", estimate: z.norm().to_f64().unwrap_or(f64::NAN) }),
    }
}

/// J_ν(x) in real arithmetic for real order and x > 0.
pub fn bessel_j_real<T: Real>(nu: T, x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("bessel_j_real needs x > 0, got {}", x)));
    }
    if nu < T::zero() && nu == nu.round() {
        let n = nu.neg().to_usize().unwrap();
        let j = bessel_j_real(-nu, x)?;
        return Ok(if n % 2 == 0 { j } else { -j });
    }
    let series = if x <= lit(SERIES_DIRECT) {
        let half = x * lit::<T>(0.5);
        let q = -half * half;
        let mut term = (nu * half.ln()).exp() * rgamma_real(nu + T::one());
        let mut sum = term;
        let mut abs_sum = term.abs();
        for k in 0..400usize {
            let kf = from_usize::<T>(k);
            term = term * q / ((nu + kf + T::one()) * (kf + T::one()));
            sum = sum + term;
            abs_sum = abs_sum + term.abs();
            if kf > half && term.abs() <= T::epsilon() * sum.abs() {
                break;
            }
        }
        Some(Candidate { value: sum, err: lit::<T>(2.0) * T::epsilon() * abs_sum })
    } else {
        None
    };
    let hankel = if x >= lit(HANKEL_FROM) {
        let mu4 = lit::<T>(4.0) * nu * nu;
        let mut p = T::one();
        let mut q = T::zero();
        let mut t = T::one();
        let mut prev = T::infinity();
        let mut converged = false;
        for k in 1..200usize {
            let odd = from_usize::<T>(2 * k - 1);
            t = t * (mu4 - odd * odd) / (lit::<T>(8.0) * from_usize::<T>(k) * x);
            if t.abs() > prev {
                break;
            }
            prev = t.abs();
            let s = if (k / 2) % 2 == 0 { T::one() } else { -T::one() };
            if k % 2 == 0 {
                p = p + s * t;
            } else {
                q = q + s * t;
            }
            if t.abs() <= T::epsilon() * lit(0.1) {
                converged = true;
                break;
            }
        }
        let pi = T::PI();
        let omega = x - nu * pi * lit(0.5) - pi * lit(0.25);
        let pre = (lit::<T>(2.0) / (pi * x)).sqrt();
        let trunc = if converged { prev } else { prev.max(lit(1e-3)) };
        Some(Candidate {
            value: pre * (p * omega.cos() - q * omega.sin()),
            err: pre * (trunc + lit::<T>(4.0) * T::epsilon()),
        })
    } else {
        None
    };
    let chosen = match (series, hankel) {
        (Some(s), _) => Some(s),
        (None, Some(h)) if h.err <= lit::<T>(1e-15) * h.value.abs() => Some(h),
        (None, h) => pick(miller_r(nu, x), h),
    };
    match chosen {
        Some(c) => Ok(c.value),
        None => Err(Error::NonConvergence { what: "Bessel J", estimate: x.to_f64().unwrap_or(f64::NAN) }),
    }
}
