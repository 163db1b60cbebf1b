use crate::error::{Error, Result};
use crate::real::{lit, Real};
use num_complex::Complex;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const POLE_TOL: f64 = 1e-12;

fn near_pole<T: Real>(z: Complex<T>) -> bool {
    if z.im.abs() > lit(POLE_TOL) || z.re > lit(POLE_TOL) {
        return false;
    }
    (z.re - z.re.round()).abs() < lit(POLE_TOL)
}

fn lanczos_series<T: Real>(z: Complex<T>) -> Complex<T> {
    // z here is the shifted argument (Gamma(z+1) form)
    let mut acc = Complex::new(lit::<T>(LANCZOS[0]), T::zero());
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + Complex::new(lit::<T>(c), T::zero()) / (z + lit::<T>(i as f64));
    }
    acc
}

/// Γ(z) for complex argument.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if near_pole(z) {
        return Err(Error::Pole(format!("{}", z)));
    }
    Ok(gamma_unchecked(z))
}

fn gamma_unchecked<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = lit::<T>(0.5);
    if z.re < half {
        let pi = T::PI();
        let s = (z * pi).sin();
        return Complex::new(pi, T::zero()) / (s * gamma_unchecked(Complex::new(T::one(), T::zero()) - z));
    }
    let zm = z - T::one();
    let t = zm + lit::<T>(LANCZOS_G + 0.5);
    let lnp = (zm + half) * t.ln() - t;
    let sqrt2pi = (T::PI() + T::PI()).sqrt();
    lnp.exp() * lanczos_series(zm) * sqrt2pi
}

/// ln Γ(z) for complex argument (principal branch of the Lanczos form, Re z ≥ 1/2).
pub fn ln_gamma_complex<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if near_pole(z) {
        return Err(Error::Pole(format!("{}", z)));
    }
    if z.re < lit(0.5) {
        return gamma(z).map(|g| g.ln());
    }
    let half = lit::<T>(0.5);
    let zm = z - T::one();
    let t = zm + lit::<T>(LANCZOS_G + 0.5);
    let sqrt2pi = (T::PI() + T::PI()).sqrt();
    Ok((zm + half) * t.ln() - t + (lanczos_series(zm) * sqrt2pi).ln())
}

/// 1/Γ(z); entire, returns zero at the poles of Γ.
pub fn rgamma<T: Real>(z: Complex<T>) -> Complex<T> {
    if near_pole(z) && z.im == T::zero() && z.re == z.re.round() {
        return Complex::new(T::zero(), T::zero());
    }
    Complex::new(T::one(), T::zero()) / gamma_unchecked(z)
}

/// Γ(x) for real argument; exact products for small positive integers.
pub fn gamma_real<T: Real>(x: T) -> Result<T> {
    if x <= T::zero() && (x - x.round()).abs() < lit(POLE_TOL) {
        return Err(Error::Pole(format!("{}", x)));
    }
    if x == x.round() && x > T::zero() && x < lit(30.0) {
        let n = x.to_usize().unwrap();
        return Ok(factorial(n - 1));
    }
    Ok(gamma_real_unchecked(x))
}

fn gamma_real_unchecked<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        let pi = T::PI();
        return pi / ((pi * x).sin() * gamma_real_unchecked(T::one() - x));
    }
    let xm = x - T::one();
    let t = xm + lit::<T>(LANCZOS_G + 0.5);
    let mut acc = lit::<T>(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + lit::<T>(c) / (xm + lit::<T>(i as f64));
    }
    let sqrt2pi = (T::PI() + T::PI()).sqrt();
    if x > lit(140.0) {
        // split the power to avoid premature overflow
        let p = t.powf((xm + half) * half);
        return p * (p * (-t).exp()) * sqrt2pi * acc;
    }
    t.powf(xm + half) * (-t).exp() * sqrt2pi * acc
}

/// ln|Γ(x)| for real x that is not a nonpositive integer.
pub fn ln_gamma<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        let pi = T::PI();
        return (pi / (pi * x).sin().abs()).ln() - ln_gamma(T::one() - x);
    }
    let xm = x - T::one();
    let t = xm + lit::<T>(LANCZOS_G + 0.5);
    let mut acc = lit::<T>(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + lit::<T>(c) / (xm + lit::<T>(i as f64));
    }
    let ln2pi = (T::PI() + T::PI()).ln();
    half * ln2pi + (xm + half) * t.ln() - t + acc.ln()
}

/// n! as a floating-point value (exact while representable).
pub fn factorial<T: Real>(n: usize) -> T {
    let mut acc = T::one();
    for k in 2..=n {
        acc = acc * lit::<T>(k as f64);
    }
    acc
}

/// ln n!.
pub fn ln_factorial<T: Real>(n: usize) -> T {
    if n < 30 {
        factorial::<T>(n).ln()
    } else {
        ln_gamma(lit::<T>(n as f64 + 1.0))
    }
}

/// Euler–Mascheroni constant.
pub fn euler_gamma<T: Real>() -> T {
    lit(0.577_215_664_901_532_860_6)
}
