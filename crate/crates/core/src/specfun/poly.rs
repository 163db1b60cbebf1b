use crate::error::{Error, Result};
use crate::real::{from_usize, lit, Real};

/// Degree and order of a generalized Laguerre polynomial L_n^α.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyParams<T> {
    pub degree: usize,
    pub order: T,
}

impl<T: Real> PolyParams<T> {
    pub fn new(degree: usize, order: T) -> Result<Self> {
        if !(order > -T::one()) {
            return Err(Error::Domain(format!("Laguerre order must exceed -1, got {}", order)));
        }
        Ok(Self { degree, order })
    }
}

/// Physicists' Hermite polynomial H_n(x), leading coefficient 2^n.
pub fn hermite<T: Real>(n: usize, x: T) -> T {
    let two = lit::<T>(2.0);
    let mut h0 = T::one();
    if n == 0 {
        return h0;
    }
    let mut h1 = two * x;
    for k in 1..n {
        let h2 = two * x * h1 - two * from_usize::<T>(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// Orthonormal Hermite function π^{-1/4}(2^n n!)^{-1/2} e^{-x²/2} H_n(x).
pub fn hermite_function<T: Real>(n: usize, x: T) -> T {
    let two = lit::<T>(2.0);
    let mut p0 = T::PI().powf(lit(-0.25)) * (-x * x / two).exp();
    if n == 0 {
        return p0;
    }
    let mut p1 = two.sqrt() * x * p0;
    for k in 1..n {
        let kf = from_usize::<T>(k);
        let p2 = (two / (kf + T::one())).sqrt() * x * p1 - (kf / (kf + T::one())).sqrt() * p0;
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// (L_n^α(x), L_{n-1}^α(x)) by the three-term recurrence; L_{-1} = 0.
pub fn laguerre_pair<T: Real>(n: usize, alpha: T, x: T) -> (T, T) {
    let mut l0 = T::one();
    if n == 0 {
        return (l0, T::zero());
    }
    let mut l1 = T::one() + alpha - x;
    for k in 1..n {
        let kf = from_usize::<T>(k);
        let l2 = ((lit::<T>(2.0) * kf + T::one() + alpha - x) * l1 - (kf + alpha) * l0) / (kf + T::one());
        l0 = l1;
        l1 = l2;
    }
    (l1, l0)
}

/// L_n^α(x).
pub fn laguerre_l<T: Real>(n: usize, alpha: T, x: T) -> T {
    laguerre_pair(n, alpha, x).0
}

/// L_n^α(x) for validated parameters.
pub fn laguerre<T: Real>(p: &PolyParams<T>, x: T) -> T {
    laguerre_l(p.degree, p.order, x)
}

/// d/dx L_n^α(x) = -L_{n-1}^{α+1}(x).
pub fn laguerre_deriv<T: Real>(p: &PolyParams<T>, x: T) -> T {
    if p.degree == 0 {
        return T::zero();
    }
    -laguerre_l(p.degree - 1, p.order + T::one(), x)
}
