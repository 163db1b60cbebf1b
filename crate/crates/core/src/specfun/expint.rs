use crate::error::{Error, Result};
use crate::real::{from_usize, lit, Compensated, Real};
use crate::specfun::gamma::euler_gamma;

const SERIES_LIMIT: f64 = 40.0;

/// Exponential integral Ei(x), x > 0.
pub fn expint_ei<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) {
        return Err(Error::Domain(format!("Ei needs x > 0, got {}", x)));
    }
    if x <= lit(SERIES_LIMIT) {
        let mut acc = Compensated::new();
        let mut term = T::one();
        for m in 1..1000usize {
            let mf = from_usize::<T>(m);
            term = term * x / mf;
            let t = term / mf;
            acc.add(t);
            if t <= T::epsilon() * acc.value() * lit(0.25) {
                break;
            }
        }
        return Ok(euler_gamma::<T>() + x.ln() + acc.value());
    }
    // e^x/x Σ k!/x^k, optimally truncated
    let mut acc = Compensated::new();
    acc.add(T::one());
    let mut term = T::one();
    for k in 1..200usize {
        let next = term * from_usize::<T>(k) / x;
        if next >= term {
            break;
        }
        term = next;
        acc.add(term);
        if term <= T::epsilon() * lit(0.25) {
            break;
        }
    }
    Ok(x.exp() / x * acc.value())
}
