//! Scalar special functions: Gamma, Hermite and Laguerre polynomials, Kummer Φ,
//! Tricomi Ψ, Bessel J/I of complex order and the exponential integral.

mod bessel;
mod expint;
mod gamma;
mod kummer;
mod poly;

pub use bessel::{bessel_i, bessel_j, bessel_j_real, SERIES_RANGE as BESSEL_SERIES_RANGE};
pub use expint::expint_ei;
pub use gamma::{euler_gamma, factorial, gamma, gamma_real, ln_factorial, ln_gamma, ln_gamma_complex, rgamma};
pub use kummer::{kummer_phi, kummer_phi_scaled, kummer_phi_with, tricomi_psi, EvalResult, SeriesConfig};
pub use poly::{hermite, hermite_function, laguerre, laguerre_deriv, laguerre_l, laguerre_pair, PolyParams};
