//! Semi-axis Hilbert transforms and Cauchy singular integrals.
//!
//! The numerical core (`specfun`, `integrate`, `pv`, `gfun`, `quad`) is generic over
//! [`Real`]; the application layers (`relations`, `sie`, `contact`) work in `f64`.

pub mod contact;
pub mod error;
pub mod gfun;
pub mod integrate;
pub mod pv;
pub mod quad;
pub mod real;
pub mod relations;
pub mod sie;
pub mod specfun;

pub use error::{Error, Result};
pub use real::{lit, Real};

pub type GaussLaguerreRule64 = quad::GaussLaguerreRule<f64>;
pub type QnEvaluator64 = quad::QnEvaluator<f64>;
pub type PvConfig64 = pv::PvConfig<f64>;
