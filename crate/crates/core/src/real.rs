//! Scalar abstraction used by the generic numerical core.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Sub};

/// Floating-point scalar the generic modules are written against.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts an `f64` literal into `T`.
#[inline(always)]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).unwrap()
}

#[inline(always)]
pub fn from_usize<T: Real>(n: usize) -> T {
    T::from_usize(n).unwrap()
}

#[inline(always)]
pub fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Values that can be integrated: real or complex.
pub trait Quantity<T: Real>:
    Copy + Send + Sync + Debug + Zero + Add<Output = Self> + Sub<Output = Self> + Mul<T, Output = Self>
{
    fn magnitude(&self) -> T;
    fn is_finite_value(&self) -> bool;
}

impl<T: Real> Quantity<T> for T {
    #[inline]
    fn magnitude(&self) -> T {
        self.abs()
    }
    #[inline]
    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }
}

impl<T: Real> Quantity<T> for Complex<T> {
    #[inline]
    fn magnitude(&self) -> T {
        self.re.hypot(self.im)
    }
    #[inline]
    fn is_finite_value(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Neumaier compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Compensated<T> {
    sum: T,
    comp: T,
}

impl<T: Real> Compensated<T> {
    pub fn new() -> Self {
        Self { sum: T::zero(), comp: T::zero() }
    }

    #[inline]
    pub fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp = self.comp + ((self.sum - t) + v);
        } else {
            self.comp = self.comp + ((v - t) + self.sum);
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> T {
        self.sum + self.comp
    }
}

/// Compensated accumulator for complex values.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedC<T> {
    re: Compensated<T>,
    im: Compensated<T>,
}

impl<T: Real> CompensatedC<T> {
    pub fn new() -> Self {
        Self { re: Compensated::new(), im: Compensated::new() }
    }

    #[inline]
    pub fn add(&mut self, v: Complex<T>) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    #[inline]
    pub fn value(&self) -> Complex<T> {
        Complex::new(self.re.value(), self.im.value())
    }
}
