//! Scalar abstraction over real and complex arithmetic.
//!
//! Weight matrices, moment sums and truncated series come in a real mode
//! (`f64`) and a complex mode (`Complex64`); the numeric kernels are written
//! once against this trait.

use num_complex::Complex64;
use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Embeds a real number.
    fn from_re(x: f64) -> Self;
    /// Multiplies by a real factor.
    fn scale(self, x: f64) -> Self;
    /// Modulus.
    fn norm(self) -> f64;
    /// Natural logarithm on the principal branch.
    fn ln(self) -> Self;
    fn re(self) -> f64;
    fn im(self) -> f64;
    fn to_complex(self) -> Complex64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_re(x: f64) -> Self {
        x
    }
    fn scale(self, x: f64) -> Self {
        self * x
    }
    fn norm(self) -> f64 {
        self.abs()
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn re(self) -> f64 {
        self
    }
    fn im(self) -> f64 {
        0.0
    }
    fn to_complex(self) -> Complex64 {
        Complex64::new(self, 0.0)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_re(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn scale(self, x: f64) -> Self {
        Complex64::new(self.re * x, self.im * x)
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn ln(self) -> Self {
        Complex64::ln(self)
    }
    fn re(self) -> f64 {
        self.re
    }
    fn im(self) -> f64 {
        self.im
    }
    fn to_complex(self) -> Complex64 {
        self
    }
}
