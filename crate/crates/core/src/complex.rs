//! A minimal double-precision complex number.
//!
//! Only the operations the solvers and the oracle need are provided:
//! field arithmetic, conjugation, modulus, principal square and cube roots,
//! and polar construction.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    #[inline]
    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    #[inline]
    pub const fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Complex::new(r * c, r * s)
    }

    #[inline]
    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Modulus, computed without intermediate overflow.
    #[inline]
    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    #[inline]
    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    #[inline]
    pub fn is_real(self) -> bool {
        self.im == 0.0
    }

    #[inline]
    pub fn scale(self, k: f64) -> Self {
        Complex::new(self.re * k, self.im * k)
    }

    pub fn recip(self) -> Self {
        Complex::ONE / self
    }

    pub fn powi(self, n: u32) -> Self {
        let mut acc = Complex::ONE;
        let mut base = self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc *= base;
            }
            base *= base;
            n >>= 1;
        }
        acc
    }

    /// Principal square root (branch cut on the negative real axis).
    ///
    /// Real inputs produce results with an exactly zero imaginary or real part.
    pub fn sqrt(self) -> Self {
        if self.im == 0.0 {
            return if self.re >= 0.0 {
                Complex::real(self.re.sqrt())
            } else {
                Complex::new(0.0, (-self.re).sqrt())
            };
        }
        let r = self.abs();
        // Pick the formula that avoids cancellation in (r ± re).
        if self.re >= 0.0 {
            let t = (0.5 * (r + self.re)).sqrt();
            Complex::new(t, self.im / (2.0 * t))
        } else {
            let t = (0.5 * (r - self.re)).sqrt();
            Complex::new(self.im.abs() / (2.0 * t), t.copysign(self.im))
        }
    }

    /// Principal cube root. Real inputs map to the real cube root.
    pub fn cbrt(self) -> Self {
        if self.im == 0.0 {
            return Complex::real(self.re.cbrt());
        }
        Complex::from_polar(self.abs().cbrt(), self.arg() / 3.0)
    }

    /// Distance between two points of the complex plane.
    #[inline]
    pub fn dist(self, other: Complex) -> f64 {
        (self - other).abs()
    }

    /// Replace a signed zero with +0 so printed output never shows `-0`.
    pub fn without_negative_zero(self) -> Self {
        Complex::new(self.re + 0.0, self.im + 0.0)
    }
}

impl From<f64> for Complex {
    fn from(re: f64) -> Self {
        Complex::real(re)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.without_negative_zero();
        match f.precision() {
            Some(p) => {
                if z.im < 0.0 {
                    write!(f, "{:.*} - {:.*}i", p, z.re, p, -z.im)
                } else {
                    write!(f, "{:.*} + {:.*}i", p, z.re, p, z.im)
                }
            }
            None => {
                if z.im < 0.0 {
                    write!(f, "{} - {}i", z.re, -z.im)
                } else {
                    write!(f, "{} + {}i", z.re, z.im)
                }
            }
        }
    }
}

impl Add for Complex {
    type Output = Complex;
    #[inline]
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Add<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn add(self, rhs: f64) -> Complex {
        Complex::new(self.re + rhs, self.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    #[inline]
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Sub<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn sub(self, rhs: f64) -> Complex {
        Complex::new(self.re - rhs, self.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    #[inline]
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn mul(self, rhs: f64) -> Complex {
        self.scale(rhs)
    }
}

impl Mul<Complex> for f64 {
    type Output = Complex;
    #[inline]
    fn mul(self, rhs: Complex) -> Complex {
        rhs.scale(self)
    }
}

impl Div for Complex {
    type Output = Complex;
    /// Smith's algorithm.
    fn div(self, rhs: Complex) -> Complex {
        if rhs.re.abs() >= rhs.im.abs() {
            let r = rhs.im / rhs.re;
            let d = rhs.re + rhs.im * r;
            Complex::new((self.re + self.im * r) / d, (self.im - self.re * r) / d)
        } else {
            let r = rhs.re / rhs.im;
            let d = rhs.re * r + rhs.im;
            Complex::new((self.re * r + self.im) / d, (self.im * r - self.re) / d)
        }
    }
}

impl Div<f64> for Complex {
    type Output = Complex;
    #[inline]
    fn div(self, rhs: f64) -> Complex {
        Complex::new(self.re / rhs, self.im / rhs)
    }
}

impl Neg for Complex {
    type Output = Complex;
    #[inline]
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl AddAssign for Complex {
    fn add_assign(&mut self, rhs: Complex) {
        *self = *self + rhs;
    }
}

impl SubAssign for Complex {
    fn sub_assign(&mut self, rhs: Complex) {
        *self = *self - rhs;
    }
}

impl MulAssign for Complex {
    fn mul_assign(&mut self, rhs: Complex) {
        *self = *self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex, b: Complex, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    #[test]
    fn conj_is_an_involution() {
        let z = Complex::new(1.25, -3.5);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = Complex::new(3.0, -2.0);
        let b = Complex::new(-0.5, 4.0);
        assert!(close(a * b / b, a, 1e-15));
        assert!(close(b.recip() * b, Complex::ONE, 1e-15));
    }

    #[test]
    fn sqrt_of_negative_real_is_imaginary() {
        let r = Complex::real(-4.0).sqrt();
        assert_eq!(r, Complex::new(0.0, 2.0));
    }

    #[test]
    fn sqrt_squares_back() {
        for z in [
            Complex::new(-3.0, 1e-3),
            Complex::new(-3.0, -1e-3),
            Complex::new(2.0, 5.0),
            Complex::new(0.0, -1.0),
        ] {
            let s = z.sqrt();
            assert!(s.re >= 0.0);
            assert!(close(s * s, z, 1e-14), "{z:?}");
        }
    }

    #[test]
    fn cbrt_cubes_back() {
        for z in [
            Complex::new(-8.0, 0.0),
            Complex::new(1.0, 1.0),
            Complex::new(-2.0, -7.0),
        ] {
            let c = z.cbrt();
            assert!(close(c.powi(3), z, 1e-13), "{z:?}");
        }
        assert_eq!(Complex::real(-8.0).cbrt(), Complex::real(-2.0));
    }

    #[test]
    fn powi_matches_repeated_product() {
        let z = Complex::new(0.3, -1.7);
        assert!(close(z.powi(4), z * z * z * z, 1e-14));
        assert_eq!(z.powi(0), Complex::ONE);
    }

    #[test]
    fn display_hides_negative_zero() {
        let z = Complex::new(-0.0, -0.0);
        assert_eq!(format!("{z:.2}"), "0.00 + 0.00i");
        assert_eq!(format!("{:.1}", Complex::new(1.0, -2.0)), "1.0 - 2.0i");
    }
}
