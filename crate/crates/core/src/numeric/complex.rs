use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::rational::BigRational;
use super::real::Real;

#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Complex {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Complex {
        let im = Real::zero(re.precision());
        Complex { re, im }
    }

    pub fn zero(p: usize) -> Complex {
        Complex::from_real(Real::zero(p))
    }

    pub fn one(p: usize) -> Complex {
        Complex::from_real(Real::one(p))
    }

    pub fn from_rationals(re: &BigRational, im: &BigRational, p: usize) -> Complex {
        Complex::new(Real::from_rational(re, p), Real::from_rational(im, p))
    }

    pub fn precision(&self) -> usize {
        self.re.precision().max(self.im.precision())
    }

    /// Both parts rounded to precision `p`.
    pub fn with_precision(&self, p: usize) -> Complex {
        Complex::new(self.re.with_precision(p), self.im.with_precision(p))
    }

    /// The real part when the imaginary part is exactly zero.
    pub fn as_real(&self) -> Option<&Real> {
        self.im.is_zero().then_some(&self.re)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> Real {
        Real::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &Real) -> Complex {
        Complex::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Complex {
        let d = self.norm_sqr();
        Complex::new(&self.re / &d, -(&self.im / &d))
    }

    pub fn exp(&self) -> Complex {
        let m = self.re.exp();
        if self.im.is_zero() {
            return Complex::from_real(m);
        }
        Complex::new(&m * &self.im.cos(), &m * &self.im.sin())
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Complex {
        if self.im.is_zero() && self.re.is_positive() {
            return Complex::from_real(self.re.ln());
        }
        Complex::new(self.abs().ln(), self.arg())
    }

    /// `self^w` on the principal branch.
    pub fn pow(&self, w: &Complex) -> Complex {
        (w * &self.ln()).exp()
    }

    /// `base^w` for a positive real base.
    pub fn real_pow(base: &Real, w: &Complex) -> Complex {
        w.scale(&base.ln()).exp()
    }

    pub fn sin(&self) -> Complex {
        if self.im.is_zero() {
            return Complex::from_real(self.re.sin());
        }
        Complex::new(
            &self.re.sin() * &self.im.cosh(),
            &self.re.cos() * &self.im.sinh(),
        )
    }

    pub fn cos(&self) -> Complex {
        if self.im.is_zero() {
            return Complex::from_real(self.re.cos());
        }
        Complex::new(
            &self.re.cos() * &self.im.cosh(),
            -(&self.re.sin() * &self.im.sinh()),
        )
    }

    pub fn mul_real(&self, k: &Real) -> Complex {
        self.scale(k)
    }

    pub fn add_real(&self, k: &Real) -> Complex {
        Complex::new(&self.re + k, self.im.clone())
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({:?}, {:?})", self.re, self.im)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        if self.im.is_zero() {
            write!(f, "{:.*}", digits, self.re)
        } else if self.im.is_negative() {
            write!(f, "{:.*} - {:.*}i", digits, self.re, digits, -&self.im)
        } else {
            write!(f, "{:.*} + {:.*}i", digits, self.re, digits, self.im)
        }
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Complex::from_real(&self.re * &rhs.re);
        }
        Complex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div<&Complex> for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        if rhs.im.is_zero() {
            return Complex::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        let d = rhs.norm_sqr();
        Complex::new(
            &(&(&self.re * &rhs.re) + &(&self.im * &rhs.im)) / &d,
            &(&(&self.im * &rhs.re) - &(&self.re * &rhs.im)) / &d,
        )
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                (&self).$method(rhs)
            }
        }
        impl $tr<Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                self.$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}
