//! Arbitrary-precision reals.
//!
//! `Real` wraps an `astro_float_num::BigFloat` together with the binary
//! precision it was created at. Binary operations run at the larger of the two
//! operand precisions and round to nearest (ties to even). Conversions from
//! exact rationals are done here with integer arithmetic so that they are
//! correctly rounded.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use astro_float_num::{BigFloat, Consts, RoundingMode, Sign, Word, WORD_BIT_SIZE};
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use super::rational::BigRational;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("allocate constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

fn pi_cache() -> &'static Mutex<HashMap<usize, BigFloat>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, BigFloat>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

#[derive(Clone)]
pub struct Real {
    v: BigFloat,
    p: usize,
}

impl Real {
    fn wrap(v: BigFloat, p: usize) -> Real {
        debug_assert!(!v.is_nan(), "NaN produced at precision {p}");
        Real { v, p }
    }

    pub fn zero(p: usize) -> Real {
        Real::wrap(BigFloat::new(p), p)
    }

    pub fn one(p: usize) -> Real {
        Real::from_u64(1, p)
    }

    pub fn from_u64(n: u64, p: usize) -> Real {
        Real::wrap(BigFloat::from_u64(n, p.max(64)).with_precision(p), p)
    }

    pub fn from_i64(n: i64, p: usize) -> Real {
        let r = Real::from_u64(n.unsigned_abs(), p);
        if n < 0 {
            -r
        } else {
            r
        }
    }

    /// Exact for every finite `f` when `p >= 53`.
    pub fn from_f64(f: f64, p: usize) -> Real {
        Real::wrap(BigFloat::from_f64(f, p.max(64)).with_precision(p), p)
    }

    pub fn from_int(n: &BigInt, p: usize) -> Real {
        Real::from_rational(&BigRational::from_integer(n.clone()), p)
    }

    /// Correctly rounded (to nearest, ties to even) conversion of `q`.
    pub fn from_rational(q: &BigRational, p: usize) -> Real {
        if q.is_zero() {
            return Real::zero(p);
        }
        // Round to exactly `p` significant bits, then pad to whole words.
        let bits = p.max(1);
        let a: BigUint = q.numer().magnitude().clone();
        let b: BigUint = q.denom().magnitude().clone();
        // Scale so that a * 2^k / b lands in [2^(bits-1), 2^bits).
        let mut k = bits as i64 + b.bits() as i64 - a.bits() as i64;
        let (mut m, mut rem, mut den) = scaled_divide(&a, &b, k);
        if m.bits() as usize > bits {
            k -= 1;
            (m, rem, den) = scaled_divide(&a, &b, k);
        } else if (m.bits() as usize) < bits {
            k += 1;
            (m, rem, den) = scaled_divide(&a, &b, k);
        }
        debug_assert_eq!(m.bits() as usize, bits);
        let twice = &rem << 1usize;
        let round_up = match twice.cmp(&den) {
            Ordering::Greater => true,
            Ordering::Equal => m.is_odd(),
            Ordering::Less => false,
        };
        if round_up {
            m += 1u32;
            if m.bits() as usize > bits {
                m >>= 1usize;
                k -= 1;
            }
        }
        let sign = if q.is_negative() {
            Sign::Neg
        } else {
            Sign::Pos
        };
        let storage = storage_bits(p);
        let words = to_words(&(m << (storage - bits)), storage);
        let e = bits as i64 - k;
        let v = BigFloat::from_words(&words, sign, e as astro_float_num::Exponent);
        Real::wrap(v, p)
    }

    pub fn pi(p: usize) -> Real {
        let mut cache = pi_cache().lock().expect("pi cache poisoned");
        let v = cache
            .entry(p)
            .or_insert_with(|| with_consts(|cc| cc.pi(p, RM)))
            .clone();
        Real::wrap(v, p)
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    /// Rounds to a new precision.
    pub fn with_precision(&self, p: usize) -> Real {
        let mut v = self.v.clone();
        if !v.is_zero() {
            v.set_precision(p.max(WORD_BIT_SIZE), RM)
                .expect("valid precision");
        } else {
            v = BigFloat::new(p);
        }
        Real::wrap(v, p)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        !self.v.is_zero() && self.v.is_positive()
    }

    pub fn abs(&self) -> Real {
        Real::wrap(self.v.abs(), self.p)
    }

    pub fn sqrt(&self) -> Real {
        Real::wrap(self.v.sqrt(self.p, RM), self.p)
    }

    pub fn recip(&self) -> Real {
        Real::wrap(self.v.reciprocal(self.p, RM), self.p)
    }

    pub fn exp(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.exp(self.p, RM, cc)), self.p)
    }

    pub fn ln(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.ln(self.p, RM, cc)), self.p)
    }

    pub fn sin(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.sin(self.p, RM, cc)), self.p)
    }

    pub fn cos(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.cos(self.p, RM, cc)), self.p)
    }

    pub fn atan(&self) -> Real {
        Real::wrap(with_consts(|cc| self.v.atan(self.p, RM, cc)), self.p)
    }

    pub fn sinh(&self) -> Real {
        let e = self.exp();
        (&e - &e.recip()).ldexp(-1)
    }

    pub fn cosh(&self) -> Real {
        let e = self.exp();
        (&e + &e.recip()).ldexp(-1)
    }

    /// Angle of the point `(x, y)` in `(-pi, pi]`.
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let p = y.p.max(x.p);
        if x.is_zero() {
            if y.is_zero() {
                return Real::zero(p);
            }
            let half_pi = Real::pi(p).ldexp(-1);
            return if y.is_negative() { -half_pi } else { half_pi };
        }
        let base = (y / x).atan();
        if x.is_positive() {
            base
        } else if y.is_negative() {
            &base - &Real::pi(p)
        } else {
            &base + &Real::pi(p)
        }
    }

    pub fn powi(&self, n: u32) -> Real {
        Real::wrap(self.v.powi(n as usize, self.p, RM), self.p)
    }

    /// `self^y` for positive `self`.
    pub fn pow(&self, y: &Real) -> Real {
        (y * &self.ln()).exp()
    }

    /// Multiplies by `2^k` exactly.
    pub fn ldexp(&self, k: i64) -> Real {
        if self.v.is_zero() {
            return self.clone();
        }
        let mut v = self.v.clone();
        let e = v.exponent().expect("finite value") as i64 + k;
        v.set_exponent(e as astro_float_num::Exponent);
        Real::wrap(v, self.p)
    }

    pub fn mul_int(&self, n: i64) -> Real {
        self * &Real::from_i64(n, self.p)
    }

    pub fn div_int(&self, n: i64) -> Real {
        self / &Real::from_i64(n, self.p)
    }

    pub fn mul_rational(&self, q: &BigRational) -> Real {
        self * &Real::from_rational(q, self.p)
    }

    pub fn max(&self, other: &Real) -> Real {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `e` such that `2^(e-1) <= |self| < 2^e`; `None` for zero.
    pub fn binary_exponent(&self) -> Option<i64> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent().map(|e| e as i64)
        }
    }

    /// The value as an `i64` when it is an integer in range.
    pub fn to_i64_exact(&self) -> Option<i64> {
        match self.binary_exponent() {
            None => Some(0),
            Some(e) if e <= 63 => {
                let q = self.to_rational();
                if q.is_integer() {
                    q.numer().to_i64()
                } else {
                    None
                }
            }
            Some(_) => None,
        }
    }

    /// Exact value as a rational.
    pub fn to_rational(&self) -> BigRational {
        let Some((m, e)) = self.mantissa_exponent() else {
            return BigRational::zero();
        };
        if e >= 0 {
            BigRational::from_integer(m << e as usize)
        } else {
            BigRational::new(m, BigInt::one() << (-e) as usize)
        }
    }

    /// `(m, e)` with value `m * 2^e`, or `None` for zero.
    fn mantissa_exponent(&self) -> Option<(BigInt, i64)> {
        if self.v.is_zero() {
            return None;
        }
        let (words, _, sign, e, _) = self.v.as_raw_parts()?;
        let mut mag = BigUint::zero();
        for w in words.iter().rev() {
            mag = (mag << WORD_BIT_SIZE) + BigUint::from(*w);
        }
        let m = BigInt::from_biguint(
            if sign == Sign::Neg {
                BigSign::Minus
            } else {
                BigSign::Plus
            },
            mag,
        );
        Some((m, e as i64 - (words.len() * WORD_BIT_SIZE) as i64))
    }

    /// Nearest `f64`; saturates to zero or infinity outside its range.
    pub fn to_f64(&self) -> f64 {
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return 0.0;
        };
        if self.v.is_zero() {
            return 0.0;
        }
        let top = *words.last().expect("non-empty mantissa") as f64;
        let mag = ldexp_f64(top, e as i64 - WORD_BIT_SIZE as i64);
        if sign == Sign::Neg {
            -mag
        } else {
            mag
        }
    }

    /// `log10 |self|` as a float, valid for any exponent range.
    pub fn log10_abs(&self) -> f64 {
        match self.v.as_raw_parts() {
            Some((words, _, _, e, _)) if !self.v.is_zero() => {
                let top = *words.last().expect("non-empty mantissa") as f64 / 2f64.powi(64);
                top.log10() + e as f64 * std::f64::consts::LOG10_2
            }
            _ => f64::NEG_INFINITY,
        }
    }

    /// First `n` significant decimal digits, truncated toward zero.
    pub fn to_decimal(&self, n: usize) -> Decimal {
        assert!(n >= 1);
        let Some((m, e2)) = self.mantissa_exponent() else {
            return Decimal {
                negative: false,
                digits: "0".repeat(n),
                exponent: 0,
                zero: true,
            };
        };
        let negative = m.is_negative();
        let mag = m.magnitude().clone();
        let mut e10 = self.log10_abs().floor() as i64;
        loop {
            let d = scaled_floor(&mag, e2, n as i64 - 1 - e10);
            let lo = BigUint::from(10u32).pow(n as u32 - 1);
            if d >= &lo * 10u32 {
                e10 += 1;
            } else if d < lo {
                e10 -= 1;
            } else {
                return Decimal {
                    negative,
                    digits: d.to_string(),
                    exponent: e10,
                    zero: false,
                };
            }
        }
    }

    /// Truncated digits of `|self|` at positions `10^exponent` and below.
    pub fn digits_at_exponent(&self, exponent: i64, n: usize) -> String {
        let Some((m, e2)) = self.mantissa_exponent() else {
            return "0".repeat(n);
        };
        let d = scaled_floor(m.magnitude(), e2, n as i64 - 1 - exponent);
        let s = d.to_string();
        if s.len() >= n {
            s
        } else {
            format!("{}{}", "0".repeat(n - s.len()), s)
        }
    }

    /// Scientific notation with `n` significant digits (truncated).
    pub fn to_sci_string(&self, n: usize) -> String {
        self.to_decimal(n).to_string()
    }
}

/// Truncated decimal expansion `±d.ddd × 10^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    pub negative: bool,
    pub digits: String,
    pub exponent: i64,
    pub zero: bool,
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        let (head, tail) = self.digits.split_at(1);
        if tail.is_empty() {
            write!(f, "{sign}{head}e{:+}", self.exponent)
        } else {
            write!(f, "{sign}{head}.{tail}e{:+}", self.exponent)
        }
    }
}

fn storage_bits(p: usize) -> usize {
    p.max(1).div_ceil(WORD_BIT_SIZE) * WORD_BIT_SIZE
}

/// `floor(a * 2^k / b)` with remainder and effective denominator.
fn scaled_divide(a: &BigUint, b: &BigUint, k: i64) -> (BigUint, BigUint, BigUint) {
    let (num, den) = if k >= 0 {
        (a << k as usize, b.clone())
    } else {
        (a.clone(), b << (-k) as usize)
    };
    let (q, r) = num.div_rem(&den);
    (q, r, den)
}

/// `floor(m * 2^e2 * 10^j)`.
fn scaled_floor(m: &BigUint, e2: i64, j: i64) -> BigUint {
    let ten = BigUint::from(10u32);
    let mut num = m.clone();
    let mut den = BigUint::one();
    if e2 >= 0 {
        num <<= e2 as usize;
    } else {
        den <<= (-e2) as usize;
    }
    if j >= 0 {
        num *= ten.pow(j as u32);
    } else {
        den *= ten.pow((-j) as u32);
    }
    num / den
}

fn to_words(m: &BigUint, bits: usize) -> Vec<Word> {
    let mut words: Vec<Word> = m.iter_u64_digits().map(|d| d as Word).collect();
    words.resize(bits / WORD_BIT_SIZE, 0);
    words
}

fn ldexp_f64(mut x: f64, mut k: i64) -> f64 {
    while k > 1000 {
        x *= 2f64.powi(1000);
        k -= 1000;
        if x.is_infinite() {
            return x;
        }
    }
    while k < -1000 {
        x *= 2f64.powi(-1000);
        k += 1000;
        if x == 0.0 {
            return x;
        }
    }
    x * 2f64.powi(k as i32)
}

trait WithPrecision {
    fn with_precision(self, p: usize) -> Self;
}

impl WithPrecision for BigFloat {
    fn with_precision(mut self, p: usize) -> Self {
        if !self.is_zero() {
            self.set_precision(p.max(WORD_BIT_SIZE), RM)
                .expect("valid precision");
        }
        self
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({} @{}b)", self.to_sci_string(25), self.p)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20).max(1);
        write!(f, "{}", self.to_sci_string(digits))
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                let p = self.p.max(rhs.p);
                Real::wrap(self.v.$inner(&rhs.v, p, RM), p)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Sub, sub, sub);
binop!(Mul, mul, mul);
binop!(Div, div, div);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.neg(), self.p)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.clone().neg(), self.p)
    }
}

impl std::iter::Sum for Real {
    fn sum<I: Iterator<Item = Real>>(mut iter: I) -> Real {
        let first = iter.next().unwrap_or_else(|| Real::zero(64));
        iter.fold(first, |acc, x| acc + x)
    }
}

/// Rounds a rational to an `f64` through `Real`.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    Real::from_rational(q, 64).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::ratio;

    #[test]
    fn one_third_to_ten_digits() {
        let r = Real::from_rational(&ratio(1, 3), 100);
        assert_eq!(r.to_sci_string(10), "3.333333333e-1");
    }

    #[test]
    fn minus_one_twelfth() {
        let r = Real::from_rational(&ratio(-1, 12), 100);
        assert_eq!(r.to_sci_string(6), "-8.33333e-2");
    }

    #[test]
    fn zero_converts_to_zero() {
        assert!(Real::from_rational(&ratio(0, 1), 64).is_zero());
    }

    #[test]
    fn exact_dyadics_round_trip() {
        for q in [
            ratio(1, 2),
            ratio(-3, 8),
            ratio(12345, 1),
            ratio(1, 1 << 40),
        ] {
            assert_eq!(Real::from_rational(&q, 128).to_rational(), q);
        }
    }

    #[test]
    fn rounding_is_to_nearest() {
        // 1/3 at 64 bits: error must be below half an ulp.
        let q = ratio(1, 3);
        let r = Real::from_rational(&q, 64);
        let err = (r.to_rational() - &q).abs();
        let half_ulp = BigRational::new(BigInt::one(), BigInt::one() << 66usize);
        assert!(err <= half_ulp);
    }

    #[test]
    fn pi_digits() {
        let pi = Real::pi(256);
        assert_eq!(
            pi.to_sci_string(40),
            "3.141592653589793238462643383279502884197e+0"
        );
    }

    #[test]
    fn decimal_exponents() {
        let r = Real::from_rational(&ratio(98, 1), 128);
        let d = r.to_decimal(3);
        assert_eq!((d.digits.as_str(), d.exponent), ("980", 1));
        let r = Real::from_rational(&ratio(-1, 1024), 128);
        assert_eq!(r.to_sci_string(2), "-9.7e-4");
        assert_eq!(Real::from_i64(7, 64).to_sci_string(1), "7e+0");
    }

    #[test]
    fn atan2_quadrants() {
        let p = 128;
        let one = Real::one(p);
        let pi = Real::pi(p);
        let a = Real::atan2(&one, &-&one);
        let expect = &pi * &Real::from_rational(&ratio(3, 4), p);
        assert!((&a - &expect).abs().to_f64() < 1e-30);
        let b = Real::atan2(&-&one, &-&one);
        assert!((&b + &expect).abs().to_f64() < 1e-30);
    }

    #[test]
    fn to_f64_and_ldexp() {
        let r = Real::from_f64(0.15625, 64);
        assert_eq!(r.to_f64(), 0.15625);
        assert_eq!(r.ldexp(3).to_f64(), 1.25);
        assert_eq!(Real::from_i64(-5, 64).to_f64(), -5.0);
    }
}
