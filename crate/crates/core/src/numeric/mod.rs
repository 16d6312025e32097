//! Precision contexts, exact rationals, big-float reals and complexes, and
//! two-precision digit certification.

mod certify;
mod complex;
mod context;
pub mod rational;
mod real;

pub use certify::{certify, Agreement, DigitClaim, CERTIFY_EXTRA_BITS};
pub use complex::Complex;
pub use context::{
    bits_for_digits, PrecisionContext, DEFAULT_GUARD_BITS, MAX_TARGET_DIGITS, MIN_GUARD_BITS,
};
pub use rational::BigRational;
pub use real::{rational_to_f64, Decimal, Real};

/// Correctly rounded conversion of `q` at the context's working precision.
pub fn rational_to_real(q: &BigRational, ctx: &PrecisionContext) -> Real {
    Real::from_rational(q, ctx.working_bits())
}

/// `pi` at the context's working precision, memoized per precision.
pub fn pi(ctx: &PrecisionContext) -> Real {
    Real::pi(ctx.working_bits())
}

/// Upper bound on `10^(-digits)` as a low-precision real.
pub fn ten_pow_neg(digits: i64, p: usize) -> Real {
    let ten = Real::from_u64(10, p);
    if digits >= 0 {
        ten.powi(digits as u32).recip()
    } else {
        ten.powi((-digits) as u32)
    }
}

/// Largest `d <= cap` with `bound < 10^-d * |value|`.
pub fn digits_from_bound(bound: &Real, value: &Real, cap: u32) -> u32 {
    if bound.is_zero() {
        return cap;
    }
    if value.is_zero() {
        return 0;
    }
    let ratio = bound.log10_abs() - value.log10_abs();
    if ratio >= 0.0 {
        return 0;
    }
    let mut d = ((-ratio).floor() as i64).clamp(0, cap as i64) as u32;
    // The float estimate can sit on the boundary; step down until strict.
    let p = bound.precision().max(value.precision());
    while d > 0 && bound >= &(&ten_pow_neg(d as i64, p) * &value.abs()) {
        d -= 1;
    }
    d
}
