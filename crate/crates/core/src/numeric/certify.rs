use super::complex::Complex;
use super::context::PrecisionContext;
use super::real::Real;
use crate::error::Result;

/// Extra bits used for the second, higher-precision run.
pub const CERTIFY_EXTRA_BITS: usize = 64;

/// A value together with the number of leading decimal digits vouched for.
#[derive(Clone, Debug)]
pub struct DigitClaim<T> {
    pub value: T,
    pub certified_digits: u32,
}

/// Leading decimal-digit agreement between two approximations.
pub trait Agreement {
    /// Common leading digits of `self` and `other` after aligning both on
    /// the larger decimal exponent, capped at `max`. Digits are truncated, so
    /// values straddling a rounding boundary stop at the first difference.
    fn agreeing_digits(&self, other: &Self, max: u32) -> u32;
}

fn decimal_exponent(x: &Real) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(x.to_decimal(1).exponent)
    }
}

fn common_prefix(a: &str, b: &str) -> usize {
    a.bytes().zip(b.bytes()).take_while(|(x, y)| x == y).count()
}

fn agreement_at(a: &Real, b: &Real, exponent: i64, max: u32) -> u32 {
    if a.is_negative() != b.is_negative() && !(a.is_zero() || b.is_zero()) {
        return 0;
    }
    let n = max as usize + 2;
    let da = a.digits_at_exponent(exponent, n);
    let db = b.digits_at_exponent(exponent, n);
    if da.len() != db.len() {
        return 0;
    }
    (common_prefix(&da, &db) as u32).min(max)
}

impl Agreement for Real {
    fn agreeing_digits(&self, other: &Self, max: u32) -> u32 {
        match (decimal_exponent(self), decimal_exponent(other)) {
            (None, None) => max,
            (Some(_), None) | (None, Some(_)) => 0,
            (Some(ea), Some(eb)) => {
                if self.is_negative() != other.is_negative() {
                    return 0;
                }
                agreement_at(self, other, ea.max(eb), max)
            }
        }
    }
}

impl Agreement for Complex {
    fn agreeing_digits(&self, other: &Self, max: u32) -> u32 {
        let exponent = [&self.re, &self.im, &other.re, &other.im]
            .into_iter()
            .filter_map(decimal_exponent)
            .max();
        let Some(exponent) = exponent else {
            return max;
        };
        agreement_at(&self.re, &other.re, exponent, max)
            .min(agreement_at(&self.im, &other.im, exponent, max))
    }
}

/// Runs `evaluator` at the context's precision and again with
/// [`CERTIFY_EXTRA_BITS`] more, and reports how many leading digits agree.
/// The returned value is the higher-precision run.
pub fn certify<T, F>(evaluator: F, ctx: &PrecisionContext) -> Result<DigitClaim<T>>
where
    T: Agreement,
    F: Fn(&PrecisionContext) -> Result<T>,
{
    let low = evaluator(ctx)?;
    let high = evaluator(&ctx.raised(CERTIFY_EXTRA_BITS))?;
    let certified_digits = high.agreeing_digits(&low, ctx.target_digits());
    Ok(DigitClaim {
        value: high,
        certified_digits,
    })
}
