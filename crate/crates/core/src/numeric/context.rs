use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::error::{Error, Result};

/// Guard bits added on top of the bits needed for the requested digits.
pub const DEFAULT_GUARD_BITS: usize = 64;

/// Minimum guard bits any context may carry.
pub const MIN_GUARD_BITS: usize = 32;

/// Largest decimal precision a context will accept.
pub const MAX_TARGET_DIGITS: u32 = 1_000_000;

/// Precision settings that travel with every evaluation.
///
/// Contexts are immutable values; there is no ambient precision state.
/// `working_bits >= ceil(target_digits * log2(10)) + guard_bits` always holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    target_digits: u32,
    working_bits: usize,
    guard_bits: usize,
}

impl PrecisionContext {
    /// Context for `target_digits` decimal digits with the default guard.
    pub fn new(target_digits: u32) -> Result<Self> {
        Self::with_guard(target_digits, DEFAULT_GUARD_BITS)
    }

    pub fn with_guard(target_digits: u32, guard_bits: usize) -> Result<Self> {
        if target_digits == 0 {
            return Err(Error::Config("target_digits must be at least 1".into()));
        }
        if target_digits > MAX_TARGET_DIGITS {
            return Err(Error::Config(format!(
                "target_digits {target_digits} exceeds the limit of {MAX_TARGET_DIGITS}"
            )));
        }
        if guard_bits < MIN_GUARD_BITS {
            return Err(Error::Config(format!(
                "guard_bits {guard_bits} is below the minimum of {MIN_GUARD_BITS}"
            )));
        }
        Ok(PrecisionContext {
            target_digits,
            working_bits: bits_for_digits(target_digits) + guard_bits,
            guard_bits,
        })
    }

    /// Context with a fixed binary working precision.
    ///
    /// The target digit count is the largest one the invariant allows with the
    /// default guard.
    pub fn with_working_bits(working_bits: usize) -> Result<Self> {
        let payload = working_bits
            .checked_sub(DEFAULT_GUARD_BITS)
            .ok_or_else(|| {
                Error::Config(format!(
                "working_bits {working_bits} leaves no room for {DEFAULT_GUARD_BITS} guard bits"
            ))
            })?;
        let mut digits = (payload as f64 / std::f64::consts::LOG2_10).floor() as u32;
        while digits > 0 && bits_for_digits(digits) > payload {
            digits -= 1;
        }
        if digits == 0 {
            return Err(Error::Config(format!(
                "working_bits {working_bits} is too small for one decimal digit"
            )));
        }
        Ok(PrecisionContext {
            target_digits: digits,
            working_bits,
            guard_bits: working_bits - bits_for_digits(digits),
        })
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn working_bits(&self) -> usize {
        self.working_bits
    }

    pub fn guard_bits(&self) -> usize {
        self.guard_bits
    }

    /// Same target, `extra` more guard (and working) bits.
    pub fn raised(&self, extra: usize) -> Self {
        PrecisionContext {
            target_digits: self.target_digits,
            working_bits: self.working_bits + extra,
            guard_bits: self.guard_bits + extra,
        }
    }

    /// Same guard, different target digits.
    pub fn retargeted(&self, target_digits: u32) -> Result<Self> {
        Self::with_guard(target_digits, self.guard_bits)
    }
}

/// `ceil(digits * log2(10))`, the bits needed to resolve `10^-digits`.
pub fn bits_for_digits(digits: u32) -> usize {
    let approx = digits as f64 * std::f64::consts::LOG2_10;
    let frac = approx - approx.floor();
    if frac > 1e-6 && frac < 1.0 - 1e-6 {
        return approx.ceil() as usize;
    }
    // Too close to an integer to trust the float: 10^d is never a power of two,
    // so ceil(log2(10^d)) is the bit length of 10^d - 1.
    let p: BigUint = BigUint::from(10u32).pow(digits);
    (p - BigUint::one()).bits() as usize
}
