use std::ops::RangeInclusive;

use num_traits::Signed;

use super::coefficients::family_coefficients;
use super::family::SeriesFamily;
use crate::error::{Error, Result};
use crate::numeric::{PrecisionContext, Real};

/// Observed decay of the tail terms.
#[derive(Clone, Debug)]
pub struct ConvergenceTrace {
    pub family: SeriesFamily,
    pub r: u32,
    pub k_start: u32,
    /// `|term_k|` for each `k` in the range, starting at `k_start`.
    pub term_magnitudes: Vec<Real>,
    /// Geometric mean of `|t_{k+1} / t_k| ((k+1)/k)^p` with `p` the kernel's
    /// polynomial decay exponent.
    pub fitted_ratio: Real,
    /// Geometric mean of `|t_{k+1} / t_k|` without the polynomial correction.
    pub raw_ratio: Real,
    /// `m^-2`.
    pub expected_ratio: Real,
    pub decay_exponent: u32,
}

impl ConvergenceTrace {
    /// Relative deviation of the fitted ratio from `m^-2`.
    pub fn relative_error(&self) -> f64 {
        ((&self.fitted_ratio - &self.expected_ratio) / self.expected_ratio.clone())
            .abs()
            .to_f64()
    }

    /// Whether the polynomial factor speeds the decay beyond `m^-2`.
    pub fn polynomial_accelerates(&self) -> bool {
        self.raw_ratio < self.expected_ratio
    }
}

pub fn convergence_trace(
    family: SeriesFamily,
    r: u32,
    k_range: RangeInclusive<u32>,
    ctx: &PrecisionContext,
) -> Result<ConvergenceTrace> {
    let (k0, k1) = (*k_range.start(), *k_range.end());
    if k0 == 0 || k1 <= k0 {
        return Err(Error::precondition(format!(
            "trace range {k0}..={k1} must start at k >= 1 and span at least two terms"
        )));
    }
    let c = family_coefficients(family, r)?;
    let p = ctx.working_bits();
    let pi2 = Real::pi(p).powi(2);
    let mut pi_pow = pi2.powi(r + k0);
    let mut term_magnitudes = Vec::with_capacity((k1 - k0 + 1) as usize);
    for k in k0..=k1 {
        term_magnitudes.push(&Real::from_rational(&c.term_coefficient(k).abs(), p) * &pi_pow);
        pi_pow = &pi_pow * &pi2;
    }
    // Both means telescope to the end-point ratio.
    let steps = Real::from_u64((k1 - k0) as u64, p);
    let inv_steps = steps.recip();
    let first = &term_magnitudes[0];
    let last = &term_magnitudes[term_magnitudes.len() - 1];
    let raw_ratio = (last / first).pow(&inv_steps);
    let decay_exponent = c.kernel.decay_exponent();
    let poly = (&Real::from_u64(k1 as u64, p) / &Real::from_u64(k0 as u64, p))
        .pow(&inv_steps.mul_int(decay_exponent as i64));
    let m = c.m() as u64;
    Ok(ConvergenceTrace {
        family,
        r,
        k_start: k0,
        fitted_ratio: &raw_ratio * &poly,
        raw_ratio,
        expected_ratio: Real::from_u64(m * m, p).recip(),
        term_magnitudes,
        decay_exponent,
    })
}
