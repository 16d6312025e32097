//! Adaptive evaluation, tail majorants and the odd-zeta ladder.

use num_traits::Signed;

use super::coefficients::{family_coefficients, RecurrenceCoefficients};
use super::family::SeriesFamily;
use crate::error::{Error, Result};
use crate::numeric::rational::ratio;
use crate::numeric::{
    digits_from_bound, ten_pow_neg, Agreement, PrecisionContext, Real, CERTIFY_EXTRA_BITS,
};
use crate::reference::zeta_even_upper;

/// Precision of tail majorants.
const BOUND_BITS: usize = 64;

/// Digits beyond the target that the truncation must resolve before stopping.
const STOP_EXTRA_DIGITS: i64 = 2;

/// Term cap as a multiple of the target digit count.
const TERM_CAP_PER_DIGIT: u64 = 10;

#[derive(Clone, Debug)]
pub struct EvalReport {
    pub family: SeriesFamily,
    pub r: u32,
    pub value: Real,
    /// Number of tail terms summed, `k = 0 .. terms_used`.
    pub terms_used: u64,
    /// Truncation majorant plus any uncertainty inherited from lower values.
    pub tail_bound: Real,
    pub certified_digits: u32,
}

/// A lower odd zeta value with an absolute error bound.
#[derive(Clone, Debug)]
pub struct KnownValue {
    pub value: Real,
    pub error: Real,
}

impl KnownValue {
    pub fn exact(value: Real) -> KnownValue {
        KnownValue {
            value,
            error: Real::zero(BOUND_BITS),
        }
    }
}

impl From<&EvalReport> for KnownValue {
    fn from(r: &EvalReport) -> KnownValue {
        KnownValue {
            value: r.value.clone(),
            error: r.tail_bound.clone(),
        }
    }
}

pub(crate) fn round_up(x: Real) -> Real {
    &x + &x.ldexp(-50).abs()
}

/// Majorant of `sum_{k >= k_start}` of the tail terms.
///
/// `zeta(2k)` and the kernel both decrease in `k`, so the remainder is
/// dominated by its first term times the geometric factor `1/(1 - m^-2)`.
pub(crate) fn tail_majorant(c: &RecurrenceCoefficients, k_start: u32) -> Real {
    let p = BOUND_BITS;
    let m2 = (c.m() * c.m()) as i64;
    let scale = Real::from_rational(&c.tail_scale.abs(), p);
    let pi_pow = Real::pi(p).powi(2 * c.r);
    let kernel = Real::from_rational(&c.kernel.at(k_start), p);
    let decay = Real::from_u64(m2 as u64, p).powi(k_start).recip();
    let geometric = Real::from_rational(&ratio(m2, m2 - 1), p);
    let b =
        &(&(&(&scale * &pi_pow) * &zeta_even_upper(k_start)) * &(&kernel * &decay)) * &geometric;
    round_up(round_up(b))
}

/// Rigorous bound on the omitted tail after summing `k < k_start`.
pub fn tail_bound(
    family: SeriesFamily,
    r: u32,
    k_start: u32,
    _ctx: &PrecisionContext,
) -> Result<Real> {
    if k_start == 0 {
        return Err(Error::precondition("tail bounds start at k >= 1"));
    }
    Ok(tail_majorant(&family_coefficients(family, r)?, k_start))
}

struct Partial {
    value: Real,
    terms_used: u64,
    tail: Real,
}

/// Finite part: the lower odd values and the `r = 1` log term.
fn lead_value(c: &RecurrenceCoefficients, lower: &[Real], p: usize) -> Real {
    let pi2 = Real::pi(p).powi(2);
    let mut lead = Real::zero(p);
    let mut pi_2j = pi2.clone();
    for j in 1..c.r {
        let zeta = lower[(c.r - 1 - j) as usize].with_precision(p);
        lead = &lead + &(&(&Real::from_rational(&c.collected(j), p) * &pi_2j) * &zeta);
        pi_2j = &pi_2j * &pi2;
    }
    if let Some(base) = c.log_base {
        let log = Real::from_u64(base as u64, p).ln();
        lead = &lead + &(&(&Real::from_rational(&c.log_coeff, p) * &pi2) * &log);
    }
    lead
}

/// Value with exactly `terms` tail terms and the majorant of the rest.
pub fn truncated_series(
    family: SeriesFamily,
    r: u32,
    lower: &[Real],
    terms: u32,
    ctx: &PrecisionContext,
) -> Result<(Real, Real)> {
    let c = family_coefficients(family, r)?;
    if lower.len() != r as usize - 1 || terms == 0 {
        return Err(Error::precondition(format!(
            "truncated series needs {} lower values and at least one term",
            r - 1
        )));
    }
    let p = ctx.working_bits();
    let pi2 = Real::pi(p).powi(2);
    let mut pi_pow = pi2.powi(c.r);
    let mut sum = lead_value(&c, lower, p);
    for k in 0..terms {
        sum = &sum + &(&Real::from_rational(&c.term_coefficient(k), p) * &pi_pow);
        pi_pow = &pi_pow * &pi2;
    }
    Ok((sum, tail_majorant(&c, terms)))
}

/// Sums the series at `p` bits until the majorant drops below
/// `10^-(digits+2) |value|`.
fn sum_series(
    c: &RecurrenceCoefficients,
    lower: &[Real],
    digits: u32,
    p: usize,
) -> Result<Partial> {
    let pi2 = Real::pi(p).powi(2);
    let lead = lead_value(c, lower, p);
    let stop = ten_pow_neg(digits as i64 + STOP_EXTRA_DIGITS, BOUND_BITS);
    let cap = TERM_CAP_PER_DIGIT * digits as u64;
    let mut pi_pow = pi2.powi(c.r);
    let mut sum = Real::zero(p);
    let mut k: u32 = 0;
    loop {
        let term = &Real::from_rational(&c.term_coefficient(k), p) * &pi_pow;
        sum = &sum + &term;
        pi_pow = &pi_pow * &pi2;
        k += 1;
        let value = &lead + &sum;
        let tail = tail_majorant(c, k);
        if tail < &stop * &value.abs().with_precision(BOUND_BITS) {
            return Ok(Partial {
                value,
                terms_used: k as u64,
                tail,
            });
        }
        if k as u64 >= cap {
            return Err(Error::PrecisionShortfall(format!(
                "{} series for zeta({}) did not reach {digits} digits within {cap} terms",
                c.family,
                2 * c.r + 1
            )));
        }
    }
}

/// Uncertainty of the result: truncation plus the propagated lower errors.
fn propagated(c: &RecurrenceCoefficients, tail: &Real, lower_errors: &[Real]) -> Real {
    let p = BOUND_BITS;
    let pi2 = Real::pi(p).powi(2);
    let mut total = tail.clone();
    let mut pi_2j = pi2.clone();
    for j in 1..c.r {
        let err = &lower_errors[(c.r - 1 - j) as usize];
        if !err.is_zero() {
            let w = &Real::from_rational(&c.collected(j).abs(), p) * &pi_2j;
            total = &total + &(&w * &err.with_precision(p));
        }
        pi_2j = &pi_2j * &pi2;
    }
    round_up(total)
}

fn report(
    c: &RecurrenceCoefficients,
    low: Partial,
    high: Partial,
    lower_errors: &[Real],
    ctx: &PrecisionContext,
) -> EvalReport {
    let target = ctx.target_digits();
    let bound = propagated(c, &high.tail, lower_errors);
    let agree = high.value.agreeing_digits(&low.value, target);
    let certified_digits = agree.min(digits_from_bound(&bound, &high.value, target));
    EvalReport {
        family: c.family,
        r: c.r,
        value: high.value,
        terms_used: high.terms_used,
        tail_bound: bound,
        certified_digits,
    }
}

/// `zeta(2r+1)` from one family given `zeta(3), ..., zeta(2r-1)`.
pub fn evaluate(
    family: SeriesFamily,
    r: u32,
    lower: &[KnownValue],
    ctx: &PrecisionContext,
) -> Result<EvalReport> {
    let c = family_coefficients(family, r)?;
    if lower.len() != r as usize - 1 {
        return Err(Error::precondition(format!(
            "zeta({}) needs the {} lower odd values zeta(3)..zeta({}), got {}",
            2 * r + 1,
            r - 1,
            2 * r - 1,
            lower.len()
        )));
    }
    let values: Vec<Real> = lower.iter().map(|k| k.value.clone()).collect();
    let errors: Vec<Real> = lower.iter().map(|k| k.error.clone()).collect();
    let d = ctx.target_digits();
    let low = sum_series(&c, &values, d, ctx.working_bits())?;
    let high = sum_series(
        &c,
        &values,
        d,
        ctx.raised(CERTIFY_EXTRA_BITS).working_bits(),
    )?;
    Ok(report(&c, low, high, &errors, ctx))
}

/// Ewell's series for `zeta(3)`.
pub fn ewell_zeta3(ctx: &PrecisionContext) -> Result<EvalReport> {
    evaluate(SeriesFamily::Ewell, 1, &[], ctx)
}

/// `zeta(3)` from the modulus-`m` series, `m` in {3, 4, 6}.
pub fn zeta3_family(m: u32, ctx: &PrecisionContext) -> Result<EvalReport> {
    evaluate(SeriesFamily::from_modulus(m)?, 1, &[], ctx)
}

/// `zeta(2r+1)` by the Cvijovic-Klinowski recurrence.
pub fn ck_recurrence(r: u32, lower: &[KnownValue], ctx: &PrecisionContext) -> Result<EvalReport> {
    evaluate(SeriesFamily::Ck, r, lower, ctx)
}

/// `zeta(3), zeta(5), ..., zeta(2 r_max + 1)` from a single family.
///
/// The whole ladder runs at two precisions; each level inherits the error
/// bounds of the levels below it.
pub fn zeta_odd_ladder(
    r_max: u32,
    family: SeriesFamily,
    ctx: &PrecisionContext,
) -> Result<Vec<EvalReport>> {
    if r_max == 0 {
        return Err(Error::precondition("ladder needs r_max >= 1"));
    }
    let coeffs: Vec<RecurrenceCoefficients> = (1..=r_max)
        .map(|r| family_coefficients(family, r))
        .collect::<Result<_>>()?;
    let d = ctx.target_digits();
    let run = |p: usize| -> Result<Vec<Partial>> {
        let mut out: Vec<Partial> = Vec::with_capacity(r_max as usize);
        for c in &coeffs {
            let lower: Vec<Real> = out.iter().map(|x| x.value.clone()).collect();
            out.push(sum_series(c, &lower, d, p)?);
        }
        Ok(out)
    };
    let low = run(ctx.working_bits())?;
    let high = run(ctx.raised(CERTIFY_EXTRA_BITS).working_bits())?;
    let mut reports: Vec<EvalReport> = Vec::with_capacity(r_max as usize);
    for ((c, lo), hi) in coeffs.iter().zip(low).zip(high) {
        let errors: Vec<Real> = reports.iter().map(|x| x.tail_bound.clone()).collect();
        reports.push(report(c, lo, hi, &errors, ctx));
    }
    Ok(reports)
}
