use num_traits::{One, Signed, Zero};

use super::bounds::{dirichlet_kernel_tail, power_tail, up, zeta2_upper, zeta_tail, BITS};
use super::{ClosedAngle, IdentityId, Residual};
use crate::bernoulli::harmonic;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::numeric::rational::{factorial, int, pow, ratio, BigRational};
use crate::numeric::{Complex, PrecisionContext, Real};
use crate::rapid::{truncated_series, SeriesFamily};
use crate::reference::{
    dirichlet_tail, log_sin_closed, sine_series_closed, trig_dirichlet, weighted_trig_series,
    zeta_even_coefficient, zeta_even_upper, zeta_int, zeta_oracle, Angle, TrigKind, TrigSumSpec,
};

/// `X = pi x`.
pub(super) fn pi_x(x: &BigRational, p: usize) -> Real {
    &Real::from_rational(x, p) * &Real::pi(p)
}

/// `sum_{n<=N} n^-s trig(n pi x)`.
pub(super) fn trig_sum(
    kind: TrigKind,
    s: &Complex,
    x: &BigRational,
    n: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Complex> {
    let spec = TrigSumSpec {
        angle: Angle::PiMultiple(x.clone()),
        s: s.clone(),
        terms: n,
        kind,
    };
    Ok(trig_dirichlet(&spec, ctx, exec)?.value)
}

pub(super) fn int_s(n: i64, p: usize) -> Complex {
    Complex::from_real(Real::from_i64(n, p))
}

fn real_trig_sum(
    kind: TrigKind,
    s: i64,
    x: &BigRational,
    n: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Real> {
    Ok(trig_sum(kind, &int_s(s, ctx.working_bits()), x, n, ctx, exec)?.re)
}

fn fact(n: u32, p: usize) -> Real {
    Real::from_int(&factorial(n as u64), p)
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

pub(super) fn check_terms(n: u64, k: u32, needs_n: bool, needs_k: bool) -> Result<()> {
    if needs_n && n == 0 {
        return Err(Error::Config(
            "Fourier truncation N must be at least 1".into(),
        ));
    }
    if needs_k && k == 0 {
        return Err(Error::Config(
            "power-series truncation K must be at least 1".into(),
        ));
    }
    Ok(())
}

fn check_order(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::precondition("order r must be at least 1"));
    }
    Ok(())
}

pub(super) fn check_abs_x(x: &BigRational, open: bool) -> Result<()> {
    let two = int(2);
    let ok = if open { x.abs() < two } else { x.abs() <= two };
    if !ok {
        return Err(Error::precondition(format!(
            "x/c = {x} lies outside {}",
            if open { "(-2, 2)" } else { "[-2, 2]" }
        )));
    }
    Ok(())
}

fn endpoint_note(x: &BigRational) -> Option<String> {
    (x.abs() == int(2)).then(|| "endpoint |x| = 2c: Fourier side converges slowly".to_string())
}

/// `y^k zeta(2k)` absorbs `pi^(2k)`: `zeta(2k) y^k = q_k (pi x / 2)^(2k)`.
fn power_series_value(
    x: &BigRational,
    from: u32,
    k: u32,
    coeff: impl Fn(u32) -> BigRational,
    p: usize,
) -> Real {
    // Group by powers of pi: sum_j c_j q_j (x/2)^(2j) pi^(2j).
    let half_x = x / int(2);
    let y = &half_x * &half_x;
    let pi2 = Real::pi(p).powi(2);
    let mut acc = Real::zero(p);
    let mut pi_pow = pi2.powi(from);
    let mut yk = pow(&y, from);
    for j in from..=k {
        let c = coeff(j) * zeta_even_coefficient(j) * &yk;
        acc = &acc + &(&Real::from_rational(&c, p) * &pi_pow);
        pi_pow = &pi_pow * &pi2;
        yk *= &y;
    }
    acc
}

fn y_of(x: &BigRational) -> BigRational {
    let h = x / int(2);
    &h * &h
}

fn abs_x_pow(x: &BigRational, e: u32) -> Real {
    pi_x(&x.abs(), BITS).powi(e)
}

/// Odd-order cosine (or even-order sine) series against the closed form
/// with harmonic numbers, a log term and a `zeta(2k)` power series.
pub fn verify_log_fourier(
    kind: TrigKind,
    r: u32,
    x: &BigRational,
    n: u64,
    k: u32,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_order(r)?;
    check_terms(n, k, true, true)?;
    if x.is_negative() || x > &int(2) {
        return Err(Error::precondition(format!(
            "x/c = {x} lies outside [0, 2]"
        )));
    }
    let p = ctx.working_bits();
    let big_x = pi_x(x, p);
    let y = y_of(x);
    let two = int(2);
    let (id, lhs, rhs, fourier, power) = match kind {
        TrigKind::Cos => {
            if x.is_zero() {
                return Err(Error::precondition(
                    "x/c = 0: the ln(pi x / c) term is singular",
                ));
            }
            let lhs = real_trig_sum(TrigKind::Cos, 2 * r as i64 + 1, x, n, ctx, exec)?;
            let mut rhs = Real::zero(p);
            for j in 0..r {
                let z = zeta_int((2 * r + 1 - 2 * j) as i64, ctx)?;
                let t = &(&big_x.powi(2 * j) / &fact(2 * j, p)) * &z;
                rhs = &rhs + &t.mul_int(sign(j % 2 == 1));
            }
            let h = Real::from_rational(&harmonic(2 * r as u64), p);
            let log_term = &(&big_x.powi(2 * r) / &fact(2 * r, p)) * &(&h - &big_x.ln());
            rhs = &rhs + &log_term.mul_int(sign(r % 2 == 1));
            let series = power_series_value(
                x,
                1,
                k,
                |j| {
                    &two * BigRational::new(
                        factorial(2 * j as u64 - 1),
                        factorial((2 * r + 2 * j) as u64),
                    )
                },
                p,
            );
            let series = &series * &big_x.powi(2 * r);
            rhs = &rhs + &series.mul_int(sign(r % 2 == 1));
            let a = &(&zeta2_upper().mul_int(2) * &abs_x_pow(x, 2 * r))
                * &Real::one(BITS).ldexp(-(2 * r as i64 + 1));
            (
                IdentityId::LogCosine,
                lhs,
                rhs,
                Some(zeta_tail(2 * r as i64 + 1, n)),
                power_tail(&a, 2 * r + 1, &y, k),
            )
        }
        TrigKind::Sin => {
            let lhs = real_trig_sum(TrigKind::Sin, 2 * r as i64, x, n, ctx, exec)?;
            let mut rhs = Real::zero(p);
            if !x.is_zero() {
                for j in 1..r {
                    let z = zeta_int((2 * r + 1 - 2 * j) as i64, ctx)?;
                    let t = &(&big_x.powi(2 * j - 1) / &fact(2 * j - 1, p)) * &z;
                    rhs = &rhs + &t.mul_int(sign(j % 2 == 0));
                }
                let h = Real::from_rational(&harmonic(2 * r as u64 - 1), p);
                let log_term =
                    &(&big_x.powi(2 * r - 1) / &fact(2 * r - 1, p)) * &(&h - &big_x.ln());
                rhs = &rhs + &log_term.mul_int(sign(r.is_multiple_of(2)));
                let series = power_series_value(
                    x,
                    1,
                    k,
                    |j| {
                        &two * BigRational::new(
                            factorial(2 * j as u64 - 1),
                            factorial((2 * r + 2 * j - 1) as u64),
                        )
                    },
                    p,
                );
                let series = &series * &big_x.powi(2 * r - 1);
                rhs = &rhs + &series.mul_int(sign(r.is_multiple_of(2)));
            }
            let a = &(&zeta2_upper().mul_int(2) * &abs_x_pow(x, 2 * r - 1))
                * &Real::one(BITS).ldexp(-(2 * r as i64));
            (
                IdentityId::LogSine,
                lhs,
                rhs,
                Some(zeta_tail(2 * r as i64, n)),
                power_tail(&a, 2 * r, &y, k),
            )
        }
    };
    Ok(Residual::assemble(
        id,
        Complex::from_real(lhs),
        Complex::from_real(rhs),
        &[fourier, power],
        n + k as u64,
        ctx,
        None,
    ))
}

/// `r C(2r+1) + (X/2) S(2r)` against the finite odd-zeta sum plus the
/// `zeta(2k)` series.
pub fn verify_mixed_order(
    r: u32,
    x: &BigRational,
    n: u64,
    k: u32,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_order(r)?;
    check_terms(n, k, true, true)?;
    check_abs_x(x, false)?;
    let p = ctx.working_bits();
    let big_x = pi_x(x, p);
    let c = real_trig_sum(TrigKind::Cos, 2 * r as i64 + 1, x, n, ctx, exec)?;
    let s = real_trig_sum(TrigKind::Sin, 2 * r as i64, x, n, ctx, exec)?;
    let lhs = &c.mul_int(r as i64) + &(&big_x.ldexp(-1) * &s);
    let mut rhs = Real::zero(p);
    for j in 0..r {
        let z = zeta_int((2 * r + 1 - 2 * j) as i64, ctx)?;
        let t = &(&big_x.powi(2 * j).mul_int((r - j) as i64) / &fact(2 * j, p)) * &z;
        rhs = &rhs + &t.mul_int(sign(j % 2 == 1));
    }
    let series = power_series_value(
        x,
        0,
        k,
        |j| BigRational::new(factorial(2 * j as u64), factorial((2 * r + 2 * j) as u64)),
        p,
    );
    rhs = &rhs + &(&series * &big_x.powi(2 * r)).mul_int(sign(r.is_multiple_of(2)));
    let fourier = &zeta_tail(2 * r as i64 + 1, n).mul_int(r as i64)
        + &(&abs_x_pow(x, 1).ldexp(-1) * &zeta_tail(2 * r as i64, n));
    let a = &(&zeta2_upper() * &abs_x_pow(x, 2 * r)) * &Real::one(BITS).ldexp(-(2 * r as i64));
    Ok(Residual::assemble(
        IdentityId::MixedOrder,
        Complex::from_real(lhs),
        Complex::from_real(rhs),
        &[Some(up(fourier)), power_tail(&a, 2 * r, &y_of(x), k)],
        n + k as u64,
        ctx,
        endpoint_note(x),
    ))
}

/// `r(2r-1) C(2r+1) + X^2/2 C(2r-1)` against its `zeta(2k)` expansion.
pub fn verify_cosine_pair(
    r: u32,
    x: &BigRational,
    n: u64,
    k: u32,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_order(r)?;
    check_terms(n, k, true, true)?;
    // For r = 1 the order-one cosine series diverges at x = +-2c.
    check_abs_x(x, r == 1)?;
    let p = ctx.working_bits();
    let big_x = pi_x(x, p);
    let ri = r as i64;
    let c_hi = real_trig_sum(TrigKind::Cos, 2 * ri + 1, x, n, ctx, exec)?;
    let mut lhs = c_hi.mul_int(ri * (2 * ri - 1));
    let low_tail = if x.is_zero() {
        // X^2 C(2r-1) vanishes with X even when C(1) diverges.
        Some(Real::zero(BITS))
    } else {
        let c_lo = real_trig_sum(TrigKind::Cos, 2 * ri - 1, x, n, ctx, exec)?;
        lhs = &lhs + &(&big_x.powi(2).ldexp(-1) * &c_lo);
        let t = if r == 1 {
            dirichlet_kernel_tail(&(x / int(2)), n)
        } else {
            Some(zeta_tail(2 * ri - 1, n))
        };
        t.map(|t| &abs_x_pow(x, 2).ldexp(-1) * &t)
    };
    let mut rhs = Real::zero(p);
    for j in 0..r {
        let ji = j as i64;
        let z = zeta_int(2 * ri + 1 - 2 * ji, ctx)?;
        let t =
            &(&big_x.powi(2 * j).mul_int((ri - ji) * (2 * ri + 2 * ji - 1)) / &fact(2 * j, p)) * &z;
        rhs = &rhs + &t.mul_int(sign(j % 2 == 1));
    }
    let series = power_series_value(
        x,
        0,
        k,
        |j| {
            BigRational::new(
                factorial(2 * j as u64) * (4 * r + 2 * j - 1),
                factorial((2 * r + 2 * j) as u64),
            )
        },
        p,
    );
    rhs = &rhs + &(&series * &big_x.powi(2 * r)).mul_int(sign(r.is_multiple_of(2)));
    let fourier = low_tail.map(|t| up(&zeta_tail(2 * ri + 1, n).mul_int(ri * (2 * ri - 1)) + &t));
    // (2k)!(4r+2k-1)/(2r+2k)! <= 2r (2k)^-(2r-1) for k >= 1.
    let a = &(&zeta2_upper().mul_int(2 * ri) * &abs_x_pow(x, 2 * r))
        * &Real::one(BITS).ldexp(-(2 * ri - 1));
    Ok(Residual::assemble(
        IdentityId::CosinePair,
        Complex::from_real(lhs),
        Complex::from_real(rhs),
        &[fourier, power_tail(&a, 2 * r - 1, &y_of(x), k)],
        n + k as u64,
        ctx,
        endpoint_note(x),
    ))
}

/// `C(3) - X^2/2 ln(2 sin(X/2)) = zeta(3) + sum (2k+3)/((2k+1)(2k+2)) zeta(2k) y^k X^2`.
pub fn verify_zeta3_fourier(
    x: &BigRational,
    n: u64,
    k: u32,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_terms(n, k, true, true)?;
    if !x.is_positive() || x >= &int(2) {
        return Err(Error::precondition(format!(
            "x/c = {x} lies outside (0, 2); ln(2 sin(pi x / 2c)) is singular at the ends"
        )));
    }
    let p = ctx.working_bits();
    let big_x = pi_x(x, p);
    let c3 = real_trig_sum(TrigKind::Cos, 3, x, n, ctx, exec)?;
    let log = log_sin_closed(&Real::from_rational(&(x / int(2)), p), ctx)?;
    // log_sin_closed returns -ln(2 sin(pi t)).
    let lhs = &c3 + &(&big_x.powi(2).ldexp(-1) * &log);
    let series = power_series_value(
        x,
        0,
        k,
        |j| ratio(2 * j as i64 + 3, (2 * j as i64 + 1) * (2 * j as i64 + 2)),
        p,
    );
    let rhs = &zeta_int(3, ctx)? + &(&series * &big_x.powi(2));
    let a = &zeta2_upper() * &abs_x_pow(x, 2);
    Ok(Residual::assemble(
        IdentityId::Zeta3Fourier,
        Complex::from_real(lhs),
        Complex::from_real(rhs),
        &[Some(zeta_tail(3, n)), power_tail(&a, 1, &y_of(x), k)],
        n + k as u64,
        ctx,
        None,
    ))
}

/// The modulus-`m` series for `zeta(3)` truncated after `K + 1` terms,
/// against the oracle.
pub fn verify_zeta3_series(m: u32, k: u32, ctx: &PrecisionContext) -> Result<Residual> {
    check_terms(1, k, false, true)?;
    let family = SeriesFamily::from_modulus(m)?;
    let (value, tail) = truncated_series(family, 1, &[], k + 1, ctx)?;
    let oracle = zeta_int(3, ctx)?;
    Ok(Residual::assemble(
        IdentityId::Zeta3Series,
        Complex::from_real(value),
        Complex::from_real(oracle),
        &[Some(tail)],
        k as u64 + 1,
        ctx,
        Some(format!("m = {m}")),
    ))
}

/// `sum n^-s cos(n pi x)` at `x` in {2/3, 1/2, 1/3} against
/// `lambda(s) zeta(s)`.
pub fn verify_cosine_closed(
    angle: ClosedAngle,
    s: &Complex,
    n: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_terms(n, 1, true, false)?;
    let p = ctx.working_bits();
    let s = s.with_precision(p);
    if s.re <= Real::one(p) {
        return Err(Error::precondition(format!(
            "the closed cosine sums need Re(s) > 1, got s = {s}"
        )));
    }
    let lhs = trig_sum(TrigKind::Cos, &s, &angle.x(), n, ctx, exec)?;
    let rhs = &angle.lambda(&s, p) * &zeta_oracle(&s, ctx)?;
    let id = match angle {
        ClosedAngle::TwoThirds => IdentityId::ClosedTwoThirds,
        ClosedAngle::Half => IdentityId::ClosedHalf,
        ClosedAngle::Third => IdentityId::ClosedThird,
    };
    Ok(Residual::assemble(
        id,
        lhs,
        rhs,
        &[dirichlet_tail(&s, n)],
        n,
        ctx,
        None,
    ))
}

/// `cos(w t) = (3 sqrt3 / pi) (1/2 + sum (-1)^(n-1) cos(3 n w t) / ((3n-1)(3n+1)))`
/// for `|w t| < pi/3`; `x` is `w t / pi`.
pub fn verify_triple_cosine(
    x: &BigRational,
    n: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_terms(n, 1, true, false)?;
    if x.abs() >= ratio(1, 3) {
        return Err(Error::precondition(format!(
            "w t / pi = {x} lies outside (-1/3, 1/3), where the expansion fails"
        )));
    }
    let p = ctx.working_bits();
    let lhs = pi_x(x, p).cos();
    let sum = weighted_trig_series(
        n,
        |j| {
            let w = Real::from_rational(
                &ratio(sign(j % 2 == 0), (3 * j as i64 - 1) * (3 * j as i64 + 1)),
                p,
            );
            Complex::from_real(w)
        },
        &Angle::PiMultiple(x * int(3)),
        TrigKind::Cos,
        p,
        exec,
    );
    let scale = &Real::from_u64(27, p).sqrt() / &Real::pi(p);
    let rhs = &scale * &(&Real::one(p).ldexp(-1) + &sum.re);
    // sum_{n>N} 1/(9n^2-1) <= sum 1/(8n^2) <= 1/(8N).
    let scale_hi = &Real::from_u64(27, BITS).sqrt() / &Real::pi(BITS);
    let tail = up(&scale_hi / &Real::from_u64(8 * n, BITS));
    Ok(Residual::assemble(
        IdentityId::TripleCosine,
        Complex::from_real(lhs),
        Complex::from_real(rhs),
        &[Some(tail)],
        n,
        ctx,
        None,
    ))
}

fn check_unit_open(t: &BigRational) -> Result<()> {
    if !t.is_positive() || t >= &BigRational::one() {
        return Err(Error::precondition(format!(
            "x/(2c) = {t} lies outside (0, 1); the series is singular at the ends"
        )));
    }
    Ok(())
}

/// `sum_{n<=N} trig(2 pi n t)/n` against `pi/2 - pi t` or `-ln(2 sin(pi t))`.
pub fn verify_sawtooth(
    kind: TrigKind,
    t: &BigRational,
    n: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_terms(n, 1, true, false)?;
    check_unit_open(t)?;
    let p = ctx.working_bits();
    let theta = t * int(2);
    let lhs = trig_sum(kind, &int_s(1, p), &theta, n, ctx, exec)?;
    let tr = Real::from_rational(t, p);
    let (id, rhs) = match kind {
        TrigKind::Sin => (IdentityId::SawtoothSine, sine_series_closed(&tr, ctx)?),
        TrigKind::Cos => (IdentityId::SawtoothCosine, log_sin_closed(&tr, ctx)?),
    };
    Ok(Residual::assemble(
        id,
        lhs,
        Complex::from_real(rhs),
        &[dirichlet_kernel_tail(t, n)],
        n,
        ctx,
        None,
    ))
}

/// Distance of the Cesaro mean `(1/N) sum_{M<=N} S_M` of the sawtooth
/// partial sums from the closed form.
pub fn cesaro_residual(
    kind: TrigKind,
    t: &BigRational,
    n: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Real> {
    check_terms(n, 1, true, false)?;
    check_unit_open(t)?;
    let p = ctx.working_bits();
    let big_n = Real::from_u64(n, p);
    let mean = weighted_trig_series(
        n,
        |j| Complex::from_real(&Real::from_u64(n - j + 1, p) / &(&big_n * &Real::from_u64(j, p))),
        &Angle::PiMultiple(t * int(2)),
        kind,
        p,
        exec,
    );
    let tr = Real::from_rational(t, p);
    let closed = match kind {
        TrigKind::Sin => sine_series_closed(&tr, ctx)?,
        TrigKind::Cos => log_sin_closed(&tr, ctx)?,
    };
    Ok((&mean.re - &closed).abs())
}

/// `ln(sin x / x) = -sum_{k>=1} zeta(2k) x^(2k) / (k pi^(2k))` for `0 < x < pi`.
pub fn verify_log_sinc(x: &Real, k: u32, ctx: &PrecisionContext) -> Result<Residual> {
    check_terms(1, k, false, true)?;
    let p = ctx.working_bits();
    let x = x.with_precision(p);
    let pi = Real::pi(p);
    if !x.is_positive() || x >= pi {
        return Err(Error::precondition(format!(
            "x = {} lies outside (0, pi)",
            x.to_sci_string(8)
        )));
    }
    let lhs = (&x.sin() / &x).ln();
    // zeta(2k) / pi^(2k) = q_k, so the series is rational in x^2.
    let x2 = &x * &x;
    let mut rhs = Real::zero(p);
    let mut power = x2.clone();
    for j in 1..=k {
        let c = zeta_even_coefficient(j) / int(j as i64);
        rhs = &rhs - &(&Real::from_rational(&c, p) * &power);
        power = &power * &x2;
    }
    let u = &x / &pi;
    let u2 = &u * &u;
    // sum_{j>K} zeta(2j) y^j / j <= zeta(2K+2) y^(K+1) / ((K+1)(1-y)).
    let y = u2.with_precision(BITS);
    let one = Real::one(BITS);
    if y >= one {
        return Err(Error::precondition(
            "x rounds to pi; the series diverges there",
        ));
    }
    let tail = &(&zeta_even_upper(k + 1) * &y.powi(k + 1))
        / &(&(&one - &y) * &Real::from_u64(k as u64 + 1, BITS));
    Ok(Residual::assemble(
        IdentityId::LogSinc,
        Complex::from_real(lhs),
        Complex::from_real(rhs),
        &[Some(up(tail))],
        k as u64,
        ctx,
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    #[test]
    fn alternating_cube_case() {
        let r = verify_log_fourier(
            TrigKind::Cos,
            1,
            &int(1),
            10_000,
            60,
            &ctx(),
            Execution::default(),
        )
        .unwrap();
        assert!(r.abs_residual.to_f64() < 1e-7, "{}", r.abs_residual);
        assert!(r.passes());
    }

    #[test]
    fn sine_form_at_zero() {
        let r = verify_log_fourier(
            TrigKind::Sin,
            1,
            &int(0),
            100,
            10,
            &ctx(),
            Execution::default(),
        )
        .unwrap();
        assert!(r.lhs.is_zero() && r.rhs.is_zero());
    }

    #[test]
    fn cosine_pair_and_mixed() {
        let c = ctx();
        let e = Execution::default();
        let a = verify_cosine_pair(2, &ratio(2, 3), 10_000, 60, &c, e).unwrap();
        assert!(a.passes() && a.abs_residual.to_f64() < 1e-6);
        let b = verify_mixed_order(1, &int(1), 10_000, 60, &c, e).unwrap();
        assert!(b.passes() && b.abs_residual.to_f64() < 1e-7);
        assert!(verify_cosine_pair(1, &int(2), 100, 10, &c, e).is_err());
    }

    #[test]
    fn zeta3_fourier_points() {
        for x in [ratio(2, 3), int(1), ratio(1, 3)] {
            let r = verify_zeta3_fourier(&x, 10_000, 60, &ctx(), Execution::default()).unwrap();
            assert!(
                r.passes() && r.abs_residual.to_f64() < 1e-6,
                "{x}: {}",
                r.abs_residual
            );
        }
    }

    #[test]
    fn triple_cosine() {
        let r = verify_triple_cosine(&ratio(1, 6), 10_000, &ctx(), Execution::default()).unwrap();
        assert!(r.passes() && r.abs_residual.to_f64() < 1e-4);
        assert!(verify_triple_cosine(&ratio(2, 5), 10, &ctx(), Execution::default()).is_err());
    }

    #[test]
    fn log_sinc() {
        let c = ctx();
        let half_pi = Real::pi(c.working_bits()).ldexp(-1);
        let r = verify_log_sinc(&half_pi, 60, &c).unwrap();
        assert!(
            r.passes() && r.abs_residual.to_f64() < 1e-30 || r.abs_residual.log10_abs() < -28.0
        );
    }
}
