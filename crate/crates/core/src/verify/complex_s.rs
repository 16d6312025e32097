use super::bounds::{complex_power_tail, up};
use super::fourier::{check_abs_x, check_terms, pi_x, trig_sum};
use super::{ClosedAngle, IdentityId, Residual};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::numeric::rational::{factorial, int, BigRational};
use crate::numeric::{Complex, PrecisionContext, Real};
use crate::reference::{dirichlet_tail, zeta_oracle_with, OracleOptions, TrigKind};

/// `s` as a non-negative even integer, if it is one.
fn even_integer(s: &Complex) -> Option<u32> {
    s.as_real()
        .and_then(|r| r.to_i64_exact())
        .filter(|n| *n >= 0 && n % 2 == 0)
        .map(|n| n as u32)
}

/// `sum_{k<=K} (-1)^k F_k X^(2k)/(2k)! zeta(s+1-2k)` with `F_k = s - 2k`,
/// or `(s - 2k)(s + 2k - 1)` when `paired`. At `s = 2k` the product with
/// the pole is replaced by its limit.
fn power_side(
    s: &Complex,
    big_x: &Real,
    k: u32,
    paired: bool,
    ctx: &PrecisionContext,
) -> Result<Complex> {
    let p = ctx.working_bits();
    let s = s.with_precision(p);
    let pole_at = even_integer(&s).map(|n| n / 2);
    let one = Complex::one(p);
    let x2 = big_x.powi(2);
    let mut x_pow = Real::one(p);
    let mut acc = Complex::zero(p);
    let opts = OracleOptions {
        allow_near_pole: true,
    };
    for j in 0..=k {
        let two_j = Real::from_u64(2 * j as u64, p);
        let factor = if pole_at == Some(j) {
            // (s - 2k) zeta(s + 1 - 2k) -> 1.
            let limit = if paired { 4 * j as i64 - 1 } else { 1 };
            Complex::from_real(Real::from_i64(limit, p))
        } else {
            let w = (&s + &one).add_real(&-&two_j);
            let mut f = s.add_real(&-&two_j);
            if paired {
                f = &f * &s.add_real(&(&two_j - &Real::one(p)));
            }
            &f * &zeta_oracle_with(&w, ctx, opts)?
        };
        let c = &x_pow / &Real::from_int(&factorial(2 * j as u64), p);
        let term = factor.mul_real(&c);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
        x_pow = &x_pow * &x2;
    }
    Ok(acc)
}

fn power_majorant(s: &Complex, x: &BigRational, k: u32, paired: bool) -> Result<Option<Real>> {
    let x_abs = num_traits::Signed::abs(x);
    match complex_power_tail(s, &x_abs, k, paired) {
        Some(t) => Ok(Some(t)),
        None if x_abs == int(2) => Ok(None),
        None => Err(Error::Config(format!(
            "K = {k} is too small for a rigorous power-side tail bound at s = {s}; increase K"
        ))),
    }
}

fn endpoint_note(x: &BigRational) -> Option<String> {
    (num_traits::Signed::abs(x) == int(2))
        .then(|| "endpoint |x| = 2c: the power side converges without a usable bound".to_string())
}

fn sigma_above(s: &Complex, floor: i64, what: &str) -> Result<()> {
    if s.re <= Real::from_i64(floor, s.precision()) {
        return Err(Error::precondition(format!(
            "{what} needs Re(s) > {floor}, got s = {s}"
        )));
    }
    Ok(())
}

/// `s C(s+1) + X S(s)` against the odd-shifted zeta series.
pub fn verify_complex_mixed(
    s: &Complex,
    x: &BigRational,
    n: u64,
    k: u32,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_terms(n, k, true, true)?;
    check_abs_x(x, false)?;
    let p = ctx.working_bits();
    let s = s.with_precision(p);
    sigma_above(&s, 1, "the mixed sine/cosine form")?;
    let big_x = pi_x(x, p);
    let one = Complex::one(p);
    let c = trig_sum(TrigKind::Cos, &(&s + &one), x, n, ctx, exec)?;
    let sn = trig_sum(TrigKind::Sin, &s, x, n, ctx, exec)?;
    let lhs = &(&s * &c) + &sn.mul_real(&big_x);
    let rhs = power_side(&s, &big_x, k, false, ctx)?;
    let s64 = s.with_precision(super::bounds::BITS);
    let fourier = match (
        dirichlet_tail(&(&s64 + &Complex::one(64)), n),
        dirichlet_tail(&s64, n),
    ) {
        (Some(a), Some(b)) => Some(up(
            &(&s64.abs() * &a) + &(&pi_x(&num_traits::Signed::abs(x), 64) * &b)
        )),
        _ => None,
    };
    Ok(Residual::assemble(
        IdentityId::ComplexMixed,
        lhs,
        rhs,
        &[fourier, power_majorant(&s, x, k, false)?],
        n + k as u64,
        ctx,
        endpoint_note(x),
    ))
}

/// `s(s-1) C(s+1) + X^2 C(s-1)` against the paired zeta series.
pub fn verify_complex_pair(
    s: &Complex,
    x: &BigRational,
    n: u64,
    k: u32,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    check_terms(n, k, true, true)?;
    check_abs_x(x, false)?;
    let p = ctx.working_bits();
    let s = s.with_precision(p);
    sigma_above(&s, 2, "the paired cosine form")?;
    let big_x = pi_x(x, p);
    let one = Complex::one(p);
    let hi = trig_sum(TrigKind::Cos, &(&s + &one), x, n, ctx, exec)?;
    let lo = trig_sum(TrigKind::Cos, &(&s - &one), x, n, ctx, exec)?;
    let ss1 = &s * &(&s - &one);
    let lhs = &(&ss1 * &hi) + &lo.mul_real(&big_x.powi(2));
    let rhs = power_side(&s, &big_x, k, true, ctx)?;
    let s64 = s.with_precision(super::bounds::BITS);
    let one64 = Complex::one(64);
    let fourier = match (
        dirichlet_tail(&(&s64 + &one64), n),
        dirichlet_tail(&(&s64 - &one64), n),
    ) {
        (Some(a), Some(b)) => {
            let ss1 = (&s64 * &(&s64 - &one64)).abs();
            Some(up(
                &(&ss1 * &a) + &(&pi_x(&num_traits::Signed::abs(x), 64).powi(2) * &b)
            ))
        }
        _ => None,
    };
    Ok(Residual::assemble(
        IdentityId::ComplexPair,
        lhs,
        rhs,
        &[fourier, power_majorant(&s, x, k, true)?],
        n + k as u64,
        ctx,
        endpoint_note(x),
    ))
}

/// The paired form at `x/c` in {2/3, 1/2, 1/3}, where both cosine sums
/// are `lambda zeta`, so the left side needs no Fourier truncation.
pub fn verify_complex_closed(
    angle: ClosedAngle,
    s: &Complex,
    k: u32,
    ctx: &PrecisionContext,
) -> Result<Residual> {
    check_terms(1, k, false, true)?;
    let p = ctx.working_bits();
    let s = s.with_precision(p);
    if let Some(n) = even_integer(&s).filter(|n| *n == 0 || *n == 2) {
        return Err(Error::PoleCollision(format!(
            "s = {n} puts zeta(s + 1) or zeta(s - 1) on its pole"
        )));
    }
    let x = angle.x();
    let big_x = pi_x(&x, p);
    let one = Complex::one(p);
    let up1 = &s + &one;
    let dn1 = &s - &one;
    let opts = OracleOptions::default();
    let hi = &angle.lambda(&up1, p) * &zeta_oracle_with(&up1, ctx, opts)?;
    let lo = &angle.lambda(&dn1, p) * &zeta_oracle_with(&dn1, ctx, opts)?;
    let lhs = &(&(&s * &dn1) * &hi) + &lo.mul_real(&big_x.powi(2));
    let rhs = power_side(&s, &big_x, k, true, ctx)?;
    let id = match angle {
        ClosedAngle::TwoThirds => IdentityId::ComplexClosedTwoThirds,
        ClosedAngle::Half => IdentityId::ComplexClosedHalf,
        ClosedAngle::Third => IdentityId::ComplexClosedThird,
    };
    Ok(Residual::assemble(
        id,
        lhs,
        rhs,
        &[power_majorant(&s, &x, k, true)?],
        k as u64 + 1,
        ctx,
        None,
    ))
}
