//! Independent zeta evaluator.
//!
//! For `Re(s) >= 1/2` the value comes from the alternating (eta) series with
//! Borwein's Chebyshev-weighted acceleration, which needs no Bernoulli
//! numbers. Below that the functional equation maps the argument back into
//! the accelerated region.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::gamma::gamma_fn;
use crate::error::{Error, Result};
use crate::numeric::rational::BigRational;
use crate::numeric::{Complex, PrecisionContext, Real};

/// Arguments closer than this to `s = 1` are refused unless allowed.
pub const NEAR_POLE_RADIUS: f64 = 1e-3;

/// Below this real part the functional equation is used.
pub const REFLECTION_CROSSOVER: f64 = 0.5;

#[derive(Clone, Copy, Debug, Default)]
pub struct OracleOptions {
    /// Evaluate inside [`NEAR_POLE_RADIUS`] of the pole instead of refusing.
    pub allow_near_pole: bool,
}

/// `zeta(s)` for complex `s != 1`.
pub fn zeta_oracle(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    zeta_oracle_with(s, ctx, OracleOptions::default())
}

pub fn zeta_oracle_with(
    s: &Complex,
    ctx: &PrecisionContext,
    opts: OracleOptions,
) -> Result<Complex> {
    let (sr, si) = s.to_f64_pair();
    let one = Complex::one(s.precision().max(64));
    let dist = (s - &one).abs();
    if dist.is_zero() {
        return Err(Error::Pole);
    }
    let d = dist.to_f64();
    if d < NEAR_POLE_RADIUS && !opts.allow_near_pole {
        return Err(Error::NearPole {
            s: format_f64_pair(sr, si),
            radius: NEAR_POLE_RADIUS,
        });
    }
    if s.is_real() {
        if let Some(n) = s.re.to_i64_exact() {
            return Ok(Complex::from_real(zeta_int(n, ctx)?));
        }
    }
    if sr < REFLECTION_CROSSOVER {
        reflected(s, ctx)
    } else {
        borwein(s, ctx)
    }
}

/// `zeta(x)` for real `x != 1`.
pub fn zeta_real(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    Ok(zeta_oracle(&Complex::from_real(x.clone()), ctx)?.re)
}

fn int_cache() -> &'static Mutex<HashMap<(i64, usize), Real>> {
    static CACHE: OnceLock<Mutex<HashMap<(i64, usize), Real>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `zeta(n)` at an integer `n != 1`, memoized per precision.
pub fn zeta_int(n: i64, ctx: &PrecisionContext) -> Result<Real> {
    if n == 1 {
        return Err(Error::Pole);
    }
    let bits = ctx.working_bits();
    if let Some(v) = int_cache()
        .lock()
        .expect("zeta cache poisoned")
        .get(&(n, bits))
    {
        return Ok(v.clone());
    }
    let v = if n < 0 && n % 2 == 0 {
        Real::zero(bits)
    } else if n == 0 {
        // Limit of the functional equation: sin(pi s/2) zeta(1-s) -> -pi/2.
        -Real::one(bits).ldexp(-1)
    } else {
        let s = Complex::from_real(Real::from_i64(n, bits));
        if n < 0 {
            reflected(&s, ctx)?.re
        } else {
            borwein(&s, ctx)?.re
        }
    };
    int_cache()
        .lock()
        .expect("zeta cache poisoned")
        .insert((n, bits), v.clone());
    Ok(v)
}

fn format_f64_pair(re: f64, im: f64) -> String {
    if im == 0.0 {
        format!("{re}")
    } else {
        format!("{re}{im:+}i")
    }
}

/// `d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)`, all integers.
fn borwein_weights(n: u64) -> Vec<BigInt> {
    let mut d = Vec::with_capacity(n as usize + 1);
    let mut term = BigInt::from(1u32);
    let mut acc = BigInt::zero();
    for i in 0..=n {
        acc += &term;
        d.push(acc.clone());
        if i < n {
            term = term * 4u32 * (n + i) * (n - i);
            term /= (2 * i + 1) * (2 * i + 2);
        }
    }
    d
}

/// Smallest acceleration length for an absolute error below `2^-bits`.
///
/// Writing `eta` as `Gamma(s)^-1 int_0^1 (-ln x)^(s-1) / (1 + x) dx` and
/// bounding the Chebyshev remainder by `2 (3 + sqrt 8)^-n` gives
/// `2 Gamma(sigma) / ((3 + sqrt 8)^n |Gamma(s)| |1 - 2^(1-s)|)`.
fn borwein_length(s: &Complex, bits: usize, denom_log2: f64) -> Result<u64> {
    let probe = PrecisionContext::new(10).expect("valid");
    let sp = s.with_precision(probe.working_bits());
    let g = gamma_fn(&sp, &probe)?;
    let g_sigma = gamma_fn(&Complex::from_real(sp.re.clone()), &probe)?;
    let log2_ratio = (g_sigma.abs().log10_abs() - g.abs().log10_abs()) / std::f64::consts::LOG10_2;
    let need = bits as f64 + 1.0 + log2_ratio.max(0.0) - denom_log2;
    let per_term = (3.0 + 8f64.sqrt()).log2();
    let n = ((need / per_term).max(1.0) * 1.1).ceil() as u64 + 1;
    let cap = 40 * bits as u64 + 100;
    if n > cap {
        return Err(Error::PrecisionShortfall(format!(
            "eta acceleration needs {n} terms at s = {}, beyond the cap of {cap}",
            s
        )));
    }
    Ok(n)
}

fn borwein(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let bits = ctx.working_bits();
    let probe_p = 64;
    let s_lo = s.with_precision(probe_p);
    let two = Real::from_u64(2, probe_p);
    let denom_lo = (&Complex::one(probe_p)
        - &Complex::real_pow(&two, &(&Complex::one(probe_p) - &s_lo)))
        .abs();
    let denom_log2 = denom_lo.log10_abs() / std::f64::consts::LOG10_2;
    let n = borwein_length(s, bits, denom_log2)?;
    let extra = 16 + (64 - n.leading_zeros()) as usize + (-denom_log2).max(0.0).ceil() as usize;
    let p = bits + extra;
    let s = s.with_precision(p);
    let d = borwein_weights(n);
    let dn = &d[n as usize];
    let int_power = s
        .as_real()
        .and_then(|r| r.to_i64_exact())
        .filter(|&k| k > 0);
    let mut eta = Complex::zero(p);
    for k in 0..n {
        let w = BigRational::new(dn - &d[k as usize], dn.clone());
        let w = Real::from_rational(&w, p);
        let base = Real::from_u64(k + 1, p);
        let term = match int_power {
            Some(m) => Complex::from_real(&w / &base.powi(m as u32)),
            None => Complex::real_pow(&base, &-&s).mul_real(&w),
        };
        eta = if k % 2 == 0 {
            &eta + &term
        } else {
            &eta - &term
        };
    }
    let one = Complex::one(p);
    let denom = &one - &Complex::real_pow(&Real::from_u64(2, p), &(&one - &s));
    Ok((&eta / &denom).with_precision(bits))
}

/// `zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s)`.
fn reflected(s: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let bits = ctx.working_bits();
    let inner = ctx.raised(32);
    let p = inner.working_bits();
    let s = s.with_precision(p);
    let one = Complex::one(p);
    let w = &one - &s;
    let zw = zeta_oracle_with(
        &w,
        &inner,
        OracleOptions {
            allow_near_pole: true,
        },
    )?;
    let g = gamma_fn(&w, &inner)?;
    let pi = Real::pi(p);
    let two_s = Complex::real_pow(&Real::from_u64(2, p), &s);
    let pi_s = Complex::real_pow(&pi, &(&s - &one));
    let sine = s.scale(&pi.ldexp(-1)).sin();
    let v = &(&(&two_s * &pi_s) * &(&sine * &g)) * &zw;
    Ok(v.with_precision(bits))
}
