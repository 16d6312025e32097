//! Gamma function by Spouge's approximation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::numeric::rational::ratio;
use crate::numeric::{Complex, PrecisionContext, Real};

struct Spouge {
    a: u64,
    bits: usize,
    /// `c[0] = sqrt(2 pi)`, then `c[k]` for `1 <= k < a`.
    c: Vec<Real>,
}

/// Spouge parameter for a relative error below `2^-bits`.
///
/// The error is at most `a^(-1/2) (2 pi)^(-(a + 1/2))`.
fn spouge_parameter(bits: usize) -> u64 {
    let ln2pi = (2.0 * std::f64::consts::PI).ln();
    (bits as f64 * std::f64::consts::LN_2 / ln2pi).ceil() as u64 + 1
}

fn coefficients(bits: usize) -> Arc<Spouge> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Spouge>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("spouge cache poisoned").get(&bits) {
        return s.clone();
    }
    let a = spouge_parameter(bits);
    // The alternating coefficient sum cancels roughly as many bits as the
    // target, so the coefficients carry twice the precision.
    let p = 2 * bits + 64;
    let mut c = Vec::with_capacity(a as usize);
    c.push((Real::pi(p).ldexp(1)).sqrt());
    let mut inv_fact = Real::one(p);
    for k in 1..a {
        if k > 1 {
            inv_fact = inv_fact.div_int(k as i64 - 1);
        }
        let base = Real::from_u64(a - k, p);
        let half = Real::from_rational(&ratio(2 * k as i64 - 1, 2), p);
        let mag = (&(&half * &base.ln()) + &base).exp();
        let mut ck = &mag * &inv_fact;
        if k % 2 == 0 {
            ck = -ck;
        }
        c.push(ck);
    }
    let s = Arc::new(Spouge { a, bits: p, c });
    cache
        .lock()
        .expect("spouge cache poisoned")
        .insert(bits, s.clone());
    s
}

/// `Gamma(w + 1)` for `Re(w) >= 0`.
fn spouge_shifted(w: &Complex, sp: &Spouge) -> Complex {
    let p = sp.bits;
    let w = w.with_precision(p);
    let mut sum = Complex::from_real(sp.c[0].clone());
    for k in 1..sp.a {
        let d = w.add_real(&Real::from_u64(k, p));
        sum = &sum + &(&Complex::from_real(sp.c[k as usize].clone()) / &d);
    }
    let wa = w.add_real(&Real::from_u64(sp.a, p));
    let half = Real::from_rational(&ratio(1, 2), p);
    let power = (&w.add_real(&half) * &wa.ln()) - wa;
    &power.exp() * &sum
}

fn is_nonpositive_integer(z: &Complex) -> Option<i64> {
    if !z.im.is_zero() || z.re.is_positive() {
        return None;
    }
    z.re.to_i64_exact()
}

/// `Gamma(z)` at the context's working precision.
pub fn gamma_fn(z: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if let Some(n) = is_nonpositive_integer(z) {
        return Err(Error::GammaPole(n));
    }
    let bits = ctx.working_bits();
    let sp = coefficients(bits);
    let z = z.with_precision(sp.bits);
    let g = gamma_right(&z, &sp)?;
    Ok(g.with_precision(bits))
}

fn gamma_right(z: &Complex, sp: &Spouge) -> Result<Complex> {
    let p = sp.bits;
    let half = Real::from_rational(&ratio(1, 2), p);
    if z.re < half {
        // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
        let one_minus = (-z).add_real(&Real::one(p));
        let g = gamma_right(&one_minus, sp)?;
        let pi = Real::pi(p);
        let s = z.scale(&pi).sin();
        if s.is_zero() {
            return Err(Error::GammaPole(z.re.to_i64_exact().unwrap_or(0)));
        }
        return Ok(&Complex::from_real(pi) / &(&s * &g));
    }
    let one = Real::one(p);
    if z.re < one {
        // Gamma(z) = Gamma(z + 1) / z keeps Spouge's argument in Re >= 0.
        return Ok(&spouge_shifted(z, sp) / z);
    }
    Ok(spouge_shifted(&z.add_real(&-&one), sp))
}

/// `Gamma(x)` for real `x`.
pub fn gamma_real(x: &Real, ctx: &PrecisionContext) -> Result<Real> {
    Ok(gamma_fn(&Complex::from_real(x.clone()), ctx)?.re)
}
