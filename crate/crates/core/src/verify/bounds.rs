//! Truncation majorants, evaluated at 64 bits and rounded up.

use num_traits::{One, Signed};

use crate::numeric::rational::{factorial, pow, ratio, BigRational};
use crate::numeric::{Complex, PrecisionContext, Real};
use crate::reference::{dirichlet_tail, gamma_real};

pub(crate) const BITS: usize = 64;

/// Multiplier applied to the truncation majorants in the expected bound.
pub const SAFETY_FACTOR: u64 = 10;

/// Upper bound on `zeta(2)` used for every `zeta(2k)`, `k >= 1`.
pub(crate) fn zeta2_upper() -> Real {
    Real::from_rational(&ratio(1645, 1000), BITS)
}

pub(crate) fn up(x: Real) -> Real {
    &x + &x.ldexp(-50).abs()
}

pub(crate) fn real(q: &BigRational) -> Real {
    Real::from_rational(q, BITS)
}

/// Tail of `sum n^-s` past `N` for real `s > 1`.
pub(crate) fn zeta_tail(s: i64, n: u64) -> Real {
    dirichlet_tail(&Complex::from_real(Real::from_i64(s, BITS)), n).expect("exponent above one")
}

/// Summation-by-parts bound `1 / ((N+1) |sin(theta/2)|)` for
/// `sum_{n>N} trig(n theta) / n`.
pub(crate) fn dirichlet_kernel_tail(half_angle_over_pi: &BigRational, n: u64) -> Option<Real> {
    let s = (&real(half_angle_over_pi) * &Real::pi(BITS)).sin().abs();
    if s.is_zero() {
        return None;
    }
    let guard = Real::one(BITS) - Real::one(BITS).ldexp(-40);
    Some(up(&(&s * &guard).recip() / &Real::from_u64(n + 1, BITS)))
}

/// Majorant of `sum_{k>K} a_k` when `a_k <= A k^-p y^k` for `k >= 1`.
///
/// Geometric for `y < 1`; for `y = 1` the integral bound
/// `A K^(1-p) / (p-1)` needs `p > 1`.
pub(crate) fn power_tail(a: &Real, p: u32, y: &BigRational, k: u32) -> Option<Real> {
    if y.is_negative() {
        return None;
    }
    let one = BigRational::one();
    if y < &one {
        let n = Real::from_u64(k as u64 + 1, BITS);
        let geometric = real(&(pow(y, k + 1) / (&one - y)));
        return Some(up(&(a * &geometric) / &n.powi(p)));
    }
    if y == &one && p > 1 && k >= 1 {
        let kk = Real::from_u64(k as u64, BITS);
        return Some(up(
            &(a / &kk.powi(p - 1)) / &Real::from_u64(p as u64 - 1, BITS)
        ));
    }
    None
}

/// Rounding allowance `2^-(bits - guard/2) max(1, |lhs|, |rhs|) (terms + 1)`.
pub(crate) fn rounding_allowance(
    ctx: &PrecisionContext,
    lhs: &Complex,
    rhs: &Complex,
    terms: u64,
) -> Real {
    let scale = Real::one(BITS)
        .max(&lhs.abs().with_precision(BITS))
        .max(&rhs.abs().with_precision(BITS));
    let exp = ctx.working_bits() as i64 - ctx.guard_bits() as i64 / 2;
    up(&scale.ldexp(-exp) * &Real::from_u64(terms + 1, BITS))
}

/// Majorant of the omitted `k > K` terms of
/// `sum_k (-1)^k F_k X^(2k) / (2k)! zeta(s+1-2k)`, where `F_k` is `s - 2k`
/// or `(s - 2k)(s + 2k - 1)`.
///
/// For `k > K` the argument `w = s+1-2k` has negative real part, and the
/// functional equation gives
/// `|zeta(w)| <= 2^Re(w) pi^(Re(w)-1) cosh(pi Im(s)/2) Gamma(1-Re(w)) zeta(1-Re(w))`.
/// Successive majorants shrink by at most `rho`, so the tail is at most
/// `b_{K+1} / (1 - rho)`. Returns `None` when `K` is too small for that.
pub(crate) fn complex_power_tail(
    s: &Complex,
    x_abs: &BigRational,
    k: u32,
    paired: bool,
) -> Option<Real> {
    let p = BITS;
    let sigma = s.re.with_precision(p);
    let t = s.im.with_precision(p);
    let sigma_f = sigma.to_f64();
    let kk = k as i64 + 1;
    let one = Real::one(p);
    // 1 - Re(w) at k = K + 1.
    let u = &Real::from_i64(2 * kk, p) - &sigma;
    if u <= one {
        return None;
    }
    let y = pow(&(x_abs / BigRational::from_integer(2.into())), 2);
    let neg = (-sigma_f).max(0.0);
    let grow = &one + &(&Real::from_f64(neg, p) / &Real::from_i64(2 * k as i64 + 3, p));
    let mut rho = &real(&y) * &(&grow * &grow);
    if paired {
        let d = &Real::from_i64(2 * k as i64 + 1, p) + &sigma;
        if !d.is_positive() {
            return None;
        }
        rho = &rho * &(&one + &(&Real::from_u64(2, p) / &d));
    }
    let rho = up(rho);
    if rho >= one {
        return None;
    }
    let two_k = Complex::from_real(Real::from_i64(2 * kk, p));
    let mut factor = (s.with_precision(p) - &two_k).abs();
    if paired {
        let other = s.with_precision(p).add_real(&Real::from_i64(2 * kk - 1, p));
        factor = &factor * &other.abs();
    }
    let pi = Real::pi(p);
    let x_pi = &real(x_abs) * &pi;
    let two_kk = 2 * kk as u32;
    let power = &x_pi.powi(two_kk) / &Real::from_int(&factorial(two_kk as u64), p);
    let w_re = &one - &u;
    let reflect = &Real::from_u64(2, p).pow(&w_re) * &pi.pow(&(&w_re - &one));
    let cosh = (&pi * &t.abs()).ldexp(-1).cosh();
    let gctx = PrecisionContext::with_working_bits(128).expect("valid precision");
    let gamma = gamma_real(&u.with_precision(128), &gctx)
        .ok()?
        .with_precision(p);
    // zeta(u) < 1 + 1/(u - 1) for u > 1.
    let zeta = &one + &(&u - &one).recip();
    let b = &(&(&factor * &power) * &(&reflect * &cosh)) * &(&gamma * &zeta);
    let tail = &b / &(&one - &rho);
    Some(up(up(tail)))
}
