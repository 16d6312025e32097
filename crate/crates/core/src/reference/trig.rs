//! Truncated trigonometric Dirichlet sums `sum_{n<=N} n^-s trig(n theta)`.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::{Execution, DEFAULT_CHUNK};
use crate::numeric::rational::BigRational;
use crate::numeric::{Complex, PrecisionContext, Real};

/// Largest denominator for which `PiMultiple` angles use a periodic table.
pub const MAX_TABLE_DENOMINATOR: u64 = 65_536;

/// Angle per unit `n`.
#[derive(Clone, Debug)]
pub enum Angle {
    /// `q * pi` with `q` exact; multiples of `pi/2` are evaluated exactly.
    PiMultiple(BigRational),
    Radians(Real),
}

impl Angle {
    pub fn to_real(&self, p: usize) -> Real {
        match self {
            Angle::PiMultiple(q) => &Real::from_rational(q, p) * &Real::pi(p),
            Angle::Radians(t) => t.with_precision(p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigKind {
    Cos,
    Sin,
}

#[derive(Clone, Debug)]
pub struct TrigSumSpec {
    pub angle: Angle,
    pub s: Complex,
    pub terms: u64,
    pub kind: TrigKind,
}

#[derive(Clone, Debug)]
pub struct TrigSum {
    pub value: Complex,
    /// Majorant of the omitted tail, available when `Re(s) > 1`.
    pub tail_bound: Option<Real>,
}

/// `sum_{n=1}^{N} n^-s trig(n theta)` with its tail majorant.
pub fn trig_dirichlet(
    spec: &TrigSumSpec,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<TrigSum> {
    let p = ctx.working_bits();
    let s = spec.s.with_precision(p);
    let weights = power_weights(&s, spec.terms, p, exec);
    let value = weighted_trig_series(
        spec.terms,
        |n| weights[n as usize - 1].clone(),
        &spec.angle,
        spec.kind,
        p,
        exec,
    );
    Ok(TrigSum {
        value,
        tail_bound: dirichlet_tail(&s, spec.terms),
    })
}

/// `sum_{n=1}^{N} n^-s`, identical to [`trig_dirichlet`] at `theta = 0`.
pub fn power_partial_sum(
    s: &Complex,
    terms: u64,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<TrigSum> {
    trig_dirichlet(
        &TrigSumSpec {
            angle: Angle::PiMultiple(BigRational::zero()),
            s: s.clone(),
            terms,
            kind: TrigKind::Cos,
        },
        ctx,
        exec,
    )
}

/// `N^(1 - sigma) / (sigma - 1)` bounds `sum_{n>N} n^-sigma` for `sigma > 1`.
pub fn dirichlet_tail(s: &Complex, terms: u64) -> Option<Real> {
    let p = 64;
    let sigma = s.re.with_precision(p);
    let one = Real::one(p);
    if sigma <= one || terms == 0 {
        return None;
    }
    let n = Real::from_u64(terms, p);
    let excess = &sigma - &one;
    let bound = &n.pow(&-&excess) / &excess;
    // Absorb the rounding of the 64-bit evaluation.
    Some(&bound + &bound.ldexp(-50))
}

/// `n^-s` for `1 <= n <= N`.
///
/// Positive integer exponents use exact powers. Otherwise prime powers are
/// computed directly and composites as products over a smallest-prime-factor
/// sieve.
pub fn power_weights(s: &Complex, terms: u64, p: usize, exec: Execution) -> Vec<Complex> {
    let n_max = terms as usize;
    if n_max == 0 {
        return Vec::new();
    }
    if let Some(k) = s
        .as_real()
        .and_then(|r| r.to_i64_exact())
        .filter(|&k| k > 0 && k <= u32::MAX as i64)
    {
        let idx: Vec<u64> = (1..=terms).collect();
        return exec.map(&idx, |&n| {
            Complex::from_real(Real::from_u64(n, p).powi(k as u32).recip())
        });
    }
    let spf = smallest_prime_factors(n_max);
    let primes: Vec<u64> = (2..=n_max)
        .filter(|&n| spf[n] == n)
        .map(|n| n as u64)
        .collect();
    let neg_s = -s;
    let prime_vals = exec.map(&primes, |&q| {
        Complex::real_pow(&Real::from_u64(q, p), &neg_s)
    });
    let mut out: Vec<Complex> = Vec::with_capacity(n_max);
    out.push(Complex::one(p));
    let mut pi = 0;
    for n in 2..=n_max {
        if spf[n] == n {
            out.push(prime_vals[pi].clone());
            pi += 1;
        } else {
            let a = spf[n];
            let v = &out[a - 1] * &out[n / a - 1];
            out.push(v);
        }
    }
    out
}

fn smallest_prime_factors(n: usize) -> Vec<usize> {
    let mut spf: Vec<usize> = (0..=n).collect();
    let mut i = 2;
    while i * i <= n {
        if spf[i] == i {
            let mut j = i * i;
            while j <= n {
                if spf[j] == j {
                    spf[j] = i;
                }
                j += i;
            }
        }
        i += 1;
    }
    spf
}

/// `sum_{n=1}^{N} w(n) trig(n theta)`, summed in fixed chunks and combined in
/// order so every execution mode gives the same bits.
pub fn weighted_trig_series<W>(
    terms: u64,
    weight: W,
    angle: &Angle,
    kind: TrigKind,
    p: usize,
    exec: Execution,
) -> Complex
where
    W: Fn(u64) -> Complex + Sync + Send,
{
    let table = TrigTable::new(angle, kind, terms, p, exec);
    let partials = exec.map_chunks(1..terms + 1, DEFAULT_CHUNK, |r| {
        let mut acc = Complex::zero(p);
        let mut walker = table.walker(r.start, p);
        for n in r {
            let t = walker.next(n);
            if t.is_zero() {
                continue;
            }
            acc = &acc + &weight(n).mul_real(&t);
        }
        acc
    });
    partials.into_iter().fold(Complex::zero(p), |a, b| &a + &b)
}

enum TrigTable {
    /// Values indexed by `n*a mod 2b` for the angle `(a/b) pi`.
    Periodic {
        a: u64,
        b: u64,
        negate: bool,
        values: Vec<Real>,
    },
    /// Exact residues evaluated per term for large denominators.
    Residue {
        a: u64,
        b: u64,
        negate: bool,
        kind: TrigKind,
    },
    Rotating {
        theta: Real,
        kind: TrigKind,
    },
}

impl TrigTable {
    fn new(angle: &Angle, kind: TrigKind, terms: u64, p: usize, exec: Execution) -> TrigTable {
        match angle {
            Angle::PiMultiple(q) => {
                let b = q.denom().to_u64();
                let a = q.numer().abs().to_u64();
                match (a, b) {
                    (Some(a), Some(b)) if b <= MAX_TABLE_DENOMINATOR => {
                        let period = 2 * b;
                        let a = a % period;
                        // sin is odd and cos even in the angle.
                        let negate = q.is_negative() && kind == TrigKind::Sin;
                        if terms >= period {
                            let idx: Vec<u64> = (0..period).collect();
                            let values = exec.map(&idx, |&j| trig_pi_fraction(j, b, kind, p));
                            TrigTable::Periodic {
                                a,
                                b,
                                negate,
                                values,
                            }
                        } else {
                            TrigTable::Residue { a, b, negate, kind }
                        }
                    }
                    _ => TrigTable::Rotating {
                        theta: angle.to_real(p),
                        kind,
                    },
                }
            }
            Angle::Radians(t) => TrigTable::Rotating {
                theta: t.with_precision(p),
                kind,
            },
        }
    }

    fn walker(&self, start: u64, p: usize) -> Walker<'_> {
        match self {
            TrigTable::Rotating { theta, .. } => {
                let phase = theta.mul_int(start as i64);
                Walker {
                    table: self,
                    rot: Some((phase.cos(), phase.sin(), theta.cos(), theta.sin())),
                    p,
                }
            }
            _ => Walker {
                table: self,
                rot: None,
                p,
            },
        }
    }
}

struct Walker<'a> {
    table: &'a TrigTable,
    /// Current `(cos, sin)` and the unit step for the rotating case.
    rot: Option<(Real, Real, Real, Real)>,
    p: usize,
}

impl Walker<'_> {
    fn next(&mut self, n: u64) -> Real {
        match self.table {
            TrigTable::Periodic {
                a,
                b,
                negate,
                values,
            } => {
                let j = ((n as u128 * *a as u128) % (2 * *b as u128)) as usize;
                let v = values[j].clone();
                if *negate {
                    -v
                } else {
                    v
                }
            }
            TrigTable::Residue { a, b, negate, kind } => {
                let j = ((n as u128 * *a as u128) % (2 * *b as u128)) as u64;
                let v = trig_pi_fraction(j, *b, *kind, self.p);
                if *negate {
                    -v
                } else {
                    v
                }
            }
            TrigTable::Rotating { kind, .. } => {
                let (c, s, dc, ds) = self.rot.take().expect("walker state");
                let out = match kind {
                    TrigKind::Cos => c.clone(),
                    TrigKind::Sin => s.clone(),
                };
                let nc = &(&c * &dc) - &(&s * &ds);
                let ns = &(&s * &dc) + &(&c * &ds);
                self.rot = Some((nc, ns, dc, ds));
                out
            }
        }
    }
}

/// `cos(j pi / b)` or `sin(j pi / b)`, exact at multiples of `pi/2`.
fn trig_pi_fraction(j: u64, b: u64, kind: TrigKind, p: usize) -> Real {
    let twice = 2 * j;
    if twice.is_multiple_of(b) {
        // j pi / b = (2j / b) (pi / 2)
        let quarter = (twice / b) % 4;
        let (c, s) = match quarter {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        };
        let v = if kind == TrigKind::Cos { c } else { s };
        return Real::from_i64(v, p);
    }
    let g = j.gcd(&b);
    let guard = p + 16;
    let x = &Real::from_rational(&BigRational::new((j / g).into(), (b / g).into()), guard)
        * &Real::pi(guard);
    let v = match kind {
        TrigKind::Cos => x.cos(),
        TrigKind::Sin => x.sin(),
    };
    v.with_precision(p)
}

/// `-ln(2 sin(pi t))`, the value of `sum cos(2 pi n t) / n` for `0 < t < 1`.
pub fn log_sin_closed(t: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_open_unit(t)?;
    let p = ctx.working_bits();
    let x = &t.with_precision(p) * &Real::pi(p);
    Ok(-(x.sin().ldexp(1)).ln())
}

/// `pi/2 - pi t`, the value of `sum sin(2 pi n t) / n` for `0 < t < 1`.
pub fn sine_series_closed(t: &Real, ctx: &PrecisionContext) -> Result<Real> {
    check_open_unit(t)?;
    let p = ctx.working_bits();
    let pi = Real::pi(p);
    Ok(&pi.ldexp(-1) - &(&t.with_precision(p) * &pi))
}

fn check_open_unit(t: &Real) -> Result<()> {
    if !t.is_positive() || t >= &Real::one(t.precision()) {
        return Err(Error::precondition(format!(
            "x/(2c) = {} must lie strictly between 0 and 1; the series is singular at the endpoints",
            t.to_sci_string(6)
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::{int, ratio};
    use crate::reference::oracle::zeta_int;

    fn ctx() -> PrecisionContext {
        PrecisionContext::new(30).unwrap()
    }

    fn real_s(n: i64) -> Complex {
        Complex::from_real(Real::from_i64(n, 128))
    }

    #[test]
    fn empty_sum_is_zero() {
        let spec = TrigSumSpec {
            angle: Angle::PiMultiple(ratio(1, 3)),
            s: real_s(2),
            terms: 0,
            kind: TrigKind::Sin,
        };
        let r = trig_dirichlet(&spec, &ctx(), Execution::Sequential).unwrap();
        assert!(r.value.is_zero());
    }

    #[test]
    fn alternating_cube_sum() {
        let c = ctx();
        let spec = TrigSumSpec {
            angle: Angle::PiMultiple(int(1)),
            s: real_s(3),
            terms: 10_000,
            kind: TrigKind::Cos,
        };
        let r = trig_dirichlet(&spec, &c, Execution::default()).unwrap();
        let expect = zeta_int(3, &c).unwrap().mul_rational(&ratio(-3, 4));
        assert!((&r.value.re - &expect).abs().to_f64() < 1e-7);
    }

    #[test]
    fn zero_angle_is_plain_partial_sum() {
        let c = ctx();
        let s = Complex::from_rationals(&ratio(5, 2), &ratio(1, 3), c.working_bits());
        let plain = power_partial_sum(&s, 3000, &c, Execution::Sequential).unwrap();
        let direct: Complex = (1..=3000u64).fold(Complex::zero(c.working_bits()), |acc, n| {
            &acc + &Complex::real_pow(&Real::from_u64(n, c.working_bits()), &-&s)
        });
        assert!((&plain.value - &direct).abs().log10_abs() < -25.0);
    }

    #[test]
    fn modes_are_bit_identical() {
        let c = ctx();
        for angle in [
            Angle::PiMultiple(ratio(2, 3)),
            Angle::Radians(Real::from_rational(&ratio(7, 5), 128)),
        ] {
            let spec = TrigSumSpec {
                angle,
                s: Complex::from_rationals(&ratio(3, 2), &ratio(1, 1), c.working_bits()),
                terms: 5000,
                kind: TrigKind::Sin,
            };
            let a = trig_dirichlet(&spec, &c, Execution::Sequential).unwrap();
            let b = trig_dirichlet(&spec, &c, Execution::available_parallel()).unwrap();
            assert_eq!(a.value.re, b.value.re);
            assert_eq!(a.value.im, b.value.im);
        }
    }

    #[test]
    fn table_and_rotation_agree() {
        let c = ctx();
        let p = c.working_bits();
        let mk = |angle| TrigSumSpec {
            angle,
            s: real_s(2),
            terms: 4000,
            kind: TrigKind::Cos,
        };
        let a = trig_dirichlet(
            &mk(Angle::PiMultiple(ratio(1, 3))),
            &c,
            Execution::Sequential,
        )
        .unwrap();
        let b = trig_dirichlet(
            &mk(Angle::Radians(&Real::pi(p) / &Real::from_u64(3, p))),
            &c,
            Execution::Sequential,
        )
        .unwrap();
        assert!((&a.value.re - &b.value.re).abs().log10_abs() < -25.0);
    }

    #[test]
    fn tail_bound_only_above_one() {
        assert!(dirichlet_tail(&real_s(1), 100).is_none());
        let t = dirichlet_tail(&real_s(3), 100).unwrap().to_f64();
        assert!((t - 5e-5).abs() < 1e-12);
    }

    #[test]
    fn closed_forms() {
        let c = ctx();
        let p = c.working_bits();
        let half = Real::from_rational(&ratio(1, 2), p);
        let ln2 = Real::from_u64(2, p).ln();
        assert!(
            (&log_sin_closed(&half, &c).unwrap() + &ln2)
                .abs()
                .log10_abs()
                < -30.0
        );
        let sixth = Real::from_rational(&ratio(1, 6), p);
        assert!(log_sin_closed(&sixth, &c).unwrap().abs().log10_abs() < -30.0);
        assert!(sine_series_closed(&half, &c).unwrap().is_zero());
        assert!(log_sin_closed(&Real::zero(p), &c).is_err());
        assert!(log_sin_closed(&Real::one(p), &c).is_err());
    }
}
