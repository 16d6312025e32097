//! Numerical checks of the Fourier-series identities behind the rapid
//! series, reported as left-minus-right residuals against truncation bounds.
//!
//! The period parameter `c` is fixed to 1: every identity depends on `x` only
//! through `x/c`.

mod bounds;
mod complex_s;
mod fourier;
mod validity;

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::numeric::rational::BigRational;
use crate::numeric::{Complex, PrecisionContext, Real};
use crate::reference::TrigKind;

pub use bounds::SAFETY_FACTOR;
pub use complex_s::{verify_complex_closed, verify_complex_mixed, verify_complex_pair};
pub use fourier::{
    cesaro_residual, verify_cosine_closed, verify_cosine_pair, verify_log_fourier, verify_log_sinc,
    verify_mixed_order, verify_sawtooth, verify_triple_cosine, verify_zeta3_fourier,
    verify_zeta3_series,
};
pub use validity::{validity_table, Domain, ValidityRule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// Cosine series of odd order with the `H - ln` term.
    LogCosine,
    /// Sine series of even order with the `H - ln` term.
    LogSine,
    /// `r C(2r+1) + (X/2) S(2r)` against the `zeta(2k)` series.
    MixedOrder,
    /// `r(2r-1) C(2r+1) + X^2/2 C(2r-1)`.
    CosinePair,
    /// The `zeta(3)` Fourier identity with `ln(2 sin(X/2))`.
    Zeta3Fourier,
    /// The three modular `zeta(3)` series against the oracle.
    Zeta3Series,
    ClosedTwoThirds,
    ClosedHalf,
    ClosedThird,
    /// `cos(w t)` as a cosine series in `3 w t`.
    TripleCosine,
    SawtoothSine,
    SawtoothCosine,
    /// `ln(sin x / x)` as a `zeta(2k)` power series.
    LogSinc,
    ComplexMixed,
    ComplexPair,
    ComplexClosedTwoThirds,
    ComplexClosedHalf,
    ComplexClosedThird,
}

impl IdentityId {
    pub const ALL: [IdentityId; 18] = [
        IdentityId::LogCosine,
        IdentityId::LogSine,
        IdentityId::MixedOrder,
        IdentityId::CosinePair,
        IdentityId::Zeta3Fourier,
        IdentityId::Zeta3Series,
        IdentityId::ClosedTwoThirds,
        IdentityId::ClosedHalf,
        IdentityId::ClosedThird,
        IdentityId::TripleCosine,
        IdentityId::SawtoothSine,
        IdentityId::SawtoothCosine,
        IdentityId::LogSinc,
        IdentityId::ComplexMixed,
        IdentityId::ComplexPair,
        IdentityId::ComplexClosedTwoThirds,
        IdentityId::ComplexClosedHalf,
        IdentityId::ComplexClosedThird,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::LogCosine => "T3.5-cos",
            IdentityId::LogSine => "T3.5-sin",
            IdentityId::MixedOrder => "L4.2",
            IdentityId::CosinePair => "T4.1",
            IdentityId::Zeta3Fourier => "T4.2",
            IdentityId::Zeta3Series => "T4.3",
            IdentityId::ClosedTwoThirds => "L4.1-a",
            IdentityId::ClosedHalf => "L4.1-b",
            IdentityId::ClosedThird => "L4.1-c",
            IdentityId::TripleCosine => "Ex2.17",
            IdentityId::SawtoothSine => "L3.2-sin",
            IdentityId::SawtoothCosine => "L3.2-cos",
            IdentityId::LogSinc => "L3.4",
            IdentityId::ComplexMixed => "T4.7",
            IdentityId::ComplexPair => "T4.8",
            IdentityId::ComplexClosedTwoThirds => "T4.9-a",
            IdentityId::ComplexClosedHalf => "T4.9-b",
            IdentityId::ComplexClosedThird => "T4.9-c",
        }
    }

    /// How the order argument is read, if the identity takes one.
    pub fn order_kind(self) -> Option<OrderKind> {
        use IdentityId::*;
        match self {
            LogCosine | LogSine | MixedOrder | CosinePair => Some(OrderKind::R),
            ClosedTwoThirds
            | ClosedHalf
            | ClosedThird
            | ComplexMixed
            | ComplexPair
            | ComplexClosedTwoThirds
            | ComplexClosedHalf
            | ComplexClosedThird => Some(OrderKind::S),
            _ => None,
        }
    }

    /// Whether the identity reads the `x` parameter.
    pub fn uses_x(self) -> bool {
        use IdentityId::*;
        !matches!(
            self,
            ClosedTwoThirds
                | ClosedHalf
                | ClosedThird
                | ComplexClosedTwoThirds
                | ComplexClosedHalf
                | ComplexClosedThird
        )
    }

    pub fn closed_angle(self) -> Option<ClosedAngle> {
        use IdentityId::*;
        match self {
            ClosedTwoThirds | ComplexClosedTwoThirds => Some(ClosedAngle::TwoThirds),
            ClosedHalf | ComplexClosedHalf => Some(ClosedAngle::Half),
            ClosedThird | ComplexClosedThird => Some(ClosedAngle::Third),
            _ => None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = IdentityId::ALL.iter().map(|i| i.name()).collect();
                Error::Config(format!(
                    "unknown identity {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Positive integer `r`.
    R,
    /// Complex exponent `s`.
    S,
}

/// The three angles `x/c` in {2/3, 1/2, 1/3} with closed-form cosine sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedAngle {
    TwoThirds,
    Half,
    Third,
}

impl ClosedAngle {
    pub fn x(self) -> BigRational {
        match self {
            ClosedAngle::TwoThirds => crate::numeric::rational::ratio(2, 3),
            ClosedAngle::Half => crate::numeric::rational::ratio(1, 2),
            ClosedAngle::Third => crate::numeric::rational::ratio(1, 3),
        }
    }

    /// `lambda(u)` with `sum n^-u cos(n pi x) = lambda(u) zeta(u)`.
    pub fn lambda(self, u: &Complex, p: usize) -> Complex {
        let one = Complex::one(p);
        let w = &one - &u.with_precision(p);
        let pw = |b: u64| Complex::real_pow(&Real::from_u64(b, p), &w);
        let half = Real::from_rational(&crate::numeric::rational::ratio(1, 2), p);
        match self {
            ClosedAngle::TwoThirds => (&pw(3) - &one).mul_real(&half),
            ClosedAngle::Half => {
                let two_neg_u = Complex::real_pow(&Real::from_u64(2, p), &-&u.with_precision(p));
                &two_neg_u * &(&pw(2) - &one)
            }
            ClosedAngle::Third => (&(&(&pw(6) - &pw(3)) - &pw(2)) + &one).mul_real(&half),
        }
    }
}

/// Order argument: integer `r` or complex `s`.
#[derive(Clone, Debug)]
pub enum Order {
    R(u32),
    S(Complex),
}

impl Order {
    fn as_r(&self) -> Result<u32> {
        match self {
            Order::R(r) => Ok(*r),
            Order::S(s) => s
                .as_real()
                .and_then(|x| x.to_i64_exact())
                .and_then(|n| n.to_u32())
                .ok_or_else(|| {
                    Error::Config(format!(
                        "this identity needs a positive integer order, got s = {s}"
                    ))
                }),
        }
    }

    fn as_s(&self, p: usize) -> Complex {
        match self {
            Order::R(r) => Complex::from_real(Real::from_u64(*r as u64, p)),
            Order::S(s) => s.with_precision(p),
        }
    }
}

/// One verification request.
#[derive(Clone, Debug)]
pub struct IdentityCase {
    pub id: IdentityId,
    pub order: Option<Order>,
    /// `x/c` for the Fourier identities; `x/(2c)` for the sawtooth pair,
    /// `w t / pi` for the triple-angle cosine, `x/pi` for the log-sinc
    /// series and `2/m` for the modular `zeta(3)` series.
    pub x: BigRational,
    /// Fourier-side truncation `N`.
    pub n_terms: u64,
    /// Power-side truncation `K`.
    pub k_terms: u32,
}

#[derive(Clone, Debug)]
pub struct Residual {
    pub id: IdentityId,
    pub lhs: Complex,
    pub rhs: Complex,
    pub abs_residual: Real,
    /// `SAFETY_FACTOR` times the truncation majorants plus a rounding allowance.
    pub expected_bound: Real,
    /// False where no rigorous bound is available; such cases are reported
    /// for information only.
    pub gating: bool,
    pub note: Option<String>,
}

impl Residual {
    pub fn passes(&self) -> bool {
        !self.gating || self.abs_residual <= self.expected_bound
    }

    /// Builds a residual from both sides and the truncation majorants.
    /// A missing majorant makes the case non-gating.
    pub(crate) fn assemble(
        id: IdentityId,
        lhs: Complex,
        rhs: Complex,
        majorants: &[Option<Real>],
        terms: u64,
        ctx: &PrecisionContext,
        note: Option<String>,
    ) -> Residual {
        let abs_residual = (&lhs - &rhs).abs();
        let gating = majorants.iter().all(Option::is_some);
        let truncation = majorants
            .iter()
            .flatten()
            .fold(Real::zero(bounds::BITS), |a, b| {
                &a + &b.with_precision(bounds::BITS)
            });
        let allowance = bounds::rounding_allowance(ctx, &lhs, &rhs, terms);
        let expected_bound = bounds::up(&truncation.mul_int(SAFETY_FACTOR as i64) + &allowance);
        let note = match (gating, note) {
            (false, None) => {
                Some("no rigorous truncation bound here; reported for information".to_string())
            }
            (_, n) => n,
        };
        Residual {
            id,
            lhs,
            rhs,
            abs_residual,
            expected_bound,
            gating,
            note,
        }
    }
}

/// Evaluates one case.
pub fn verify_case(
    case: &IdentityCase,
    ctx: &PrecisionContext,
    exec: Execution,
) -> Result<Residual> {
    use IdentityId::*;
    let need_order = || {
        case.order
            .clone()
            .ok_or_else(|| Error::Config(format!("{} needs an order argument", case.id)))
    };
    let (n, k, x) = (case.n_terms, case.k_terms, &case.x);
    match case.id {
        LogCosine => verify_log_fourier(TrigKind::Cos, need_order()?.as_r()?, x, n, k, ctx, exec),
        LogSine => verify_log_fourier(TrigKind::Sin, need_order()?.as_r()?, x, n, k, ctx, exec),
        MixedOrder => verify_mixed_order(need_order()?.as_r()?, x, n, k, ctx, exec),
        CosinePair => verify_cosine_pair(need_order()?.as_r()?, x, n, k, ctx, exec),
        Zeta3Fourier => verify_zeta3_fourier(x, n, k, ctx, exec),
        Zeta3Series => {
            let m = (BigRational::from_integer(2.into()) / x)
                .to_integer()
                .to_u32()
                .filter(|m| BigRational::new(2.into(), (*m).into()) == *x)
                .ok_or_else(|| {
                    Error::precondition(format!("x = {x} is not 2/m for m in {{3, 4, 6}}"))
                })?;
            verify_zeta3_series(m, k, ctx)
        }
        ClosedTwoThirds | ClosedHalf | ClosedThird => {
            let s = need_order()?.as_s(ctx.working_bits());
            verify_cosine_closed(case.id.closed_angle().expect("closed"), &s, n, ctx, exec)
        }
        TripleCosine => verify_triple_cosine(x, n, ctx, exec),
        SawtoothSine => verify_sawtooth(TrigKind::Sin, x, n, ctx, exec),
        SawtoothCosine => verify_sawtooth(TrigKind::Cos, x, n, ctx, exec),
        LogSinc => {
            if !x.is_positive() || x >= &BigRational::from_integer(1.into()) {
                return Err(Error::precondition(format!(
                    "x/pi = {x} lies outside (0, 1)"
                )));
            }
            let p = ctx.working_bits();
            let xr = &Real::from_rational(x, p) * &Real::pi(p);
            verify_log_sinc(&xr, k, ctx)
        }
        ComplexMixed => {
            verify_complex_mixed(&need_order()?.as_s(ctx.working_bits()), x, n, k, ctx, exec)
        }
        ComplexPair => {
            verify_complex_pair(&need_order()?.as_s(ctx.working_bits()), x, n, k, ctx, exec)
        }
        ComplexClosedTwoThirds | ComplexClosedHalf | ComplexClosedThird => {
            let s = need_order()?.as_s(ctx.working_bits());
            verify_complex_closed(case.id.closed_angle().expect("closed"), &s, k, ctx)
        }
    }
}

/// Evaluates every case; results keep the input order.
pub fn verify_batch(
    cases: &[IdentityCase],
    ctx: &PrecisionContext,
    exec: Execution,
) -> Vec<Result<Residual>> {
    exec.map(cases, |c| verify_case(c, ctx, exec))
}
