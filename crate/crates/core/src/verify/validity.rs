use std::fmt;

use super::IdentityId;
use crate::numeric::rational::{format_rational, int, ratio, BigRational};

/// Allowed values of an identity's rational parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Interval {
        lo: BigRational,
        hi: BigRational,
        lo_open: bool,
        hi_open: bool,
    },
    Points(Vec<BigRational>),
}

impl Domain {
    fn closed(lo: BigRational, hi: BigRational) -> Domain {
        Domain::Interval {
            lo,
            hi,
            lo_open: false,
            hi_open: false,
        }
    }

    fn open(lo: BigRational, hi: BigRational) -> Domain {
        Domain::Interval {
            lo,
            hi,
            lo_open: true,
            hi_open: true,
        }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        match self {
            Domain::Interval {
                lo,
                hi,
                lo_open,
                hi_open,
            } => {
                let above = if *lo_open { x > lo } else { x >= lo };
                let below = if *hi_open { x < hi } else { x <= hi };
                above && below
            }
            Domain::Points(p) => p.contains(x),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Interval {
                lo,
                hi,
                lo_open,
                hi_open,
            } => write!(
                f,
                "{}{}, {}{}",
                if *lo_open { '(' } else { '[' },
                format_rational(lo),
                format_rational(hi),
                if *hi_open { ')' } else { ']' }
            ),
            Domain::Points(p) => {
                let items: Vec<String> = p.iter().map(format_rational).collect();
                write!(f, "{{{}}}", items.join(", "))
            }
        }
    }
}

/// Where an identity holds, in the terms the verifier accepts.
#[derive(Clone, Debug)]
pub struct ValidityRule {
    pub id: IdentityId,
    /// What the rational `x` of an [`IdentityCase`](super::IdentityCase) stands for.
    pub parameter: &'static str,
    pub domain: Domain,
    pub order: &'static str,
    pub notes: &'static str,
}

/// One rule per identity, in [`IdentityId::ALL`] order.
pub fn validity_table() -> Vec<ValidityRule> {
    use IdentityId::*;
    let two = || int(2);
    let sym = || Domain::closed(-two(), two());
    let angles = || Domain::Points(vec![ratio(2, 3), ratio(1, 2), ratio(1, 3)]);
    IdentityId::ALL
        .iter()
        .map(|&id| {
            let (parameter, domain, order, notes) = match id {
                LogCosine => (
                    "x/c",
                    Domain::Interval {
                        lo: int(0),
                        hi: two(),
                        lo_open: true,
                        hi_open: false,
                    },
                    "integer r >= 1",
                    "x = 0 is singular in ln(pi x / c)",
                ),
                LogSine => ("x/c", Domain::closed(int(0), two()), "integer r >= 1", ""),
                MixedOrder => ("x/c", sym(), "integer r >= 1", "|x| = 2c converges slowly"),
                CosinePair => ("x/c", sym(), "integer r >= 1", "r = 1 excludes |x| = 2c"),
                Zeta3Fourier => ("x/c", Domain::open(int(0), two()), "none", ""),
                Zeta3Series => ("2/m", angles(), "none", "m in {3, 4, 6}"),
                ClosedTwoThirds | ClosedHalf | ClosedThird => (
                    "x/c",
                    Domain::Points(vec![id.closed_angle().expect("closed").x()]),
                    "complex s, Re(s) > 1",
                    "",
                ),
                TripleCosine => (
                    "w t / pi",
                    Domain::open(ratio(-1, 3), ratio(1, 3)),
                    "none",
                    "non-analytic at w t = +-pi/3",
                ),
                SawtoothSine | SawtoothCosine => (
                    "x/(2c)",
                    Domain::open(int(0), int(1)),
                    "none",
                    "order-one series; 1/N convergence",
                ),
                LogSinc => ("x/pi", Domain::open(int(0), int(1)), "none", ""),
                ComplexMixed => (
                    "x/c",
                    sym(),
                    "complex s, Re(s) > 1",
                    "|x| = 2c is informational only",
                ),
                ComplexPair => (
                    "x/c",
                    sym(),
                    "complex s, Re(s) > 2",
                    "|x| = 2c is informational only",
                ),
                ComplexClosedTwoThirds | ComplexClosedHalf | ComplexClosedThird => (
                    "x/c",
                    Domain::Points(vec![id.closed_angle().expect("closed").x()]),
                    "complex s, s not in {0, 2}",
                    "",
                ),
            };
            ValidityRule {
                id,
                parameter,
                domain,
                order,
                notes,
            }
        })
        .collect()
}
