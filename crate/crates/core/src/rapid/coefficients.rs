//! Exact coefficients of the series families.
//!
//! Every family evaluates
//!
//! ```text
//! zeta(2r+1) = log term + sum_{j=1}^{r-1} c_j pi^(2j) zeta(2r+1-2j)
//!            + tail_scale pi^(2r) sum_{k>=0} kernel(k) zeta(2k) / m^(2k)
//! ```
//!
//! where the log term is `log_coeff pi^2 ln(base)` for `r = 1` and
//! `log_coeff pi^2 zeta(2r-1)` for `r >= 2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::family::SeriesFamily;
use crate::error::{Error, Result};
use crate::numeric::rational::{factorial, int, pow, pow_i, ratio, BigRational};
use crate::reference::zeta_even_coefficient;

/// The `k`-dependent rational factor of the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kernel {
    /// `(2k)! / (2r+2k)!`.
    Ck { r: u32 },
    /// `(2k)! (4r+2k-1) / (2r+2k)!`.
    Modular { r: u32 },
}

impl Kernel {
    pub fn at(&self, k: u32) -> BigRational {
        let (r, numer) = match *self {
            Kernel::Ck { r } => (r, BigInt::one()),
            Kernel::Modular { r } => (r, BigInt::from(4 * r + 2 * k - 1)),
        };
        let mut denom = BigInt::one();
        for i in 1..=2 * r {
            denom *= 2 * k + i;
        }
        BigRational::new(numer, denom)
    }

    /// Exponent `p` of the polynomial decay `k^-p` of the kernel.
    pub fn decay_exponent(&self) -> u32 {
        match *self {
            Kernel::Ck { r } => 2 * r,
            Kernel::Modular { r } => 2 * r - 1,
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            Kernel::Ck { r } => format!("(2k)!/(2k+{})!", 2 * r),
            Kernel::Modular { r } => format!("(2k)!(2k+{})/(2k+{})!", 4 * r - 1, 2 * r),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceCoefficients {
    pub family: SeriesFamily,
    pub r: u32,
    /// `lead_zeta_coeffs[j-1]` multiplies `pi^(2j) zeta(2r+1-2j)`, `1 <= j < r`.
    pub lead_zeta_coeffs: Vec<BigRational>,
    pub log_coeff: BigRational,
    /// Base of the logarithm in the `r = 1` log term.
    pub log_base: Option<u32>,
    pub tail_scale: BigRational,
    pub kernel: Kernel,
}

impl RecurrenceCoefficients {
    pub fn m(&self) -> u32 {
        self.family.m()
    }

    /// Total coefficient of `pi^(2j) zeta(2r+1-2j)` with the log term folded in.
    pub fn collected(&self, j: u32) -> BigRational {
        let mut c = self.lead_zeta_coeffs[j as usize - 1].clone();
        if j == 1 && self.r >= 2 {
            c += &self.log_coeff;
        }
        c
    }

    pub fn collected_all(&self) -> Vec<BigRational> {
        (1..self.r).map(|j| self.collected(j)).collect()
    }

    /// Rational part of tail term `k`; the term is this times `pi^(2r+2k)`.
    pub fn term_coefficient(&self, k: u32) -> BigRational {
        let m2k = pow_i(self.m() as i64, 2 * k);
        &self.tail_scale * self.kernel.at(k) * zeta_even_coefficient(k)
            / BigRational::from_integer(m2k)
    }
}

/// Coefficients for `zeta(2r+1)` from Theorems 4.4-4.6 style recurrences
/// with modulus `m`, `r >= 2`.
pub fn recurrence_coefficients(r: u32, m: u32) -> Result<RecurrenceCoefficients> {
    if r < 2 {
        return Err(Error::precondition(format!(
            "the modular recurrences need r >= 2 (got r = {r}); use the zeta(3) series for r = 1"
        )));
    }
    family_coefficients(SeriesFamily::from_modulus(m)?, r)
}

/// Coefficients for any family and order it supports.
pub fn family_coefficients(family: SeriesFamily, r: u32) -> Result<RecurrenceCoefficients> {
    if r == 0 {
        return Err(Error::precondition("order r must be at least 1"));
    }
    if let Some(max) = family.max_order() {
        if r > max {
            return Err(Error::precondition(format!(
                "the {family} series only covers zeta(3), got r = {r}"
            )));
        }
    }
    Ok(match family {
        SeriesFamily::Ewell => ewell(),
        SeriesFamily::Ck => ck(r),
        _ => modular(family, r),
    })
}

fn ewell() -> RecurrenceCoefficients {
    RecurrenceCoefficients {
        family: SeriesFamily::Ewell,
        r: 1,
        lead_zeta_coeffs: Vec::new(),
        log_coeff: BigRational::zero(),
        log_base: None,
        tail_scale: ratio(-4, 7),
        kernel: Kernel::Ck { r: 1 },
    }
}

fn sign(even: bool) -> BigRational {
    if even {
        int(1)
    } else {
        int(-1)
    }
}

fn ck(r: u32) -> RecurrenceCoefficients {
    let two_2r = pow_i(2, 2 * r);
    let prefactor = BigRational::new(two_2r.clone(), BigInt::from(r) * (two_2r * 2 - 1));
    let lead = (1..r)
        .map(|j| {
            &prefactor * sign(j % 2 == 1) * int((r - j) as i64)
                / BigRational::from_integer(factorial(2 * j as u64))
        })
        .collect();
    RecurrenceCoefficients {
        family: SeriesFamily::Ck,
        r,
        lead_zeta_coeffs: lead,
        log_coeff: BigRational::zero(),
        log_base: None,
        tail_scale: &prefactor * sign(r.is_multiple_of(2)),
        kernel: Kernel::Ck { r },
    }
}

fn modular(family: SeriesFamily, r: u32) -> RecurrenceCoefficients {
    let ri = r as i64;
    let rr = int(ri * (2 * ri - 1));
    let p = |b: i64, e: u32| BigRational::from_integer(pow_i(b, e));
    // (denominator, numerator of P, ratio whose powers enter the lead terms, log numerator)
    let (den, p_num, step, log_num) = match family {
        SeriesFamily::M3 => (
            &rr * (p(3, 2 * r + 1) - int(1)),
            p(3, 2 * r) * int(2),
            ratio(2, 3),
            -(p(3, 2 * r - 2) - int(1)) * int(2),
        ),
        SeriesFamily::M4 => (
            &rr * (p(2, 4 * r + 1) + p(2, 2 * r) - int(1)),
            p(2, 4 * r + 1),
            ratio(1, 2),
            -(p(2, 2 * r - 1) - int(2)),
        ),
        SeriesFamily::M6 => (
            &rr * (p(3, 2 * r) * (p(2, 2 * r) + int(1)) + p(2, 2 * r) - int(1)),
            p(6, 2 * r) * int(2),
            ratio(1, 3),
            (p(6, 2 * r - 2) - p(3, 2 * r - 2) - p(2, 2 * r - 2) + int(1)) * int(2),
        ),
        _ => unreachable!("modular families only"),
    };
    let prefactor = &p_num / &den;
    let lead = (1..r)
        .map(|j| {
            let poly = int((ri - j as i64) * (2 * ri + 2 * j as i64 - 1));
            &prefactor * sign(j % 2 == 1) * poly * pow(&step, 2 * j)
                / BigRational::from_integer(factorial(2 * j as u64))
        })
        .collect();
    let (log_coeff, log_base) = if r == 1 {
        match family {
            SeriesFamily::M3 => (ratio(-1, 13), Some(3)),
            SeriesFamily::M4 => (ratio(-2, 35), Some(2)),
            _ => (BigRational::zero(), None),
        }
    } else {
        (&log_num / &den, None)
    };
    RecurrenceCoefficients {
        family,
        r,
        lead_zeta_coeffs: lead,
        log_coeff,
        log_base,
        tail_scale: &prefactor * sign(r.is_multiple_of(2)) * pow(&step, 2 * r),
        kernel: Kernel::Modular { r },
    }
}
