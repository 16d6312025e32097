use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::bernoulli::{bernoulli_number, bernoulli_polynomial};
use crate::error::{Error, Result};
use crate::numeric::rational::{factorial, int, ratio, BigRational};
use crate::numeric::{PrecisionContext, Real};

/// `zeta(2n) = coefficient * pi^(2n)` with the coefficient exact.
#[derive(Clone, Debug)]
pub struct ZetaEvenValue {
    pub n: u32,
    pub coefficient: BigRational,
    pub value: Real,
}

fn coefficient_table() -> &'static RwLock<Vec<BigRational>> {
    static TABLE: OnceLock<RwLock<Vec<BigRational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![ratio(-1, 2)]))
}

/// The rational `q_n` with `zeta(2n) = q_n pi^(2n)`; `q_0 = -1/2` is `zeta(0)`.
pub fn zeta_even_coefficient(n: u32) -> BigRational {
    if let Some(q) = coefficient_table()
        .read()
        .expect("zeta table poisoned")
        .get(n as usize)
    {
        return q.clone();
    }
    let mut table = coefficient_table().write().expect("zeta table poisoned");
    while table.len() <= n as usize {
        let k = table.len() as u32;
        let b = bernoulli_number(2 * k as usize);
        let sign = if k % 2 == 1 { 1 } else { -1 };
        let pow2 = BigInt::one() << (2 * k - 1) as usize;
        let q = b * BigRational::from_integer(pow2 * sign)
            / BigRational::from_integer(factorial(2 * k as u64));
        table.push(q);
    }
    table[n as usize].clone()
}

pub fn zeta_even(n: u32, ctx: &PrecisionContext) -> Result<ZetaEvenValue> {
    if n == 0 {
        return Err(Error::precondition("zeta_even needs n >= 1"));
    }
    let p = ctx.working_bits();
    let coefficient = zeta_even_coefficient(n);
    let value = &Real::from_rational(&coefficient, p) * &Real::pi(p).powi(2 * n);
    Ok(ZetaEvenValue {
        n,
        coefficient,
        value,
    })
}

/// Upper bound on `zeta(2k)` for `k >= 1` at 64 bits:
/// `min(zeta(2), 1 + 2^-2k + 2^(1-2k)/(2k-1))`.
pub fn zeta_even_upper(k: u32) -> Real {
    assert!(k >= 1, "zeta(0) is negative");
    let p = 64;
    let zeta2_upper = Real::from_rational(&ratio(1645, 1000), p);
    let one = Real::one(p);
    let two_k = 2 * k as i64;
    let integral = one.ldexp(1 - two_k).div_int(two_k - 1);
    let b = &(&one + &one.ldexp(-two_k)) + &integral;
    if b < zeta2_upper {
        &b + &b.ldexp(-50)
    } else {
        zeta2_upper
    }
}

/// Exact `zeta(-n) = -B_{n+1}(1) / (n+1)`.
pub fn zeta_nonpositive(n: u32) -> BigRational {
    -bernoulli_polynomial(n as usize + 1, &int(1)) / int(n as i64 + 1)
}

/// `zeta(1 - 2k) = -B_{2k} / (2k)` for `k >= 1`.
pub fn zeta_negative_odd(k: u32) -> BigRational {
    -bernoulli_number(2 * k as usize) / int(2 * k as i64)
}
