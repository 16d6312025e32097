use num_bigint::BigInt;
use num_traits::{One, Zero};
use oddzeta::bernoulli::bernoulli_number;
use oddzeta::numeric::rational::{int, parse_rational, ratio, BigRational};
use oddzeta::numeric::{Complex, PrecisionContext, Real};
use oddzeta::reference::{
    gamma_fn, trig_dirichlet, zeta_even, zeta_int, zeta_nonpositive, zeta_oracle, zeta_oracle_with,
    Angle, OracleOptions, TrigKind, TrigSumSpec,
};
use oddzeta::{Error, Execution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Odd zeta values to 74 digits from an independent mpmath run.
const FROZEN: [(i64, &str); 10] = [
    (
        3,
        "1.20205690315959428539973816151144999076498629234049888179227155534183820579",
    ),
    (
        5,
        "1.03692775514336992633136548645703416805708091950191281197419267790380358979",
    ),
    (
        7,
        "1.00834927738192282683979754984979675959986356056523870641728313657160147832",
    ),
    (
        9,
        "1.00200839282608221441785276923241206048560585139488875654859661590978505339",
    ),
    (
        11,
        "1.00049418860411946455870228252646993646860643575820861711914143610005405980",
    ),
    (
        13,
        "1.00012271334757848914675183652635739571427510589550984513670267162089672683",
    ),
    (
        15,
        "1.00003058823630702049355172851064506258762794870685817750656993289333226716",
    ),
    (
        17,
        "1.00000763719763789976227360029356302921308824909026267909537984397293564329",
    ),
    (
        19,
        "1.00000190821271655393892565695779510135325857114483863023593304676182394971",
    ),
    (
        21,
        "1.00000047693298678780646311671960437304596644669478493760020748737659683909",
    ),
];

fn frozen(n: i64, p: usize) -> Real {
    let text = FROZEN
        .iter()
        .find(|(k, _)| *k == n)
        .expect("frozen value")
        .1;
    Real::from_rational(&parse_rational(text).unwrap(), p)
}

fn close(a: &Real, b: &Real, digits: i32) -> bool {
    let d = (a - b).abs();
    d.is_zero() || d.log10_abs() < -(digits as f64)
}

#[test]
fn odd_values_match_frozen_reference() {
    let ctx = PrecisionContext::new(72).unwrap();
    for (n, _) in FROZEN {
        let z = zeta_int(n, &ctx).unwrap();
        assert!(
            close(&z, &frozen(n, ctx.working_bits()), 72),
            "zeta({n}) = {}",
            z.to_sci_string(75)
        );
    }
}

/// `sum_{n<=N} n^-3` plus the Euler-Maclaurin tail
/// `1/(2N^2) - 1/(2N^3) + sum_j (2j+1) B_2j / (2 N^(2j+2))`, all exact.
fn zeta3_plain(n: u64, terms: usize) -> BigRational {
    let mut s = BigRational::zero();
    for k in 1..=n {
        s += BigRational::new(BigInt::one(), BigInt::from(k).pow(3));
    }
    let nn = BigInt::from(n);
    s += BigRational::new(BigInt::one(), nn.pow(2) * 2);
    s -= BigRational::new(BigInt::one(), nn.pow(3) * 2);
    for j in 1..=terms {
        let b = bernoulli_number(2 * j);
        s += b * int(2 * j as i64 + 1) / BigRational::from_integer(nn.pow(2 * j as u32 + 2) * 2);
    }
    s
}

#[test]
fn zeta3_plain_sum_cross_check() {
    let ctx = PrecisionContext::new(70).unwrap();
    let p = ctx.working_bits();
    let plain = Real::from_rational(&zeta3_plain(100, 30), p);
    assert!(close(&plain, &zeta_int(3, &ctx).unwrap(), 70));
    assert!(close(&plain, &frozen(3, p), 70));
}

#[test]
fn even_values_agree_with_bernoulli_closed_form() {
    let ctx = PrecisionContext::new(40).unwrap();
    for n in 1..=20u32 {
        let closed = zeta_even(n, &ctx).unwrap().value;
        let oracle = zeta_int(2 * n as i64, &ctx).unwrap();
        assert!(close(&closed, &oracle, 40), "zeta({})", 2 * n);
    }
    assert_eq!(zeta_even(1, &ctx).unwrap().coefficient, ratio(1, 6));
    assert_eq!(zeta_even(2, &ctx).unwrap().coefficient, ratio(1, 90));
    assert!(close(
        &zeta_even(60, &ctx).unwrap().value,
        &Real::one(64),
        30
    ));
}

#[test]
fn nonpositive_integers_through_reflection() {
    let ctx = PrecisionContext::new(40).unwrap();
    let p = ctx.working_bits();
    for n in 0..=15u32 {
        let exact = Real::from_rational(&zeta_nonpositive(n), p);
        let s = Complex::from_real(Real::from_i64(-(n as i64), p));
        let z = zeta_oracle(&s, &ctx).unwrap().re;
        assert!(close(&z, &exact, 38), "zeta(-{n})");
    }
    assert_eq!(zeta_nonpositive(0), ratio(-1, 2));
    assert_eq!(zeta_nonpositive(1), ratio(-1, 12));
    assert!(zeta_nonpositive(2).is_zero());
}

#[test]
fn trivial_zeros() {
    let ctx = PrecisionContext::new(40).unwrap();
    let p = ctx.working_bits();
    for k in 1..=10i64 {
        assert!(zeta_int(-2 * k, &ctx).unwrap().is_zero());
        // At -2k + 1e-30 i the general reflection path runs; the value is
        // about 1e-30 zeta'(-2k).
        let s = Complex::from_rationals(&int(-2 * k), &ratio(1, 10i64.pow(15)).pow(2), p);
        let z = zeta_oracle(&s, &ctx).unwrap();
        assert!(z.abs().log10_abs() < -25.0, "zeta(-{})", 2 * k);
    }
}

#[test]
fn simple_pole_residue() {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.working_bits();
    let opts = OracleOptions {
        allow_near_pole: true,
    };
    for eps in [ratio(1, 1_000_000), ratio(-1, 1_000_000)] {
        let s = Complex::from_rationals(&(int(1) + &eps), &int(0), p);
        let z = zeta_oracle_with(&s, &ctx, opts).unwrap().re;
        let residue = &z * &Real::from_rational(&eps, p);
        assert!((residue.to_f64() - 1.0).abs() < 2e-6);
        assert!(matches!(zeta_oracle(&s, &ctx), Err(Error::NearPole { .. })));
    }
}

#[test]
fn gamma_recurrence_at_random_points() {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.working_bits();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let re = ratio(rng.gen_range(501..10_000), 1000);
        let im = ratio(rng.gen_range(-5000..5000), 1000);
        let z = Complex::from_rationals(&re, &im, p);
        let g = gamma_fn(&z, &ctx).unwrap();
        let g1 = gamma_fn(&z.add_real(&Real::one(p)), &ctx).unwrap();
        let rel = (&(&g1 - &(&z * &g)).abs() / &g1.abs()).log10_abs();
        assert!(rel < -29.0, "z = {z}: {rel}");
    }
}

#[test]
fn gamma_special_values() {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.working_bits();
    let g = |q: BigRational| {
        gamma_fn(&Complex::from_rationals(&q, &int(0), p), &ctx)
            .unwrap()
            .re
    };
    assert!(close(&g(int(1)), &Real::one(p), 30));
    assert!(close(&g(int(6)), &Real::from_u64(120, p), 28));
    assert!(close(&g(ratio(1, 2)), &Real::pi(p).sqrt(), 30));
}

#[test]
fn cosine_sum_at_zero_is_the_partial_zeta_sum() {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.working_bits();
    let spec = TrigSumSpec {
        angle: Angle::PiMultiple(int(0)),
        s: Complex::from_real(Real::from_u64(2, p)),
        terms: 500,
        kind: TrigKind::Cos,
    };
    let v = trig_dirichlet(&spec, &ctx, Execution::default())
        .unwrap()
        .value
        .re;
    let mut exact = BigRational::zero();
    for n in 1..=500u64 {
        exact += BigRational::new(BigInt::one(), BigInt::from(n * n));
    }
    assert!(close(&v, &Real::from_rational(&exact, p), 30));
}

#[test]
fn alternating_cube_sum() {
    let ctx = PrecisionContext::new(30).unwrap();
    let p = ctx.working_bits();
    let spec = TrigSumSpec {
        angle: Angle::PiMultiple(int(1)),
        s: Complex::from_real(Real::from_u64(3, p)),
        terms: 10_000,
        kind: TrigKind::Cos,
    };
    let v = trig_dirichlet(&spec, &ctx, Execution::default())
        .unwrap()
        .value
        .re;
    let expect = &zeta_int(3, &ctx).unwrap() * &Real::from_rational(&ratio(-3, 4), p);
    assert!((&v - &expect).abs().to_f64() < 1e-7);
    let empty = TrigSumSpec {
        angle: Angle::PiMultiple(ratio(1, 3)),
        s: Complex::from_real(Real::from_u64(2, p)),
        terms: 0,
        kind: TrigKind::Sin,
    };
    assert!(trig_dirichlet(&empty, &ctx, Execution::default())
        .unwrap()
        .value
        .is_zero());
}
