//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use oddzeta::bernoulli::{bernoulli_number, harmonic, BernoulliCache, HarmonicTable};
use oddzeta::numeric::rational::{int, parse_rational, ratio, BigRational};
use oddzeta::numeric::{Agreement, Complex, PrecisionContext, Real};
use oddzeta::rapid::{
    bench_table, convergence_trace, ewell_zeta3, family_coefficients, recurrence_coefficients,
    tail_bound, truncated_series, zeta3_family, zeta_odd_ladder, SeriesFamily,
};
use oddzeta::reference::{
    zeta_int, zeta_nonpositive, zeta_oracle, zeta_oracle_with, OracleOptions,
};
use oddzeta::verify::{verify_batch, verify_case, IdentityCase, IdentityId, Order, Residual};
use oddzeta::Execution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

/// `zeta(3)` to 74 digits from an independent mpmath run.
const ZETA3: &str = "1.20205690315959428539973816151144999076498629234049888179227155534183820579";

fn ctx(digits: u32) -> PrecisionContext {
    PrecisionContext::new(digits).expect("valid context")
}

fn oracle(n: i64, c: &PrecisionContext) -> Real {
    zeta_int(n, &c.raised(64)).expect("oracle")
}

/// `sum_{n<=N} n^-3` plus its Euler-Maclaurin tail, exactly.
fn zeta3_plain(n: u64, terms: usize) -> BigRational {
    let mut s = BigRational::zero();
    for k in 1..=n {
        s += BigRational::new(BigInt::one(), BigInt::from(k).pow(3));
    }
    let nn = BigInt::from(n);
    s += BigRational::new(BigInt::one(), nn.pow(2) * 2);
    s -= BigRational::new(BigInt::one(), nn.pow(3) * 2);
    for j in 1..=terms {
        s += bernoulli_number(2 * j) * int(2 * j as i64 + 1)
            / BigRational::from_integer(nn.pow(2 * j as u32 + 2) * 2);
    }
    s
}

fn zeta3_series() -> Outcome {
    let start = Instant::now();
    let c = ctx(50);
    let p = c.working_bits();
    let z3 = oracle(3, &c);
    let frozen = Real::from_rational(&parse_rational(ZETA3).unwrap(), p);
    let plain = Real::from_rational(&zeta3_plain(100, 30), p);
    ensure!(
        z3.agreeing_digits(&frozen, 60) >= 60,
        "oracle disagrees with the frozen value"
    );
    ensure!(
        z3.agreeing_digits(&plain, 60) >= 60,
        "oracle disagrees with the plain sum"
    );
    let mut parts = Vec::new();
    for (m, cap) in [(3, 60), (4, 45), (6, 35)] {
        let rep = zeta3_family(m, &c).map_err(|e| e.to_string())?;
        let digits = rep.value.agreeing_digits(&z3, 50);
        ensure!(
            rep.terms_used <= cap,
            "m={m}: {} terms > {cap}",
            rep.terms_used
        );
        ensure!(digits >= 50, "m={m}: {digits} digits");
        parts.push(format!("m{m} {} terms", rep.terms_used));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!("{}; 50 digits each", parts.join(", ")))
}

fn ewell() -> Outcome {
    let c = ctx(50);
    let rep = ewell_zeta3(&c).map_err(|e| e.to_string())?;
    ensure!(rep.terms_used <= 90, "{} terms", rep.terms_used);
    ensure!(
        rep.value.agreeing_digits(&oracle(3, &c), 50) >= 50,
        "fewer than 50 digits"
    );
    let e = family_coefficients(SeriesFamily::Ewell, 1).unwrap();
    let ck = family_coefficients(SeriesFamily::Ck, 1).unwrap();
    ensure!(
        e.tail_scale == ck.tail_scale && e.kernel == ck.kernel,
        "prefactor or kernel differs"
    );
    ensure!(
        (0..200).all(|k| e.term_coefficient(k) == ck.term_coefficient(k)),
        "term coefficients differ"
    );
    Ok(format!(
        "{} terms; CK r=1 coefficients identical for k < 200",
        rep.terms_used
    ))
}

fn coefficients() -> Outcome {
    let expect: [(u32, u32, Vec<BigRational>); 5] = [
        (2, 3, vec![ratio(41, 363), ratio(8, 363)]),
        (
            3,
            3,
            vec![ratio(2188, 16395), ratio(-18, 5465), ratio(-64, 16395)],
        ),
        (2, 4, vec![ratio(157, 1581), ratio(16, 1581)]),
        (2, 6, vec![ratio(8, 87), ratio(1, 261)]),
        (
            3,
            6,
            vec![ratio(3124, 29655), ratio(-2, 3295), ratio(-16, 88965)],
        ),
    ];
    for (r, m, want) in expect {
        let c = recurrence_coefficients(r, m).map_err(|e| e.to_string())?;
        let mut got = c.collected_all();
        got.push(c.tail_scale.clone());
        ensure!(got == want, "r={r} m={m}: {got:?}");
    }
    Ok("five specializations exact".into())
}

fn ladders() -> Outcome {
    let c = ctx(50);
    let mut values = Vec::new();
    for f in [SeriesFamily::M3, SeriesFamily::M4, SeriesFamily::M6] {
        let l = zeta_odd_ladder(3, f, &c).map_err(|e| e.to_string())?;
        for rep in &l[1..] {
            let o = oracle(2 * rep.r as i64 + 1, &c);
            ensure!(
                rep.certified_digits >= 40,
                "{f} zeta({}): {} certified",
                2 * rep.r + 1,
                rep.certified_digits
            );
            ensure!(
                rep.value.agreeing_digits(&o, 50) >= 40,
                "{f} zeta({}) vs oracle",
                2 * rep.r + 1
            );
        }
        values.push((f, l[1].value.clone(), l[2].value.clone()));
    }
    for (f, z5, z7) in &values {
        for (g, w5, w7) in &values {
            ensure!(
                z5.agreeing_digits(w5, 50) >= 40 && z7.agreeing_digits(w7, 50) >= 40,
                "{f} vs {g}"
            );
        }
    }
    let m6 = zeta_odd_ladder(10, SeriesFamily::M6, &c).map_err(|e| e.to_string())?;
    let mut worst = u32::MAX;
    for rep in &m6 {
        let d = rep
            .value
            .agreeing_digits(&oracle(2 * rep.r as i64 + 1, &c), 50);
        ensure!(
            d >= 40 && rep.certified_digits >= 40,
            "M6 zeta({}): {d} digits",
            2 * rep.r + 1
        );
        worst = worst.min(d);
    }
    Ok(format!(
        "zeta(5), zeta(7) agree pairwise; M6 ladder to zeta(21), worst {worst} digits"
    ))
}

fn order_estimate() -> Outcome {
    let c = ctx(20);
    let mut worst: f64 = 0.0;
    for f in SeriesFamily::ALL {
        let t = convergence_trace(f, 1, 20..=40, &c).map_err(|e| e.to_string())?;
        let err = t.relative_error();
        ensure!(err < 0.05, "{f}: fitted ratio off by {:.2}%", 100.0 * err);
        worst = worst.max(err);
    }
    let fams = [
        SeriesFamily::Ewell,
        SeriesFamily::M3,
        SeriesFamily::M4,
        SeriesFamily::M6,
    ];
    let rows = bench_table(&fams, 1, 50, Execution::default()).map_err(|e| e.to_string())?;
    let terms: Vec<u64> = rows.iter().map(|r| r.terms_used).collect();
    ensure!(
        terms.windows(2).all(|w| w[0] > w[1]),
        "terms not strictly decreasing: {terms:?}"
    );
    Ok(format!(
        "worst ratio deviation {:.2}%; terms {terms:?}",
        100.0 * worst
    ))
}

fn case(id: IdentityId, order: Option<Order>, x: BigRational, n: u64, k: u32) -> IdentityCase {
    IdentityCase {
        id,
        order,
        x,
        n_terms: n,
        k_terms: k,
    }
}

fn check(res: &oddzeta::Result<Residual>, cap: Option<f64>) -> Result<(), String> {
    let r = res.as_ref().map_err(|e| e.to_string())?;
    ensure!(r.gating, "{} is not gating", r.id);
    ensure!(
        r.passes(),
        "{}: {} > {}",
        r.id,
        r.abs_residual,
        r.expected_bound
    );
    if let Some(cap) = cap {
        ensure!(
            r.abs_residual.to_f64() <= cap,
            "{}: {} above {cap:e}",
            r.id,
            r.abs_residual
        );
    }
    Ok(())
}

fn identity_suite() -> Outcome {
    use IdentityId::*;
    let start = Instant::now();
    let c = ctx(30);
    let xs = [ratio(1, 3), ratio(1, 2), ratio(2, 3), int(1)];
    let mut cases = Vec::new();
    for r in 1..=3 {
        for x in &xs {
            cases.push((
                case(LogCosine, Some(Order::R(r)), x.clone(), 10_000, 60),
                None,
            ));
            cases.push((
                case(LogSine, Some(Order::R(r)), x.clone(), 10_000, 60),
                None,
            ));
        }
    }
    for r in 1..=3 {
        for x in [ratio(-1, 2), int(0), ratio(1, 2), int(1), ratio(3, 2)] {
            cases.push((case(MixedOrder, Some(Order::R(r)), x, 10_000, 60), None));
        }
    }
    for r in 2..=3 {
        for x in &xs {
            cases.push((
                case(CosinePair, Some(Order::R(r)), x.clone(), 10_000, 60),
                Some(1e-6),
            ));
        }
    }
    for x in &xs {
        cases.push((case(Zeta3Fourier, None, x.clone(), 10_000, 60), Some(1e-6)));
    }
    for s in 2..=4 {
        for id in [ClosedTwoThirds, ClosedHalf, ClosedThird] {
            let cap = if s == 2 { 1e-4 } else { 1e-6 };
            cases.push((case(id, Some(Order::R(s)), int(0), 10_000, 1), Some(cap)));
        }
    }
    for x in [int(0), ratio(1, 6), ratio(1, 4)] {
        cases.push((case(TripleCosine, None, x, 10_000, 1), Some(1e-4)));
    }
    for x in [ratio(1, 4), ratio(1, 6), ratio(1, 3)] {
        cases.push((case(SawtoothSine, None, x.clone(), 100_000, 1), Some(1e-3)));
        cases.push((case(SawtoothCosine, None, x, 100_000, 1), Some(1e-3)));
    }
    let (batch, caps): (Vec<_>, Vec<_>) = cases.into_iter().unzip();
    let results = verify_batch(&batch, &c, Execution::default());
    for (res, cap) in results.iter().zip(caps) {
        check(res, cap)?;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!(
        "{} cases in {:.1} s",
        results.len(),
        elapsed.as_secs_f64()
    ))
}

fn continuation() -> Outcome {
    let c = ctx(40);
    let p = c.working_bits();
    ensure!(zeta_nonpositive(0) == ratio(-1, 2), "zeta(0)");
    ensure!(zeta_nonpositive(1) == ratio(-1, 12), "zeta(-1)");
    for k in 1..=10u32 {
        ensure!(zeta_nonpositive(2 * k).is_zero(), "zeta(-{})", 2 * k);
    }
    for n in 0..=20u32 {
        let exact = Real::from_rational(&zeta_nonpositive(n), p);
        let z = zeta_oracle(&Complex::from_real(Real::from_i64(-(n as i64), p)), &c)
            .map_err(|e| e.to_string())?;
        let d = (&z.re - &exact).abs();
        ensure!(d.is_zero() || d.log10_abs() < -38.0, "oracle at -{n}");
    }
    let opts = OracleOptions {
        allow_near_pole: true,
    };
    for eps in [ratio(1, 1_000_000), ratio(-1, 1_000_000)] {
        let s = Complex::from_rationals(&(int(1) + &eps), &int(0), p);
        let z = zeta_oracle_with(&s, &c, opts)
            .map_err(|e| e.to_string())?
            .re;
        let residue = (&z * &Real::from_rational(&eps, p)).to_f64();
        ensure!(
            (residue - 1.0).abs() <= 2e-6,
            "(s-1) zeta(s) = {residue} at eps = {eps}"
        );
    }
    Ok("zeta(0), zeta(-1), trivial zeros exact; reflection agrees to 38 digits; residue within 2e-6".into())
}

fn complex_s() -> Outcome {
    use IdentityId::*;
    let c50 = ctx(50);
    let p50 = c50.working_bits();
    let s4 = Order::S(Complex::from_real(Real::from_u64(4, p50)));
    let mut worst = Real::zero(64);
    for id in [
        ComplexClosedTwoThirds,
        ComplexClosedHalf,
        ComplexClosedThird,
    ] {
        let res = verify_case(
            &case(id, Some(s4.clone()), int(0), 1, 60),
            &c50,
            Execution::default(),
        );
        check(&res, Some(1e-30))?;
        worst = worst.max(&res.unwrap().abs_residual);
    }
    let c = PrecisionContext::with_working_bits(256).map_err(|e| e.to_string())?;
    let p = c.working_bits();
    let s = Order::S(Complex::from_rationals(&ratio(5, 2), &ratio(3, 2), p));
    let at = |k| {
        verify_case(
            &case(ComplexClosedHalf, Some(s.clone()), int(0), 100_000, k),
            &c,
            Execution::default(),
        )
    };
    let (k60, k80) = (at(60), at(80));
    check(&k60, Some(1e-20))?;
    check(&k80, None)?;
    let (a, b) = (k60.unwrap().abs_residual, k80.unwrap().abs_residual);
    ensure!(
        b < a,
        "residual did not shrink from K=60 to K=80: {a} -> {b}"
    );
    let fourier = verify_case(
        &case(ComplexPair, Some(s), ratio(1, 2), 100_000, 60),
        &c,
        Execution::default(),
    );
    check(&fourier, None)?;
    Ok(format!(
        "s=4 worst {}; s=2.5+1.5i K=60 {} -> K=80 {}; Fourier form at N=1e5 within budget",
        worst.to_sci_string(3),
        a.to_sci_string(3),
        b.to_sci_string(3)
    ))
}

fn properties() -> Outcome {
    let cache = BernoulliCache::with_high_water(200);
    for n in 1..=200 {
        ensure!(
            cache.recurrence_residual(n).unwrap().is_zero(),
            "recurrence at {n}"
        );
    }
    let prime = |q: u64| {
        q >= 2
            && (2..)
                .take_while(|d| d * d <= q)
                .all(|d| !q.is_multiple_of(d))
    };
    for k in 1..=30u64 {
        let expect: u64 = (2..=2 * k + 1)
            .filter(|&q| prime(q) && (2 * k) % (q - 1) == 0)
            .product();
        ensure!(
            bernoulli_number(2 * k as usize).denom() == &BigInt::from(expect),
            "denominator of B_{}",
            2 * k
        );
    }
    let mut table = HarmonicTable::new();
    table.extend_to(1000);
    let h = table.entries();
    for m in 1..=1000 {
        ensure!(&h[m] - &h[m - 1] == ratio(1, m as i64), "H_{m}");
    }
    ensure!(harmonic(1000) == h[1000], "harmonic(1000)");
    let c = ctx(80);
    let reference = ctx(160);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..50 {
        let family = SeriesFamily::ALL[rng.gen_range(0..SeriesFamily::ALL.len())];
        let r = if family == SeriesFamily::Ewell {
            1
        } else {
            rng.gen_range(1..=4)
        };
        let k_start = rng.gen_range(1..=40);
        let lower: Vec<Real> = (1..r)
            .map(|j| zeta_int(2 * j as i64 + 1, &reference).unwrap())
            .collect();
        let (partial, bound) =
            truncated_series(family, r, &lower, k_start, &c).map_err(|e| e.to_string())?;
        let truth = zeta_int(2 * r as i64 + 1, &reference).unwrap();
        ensure!(
            (&truth - &partial).abs() <= bound,
            "{family} r={r} k={k_start}"
        );
        ensure!(
            bound == tail_bound(family, r, k_start, &c).unwrap(),
            "{family} bound mismatch"
        );
    }
    Ok("Bernoulli to 200, von Staudt-Clausen to 60, harmonic to 1000, 50 tail-bound cases".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("zeta(3) modular series", zeta3_series),
        ("Ewell and CK r=1", ewell),
        ("coefficient fidelity", coefficients),
        ("ladder consistency", ladders),
        ("order estimate and bench ordering", order_estimate),
        ("identity residual suite", identity_suite),
        ("analytic continuation values", continuation),
        ("complex-s generalizations", complex_s),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2} s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail} ({secs:.2} s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
