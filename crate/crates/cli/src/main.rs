mod cli;
mod report;

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use oddzeta::bernoulli::{install, BernoulliCache};
use oddzeta::numeric::rational::{parse_rational, BigRational};
use oddzeta::numeric::{Complex, PrecisionContext, Real};
use oddzeta::rapid::{bench_table, check_ordering, convergence_trace, zeta_odd_ladder};
use oddzeta::verify::{validity_table, verify_batch, IdentityCase, IdentityId, Order, OrderKind};
use oddzeta::{Error, Execution};
use serde_json::{json, Value};

use cli::{BenchArgs, CacheArgs, Cli, Command, ComputeArgs, Format, Target, VerifyArgs};

const EXIT_VERIFY: u8 = 1;
const EXIT_SHORTFALL: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_PRECONDITION: u8 = 65;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Lib(e) => match e {
                Error::Config(_) => EXIT_USAGE,
                Error::Precondition(_)
                | Error::Pole
                | Error::NearPole { .. }
                | Error::PoleCollision(_)
                | Error::GammaPole(_) => EXIT_PRECONDITION,
                Error::PrecisionShortfall(_) => EXIT_SHORTFALL,
                _ => EXIT_VERIFY,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "{msg}"),
            Failure::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// How a run ended once its report was written.
enum Status {
    Pass,
    VerifyFailed,
    Shortfall,
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(&cli, &argv[1..]) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::VerifyFailed) => ExitCode::from(EXIT_VERIFY),
        Ok(Status::Shortfall) => ExitCode::from(EXIT_SHORTFALL),
        Err(f) => {
            eprintln!("error: {f}");
            if matches!(f, Failure::Usage(_)) {
                eprintln!("\nFor more information, try '--help'.");
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli, argv: &[String]) -> Result<Status, Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match &cli.command {
        Command::Cache(args) => cache(cli, args, argv),
        command => {
            if let Some(path) = cli.cache_path.as_deref().filter(|p| p.exists()) {
                install(BernoulliCache::load(path)?);
            }
            match command {
                Command::Compute(args) => compute(cli, args, argv),
                Command::Verify(args) => verify(cli, args, argv, exec),
                Command::Bench(args) => bench(cli, args, argv, exec),
                Command::Table => table(cli, argv),
                Command::Cache(_) => unreachable!("handled above"),
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Lib(e.into())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_only(cli: &Cli, verb: &str) -> Result<(), Failure> {
    if cli.output == Format::Csv {
        return Err(usage(format!(
            "{verb} has no CSV output; use --output json"
        )));
    }
    Ok(())
}

fn context(digits: u32) -> Result<PrecisionContext, Failure> {
    PrecisionContext::new(digits).map_err(|e| usage(e.to_string()))
}

fn compute(cli: &Cli, args: &ComputeArgs, argv: &[String]) -> Result<Status, Failure> {
    json_only(cli, "compute")?;
    let r_max = match (args.target, args.r, args.rmax) {
        (Target::Zeta3, None, None) => 1,
        (Target::ZetaOdd, Some(r), None) => r,
        (Target::Ladder, None, Some(r)) => r,
        (Target::ZetaOdd, None, _) => {
            return Err(usage(
                "zeta-odd needs the order r, e.g. `compute zeta-odd 2`",
            ))
        }
        (Target::Ladder, _, None) => return Err(usage("ladder needs --rmax")),
        _ => {
            return Err(usage(
                "the order r applies to zeta-odd only and --rmax to ladder only",
            ))
        }
    };
    if r_max == 0 {
        return Err(usage("the order must be at least 1"));
    }
    let ctx = context(args.digits)?;
    let ladder = zeta_odd_ladder(r_max, args.family, &ctx)?;
    let shown: Vec<_> = match args.target {
        Target::Ladder => ladder.iter().collect(),
        _ => ladder.last().into_iter().collect(),
    };
    let short: Vec<u32> = shown
        .iter()
        .filter(|rep| rep.certified_digits < args.digits)
        .map(|rep| 2 * rep.r + 1)
        .collect();
    let results = shown.iter().map(|rep| report::eval(rep)).collect();
    emit(
        cli,
        &report::to_json(&report::report("compute", argv, results)),
    )?;
    if short.is_empty() {
        Ok(Status::Pass)
    } else {
        eprintln!(
            "precision shortfall: zeta at {short:?} certified below {} digits",
            args.digits
        );
        Ok(Status::Shortfall)
    }
}

/// Expands a selector such as `T3.5` to all of its forms.
fn identities(names: &[String]) -> Result<Vec<IdentityId>, Failure> {
    let mut out = Vec::new();
    for name in names {
        let group: Vec<IdentityId> = IdentityId::ALL
            .into_iter()
            .filter(|id| {
                let full = id.name();
                full.eq_ignore_ascii_case(name)
                    || full
                        .split_once('-')
                        .is_some_and(|(stem, _)| stem.eq_ignore_ascii_case(name))
            })
            .collect();
        if group.is_empty() {
            return Err(usage(name.parse::<IdentityId>().unwrap_err().to_string()));
        }
        for id in group {
            if !out.contains(&id) {
                out.push(id);
            }
        }
    }
    Ok(out)
}

fn rational(text: &str) -> Result<BigRational, Failure> {
    parse_rational(text).map_err(|e| usage(e.to_string()))
}

/// Parses `a`, `a+bi`, `a-bi` or `bi` with rational parts.
fn parse_complex(text: &str) -> Result<(BigRational, BigRational), Failure> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok((rational(&t)?, BigRational::default()));
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .last();
    let (re, im) = match split {
        Some((i, _)) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im.trim_start_matches('+') {
        "" => "1",
        "-" => "-1",
        other => other,
    };
    Ok((rational(re)?, rational(im)?))
}

fn verify(
    cli: &Cli,
    args: &VerifyArgs,
    argv: &[String],
    exec: Execution,
) -> Result<Status, Failure> {
    json_only(cli, "verify")?;
    let ctx = context(args.digits)?;
    let p = ctx.working_bits();
    let ids = identities(&args.identity)?;
    if args.all_m && !ids.contains(&IdentityId::Zeta3Series) {
        return Err(usage("--all-m applies to T4.3 only"));
    }
    let xs: Vec<BigRational> = args
        .x
        .iter()
        .map(|x| rational(x))
        .collect::<Result<_, _>>()?;
    let complex_orders: Vec<Order> = args
        .s
        .iter()
        .map(|s| parse_complex(s).map(|(re, im)| Order::S(Complex::from_rationals(&re, &im, p))))
        .collect::<Result<_, _>>()?;
    let mut cases = Vec::new();
    for id in ids {
        let orders: Vec<Option<Order>> = match id.order_kind() {
            None => vec![None],
            Some(OrderKind::R) if !args.r.is_empty() => {
                args.r.iter().map(|r| Some(Order::R(*r))).collect()
            }
            Some(OrderKind::S) if !complex_orders.is_empty() => {
                complex_orders.iter().cloned().map(Some).collect()
            }
            Some(OrderKind::S) if !args.r.is_empty() => args
                .r
                .iter()
                .map(|r| Some(Order::S(Complex::from_real(Real::from_u64(*r as u64, p)))))
                .collect(),
            Some(OrderKind::R) => return Err(usage(format!("{id} needs --r"))),
            Some(OrderKind::S) => return Err(usage(format!("{id} needs --s (or an integer --r)"))),
        };
        let points: Vec<BigRational> = if !id.uses_x() {
            vec![BigRational::default()]
        } else if id == IdentityId::Zeta3Series && args.all_m {
            [3, 4, 6]
                .iter()
                .map(|m| BigRational::new(2.into(), (*m).into()))
                .collect()
        } else if xs.is_empty() {
            return Err(usage(format!("{id} needs --x")));
        } else {
            xs.clone()
        };
        for order in &orders {
            for x in &points {
                cases.push(IdentityCase {
                    id,
                    order: order.clone(),
                    x: x.clone(),
                    n_terms: args.n,
                    k_terms: args.k,
                });
            }
        }
    }
    let mut residuals = Vec::with_capacity(cases.len());
    for res in verify_batch(&cases, &ctx, exec) {
        residuals.push(res?);
    }
    let tolerance = args.tolerance.map(|t| Real::from_f64(t, 64));
    let mut results = Vec::with_capacity(cases.len());
    let mut failed = 0;
    for (case, res) in cases.iter().zip(&residuals) {
        let within = tolerance.as_ref().is_none_or(|t| res.abs_residual <= *t);
        let passed = res.passes() && within;
        if !passed {
            failed += 1;
            eprintln!(
                "FAIL {} order {} x {}: residual {} exceeds {}",
                res.id,
                report::order(&case.order),
                case.x,
                report::real(&res.abs_residual, 6),
                report::real(&res.expected_bound, 6),
            );
        }
        results.push(report::residual(case, res, args.digits as usize, passed));
    }
    emit(
        cli,
        &report::to_json(&report::report("verify", argv, results)),
    )?;
    Ok(if failed == 0 {
        Status::Pass
    } else {
        Status::VerifyFailed
    })
}

fn bench(cli: &Cli, args: &BenchArgs, argv: &[String], exec: Execution) -> Result<Status, Failure> {
    let rows = bench_table(&args.families, args.r, args.digits, exec)?;
    let ordering = check_ordering(&rows);
    match cli.output {
        Format::Csv => {
            let fields: Vec<_> = rows.iter().map(report::bench_fields).collect();
            emit(cli, &report::to_csv(report::BENCH_COLUMNS, &fields))?;
        }
        Format::Json => {
            let ctx = context(args.digits)?;
            let mut results: Vec<Value> = rows.iter().map(report::bench_row).collect();
            for f in &args.families {
                let t = convergence_trace(*f, args.r, 20..=40, &ctx)?;
                results.push(report::trace(&t, 40));
            }
            results.push(json!({ "kind": "ordering", "holds": ordering.is_ok() }));
            emit(
                cli,
                &report::to_json(&report::report("bench", argv, results)),
            )?;
        }
    }
    match ordering {
        Ok(()) => Ok(Status::Pass),
        Err(msg) => {
            eprintln!("ordering check failed: {msg}");
            Ok(Status::VerifyFailed)
        }
    }
}

fn table(cli: &Cli, argv: &[String]) -> Result<Status, Failure> {
    let rules = validity_table();
    let text = match cli.output {
        Format::Csv => {
            let fields: Vec<_> = rules.iter().map(report::rule_fields).collect();
            report::to_csv(report::TABLE_COLUMNS, &fields)
        }
        Format::Json => report::to_json(&report::report(
            "table",
            argv,
            rules.iter().map(report::rule).collect(),
        )),
    };
    emit(cli, &text)?;
    Ok(Status::Pass)
}

fn default_cache_path() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")));
    match base {
        Some(dir) => dir.join("oddzeta").join("bernoulli.txt"),
        None => PathBuf::from("oddzeta-bernoulli.txt"),
    }
}

fn cache(cli: &Cli, args: &CacheArgs, argv: &[String]) -> Result<Status, Failure> {
    json_only(cli, "cache")?;
    let path = cli.cache_path.clone().unwrap_or_else(default_cache_path);
    let (action, cache) = match args.precompute {
        Some(n) => {
            let mut cache = if path.exists() {
                BernoulliCache::load(&path)?
            } else {
                BernoulliCache::new()
            };
            cache.extend_to(n);
            cache.save(&path)?;
            ("precompute", cache)
        }
        None => ("check", BernoulliCache::load(&path)?),
    };
    let result = json!({
        "kind": "cache",
        "action": action,
        "path": path.display().to_string(),
        "high_water": cache.high_water(),
        "records": cache.len(),
        "integrity": "ok",
    });
    emit(
        cli,
        &report::to_json(&report::report("cache", argv, vec![result])),
    )?;
    Ok(Status::Pass)
}
