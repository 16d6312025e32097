use std::time::Instant;

use super::eval::zeta_odd_ladder;
use super::family::SeriesFamily;
use crate::error::Result;
use crate::exec::Execution;
use crate::numeric::{PrecisionContext, Real};

/// Cost of reaching a digit target with one family.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub family: SeriesFamily,
    pub r: u32,
    pub digits: u32,
    pub terms_used: u64,
    pub tail_bound: Real,
    pub wall_ms: f64,
}

/// Evaluates `zeta(2r+1)` with each family. Rows come back in input order.
pub fn bench_table(
    families: &[SeriesFamily],
    r: u32,
    digits: u32,
    exec: Execution,
) -> Result<Vec<BenchRow>> {
    let ctx = PrecisionContext::new(digits)?;
    exec.map(families, |&family| {
        let start = Instant::now();
        let ladder = zeta_odd_ladder(r, family, &ctx)?;
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let top = ladder.last().expect("ladder is non-empty");
        Ok(BenchRow {
            family,
            r,
            digits,
            terms_used: top.terms_used,
            tail_bound: top.tail_bound.clone(),
            wall_ms,
        })
    })
    .into_iter()
    .collect()
}

/// Checks `terms(M6) <= terms(M4) <= terms(M3) <= terms(CK or Ewell)` over
/// the families present.
pub fn check_ordering(rows: &[BenchRow]) -> std::result::Result<(), String> {
    let rank = |f: SeriesFamily| match f {
        SeriesFamily::M6 => 0,
        SeriesFamily::M4 => 1,
        SeriesFamily::M3 => 2,
        SeriesFamily::Ck | SeriesFamily::Ewell => 3,
    };
    for a in rows {
        for b in rows {
            if a.r == b.r
                && a.digits == b.digits
                && rank(a.family) < rank(b.family)
                && a.terms_used > b.terms_used
            {
                return Err(format!(
                    "{} used {} terms but {} used {} at r = {}, {} digits",
                    a.family, a.terms_used, b.family, b.terms_used, a.r, a.digits
                ));
            }
        }
    }
    Ok(())
}
