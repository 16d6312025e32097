//! Exact Bernoulli numbers, Bernoulli polynomials and harmonic numbers.
//!
//! Bernoulli numbers come from the defining recurrence
//! `sum_{j=0}^{n} C(n+1, j) B_j = 0`, never from zeta values, so that the
//! even zeta values built on top of them stay independent of any zeta
//! evaluator. Only even indices are stored; `B_1 = -1/2` and the vanishing
//! odd entries are implicit.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::rational::{binomial_row, ratio, BigRational};

pub const CACHE_HEADER: &str = "bernoulli-cache v1";

/// Append-only table of `B_0, B_2, B_4, ...`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct BernoulliCache {
    even: Vec<BigRational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// A cache holding every `B_n` with `n <= high_water`.
    pub fn with_high_water(n: usize) -> Self {
        let mut cache = Self::new();
        cache.extend_to(n);
        cache
    }

    /// Largest even index stored, or -1 when empty.
    pub fn high_water(&self) -> i64 {
        if self.even.is_empty() {
            -1
        } else {
            2 * self.even.len() as i64 - 2
        }
    }

    /// Number of stored (even-index) entries.
    pub fn len(&self) -> usize {
        self.even.len()
    }

    pub fn is_empty(&self) -> bool {
        self.even.is_empty()
    }

    /// `B_n` if it is already known without computation.
    pub fn get(&self, n: usize) -> Option<BigRational> {
        if n == 1 {
            return Some(ratio(-1, 2));
        }
        if n % 2 == 1 {
            return Some(BigRational::zero());
        }
        self.even.get(n / 2).cloned()
    }

    /// `B_n`, growing the table as needed.
    pub fn bernoulli(&mut self, n: usize) -> BigRational {
        self.extend_to(n);
        self.get(n).expect("extended")
    }

    /// Ensures every `B_j` with `j <= n` is stored. Existing entries are
    /// never recomputed.
    pub fn extend_to(&mut self, n: usize) {
        while (self.high_water() as i128) < n as i128 {
            let next = self.even.len() * 2;
            let value = self.next_from_recurrence(next);
            self.even.push(value);
        }
    }

    /// Solves the recurrence at even `n` for `B_n` from the stored entries.
    fn next_from_recurrence(&self, n: usize) -> BigRational {
        if n == 0 {
            return BigRational::one();
        }
        let row = binomial_row(n as u64 + 1);
        let mut acc = BigRational::from_integer(row[1].clone()) * ratio(-1, 2);
        for (k, b) in self.even.iter().enumerate() {
            acc += BigRational::from_integer(row[2 * k].clone()) * b;
        }
        -acc / BigRational::from_integer(BigInt::from(n + 1))
    }

    /// Residual of the defining recurrence at `n >= 1`; zero for a sound cache.
    pub fn recurrence_residual(&self, n: usize) -> Option<BigRational> {
        if n == 0 || (n as i64) > self.high_water().max(1) {
            return None;
        }
        let row = binomial_row(n as u64 + 1);
        let mut acc = BigRational::zero();
        for (j, c) in row.iter().enumerate().take(n + 1) {
            let b = self.get(j)?;
            if !b.is_zero() {
                acc += BigRational::from_integer(c.clone()) * b;
            }
        }
        Some(acc)
    }

    /// Re-checks the recurrence for every stored index.
    pub fn verify(&self) -> Result<()> {
        if let Some(b0) = self.even.first() {
            if !b0.is_one() {
                return Err(Error::CacheIntegrity {
                    index: 0,
                    message: format!("B_0 must be 1, found {b0}"),
                });
            }
        }
        for n in 1..=self.high_water().max(0) as usize {
            let residual = self.recurrence_residual(n).expect("index in range");
            if !residual.is_zero() {
                return Err(Error::CacheIntegrity {
                    index: n,
                    message: format!("recurrence residual {residual} is not zero"),
                });
            }
        }
        Ok(())
    }

    /// Writes the cache in the line-oriented text format.
    pub fn save(&self, path: &Path) -> Result<()> {
        let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
        if let Some(dir) = dir {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("tmp");
        {
            let mut w = BufWriter::new(fs::File::create(&tmp)?);
            writeln!(w, "{CACHE_HEADER}")?;
            for (k, b) in self.even.iter().enumerate() {
                writeln!(w, "{}\t{}\t{}", 2 * k, b.numer(), b.denom())?;
            }
            w.flush()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }

    /// Reads a cache file and re-validates every entry against the recurrence.
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let cache = Self::parse(&text, path)?;
        cache.verify()?;
        Ok(cache)
    }

    fn parse(text: &str, path: &Path) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let parse_err = |line: usize, message: String| Error::CacheParse {
            path: path.to_path_buf(),
            line,
            message,
        };
        match lines.next() {
            None => return Ok(Self::new()),
            Some((_, header)) if header.trim_end() == CACHE_HEADER => {}
            Some((_, header)) => {
                return Err(Error::CacheVersion {
                    path: path.to_path_buf(),
                    found: header.to_string(),
                    expected: CACHE_HEADER,
                })
            }
        }
        let mut even = Vec::new();
        for (i, line) in lines {
            let lineno = i + 1;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 3 {
                return Err(parse_err(
                    lineno,
                    format!("expected 3 tab-separated fields, found {}", fields.len()),
                ));
            }
            let n: usize = fields[0]
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad index {:?}", fields[0])))?;
            let expected = 2 * even.len();
            if n != expected {
                return Err(parse_err(
                    lineno,
                    format!("expected index {expected}, found {n}"),
                ));
            }
            let num: BigInt = fields[1]
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad numerator {:?}", fields[1])))?;
            let den: BigInt = fields[2]
                .trim_end()
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad denominator {:?}", fields[2])))?;
            if den <= BigInt::zero() {
                return Err(parse_err(lineno, "denominator must be positive".into()));
            }
            let q = BigRational::new(num.clone(), den.clone());
            if q.numer() != &num || q.denom() != &den {
                return Err(parse_err(lineno, "entry is not in lowest terms".into()));
            }
            even.push(q);
        }
        Ok(BernoulliCache { even })
    }
}

fn global() -> &'static RwLock<BernoulliCache> {
    static CACHE: OnceLock<RwLock<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(BernoulliCache::new()))
}

/// Grows the process-wide cache so that every `B_j`, `j <= n`, is available
/// to concurrent readers without further writes.
pub fn precompute(n: usize) {
    if global()
        .read()
        .expect("bernoulli cache poisoned")
        .high_water()
        >= n as i64
    {
        return;
    }
    global()
        .write()
        .expect("bernoulli cache poisoned")
        .extend_to(n);
}

/// Merges a validated cache into the process-wide one, keeping the longer.
pub fn install(cache: BernoulliCache) {
    let mut g = global().write().expect("bernoulli cache poisoned");
    if cache.len() > g.len() {
        *g = cache;
    }
}

/// A copy of the process-wide cache.
pub fn snapshot() -> BernoulliCache {
    global().read().expect("bernoulli cache poisoned").clone()
}

/// Exact `B_n` (with `B_1 = -1/2`).
pub fn bernoulli_number(n: usize) -> BigRational {
    if let Some(b) = global().read().expect("bernoulli cache poisoned").get(n) {
        return b;
    }
    global()
        .write()
        .expect("bernoulli cache poisoned")
        .bernoulli(n)
}

/// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`, exactly.
pub fn bernoulli_polynomial(n: usize, x: &BigRational) -> BigRational {
    precompute(n);
    let row = binomial_row(n as u64);
    // Horner in x over descending powers: coefficient of x^(n-k) is C(n,k) B_k.
    let mut acc = BigRational::zero();
    for (k, c) in row.iter().enumerate() {
        acc = acc * x + BigRational::from_integer(c.clone()) * bernoulli_number(k);
    }
    acc
}

/// Exact harmonic number `H_m`, with `H_0 = 0`.
pub fn harmonic(m: u64) -> BigRational {
    // Summing over a common denominator avoids a gcd per term.
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for j in 1..=m {
        num = num * j + &den;
        den *= j;
    }
    BigRational::new(num, den)
}

/// Incrementally grown table of harmonic numbers.
#[derive(Clone, Debug)]
pub struct HarmonicTable {
    entries: Vec<BigRational>,
}

impl Default for HarmonicTable {
    fn default() -> Self {
        HarmonicTable {
            entries: vec![BigRational::zero()],
        }
    }
}

impl HarmonicTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn extend_to(&mut self, m: u64) {
        while (self.entries.len() as u64) <= m {
            let j = self.entries.len() as i64;
            let next = self.entries.last().expect("H_0 present") + ratio(1, j);
            self.entries.push(next);
        }
    }

    pub fn get(&mut self, m: u64) -> &BigRational {
        self.extend_to(m);
        &self.entries[m as usize]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::int;

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), ratio(-1, 30));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
    }

    #[test]
    fn high_water_counts() {
        assert_eq!(BernoulliCache::new().high_water(), -1);
        let c = BernoulliCache::with_high_water(100);
        assert_eq!(c.high_water(), 100);
        assert_eq!(c.len(), 51);
        let c = BernoulliCache::with_high_water(7);
        assert_eq!(c.high_water(), 8);
    }

    #[test]
    fn polynomial_values() {
        assert_eq!(bernoulli_polynomial(0, &int(1)), int(1));
        assert_eq!(bernoulli_polynomial(1, &int(1)), ratio(1, 2));
        assert_eq!(bernoulli_polynomial(2, &int(0)), ratio(1, 6));
        // B_2(x) = x^2 - x + 1/6
        assert_eq!(
            bernoulli_polynomial(2, &ratio(1, 3)),
            ratio(1, 9) - ratio(1, 3) + ratio(1, 6)
        );
    }

    #[test]
    fn harmonic_values() {
        assert_eq!(harmonic(0), int(0));
        assert_eq!(harmonic(1), int(1));
        assert_eq!(harmonic(3), ratio(11, 6));
        let mut t = HarmonicTable::new();
        assert_eq!(t.get(3), &ratio(11, 6));
        assert_eq!(t.get(10), &harmonic(10));
    }

    #[test]
    fn parse_rejects_gaps_and_headers() {
        let p = Path::new("mem");
        let ok = format!("{CACHE_HEADER}\n0\t1\t1\n2\t1\t6\n");
        assert_eq!(BernoulliCache::parse(&ok, p).unwrap().len(), 2);
        let gap = format!("{CACHE_HEADER}\n0\t1\t1\n4\t-1\t30\n");
        assert!(matches!(
            BernoulliCache::parse(&gap, p),
            Err(Error::CacheParse { line: 3, .. })
        ));
        assert!(matches!(
            BernoulliCache::parse("bernoulli-cache v2\n", p),
            Err(Error::CacheVersion { .. })
        ));
        let bad = format!("{CACHE_HEADER}\n0\t1\n");
        assert!(matches!(
            BernoulliCache::parse(&bad, p),
            Err(Error::CacheParse { line: 2, .. })
        ));
    }
}
