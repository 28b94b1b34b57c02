//! Exact counts of SU(3) representations by dimension.
//!
//! The irreducible representation W_{j,k} has dimension jk(j+k)/2, so with
//! a_m the number of pairs (j,k) of dimension m,
//!
//!   Σ_n r(n) x^n = Π_m (1 − x^m)^{−a_m}.
//!
//! The product is expanded with the usual partition DP over one array of
//! big integers.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rug::Integer;

mod cache;

pub use cache::{cache_path, load_cached, load_or_compute, store, CACHE_FILE};

#[derive(Debug, thiserror::Error)]
pub enum RepcountError {
    #[error("cache io error at {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("corrupt cache {path} at byte {offset}: {reason}")]
    CacheCorrupt { path: PathBuf, offset: usize, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// a_m for m = 1..=N; index 0 is unused and kept at zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicitySeq {
    pub n: usize,
    pub a: Vec<u32>,
}

impl MultiplicitySeq {
    pub fn get(&self, m: usize) -> u32 {
        self.a.get(m).copied().unwrap_or(0)
    }

    /// Σ_{m ≤ N} a_m, the number of irreducibles of dimension at most N.
    pub fn total(&self) -> u64 {
        self.a.iter().map(|&x| x as u64).sum()
    }

    /// (m, a_m) with a_m > 0, ascending.
    pub fn support(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.a.iter().enumerate().filter(|(_, &c)| c > 0).map(|(m, &c)| (m, c))
    }
}

/// dim W_{j,k} = jk(j+k)/2.
pub fn dimension(j: u64, k: u64) -> u64 {
    j * k * (j + k) / 2
}

/// Counts the pairs (j,k), ordered, with jk(j+k)/2 ≤ N.
pub fn multiplicities(n: usize) -> Result<MultiplicitySeq, RepcountError> {
    if n == 0 {
        return Err(RepcountError::InvalidArgument("N must be at least 1".into()));
    }
    let mut a = vec![0u32; n + 1];
    let nn = n as u64;
    // with j ≤ k the dimension is at least j³
    let mut j = 1u64;
    while j * j * j <= nn {
        let mut k = j;
        loop {
            let d = dimension(j, k);
            if d > nn {
                break;
            }
            a[d as usize] += if j == k { 1 } else { 2 };
            k += 1;
        }
        j += 1;
    }
    Ok(MultiplicitySeq { n, a })
}

/// (d, a_d) with a_d > 0 for all d ≤ d_max, ascending, without a dense
/// array; for the small-t sums where d_max runs into the tens of millions.
pub fn dimension_support(d_max: u64) -> Vec<(u64, u32)> {
    let mut pairs = Vec::new();
    let mut j = 1u64;
    while j * j * j <= d_max {
        let mut k = j;
        loop {
            let d = dimension(j, k);
            if d > d_max {
                break;
            }
            pairs.push((d, if j == k { 1u32 } else { 2 }));
            k += 1;
        }
        j += 1;
    }
    pairs.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::with_capacity(pairs.len());
    for (d, c) in pairs {
        match out.last_mut() {
            Some((e, a)) if *e == d => *a += c,
            _ => out.push((d, c)),
        }
    }
    out
}

/// Coefficients r(0..=N) of a truncated power series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    pub coeffs: Vec<Integer>,
}

impl IntSeries {
    /// Truncation order N.
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn get(&self, i: usize) -> Option<&Integer> {
        self.coeffs.get(i)
    }

    /// The first N+1 coefficients.
    pub fn truncated(&self, n: usize) -> IntSeries {
        IntSeries { coeffs: self.coeffs[..=n.min(self.n())].to_vec() }
    }
}

/// Order in which the factors (1 − x^m)^{−a_m} are applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorOrder {
    Ascending,
    Descending,
}

/// r(0..=N) by the partition DP with factors in ascending m.
pub fn expand_r(n: usize) -> IntSeries {
    expand_r_ordered(n, FactorOrder::Ascending)
}

pub fn expand_r_ordered(n: usize, order: FactorOrder) -> IntSeries {
    let mut c: Vec<Integer> = vec![Integer::new(); n + 1];
    c[0] = Integer::from(1);
    if n == 0 {
        return IntSeries { coeffs: c };
    }
    let seq = multiplicities(n).expect("n ≥ 1");
    let mut factors: Vec<(usize, u32)> = seq.support().collect();
    if order == FactorOrder::Descending {
        factors.reverse();
    }
    for (m, am) in factors {
        for _ in 0..am {
            apply_factor(&mut c, m);
        }
    }
    IntSeries { coeffs: c }
}

/// Multiplies by 1/(1 − x^m): c[i] += c[i − m] for ascending i.
fn apply_factor(c: &mut [Integer], m: usize) {
    for i in m..c.len() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] += &lo[i - m];
    }
}

/// Decimal digit count of a positive integer.
pub fn decimal_digits(x: &Integer) -> usize {
    if *x == 0 {
        return 1;
    }
    x.to_string_radix(10).trim_start_matches('-').len()
}

/// Writes `text` to `path` through a temporary file and a rename.
fn write_atomic(path: &Path, text: &str) -> Result<(), RepcountError> {
    let io = |source| RepcountError::Io { path: path.to_path_buf(), source };
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(io)?;
    }
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(text.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}
