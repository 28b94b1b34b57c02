//! Text cache of r(n): a header `su3-rcount v1 N=<N>` and then one
//! `n<TAB>r(n)` line per n, ascending without gaps.

use std::fs;
use std::path::{Path, PathBuf};

use rug::Integer;

use crate::{expand_r, write_atomic, IntSeries, RepcountError};

pub const CACHE_FILE: &str = "su3-rcount.txt";
const MAGIC: &str = "su3-rcount v1 N=";

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(CACHE_FILE)
}

/// Persists a series, replacing any cache file in `dir`.
pub fn store(series: &IntSeries, dir: &Path) -> Result<(), RepcountError> {
    let mut text = format!("{MAGIC}{}\n", series.n());
    for (i, r) in series.coeffs.iter().enumerate() {
        text.push_str(&format!("{i}\t{r}\n"));
    }
    write_atomic(&cache_path(dir), &text)
}

/// The cached series if the file exists; it may be shorter than needed.
pub fn load_cached(dir: &Path) -> Result<Option<IntSeries>, RepcountError> {
    let path = cache_path(dir);
    match fs::read_to_string(&path) {
        Ok(text) => parse(&path, &text).map(Some),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(source) => Err(RepcountError::Io { path, source }),
    }
}

/// r(0..=N) from the cache when it reaches N, otherwise computed and stored.
pub fn load_or_compute(n: usize, dir: &Path) -> Result<IntSeries, RepcountError> {
    if let Some(s) = load_cached(dir)? {
        if s.n() >= n {
            return Ok(s.truncated(n));
        }
    }
    let s = expand_r(n);
    store(&s, dir)?;
    Ok(s)
}

fn parse(path: &Path, text: &str) -> Result<IntSeries, RepcountError> {
    let bad = |offset: usize, reason: String| RepcountError::CacheCorrupt { path: path.to_path_buf(), offset, reason };
    let mut offset = 0;
    let mut lines = text.split_inclusive('\n');
    let header = lines.next().ok_or_else(|| bad(0, "empty file".into()))?;
    let declared: usize = header
        .trim_end()
        .strip_prefix(MAGIC)
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad(0, format!("bad header {:?}", header.trim_end())))?;
    offset += header.len();
    let mut coeffs = Vec::with_capacity(declared + 1);
    for line in lines {
        let body = line.trim_end_matches('\n');
        let (idx, val) = body.split_once('\t').ok_or_else(|| bad(offset, "missing tab".into()))?;
        let i: usize = idx.parse().map_err(|_| bad(offset, format!("bad index {idx:?}")))?;
        if i != coeffs.len() {
            return Err(bad(offset, format!("expected index {}, found {i}", coeffs.len())));
        }
        let r = Integer::from_str_radix(val, 10).map_err(|_| bad(offset + idx.len() + 1, format!("bad value {val:?}")))?;
        if r < 0 {
            return Err(bad(offset + idx.len() + 1, "negative count".into()));
        }
        coeffs.push(r);
        offset += line.len();
    }
    if coeffs.len() != declared + 1 {
        return Err(bad(offset, format!("header says N={declared} but {} entries follow", coeffs.len())));
    }
    if coeffs[0] != 1 {
        return Err(bad(header.len(), "r(0) must be 1".into()));
    }
    Ok(IntSeries { coeffs })
}
