use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rug::{Integer, Rational};

use crate::poly::RatPoly;

const HEADER: &str = "bernoulli-cache v1";

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache io error at {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("corrupt bernoulli cache {path}, line {line}: {reason}")]
    Corrupt { path: PathBuf, line: usize, reason: String },
}

/// Bernoulli numbers B_0, B_1, ... with B_1 = -1/2, optionally backed by a file.
#[derive(Clone, Debug, Default)]
pub struct BernoulliCache {
    values: Vec<Rational>,
    path: Option<PathBuf>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Opens a file-backed cache. A missing file is an empty cache.
    pub fn open(path: impl AsRef<Path>) -> Result<Self, CacheError> {
        let path = path.as_ref().to_path_buf();
        let values = match fs::read_to_string(&path) {
            Ok(text) => parse_cache(&path, &text)?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Vec::new(),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        Ok(BernoulliCache { values, path: Some(path) })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// Extends the table in memory so that index `n` is present.
    /// Returns true if anything was computed.
    pub fn extend_to(&mut self, n: usize) -> bool {
        let grew = self.values.len() <= n;
        extend(&mut self.values, n);
        grew
    }

    /// B_n, extending and persisting the cache when needed.
    pub fn get(&mut self, n: usize) -> Result<Rational, CacheError> {
        if self.extend_to(n) {
            self.save()?;
        }
        Ok(self.values[n].clone())
    }

    /// Writes the table atomically (temp file + rename). No-op without a path.
    pub fn save(&self) -> Result<(), CacheError> {
        let Some(path) = &self.path else { return Ok(()) };
        let io = |source| CacheError::Io { path: path.clone(), source };
        let mut text = String::with_capacity(32 * self.values.len() + 32);
        text.push_str(HEADER);
        text.push('\n');
        for (i, b) in self.values.iter().enumerate() {
            text.push_str(&format!("{i}\t{}/{}\n", b.numer(), b.denom()));
        }
        let tmp = path.with_extension("tmp");
        let mut f = fs::File::create(&tmp).map_err(io)?;
        f.write_all(text.as_bytes()).map_err(io)?;
        f.sync_all().map_err(io)?;
        fs::rename(&tmp, path).map_err(io)
    }

    /// Copies this table into the process-wide table used by [`bernoulli`].
    pub fn install_global(&self) {
        let mut g = GLOBAL.lock().unwrap_or_else(|e| e.into_inner());
        if g.len() < self.values.len() {
            *g = self.values.clone();
        }
    }
}

fn parse_cache(path: &Path, text: &str) -> Result<Vec<Rational>, CacheError> {
    let bad = |line: usize, reason: String| CacheError::Corrupt { path: path.to_path_buf(), line, reason };
    let mut lines = text.lines();
    match lines.next() {
        Some(HEADER) => {}
        other => return Err(bad(1, format!("bad header {other:?}"))),
    }
    let mut values = Vec::new();
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let (idx, frac) = line
            .split_once('\t')
            .ok_or_else(|| bad(lineno, "missing tab".into()))?;
        let idx: usize = idx.parse().map_err(|_| bad(lineno, format!("bad index {idx:?}")))?;
        if idx != values.len() {
            return Err(bad(lineno, format!("expected index {}, found {idx}", values.len())));
        }
        let (p, q) = frac
            .split_once('/')
            .ok_or_else(|| bad(lineno, "missing '/'".into()))?;
        let p: Integer = p.parse().map_err(|_| bad(lineno, format!("bad numerator {p:?}")))?;
        let q: Integer = q.parse().map_err(|_| bad(lineno, format!("bad denominator {q:?}")))?;
        if q <= 0 {
            return Err(bad(lineno, "nonpositive denominator".into()));
        }
        let v = Rational::from((p, q));
        let ok = match idx {
            0 => v == 1,
            1 => v == Rational::from((-1, 2)),
            n if n % 2 == 1 => v == 0,
            _ => v != 0,
        };
        if !ok {
            return Err(bad(lineno, format!("value {v} impossible for B_{idx}")));
        }
        values.push(v);
    }
    Ok(values)
}

fn extend(values: &mut Vec<Rational>, n: usize) {
    while values.len() <= n {
        let m = values.len();
        let v = match m {
            0 => Rational::from(1),
            1 => Rational::from((-1, 2)),
            _ if m % 2 == 1 => Rational::new(),
            _ => {
                // sum_{k<=m} C(m+1,k) B_k = 0; only k = 1 and even k contribute
                let top = Integer::from(m + 1);
                let mut s = Rational::from(&values[0] + Rational::from(&values[1] * (m + 1) as u32));
                for k in (2..m).step_by(2) {
                    s += Rational::from(&values[k] * Integer::from(top.binomial_ref(k as u32)));
                }
                -s / (m as u32 + 1)
            }
        };
        values.push(v);
    }
}

static GLOBAL: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// B_n exactly, with B_1 = -1/2. Backed by a process-wide memory table.
pub fn bernoulli(n: usize) -> Rational {
    let mut g = GLOBAL.lock().unwrap_or_else(|e| e.into_inner());
    extend(&mut g, n);
    g[n].clone()
}

/// B_n(x) = sum_k C(n,k) B_k x^(n-k), as a polynomial in `x`.
pub fn bernoulli_poly(n: usize) -> RatPoly {
    let vars = ["x"];
    let mut p = RatPoly::zero(&vars);
    let top = Integer::from(n);
    for k in 0..=n {
        let c = Rational::from(bernoulli(k) * Integer::from(top.binomial_ref(k as u32)));
        p = &p + &RatPoly::monomial(&vars, vec![(n - k) as u32], c);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        assert_eq!(bernoulli(0), 1);
        assert_eq!(bernoulli(1), Rational::from((-1, 2)));
        assert_eq!(bernoulli(2), Rational::from((1, 6)));
        assert_eq!(bernoulli(12), Rational::from((-691, 2730)));
        assert_eq!(bernoulli(13), 0);
    }

    #[test]
    fn poly_values() {
        assert_eq!(bernoulli_poly(0).to_string(), "1");
        assert_eq!(bernoulli_poly(1).to_string(), "x - 1/2");
        assert_eq!(bernoulli_poly(2).to_string(), "x^2 - x + 1/6");
    }
}
