use std::fmt;
use std::ops::{Add, Mul, Sub};

use rug::Rational;

/// Power series in q with rational coefficients, truncated after q^qmax.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn zero(qmax: usize) -> Self {
        QSeries { coeffs: vec![Rational::new(); qmax + 1] }
    }

    pub fn one(qmax: usize) -> Self {
        let mut s = Self::zero(qmax);
        s.coeffs[0] = Rational::from(1);
        s
    }

    /// Pads or truncates `coeffs` to length qmax + 1.
    pub fn from_coeffs(mut coeffs: Vec<Rational>, qmax: usize) -> Self {
        coeffs.resize(qmax + 1, Rational::new());
        QSeries { coeffs }
    }

    pub fn qmax(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries { coeffs: self.coeffs.iter().map(|a| Rational::from(a * c)).collect() }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.qmax(), other.qmax(), "q-series truncated at different orders");
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        self.check(rhs);
        QSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| Rational::from(a + b)).collect() }
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self.check(rhs);
        QSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| Rational::from(a - b)).collect() }
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        self.check(rhs);
        let n = self.qmax();
        let mut out = QSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += Rational::from(a * b);
            }
        }
        out
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let neg = *c < 0;
            let mag = Rational::from(c.abs_ref());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "q".into(),
                _ => format!("q^{i}"),
            };
            match (i, mag == 1) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "{var}")?,
                _ => write!(f, "{mag}{var}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.qmax() + 1)
    }
}
