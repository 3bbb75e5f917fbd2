use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Integer polynomial in one variable `m`, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<i64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        IntPolynomial(coefficients)
    }

    /// `m^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        IntPolynomial(c)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, m: i64) -> Result<i64> {
        let mut acc: i64 = 0;
        for &c in self.0.iter().rev() {
            acc = acc
                .checked_mul(m)
                .and_then(|x| x.checked_add(c))
                .ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        Ok(acc)
    }

    /// `Σ_k c_k · binom(m, k)`, expanded over exact rationals. A non-integral
    /// coefficient in the result is reported as an error.
    pub fn from_binomial_basis(counts: &[i64]) -> Result<Self> {
        let degree = counts.len();
        let mut total = vec![Ratio::<i128>::from_integer(0); degree.max(1)];
        // falling factorial m(m−1)…(m−k+1), built incrementally
        let mut falling: Vec<i128> = vec![1];
        let mut factorial: i128 = 1;
        for (k, &c) in counts.iter().enumerate() {
            if k > 0 {
                let shift = (k - 1) as i128;
                let mut next = vec![0i128; falling.len() + 1];
                for (i, &f) in falling.iter().enumerate() {
                    next[i + 1] += f;
                    next[i] -= shift * f;
                }
                falling = next;
                factorial *= k as i128;
            }
            if c == 0 {
                continue;
            }
            for (i, &f) in falling.iter().enumerate() {
                total[i] += Ratio::new(f * c as i128, factorial);
            }
        }
        let coefficients = total
            .into_iter()
            .map(|r| {
                if !r.is_integer() {
                    return Err(Error::NonIntegral {
                        what: "polynomial from binomial basis",
                        value: r.to_string(),
                    });
                }
                i64::try_from(r.to_integer()).map_err(|_| Error::Overflow("polynomial coefficient"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coefficients))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "m")?,
                (1, _) => write!(f, "{a}m")?,
                (_, 1) => write!(f, "m^{i}")?,
                _ => write!(f, "{a}m^{i}")?,
            }
        }
        Ok(())
    }
}

/// Generalized binomial coefficient `binom(m, k)` for any integer `m`.
pub(crate) fn binomial(m: i64, k: usize) -> Result<i64> {
    let mut b: i128 = 1;
    for j in 0..k {
        b = b * (m as i128 - j as i128) / (j as i128 + 1);
    }
    i64::try_from(b).map_err(|_| Error::Overflow("binomial coefficient"))
}
