//! Symbolic bound functions for flexible fan-partition oracles.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{display, from_f64_rounded, int, Rational};

/// `L(n) = ceil(log2(n + 1))`, the bit length of `n`. Integer valued, so every
/// bound stays an exact rational, and `L(1) = 1`.
pub fn log_term(n: usize) -> usize {
    (usize::BITS - n.leading_zeros()) as usize
}

/// `f(n) = c1 n L(n) + c2 n` and `g(n) = c3 L(n)^3 + c4`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleBounds {
    #[serde(serialize_with = "ser_rational")]
    pub c1: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c2: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c3: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub c4: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&display(r))
}

impl OracleBounds {
    pub fn new(c1: Rational, c2: Rational, c3: Rational, c4: Rational) -> Result<Self> {
        let b = OracleBounds { c1, c2, c3, c4 };
        b.check()?;
        Ok(b)
    }

    /// `f(n) = c n`, `g(n) = 1`.
    pub fn linear(c: Rational) -> Result<Self> {
        OracleBounds::new(int(0), c, int(0), int(1))
    }

    fn check(&self) -> Result<()> {
        let zero = int(0);
        if [self.c1, self.c2, self.c3, self.c4].iter().any(|c| *c < zero) {
            return Err(Error::InvalidArgument(format!(
                "bound coefficients must be non-negative: {self}"
            )));
        }
        if self.c1 + self.c2 <= zero {
            return Err(Error::InvalidArgument(format!("f must be positive: {self}")));
        }
        if self.g(1) < int(1) {
            return Err(Error::InvalidArgument(format!("g(1) must be at least 1: {self}")));
        }
        Ok(())
    }

    pub fn f(&self, n: usize) -> Rational {
        let l = int(log_term(n));
        self.c1 * int(n) * l + self.c2 * int(n)
    }

    pub fn g(&self, n: usize) -> Rational {
        let l = int(log_term(n));
        self.c3 * l * l * l + self.c4
    }

    /// Checks `f(a) + f(b) <= f(a + b)` and `g(a) <= g(a + 1)` for `a, b` up to `limit`.
    pub fn spot_check(&self, limit: usize) -> Result<()> {
        for a in 1..=limit {
            if self.g(a) > self.g(a + 1) {
                return Err(Error::InvalidArgument(format!("g decreases at {a}")));
            }
            for b in a..=limit {
                if self.f(a) + self.f(b) > self.f(a + b) {
                    return Err(Error::InvalidArgument(format!("f is not superadditive at ({a}, {b})")));
                }
            }
        }
        Ok(())
    }

    /// Central-size bound of the decomposition pipeline: `(f(kn) + (2a + k) n) / d`.
    pub fn pipeline_k(&self, n: usize, k: usize, a: usize, d: &Rational) -> Rational {
        (self.f(k * n) + int((2 * a + k) * n)) / d
    }

    /// Path-width bound of the decomposition pipeline: `2 d g(kn)`.
    pub fn pipeline_w(&self, n: usize, k: usize, d: &Rational) -> Rational {
        int(2) * d * self.g(k * n)
    }
}

impl fmt::Display for OracleBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f(n) = {}*n*L(n) + {}*n, g(n) = {}*L(n)^3 + {}",
            display(&self.c1),
            display(&self.c2),
            display(&self.c3),
            display(&self.c4)
        )
    }
}

/// `sqrt(n) / log2(n + 1)` rounded to a multiple of 1/1024, and at least 1.
pub fn canonical_d(n: usize) -> Rational {
    if n == 0 {
        return int(1);
    }
    let x = (n as f64).sqrt() / ((n + 1) as f64).log2();
    from_f64_rounded(x, 1024).max(int(1))
}
