//! Exact rational arithmetic for bounds and flexibility parameters.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

pub fn int(n: usize) -> Rational {
    Rational::from_integer(n as i128)
}

/// Largest integer not above `r`, clamped at zero.
pub fn floor_usize(r: &Rational) -> usize {
    let f = r.floor().to_integer();
    if f < 0 {
        0
    } else {
        f as usize
    }
}

pub fn ceil_usize(r: &Rational) -> usize {
    let c = r.ceil().to_integer();
    if c < 0 {
        0
    } else {
        c as usize
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Parses `7`, `3/2` or `2.25` into an exact rational.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: i128 = num.trim().parse().map_err(|_| bad())?;
        let den: i128 = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole: i128 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let scale = 10i128.pow(frac.len() as u32);
        let frac: i128 = frac.parse().map_err(|_| bad())?;
        let magnitude = whole.abs() * scale + frac;
        let num = if negative || whole < 0 { -magnitude } else { magnitude };
        return Ok(Rational::new(num, scale));
    }
    let n: i128 = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Rounds a positive real to the nearest multiple of `1/denominator`.
pub fn from_f64_rounded(x: f64, denominator: i128) -> Rational {
    Rational::new((x * denominator as f64).round() as i128, denominator)
}

/// Renders integers plainly and everything else as `p/q`.
pub fn display(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn lcm_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> i128 {
    values.into_iter().fold(1i128, |acc, r| acc.lcm(r.denom()))
}
