//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.

use alloc::format;
use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// Gaussian rational `re + i·im`.
pub type ComplexRational = Complex<Rational>;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn real(value: Rational) -> ComplexRational {
    Complex::new(value, Rational::zero())
}

pub fn cx(re: Rational, im: Rational) -> ComplexRational {
    Complex::new(re, im)
}

pub fn cint(re: i64, im: i64) -> ComplexRational {
    Complex::new(int(re), int(im))
}

pub fn c_is_zero(c: &ComplexRational) -> bool {
    c.re.is_zero() && c.im.is_zero()
}

pub fn c_is_real(c: &ComplexRational) -> bool {
    c.im.is_zero()
}

/// `|c|²`, exact.
pub fn norm_sqr(c: &ComplexRational) -> Rational {
    &c.re * &c.re + &c.im * &c.im
}

/// Nearest `f64`; saturates to ±∞ for values outside the `f64` range.
pub fn to_f64(q: &Rational) -> f64 {
    if let Some(v) = q.to_f64() {
        return v;
    }
    // Fall back on scaling numerator and denominator into range.
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let nf = (n >> shift).to_f64().unwrap_or(0.0);
    let df = (d >> shift).to_f64().unwrap_or(1.0);
    nf / df
}

/// Parses `"p/q"` or `"p"` with optional leading sign.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical `"p/q"` rendering; the denominator is always written.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Compact human rendering (`"3"`, `"-1/2"`).
pub fn display_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}
