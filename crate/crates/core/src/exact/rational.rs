//! Rational helpers on top of `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced arbitrary-precision rational with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// `p/q` or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Least common multiple of the denominators of `values`, as `u32`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Result<u32> {
    let mut l = BigInt::one();
    for v in values {
        l = l.lcm(v.denom());
    }
    l.to_u32()
        .ok_or_else(|| Error::Lattice(format!("lattice denominator {l} too large")))
}

/// Numerator of `r * den` when it is an integer that fits in `i32`.
pub fn scaled_to_i32(r: &Rational, den: u32) -> Result<i32> {
    let v = r * Rational::from_integer(BigInt::from(den));
    if !v.is_integer() {
        return Err(Error::Lattice(format!(
            "exponent {} not on lattice (1/{den})Z",
            fmt_rational(r)
        )));
    }
    v.to_integer()
        .to_i32()
        .ok_or_else(|| Error::Lattice(format!("exponent {} overflows", fmt_rational(r))))
}

