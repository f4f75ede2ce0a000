//! Rational functions with a factored denominator.
//!
//! The denominator is kept as a product of canonical factors with
//! multiplicities. Sums take the least common multiple of the factor lists,
//! which is the same "multiply through by the known denominators" move used
//! when clearing `(1 - e^v)(1 - e^{v'})(1 - e^{v+v'})` by hand. Zero-testing
//! never needs a gcd: a quotient vanishes iff its numerator does.

use std::fmt;

use num_complex::Complex64;
use num_traits::Zero;

use super::laurent::{LaurentPoly, Symbol};
use super::rational::{int, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    /// Sorted canonical factors with positive multiplicities.
    den: Vec<(LaurentPoly, u32)>,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: Vec::new() }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: Vec::new() }
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn constant(c: Rational) -> Self {
        c.into()
    }

    pub fn var_pow(sym: Symbol, e: i32) -> Self {
        LaurentPoly::var_pow(sym, e).into()
    }

    /// `num / den` for polynomial numerator and denominator.
    pub fn new(num: LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        RatFunc::from(num).div_poly(den)
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    /// Fully expanded denominator.
    pub fn denominator(&self) -> LaurentPoly {
        expand(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_empty() {
            self.num.as_constant()
        } else if self.num.is_zero() {
            Some(Rational::zero())
        } else {
            None
        }
    }

    pub fn uses(&self, sym: Symbol) -> bool {
        self.num.uses(sym) || self.den.iter().any(|(f, _)| f.uses(sym))
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if other.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc { num, den: self.den.clone() };
        }
        let (lcm, cof_a, cof_b) = lcm_cofactors(&self.den, &other.den);
        let num = self.num.mul(&expand(&cof_a)).add(&other.num.mul(&expand(&cof_b)));
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num, den: lcm }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        let num = self.num.mul(&other.num);
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num, den: merge_factors(&self.den, &other.den) }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> RatFunc {
        let num = self.num.mul(p);
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num, den: self.den.clone() }
    }

    pub fn scale_by(&self, c: &Rational) -> RatFunc {
        let num = self.num.scale_by(c);
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num, den: self.den.clone() }
    }

    /// Divide by a polynomial, which becomes one more denominator factor.
    pub fn div_poly(&self, p: &LaurentPoly) -> Result<RatFunc> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(inv) = p.monomial_inverse() {
            return Ok(self.mul_poly(&inv));
        }
        if self.num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let (unit, canon) = p.canonical_factor();
        let num = self.num.mul(&unit.monomial_inverse().unwrap());
        Ok(RatFunc { num, den: merge_factors(&self.den, &[(canon, 1)]) })
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::from(expand(&self.den)).div_poly(&self.num)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<RatFunc> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Cancel denominator factors that divide the numerator. Never changes the
    /// value.
    pub fn reduce(&self) -> RatFunc {
        let mut num = self.num.clone();
        let mut den = Vec::with_capacity(self.den.len());
        for (f, m) in &self.den {
            let mut left = *m;
            while left > 0 {
                match num.div_exact(f) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.push((f.clone(), left));
            }
        }
        if num.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num, den }
    }

    /// Substitute a pure monomial (rational exponent vector) for each symbol.
    pub fn map_monomials(&self, images: &[[Rational; 4]; 4]) -> Result<RatFunc> {
        let num = self.num.map_monomials(images)?;
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let mut out = RatFunc::from(num);
        for (f, m) in &self.den {
            let g = f.map_monomials(images)?;
            for _ in 0..*m {
                out = out.div_poly(&g)?;
            }
        }
        Ok(out)
    }

    pub fn eval_log(&self, logs: &[Complex64; 4]) -> Complex64 {
        let mut z = self.num.eval_log(logs);
        for (f, m) in &self.den {
            z /= f.eval_log(logs).powu(*m);
        }
        z
    }

    /// Smallest modulus among the denominator factors at a point; used by the
    /// numeric sampler to stay away from poles.
    pub fn min_den_modulus(&self, logs: &[Complex64; 4]) -> f64 {
        self.den
            .iter()
            .map(|(f, _)| f.eval_log(logs).norm())
            .fold(f64::INFINITY, f64::min)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

fn expand(factors: &[(LaurentPoly, u32)]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (f, m) in factors {
        for _ in 0..*m {
            acc = acc.mul(f);
        }
    }
    acc
}

fn merge_factors(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Vec<(LaurentPoly, u32)> {
    if b.is_empty() {
        return a.to_vec();
    }
    if a.is_empty() {
        return b.to_vec();
    }
    let mut out: Vec<(LaurentPoly, u32)> = a.to_vec();
    for (f, m) in b {
        match out.binary_search_by(|(g, _)| g.cmp(f)) {
            Ok(i) => out[i].1 += m,
            Err(i) => out.insert(i, (f.clone(), *m)),
        }
    }
    out
}

type Factors = Vec<(LaurentPoly, u32)>;

/// Least common multiple of two factor lists and the cofactors taking each
/// list to it.
fn lcm_cofactors(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> (Factors, Factors, Factors) {
    let mut lcm = Vec::new();
    let mut ca = Vec::new();
    let mut cb = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            _ => std::cmp::Ordering::Greater,
        };
        match ord {
            std::cmp::Ordering::Less => {
                lcm.push(a[i].clone());
                cb.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                lcm.push(b[j].clone());
                ca.push(b[j].clone());
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let (ma, mb) = (a[i].1, b[j].1);
                lcm.push((a[i].0.clone(), ma.max(mb)));
                if mb > ma {
                    ca.push((a[i].0.clone(), mb - ma));
                } else if ma > mb {
                    cb.push((a[i].0.clone(), ma - mb));
                }
                i += 1;
                j += 1;
            }
        }
    }
    (lcm, ca, cb)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(p, m)| if *m == 1 { format!("({p})") } else { format!("({p})^{m}") })
            .collect();
        if den.len() == 1 {
            write!(f, "{num}/{}", den[0])
        } else {
            write!(f, "{num}/({})", den.join("*"))
        }
    }
}

/// Convenience: `1 - p`.
pub fn one_minus(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::one().sub(p)
}

/// `c` as a rational function.
pub fn konst(c: i64) -> RatFunc {
    RatFunc::constant(int(c))
}

impl RatFunc {
    /// True when the value is the constant one.
    pub fn is_unit_one(&self) -> bool {
        self.sub(&RatFunc::one()).is_zero()
    }

    pub fn is_identically(&self, c: &Rational) -> bool {
        self.sub(&RatFunc::constant(c.clone())).is_zero()
    }
}
