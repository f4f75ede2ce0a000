//! Truncated Laurent series in `u` around `u = 0`.
//!
//! `X1` stands for `e^{u/(2n)}`, so a monomial `X1^e Y1^k` expands as
//! `Y1^k * sum_m (e/(2n))^m u^m / m!` with exact rational coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::laurent::{LaurentPoly, Symbol};
use super::ratfunc::RatFunc;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Coefficients of `u^{-1}, u^0, ..., u^{order}`, each a rational function of
/// `Y1` alone.
#[derive(Clone, Debug, PartialEq)]
pub struct USeries {
    order: i64,
    coeffs: Vec<RatFunc>,
}

impl USeries {
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `u^k`; zero outside the stored range.
    pub fn coeff(&self, k: i64) -> RatFunc {
        if k < -1 || k > self.order {
            return RatFunc::zero();
        }
        self.coeffs[(k + 1) as usize].clone()
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn has_pole(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    /// Product truncated to the order both factors determine.
    pub fn mul(&self, other: &USeries) -> Result<USeries> {
        let va = if self.has_pole() { -1 } else { 0 };
        let vb = if other.has_pole() { -1 } else { 0 };
        let order = (self.order + vb).min(other.order + va);
        if va + vb < -1 {
            return Err(Error::PoleOrder { order: 2 });
        }
        let mut coeffs = Vec::with_capacity((order + 2) as usize);
        for k in -1..=order {
            let mut acc = RatFunc::zero();
            for i in -1..=(k + 1) {
                let j = k - i;
                if j < -1 {
                    continue;
                }
                let a = self.coeff(i);
                if a.is_zero() {
                    continue;
                }
                let b = other.coeff(j);
                if !b.is_zero() {
                    acc = acc.add(&a.mul(&b));
                }
            }
            coeffs.push(acc);
        }
        Ok(USeries { order, coeffs })
    }
}

/// Power series (from `u^0`) of a polynomial in `X1` and `Y1`, up to `u^deg`.
fn poly_series(p: &LaurentPoly, x_rate: &Rational, deg: usize) -> Vec<RatFunc> {
    let groups = p.split_x1();
    let mut out = vec![RatFunc::zero(); deg + 1];
    for (e, ypart) in groups {
        let rate = &e * x_rate;
        let mut c = Rational::one();
        for (m, slot) in out.iter_mut().enumerate() {
            if m > 0 {
                c = c * &rate / Rational::from_integer(BigInt::from(m));
            }
            if c.is_zero() {
                break;
            }
            *slot = slot.add(&RatFunc::from(ypart.scale_by(&c)));
        }
    }
    out
}

fn valuation(s: &[RatFunc]) -> Option<usize> {
    s.iter().position(|c| !c.is_zero())
}

/// `a / b` as power series where `b[0] != 0`.
fn series_div(a: &[RatFunc], b: &[RatFunc], len: usize) -> Result<Vec<RatFunc>> {
    let b0_inv = b[0].inv()?;
    let mut q: Vec<RatFunc> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = a.get(k).cloned().unwrap_or_default();
        for (j, qj) in q.iter().enumerate() {
            let bk = k - j;
            if bk < b.len() && !b[bk].is_zero() && !qj.is_zero() {
                acc = acc.sub(&qj.mul(&b[bk]));
            }
        }
        q.push(acc.mul(&b0_inv));
    }
    Ok(q)
}

/// Expand `f(X1 = e^{u/(2n)}, Y1)` in `u` up to `u^order`.
pub fn expand_in_u(f: &RatFunc, n: usize, order: i64) -> Result<USeries> {
    if f.uses(Symbol::X2) || f.uses(Symbol::Y2) {
        return Err(Error::SeriesVariables);
    }
    assert!(order >= -1);
    let x_rate = Rational::new(BigInt::one(), BigInt::from(2 * n));
    if f.is_zero() {
        return Ok(USeries { order, coeffs: vec![RatFunc::zero(); (order + 2) as usize] });
    }
    // Valuations of the denominator factors: a nonzero polynomial in
    // e^{cu} with t distinct exponents vanishes to order < t.
    let mut den_val = 0usize;
    let mut factor_vals = Vec::new();
    for (g, m) in f.den_factors() {
        let probe = poly_series(g, &x_rate, g.len());
        let v = valuation(&probe).ok_or_else(|| Error::Internal("zero denominator factor".into()))?;
        factor_vals.push(v);
        den_val += v * *m as usize;
    }
    // Number of terms needed after shifting out valuations.
    let need = |num_val: usize| -> i64 { order + den_val as i64 - num_val as i64 + 1 };
    let num_probe = poly_series(f.numerator(), &x_rate, f.numerator().len());
    let num_val = valuation(&num_probe).unwrap_or(usize::MAX);
    let lead = num_val as i64 - den_val as i64;
    if lead < -1 {
        return Err(Error::PoleOrder { order: -lead });
    }
    let len = need(num_val);
    let mut coeffs = vec![RatFunc::zero(); (order + 2) as usize];
    if len <= 0 {
        return Ok(USeries { order, coeffs });
    }
    let len = len as usize;
    let num = poly_series(f.numerator(), &x_rate, num_val + len);
    let mut quotient: Vec<RatFunc> = num[num_val..].to_vec();
    for ((g, m), v) in f.den_factors().iter().zip(&factor_vals) {
        let gs = poly_series(g, &x_rate, v + len);
        let gs = &gs[*v..];
        for _ in 0..*m {
            quotient = series_div(&quotient, gs, len)?;
        }
    }
    for (k, c) in quotient.into_iter().enumerate() {
        let power = lead + k as i64;
        if power > order {
            break;
        }
        coeffs[(power + 1) as usize] = c;
    }
    Ok(USeries { order, coeffs })
}
