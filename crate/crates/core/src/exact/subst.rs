//! Symbol substitution for rational functions.

use num_traits::One;

use super::laurent::{ExpMonomial, LaurentPoly, Symbol};
use super::ratfunc::RatFunc;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// An assignment `symbol -> rational function`; unassigned symbols map to
/// themselves.
#[derive(Clone, Debug, Default)]
pub struct Substitution {
    images: [Option<RatFunc>; 4],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, sym: Symbol, value: RatFunc) -> Self {
        self.images[sym.index()] = Some(value);
        self
    }

    /// `sym -> prod_t t^{e_t}` for an integer exponent vector over the symbols.
    pub fn set_monomial(self, sym: Symbol, exps: [i32; 4]) -> Self {
        let m = LaurentPoly::from_terms(1, [(ExpMonomial(exps), Rational::one())]);
        self.set(sym, m.into())
    }

    /// The exponent images when every assigned value is a monic monomial.
    fn monomial_images(&self) -> Option<[[Rational; 4]; 4]> {
        let mut out: [[Rational; 4]; 4] = Default::default();
        for (s, img) in self.images.iter().enumerate() {
            match img {
                None => out[s][s] = int(1),
                Some(f) => {
                    if !f.den_factors().is_empty() {
                        return None;
                    }
                    let p = f.numerator();
                    if !p.is_monomial() || !p.terms()[0].1.is_one() {
                        return None;
                    }
                    for sym in Symbol::ALL {
                        out[s][sym.index()] = p.exponent(0, sym);
                    }
                }
            }
        }
        Some(out)
    }
}

/// Exact substitution. Monomial values may replace symbols carrying
/// fractional exponents; other values require integral exponents.
pub fn substitute(f: &RatFunc, sub: &Substitution) -> Result<RatFunc> {
    if let Some(images) = sub.monomial_images() {
        return f.map_monomials(&images);
    }
    let mut out = substitute_poly(f.numerator(), sub)?;
    for (g, m) in f.den_factors() {
        let h = substitute_poly(g, sub)?;
        for _ in 0..*m {
            out = out.div(&h)?;
        }
    }
    Ok(out)
}

fn substitute_poly(p: &LaurentPoly, sub: &Substitution) -> Result<RatFunc> {
    let scale = p.scale() as i32;
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut keep = [0i32; 4];
        let mut term = RatFunc::constant(c.clone());
        for sym in Symbol::ALL {
            let e = m.0[sym.index()];
            if e == 0 {
                continue;
            }
            match &sub.images[sym.index()] {
                None => keep[sym.index()] = e,
                Some(img) => {
                    if e % scale != 0 {
                        return Err(Error::Lattice(format!(
                            "cannot substitute a non-monomial value for {} raised to {e}/{scale}",
                            sym.name()
                        )));
                    }
                    term = term.mul(&img.pow(e / scale)?);
                }
            }
        }
        if keep.iter().any(|e| *e != 0) {
            let mono = LaurentPoly::from_terms(p.scale(), [(ExpMonomial(keep), Rational::one())]);
            term = term.mul_poly(&mono);
        }
        if !term.is_zero() {
            acc = acc.add(&term);
        }
    }
    if acc.numerator().is_zero() {
        return Ok(RatFunc::zero());
    }
    Ok(acc)
}
