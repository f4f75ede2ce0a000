use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{int, rat, LaurentPoly, RatFunc, Rational, Symbol};
use crate::tensor::Tensor2;

/// A tensor over rational functions in `X1, X2, Y1, Y2`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralMatrix {
    tensor: Tensor2<RatFunc>,
    vars: Vec<Symbol>,
}

impl SpectralMatrix {
    pub fn new(tensor: Tensor2<RatFunc>) -> Self {
        let vars = Symbol::ALL.into_iter().filter(|s| tensor.uses(*s)).collect();
        SpectralMatrix { tensor, vars }
    }

    /// Construct and check that the declared variables are exactly those used.
    pub fn with_declared(tensor: Tensor2<RatFunc>, declared: &[Symbol]) -> Result<Self> {
        let m = SpectralMatrix::new(tensor);
        let mut d = declared.to_vec();
        d.sort();
        d.dedup();
        if d != m.vars {
            return Err(Error::InvalidStructure(format!("declared variables {d:?} but support uses {:?}", m.vars)));
        }
        Ok(m)
    }

    pub fn tensor(&self) -> &Tensor2<RatFunc> {
        &self.tensor
    }

    pub fn into_tensor(self) -> Tensor2<RatFunc> {
        self.tensor
    }

    pub fn n(&self) -> usize {
        self.tensor.n()
    }

    pub fn variables(&self) -> &[Symbol] {
        &self.vars
    }

    pub fn uses(&self, sym: Symbol) -> bool {
        self.vars.contains(&sym)
    }
}

impl fmt::Display for SpectralMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tensor.fmt(f)
    }
}

/// `X1^e` for rational `e`.
pub fn x1_pow(e: &Rational) -> Result<RatFunc> {
    Ok(LaurentPoly::monomial(&[e.clone(), int(0), int(0), int(0)], int(1))?.into())
}

/// `q^e` with `q = X1^n`.
pub fn q_pow(n: usize, e: &Rational) -> Result<RatFunc> {
    x1_pow(&(e * int(n as i64)))
}

/// `q − q⁻¹` as a polynomial in `X1`.
pub fn q_minus_qinv(n: usize) -> LaurentPoly {
    LaurentPoly::var_pow(Symbol::X1, n as i32).sub(&LaurentPoly::var_pow(Symbol::X1, -(n as i32)))
}

/// `e^v / (1 − e^v) = Y1 / (1 − Y1)`.
pub fn spectral_factor() -> RatFunc {
    let y = LaurentPoly::var_pow(Symbol::Y1, 1);
    RatFunc::new(y.clone(), &LaurentPoly::one().sub(&y)).expect("nonzero denominator")
}

pub(crate) fn half() -> Rational {
    rat(1, 2)
}
