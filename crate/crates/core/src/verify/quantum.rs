//! Quantum Yang-Baxter equation and the Hecke condition, `q = X1^n`.

use super::slots::{hecke_product, qybe_products, slot, U, V2, V_SUM};
use crate::builders::{q_pow, SpectralMatrix};
use crate::error::Result;
use crate::exact::{int, RatFunc};
use crate::par::Exec;
use crate::tensor::{Tensor2, Tensor3};

/// `R¹² R¹³ R²³ − R²³ R¹³ R¹²`; a `Y1` dependence is read as the spectral
/// parameter with slots `v`, `v + v′`, `v′`.
pub fn qybe_residual(r: &SpectralMatrix) -> Result<Tensor3<RatFunc>> {
    let t = r.tensor();
    let (b, c) = (t.substitute(&slot(U, V_SUM))?, t.substitute(&slot(U, V2))?);
    let [lhs, rhs] = qybe_products(t, &b, &c, Exec::default())?;
    Ok(lhs.sub(&rhs))
}

/// `(P R − q)(P R + q⁻¹)`.
pub fn hecke_residual(r: &SpectralMatrix) -> Result<Tensor2<RatFunc>> {
    let n = r.n();
    hecke_product(r.tensor(), &q_pow(n, &int(1))?, &q_pow(n, &int(-1))?, Exec::default())
}
