//! The associative Yang-Baxter equation with two spectral parameters and its
//! semiclassical expansion.

use super::report::VerifyReport;
use super::slots::{aybe_products, aybe_sum, commutator, prod, slot, NEG_U2, U, U2, U_SUM, V, V2, V_SUM};
use crate::bd::{BDTriple, SWedge};
use crate::builders::{build_r_ts, hat_r, SpectralMatrix};
use crate::error::{Error, Result};
use crate::exact::{expand_in_u, RatFunc, Symbol};
use crate::par::Exec;
use crate::tensor::{Legs, Tensor2, Tensor3};

/// `r` at the six argument pairs of the equation, in the order
/// `(−u′,v)`, `(u+u′,v+v′)`, `(u+u′,v′)`, `(u,v)`, `(u,v+v′)`, `(u′,v′)`.
pub fn aybe_slots(r: &SpectralMatrix) -> Result<[Tensor2<RatFunc>; 6]> {
    if r.uses(Symbol::X2) || r.uses(Symbol::Y2) {
        return Err(Error::InvalidStructure("AYBE input must be a function of X1, Y1".into()));
    }
    let t = r.tensor();
    Ok([
        t.substitute(&slot(NEG_U2, V))?,
        t.substitute(&slot(U_SUM, V_SUM))?,
        t.substitute(&slot(U_SUM, V2))?,
        t.clone(),
        t.substitute(&slot(U, V_SUM))?,
        t.substitute(&slot(U2, V2))?,
    ])
}

/// `r¹²(−u′,v) r¹³(u+u′,v+v′) − r²³(u+u′,v′) r¹²(u,v) + r¹³(u,v+v′) r²³(u′,v′)`.
pub fn aybe_residual(r: &SpectralMatrix) -> Result<Tensor3<RatFunc>> {
    let s = aybe_slots(r)?;
    Ok(aybe_sum(&aybe_products([&s[0], &s[1], &s[2], &s[3], &s[4], &s[5]], Exec::default())?))
}

/// The same three terms with every product reversed.
pub fn aybe_reversed_residual(r: &SpectralMatrix) -> Result<Tensor3<RatFunc>> {
    let s = aybe_slots(r)?;
    let exec = Exec::default();
    Ok(prod(&s[1], Legs::L13, &s[0], Legs::L12, exec)?
        .sub(&prod(&s[3], Legs::L12, &s[2], Legs::L23, exec)?)
        .add(&prod(&s[5], Legs::L23, &s[4], Legs::L13, exec)?))
}

/// `[r¹²(−u′,v), r¹³(u+u′,v+v′)] + [r¹²(u,v), r²³(u+u′,v′)] + [r¹³(u,v+v′), r²³(u′,v′)]`.
pub fn aybe_commutator_sum(r: &SpectralMatrix) -> Result<Tensor3<RatFunc>> {
    let s = aybe_slots(r)?;
    let exec = Exec::default();
    Ok(commutator(&s[0], Legs::L12, &s[1], Legs::L13, exec)?
        .add(&commutator(&s[3], Legs::L12, &s[2], Legs::L23, exec)?)
        .add(&commutator(&s[4], Legs::L13, &s[5], Legs::L23, exec)?))
}

/// Coefficients of `u^{-1}, …, u^order` of every entry.
pub fn u_coefficients(r: &SpectralMatrix, order: i64) -> Result<Vec<Tensor2<RatFunc>>> {
    let n = r.n();
    let mut out = vec![Tensor2::zero(n); (order + 2) as usize];
    for (key, v) in r.tensor().iter() {
        let s = expand_in_u(v, n, order)?;
        for (k, c) in s.coeffs().iter().enumerate() {
            out[k].insert(*key, c.clone());
        }
    }
    Ok(out)
}

/// `r = 1⊗1/u + r̂_{T,s}(v) + O(u)`.
pub fn check_lift(r: &SpectralMatrix, t: &BDTriple, s: &SWedge) -> Result<VerifyReport> {
    let c = u_coefficients(r, 0)?;
    let pole = c[0].sub(&Tensor2::identity(r.n()));
    let hat = hat_r(&build_r_ts(t, s)?.tensor);
    let constant = c[1].sub(hat.tensor());
    Ok(VerifyReport::combine(
        "lift",
        vec![VerifyReport::from_residual2("lift-u^-1", &pole), VerifyReport::from_residual2("lift-u^0", &constant)],
    ))
}

/// `(r₀, r₁)` from `r = 1⊗1/u + r₀(v) + u r₁(v) + O(u²)`.
pub fn semiclassical_parts(r: &SpectralMatrix) -> Result<(SpectralMatrix, SpectralMatrix)> {
    let mut c = u_coefficients(r, 1)?;
    let r1 = c.pop().expect("three coefficients");
    let r0 = c.pop().expect("three coefficients");
    Ok((SpectralMatrix::new(r0), SpectralMatrix::new(r1)))
}

/// `r₀¹²(v) r₀¹³(v+v′) − r₀²³(v′) r₀¹²(v) + r₀¹³(v+v′) r₀²³(v′)
///  − r₁¹²(v) − r₁²³(v′) − r₁¹³(v+v′)`.
pub fn r01_residual(r0: &SpectralMatrix, r1: &SpectralMatrix) -> Result<Tensor3<RatFunc>> {
    for m in [r0, r1] {
        if m.variables().iter().any(|s| *s != Symbol::Y1) {
            return Err(Error::InvalidStructure("r0, r1 must be functions of Y1".into()));
        }
    }
    let (a, b, c) = spectral_slots(r0.tensor())?;
    let lhs = aybe_sum(&aybe_products([&a, &b, &c, &a, &b, &c], Exec::default())?);
    let (x, y, z) = spectral_slots(r1.tensor())?;
    let rhs = Tensor3::embed(&x, Legs::L12).add(&Tensor3::embed(&z, Legs::L23)).add(&Tensor3::embed(&y, Legs::L13));
    Ok(lhs.sub(&rhs))
}

pub fn check_r01(r0: &SpectralMatrix, r1: &SpectralMatrix) -> Result<VerifyReport> {
    Ok(VerifyReport::from_residual3("r01", &r01_residual(r0, r1)?))
}

/// `t` at `v`, `v + v′`, `v′`.
fn spectral_slots(t: &Tensor2<RatFunc>) -> Result<(Tensor2<RatFunc>, Tensor2<RatFunc>, Tensor2<RatFunc>)> {
    Ok((t.clone(), t.substitute(&slot(U, V_SUM))?, t.substitute(&slot(U, V2))?))
}
