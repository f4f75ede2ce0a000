//! Spectral-parameter slot substitutions and the shared triple-product sums.

use crate::error::Result;
use crate::exact::{Substitution, Symbol};
use crate::par::Exec;
use crate::tensor::{mul_embedded, Legs, Scalar, Tensor2, Tensor3};

/// `(u, v) ↦ (a·u + b·u′, c·v + d·v′)` as a monomial substitution on `X1, Y1`.
pub(crate) fn slot(u: [i32; 2], v: [i32; 2]) -> Substitution {
    Substitution::new()
        .set_monomial(Symbol::X1, [u[0], u[1], 0, 0])
        .set_monomial(Symbol::Y1, [0, 0, v[0], v[1]])
}

pub(crate) const U: [i32; 2] = [1, 0];
pub(crate) const U2: [i32; 2] = [0, 1];
pub(crate) const U_SUM: [i32; 2] = [1, 1];
pub(crate) const NEG_U2: [i32; 2] = [0, -1];
pub(crate) const V: [i32; 2] = [1, 0];
pub(crate) const V2: [i32; 2] = [0, 1];
pub(crate) const V_SUM: [i32; 2] = [1, 1];

/// `x y` with `x`, `y` placed on the given legs.
pub(crate) fn prod<S: Scalar>(x: &Tensor2<S>, lx: Legs, y: &Tensor2<S>, ly: Legs, exec: Exec) -> Result<Tensor3<S>> {
    mul_embedded(x, lx, y, ly, exec)
}

/// `[x, y]` with `x`, `y` placed on the given legs.
pub(crate) fn commutator<S: Scalar>(x: &Tensor2<S>, lx: Legs, y: &Tensor2<S>, ly: Legs, exec: Exec) -> Result<Tensor3<S>> {
    Ok(prod(x, lx, y, ly, exec)?.sub(&prod(y, ly, x, lx, exec)?))
}

/// `[a¹², b¹³] + [a¹², c²³] + [b¹³, c²³]`.
pub(crate) fn cybe_sum<S: Scalar>(a: &Tensor2<S>, b: &Tensor2<S>, c: &Tensor2<S>, exec: Exec) -> Result<Tensor3<S>> {
    Ok(commutator(a, Legs::L12, b, Legs::L13, exec)?
        .add(&commutator(a, Legs::L12, c, Legs::L23, exec)?)
        .add(&commutator(b, Legs::L13, c, Legs::L23, exec)?))
}

/// The three products `a¹² b¹³`, `c²³ d¹²`, `e¹³ f²³` of the associative
/// equation; the residual is `p₀ − p₁ + p₂`.
pub(crate) fn aybe_products<S: Scalar>(t: [&Tensor2<S>; 6], exec: Exec) -> Result<[Tensor3<S>; 3]> {
    Ok([
        prod(t[0], Legs::L12, t[1], Legs::L13, exec)?,
        prod(t[2], Legs::L23, t[3], Legs::L12, exec)?,
        prod(t[4], Legs::L13, t[5], Legs::L23, exec)?,
    ])
}

pub(crate) fn aybe_sum<S: Scalar>(p: &[Tensor3<S>; 3]) -> Tensor3<S> {
    p[0].sub(&p[1]).add(&p[2])
}

/// `x¹² y¹³ z²³`, `z²³ y¹³ x¹²`.
pub(crate) fn qybe_products<S: Scalar>(x: &Tensor2<S>, y: &Tensor2<S>, z: &Tensor2<S>, exec: Exec) -> Result<[Tensor3<S>; 2]> {
    let lhs = prod(x, Legs::L12, y, Legs::L13, exec)?.mul_embedded(z, Legs::L23, exec)?;
    let rhs = prod(z, Legs::L23, y, Legs::L13, exec)?.mul_embedded(x, Legs::L12, exec)?;
    Ok([lhs, rhs])
}

/// `(P R − q)(P R + q⁻¹)` given `q` and `q⁻¹` as scalars.
pub(crate) fn hecke_product<S: Scalar>(r: &Tensor2<S>, q: &S, q_inv: &S, exec: Exec) -> Result<Tensor2<S>> {
    let n = r.n();
    let pr = Tensor2::<S>::perm(n).mul_with(r, exec)?;
    let id = Tensor2::<S>::identity(n);
    pr.sub(&id.scale(q)).mul_with(&pr.add(&id.scale(q_inv)), exec)
}
