use crate::bd::{admissible_phi, prec_pairs, ps_constant, AssocStructure, BDTriple, SWedge};
use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, RatFunc, Symbol};
use crate::tensor::{DiagMatrix, Tensor2};

use super::classical::pair_sign_exponent;
use super::spectral::{q_minus_qinv, q_pow, spectral_factor, x1_pow, SpectralMatrix};

/// `q Σ e_ii ⊗ e_ii + Σ_{i≠j} e_ii ⊗ e_jj + (q − q⁻¹) Σ_{α>0} e_{−α} ⊗ e_α`.
pub fn build_r_st_quantum(n: usize) -> SpectralMatrix {
    SpectralMatrix::new(r_st_tensor(n))
}

fn r_st_tensor(n: usize) -> Tensor2<RatFunc> {
    let q = RatFunc::var_pow(Symbol::X1, n as i32);
    let d = RatFunc::from(q_minus_qinv(n));
    let mut t = Tensor2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            t.insert([i, i, j, j], if i == j { q.clone() } else { RatFunc::one() });
            if i < j {
                t.insert([j, i, i, j], d.clone());
            }
        }
    }
    t
}

/// `q^s (e_ab ⊗ e_cd) q^s = q^{s_ac + s_bd} e_ab ⊗ e_cd`.
fn conjugate_q_s(t: &Tensor2<RatFunc>, s: &SWedge) -> Result<Tensor2<RatFunc>> {
    let n = t.n();
    let mut out = Tensor2::zero(n);
    for (&[a, b, c, d], v) in t.iter() {
        let e = s.get(a, c) + s.get(b, d);
        out.insert([a, b, c, d], v.mul(&q_pow(n, &e)?));
    }
    Ok(out)
}

/// The general GGS formula.
pub fn build_r_ggs_general(t: &BDTriple, s: &SWedge) -> Result<SpectralMatrix> {
    let n = t.n();
    if s.n() != n {
        return Err(Error::SizeMismatch(s.n(), n));
    }
    let d = RatFunc::from(q_minus_qinv(n));
    let mut inner = r_st_tensor(n);
    for (alpha, beta, _) in prec_pairs(t) {
        let ch = pair_sign_exponent(t, alpha, beta)?;
        let ps = ps_constant(t, alpha, beta)?;
        let sign = if ch % 2 == 0 { int(1) } else { int(-1) };
        let lo = q_pow(n, &(-int(ch) - &ps))?;
        let hi = q_pow(n, &(int(ch) + &ps))?;
        inner.add_to([alpha.j, alpha.i, beta.i, beta.j], &d.mul(&lo).scale_by(&sign));
        inner.add_to([beta.i, beta.j, alpha.j, alpha.i], &d.mul(&hi).scale_by(&-sign));
    }
    Ok(SpectralMatrix::new(conjugate_q_s(&inner, s)?))
}

/// The closed formula for an associative structure.
pub fn build_r_ggs_assoc(a: &AssocStructure, s: &SWedge) -> Result<SpectralMatrix> {
    let phi = admissible_phi(a, s)?;
    let n = a.n();
    let d = RatFunc::from(q_minus_qinv(n));
    let mut inner = Tensor2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            inner.insert([i, i, j, j], x1_pow(&int(n as i64 - 2 * a.o(i, j) as i64))?);
            if i < j {
                inner.insert([j, i, i, j], d.clone());
            }
        }
    }
    for (alpha, beta, _) in prec_pairs(a.triple()) {
        let o = int(2 * a.o_roots(alpha, beta) as i64);
        inner.add_to([alpha.j, alpha.i, beta.i, beta.j], &d.mul(&x1_pow(&-o.clone())?));
        inner.add_to([beta.i, beta.j, alpha.j, alpha.i], &d.mul(&x1_pow(&o)?).neg());
    }
    Ok(SpectralMatrix::new(conjugate_q_s(&inner, &SWedge::from_phi(&phi))?))
}

/// `R + e^v/(1 − e^v) (q − q⁻¹) P`.
pub fn baxterize(r: &SpectralMatrix) -> SpectralMatrix {
    let n = r.n();
    let c = spectral_factor().mul_poly(&q_minus_qinv(n));
    SpectralMatrix::new(r.tensor().add(&Tensor2::perm(n).scale(&c)))
}

/// `y(u)` for an associative structure.
pub fn build_y(a: &AssocStructure) -> Result<SpectralMatrix> {
    let n = a.n();
    let den = LaurentPoly::one().sub(&LaurentPoly::var_pow(Symbol::X1, -2 * n as i32));
    let mut t = Tensor2::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            t.insert([i, i, j, j], x1_pow(&int(-2 * a.o(i, j) as i64))?.div_poly(&den)?);
            if i < j {
                t.insert([j, i, i, j], RatFunc::one());
            }
        }
    }
    for (alpha, beta, _) in prec_pairs(a.triple()) {
        let o = int(2 * a.o_roots(alpha, beta) as i64);
        t.add_to([alpha.j, alpha.i, beta.i, beta.j], &x1_pow(&-o.clone())?);
        t.add_to([beta.i, beta.j, alpha.j, alpha.i], &x1_pow(&o)?.neg());
    }
    Ok(SpectralMatrix::new(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuvFormula {
    /// `e^v/(1−e^v) P + R_GGS(e^{u/2}) / (e^{u/2} − e^{−u/2})`.
    Afgq,
    /// `e^v/(1−e^v) P + e^{−Φ²u} y(u) e^{Φ¹u}`.
    Gruv,
}

/// The associative r-matrix `r(u, v)`.
pub fn build_r_uv(a: &AssocStructure, s: &SWedge, formula: RuvFormula) -> Result<SpectralMatrix> {
    let n = a.n();
    let p = Tensor2::perm(n).scale(&spectral_factor());
    let body = match formula {
        RuvFormula::Afgq => {
            let r = build_r_ggs_assoc(a, s)?;
            let d = q_minus_qinv(n);
            r.tensor().try_map(|v| v.div_poly(&d))?
        }
        RuvFormula::Gruv => {
            let phi = admissible_phi(a, s)?;
            build_y(a)?.tensor().gauge_conjugate(&phi)?
        }
    };
    Ok(SpectralMatrix::new(p.add(&body)))
}

/// Both formulas, checked equal.
pub fn build_r_uv_checked(a: &AssocStructure, s: &SWedge) -> Result<SpectralMatrix> {
    let x = build_r_uv(a, s, RuvFormula::Afgq)?;
    let y = build_r_uv(a, s, RuvFormula::Gruv)?;
    if x != y {
        return Err(Error::Internal(format!("afgq and gruv disagree for {a}")));
    }
    Ok(x)
}

/// `s₀ + Φ ⊗ 1 − 1 ⊗ Φ`.
pub fn s_with_phi(a: &AssocStructure, phi: &DiagMatrix) -> SWedge {
    crate::bd::s0_from_structure(a).add(&SWedge::from_phi(phi))
}

