use crate::bd::{orientation_c, prec_pairs, satisfies_tr02, BDTriple, SWedge};
use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, RatFunc, Rational, Symbol};
use crate::tensor::Tensor2;

use super::spectral::{half, SpectralMatrix};

/// `r_{T,s}` together with the data it was built from.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalRMatrix {
    pub tensor: Tensor2<Rational>,
    pub triple: BDTriple,
    pub s: SWedge,
}

/// `½ Σ e_ii ⊗ e_ii + Σ_{i<j} e_ji ⊗ e_ij`.
pub fn build_rst(n: usize) -> Tensor2<Rational> {
    let mut t = Tensor2::zero(n);
    for i in 1..=n {
        t.insert([i, i, i, i], half());
        for j in (i + 1)..=n {
            t.insert([j, i, i, j], int(1));
        }
    }
    t
}

/// Sign `(−1)^{C(|α|−1)}` for a `≺`-pair.
pub(crate) fn pair_sign_exponent(t: &BDTriple, alpha: crate::bd::Root, beta: crate::bd::Root) -> Result<i64> {
    let c = orientation_c(t, alpha, beta)? as i64;
    Ok(c * (alpha.height() as i64 - 1))
}

/// `Σ_{α≺β} (−1)^{C(|α|−1)} (e_{−α} ⊗ e_β − e_β ⊗ e_{−α})`.
pub fn build_a(t: &BDTriple) -> Result<Tensor2<Rational>> {
    let mut a = Tensor2::zero(t.n());
    for (alpha, beta, _) in prec_pairs(t) {
        let e = pair_sign_exponent(t, alpha, beta)?;
        let sign = if e % 2 == 0 { int(1) } else { int(-1) };
        a.add_to([alpha.j, alpha.i, beta.i, beta.j], &sign);
        a.add_to([beta.i, beta.j, alpha.j, alpha.i], &-sign);
    }
    Ok(a)
}

/// `r_{T,s} = s + a + r_st`.
pub fn build_r_ts(t: &BDTriple, s: &SWedge) -> Result<ClassicalRMatrix> {
    if s.n() != t.n() {
        return Err(Error::SizeMismatch(s.n(), t.n()));
    }
    if !satisfies_tr02(t, s) {
        return Err(Error::SNotSolution(format!("s does not solve the linear system for {t}")));
    }
    let tensor = s.to_tensor().add(&build_a(t)?).add(&build_rst(t.n()));
    if tensor.add(&tensor.flip21()) != Tensor2::perm(t.n()) {
        return Err(Error::Internal("r + r21 != P".into()));
    }
    Ok(ClassicalRMatrix { tensor, triple: t.clone(), s: s.clone() })
}

/// `(r + e^v r²¹) / (1 − e^v)`.
pub fn hat_r(r: &Tensor2<Rational>) -> SpectralMatrix {
    let y = LaurentPoly::var_pow(Symbol::Y1, 1);
    let den = LaurentPoly::one().sub(&y);
    let r = r.to_ratfunc();
    let sum = r.add(&r.flip21().map(|v| v.mul_poly(&y)));
    SpectralMatrix::new(sum.map(|v| v.div_poly(&den).expect("nonzero denominator")))
}

/// Promote a constant matrix.
pub fn constant_spectral(r: &Tensor2<Rational>) -> SpectralMatrix {
    SpectralMatrix::new(r.map(|v| RatFunc::constant(v.clone())))
}
