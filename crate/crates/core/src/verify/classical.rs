//! Classical identities: constant and spectral CYBE, unitarity, the projected
//! associative obstruction and the diagonal reconstruction of `T̃`.

use super::report::{VerifyReport, Witness};
use crate::bd::BDTriple;
use super::slots::{aybe_products, aybe_sum, cybe_sum, slot, U, V2, V_SUM};
use crate::builders::SpectralMatrix;
use crate::error::{Error, Result};
use crate::exact::{expand_in_u, rat, RatFunc, Rational, Substitution, Symbol};
use crate::par::Exec;
use crate::tensor::{Scalar, Tensor2, Tensor3};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitarityKind {
    /// `r(v) = −r²¹(−v)`.
    Classical,
    /// `r²¹(−u, −v) = −r(u, v)`.
    Associative,
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]`.
pub fn cybe_residual<S: Scalar>(r: &Tensor2<S>) -> Result<Tensor3<S>> {
    cybe_sum(r, r, r, Exec::default())
}

fn require_only(r: &SpectralMatrix, allowed: &[Symbol], what: &str) -> Result<()> {
    match r.variables().iter().find(|s| !allowed.contains(s)) {
        Some(s) => Err(Error::InvalidStructure(format!("{what} expects a matrix in {allowed:?}, found {s:?}"))),
        None => Ok(()),
    }
}

/// Spectral CYBE with slots `v`, `v + v′`, `v′`.
pub fn cybe_spectral_residual(r: &SpectralMatrix) -> Result<Tensor3<RatFunc>> {
    require_only(r, &[Symbol::Y1], "spectral CYBE")?;
    let t = r.tensor();
    let b = t.substitute(&slot(U, V_SUM))?;
    let c = t.substitute(&slot(U, V2))?;
    cybe_sum(t, &b, &c, Exec::default())
}

/// `r + σ(r)` after inverting the spectral variables, as a residual.
pub fn unitarity_residual(r: &SpectralMatrix, kind: UnitarityKind) -> Result<Tensor2<RatFunc>> {
    let mut sub = Substitution::new().set_monomial(Symbol::Y1, [0, 0, -1, 0]);
    match kind {
        UnitarityKind::Classical => require_only(r, &[Symbol::Y1], "classical unitarity")?,
        UnitarityKind::Associative => {
            require_only(r, &[Symbol::X1, Symbol::Y1], "associative unitarity")?;
            sub = sub.set_monomial(Symbol::X1, [-1, 0, 0, 0]);
        }
    }
    let t = r.tensor();
    Ok(t.add(&t.flip21().substitute(&sub)?))
}

pub fn unitarity_check(r: &SpectralMatrix, kind: UnitarityKind) -> Result<VerifyReport> {
    let name = match kind {
        UnitarityKind::Classical => "unitarity-classical",
        UnitarityKind::Associative => "unitarity",
    };
    Ok(VerifyReport::from_residual2(name, &unitarity_residual(r, kind)?))
}

/// `r¹² r¹³ − r²³ r¹² + r¹³ r²³` for a constant `r`.
pub fn associative_combination<S: Scalar>(r: &Tensor2<S>) -> Result<Tensor3<S>> {
    Ok(aybe_sum(&aybe_products([r; 6], Exec::default())?))
}

/// The associative combination projected to traceless parts on every leg.
pub fn cab_check(r: &Tensor2<Rational>) -> Result<Tensor3<Rational>> {
    Ok(associative_combination(r)?.project_traceless([true; 3]))
}

/// `r̄(v) = (pr ⊗ pr) r` at `u = 0`.
pub fn pr_limit(r: &SpectralMatrix) -> Result<SpectralMatrix> {
    require_only(r, &[Symbol::X1, Symbol::Y1], "projected limit")?;
    let n = r.n();
    let projected = r.tensor().project_traceless([true, true]);
    let limit = projected.try_map(|v| {
        let s = expand_in_u(v, n, 0)?;
        if s.has_pole() {
            return Err(Error::PoleSurvivesProjection);
        }
        Ok(s.coeff(0))
    })?;
    Ok(SpectralMatrix::new(limit))
}

/// `r̄` is a unitary solution of the spectral CYBE.
pub fn pr_limit_check(r: &SpectralMatrix) -> Result<VerifyReport> {
    let bar = pr_limit(r)?;
    let cybe = VerifyReport::from_residual3("cybe-spectral", &cybe_spectral_residual(&bar)?);
    let unit = unitarity_check(&bar, UnitarityKind::Classical)?;
    Ok(VerifyReport::combine("pr-limit", vec![cybe, unit]))
}

/// `t′_ij = t_ij − t_1j − t_i1` for `i, j ≥ 2`, where `t_ij` is the
/// coefficient of `e_ii ⊗ e_jj`.
pub fn t_prime(r: &Tensor2<Rational>, i: usize, j: usize) -> Rational {
    let t = |a: usize, b: usize| r.coeff(&[a, a, b, b]);
    t(i, j) - t(1, j) - t(i, 1)
}

/// Recover `T̃` from the diagonal part of an `r` passing the projected
/// associative check: `t′_{a_i a_j} = ½` for `i < j` orders `2..n`, and
/// `T̃ = (1, a₂, …, aₙ)`.
pub fn reconstruct_tilde_t(r: &Tensor2<Rational>) -> Result<Vec<usize>> {
    let n = r.n();
    let half = rat(1, 2);
    let mut wins: Vec<(usize, usize)> = Vec::new();
    for i in 2..=n {
        let mut count = 0;
        for j in 2..=n {
            if i == j {
                continue;
            }
            let t = t_prime(r, i, j);
            if t == half {
                count += 1;
            } else if t != -half.clone() {
                return Err(Error::NotAssociative(format!("t'_{i}{j} = {t} is not ±1/2")));
            }
        }
        wins.push((count, i));
    }
    // Each element precedes exactly the elements after it.
    wins.sort_by(|a, b| b.cmp(a));
    for (pos, &(count, _)) in wins.iter().enumerate() {
        if count != n - 2 - pos {
            return Err(Error::NotAssociative("t' values are not transitively ordered".into()));
        }
    }
    let order: Vec<usize> = std::iter::once(1).chain(wins.iter().map(|w| w.1)).collect();
    let mut perm = vec![0; n];
    for (k, &a) in order.iter().enumerate() {
        perm[a - 1] = order[(k + 1) % n];
    }
    Ok(perm)
}

/// For `T(α_i) = α_j`, `T(α_{i+1}) = α_{j−1}`, the projected associative
/// combination at rows `(i+2, j−1, j)`, columns `(i, j, j+1)`.
pub fn reversal_witness(t: &BDTriple, cab: &Tensor3<Rational>) -> Option<Witness> {
    t.pairs().find_map(|(i, j)| {
        if j < 2 || t.t(i + 1) != Some(j - 1) {
            return None;
        }
        let key = [i + 2, i, j - 1, j, j, j + 1];
        Some(Witness { index: key.to_vec(), value: cab.coeff(&key).to_string() })
    })
}
