//! Elements of `h ∧ h` and the linear conditions they satisfy.

use num_traits::Zero;

use super::assoc::AssocStructure;
use super::linalg::{nullspace, solve_affine};
use super::triple::{BDTriple, Root};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};
use crate::tensor::{DiagMatrix, Tensor2};

/// Antisymmetric `s = Σ s_ij e_ii ⊗ e_jj`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SWedge {
    entries: Vec<Vec<Rational>>,
}

impl SWedge {
    pub fn zero(n: usize) -> Self {
        SWedge { entries: vec![vec![Rational::zero(); n]; n] }
    }

    /// From the strictly upper triangle, row by row.
    pub fn from_upper(n: usize, upper: &[Rational]) -> Self {
        let mut s = SWedge::zero(n);
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                s.entries[i][j] = upper[k].clone();
                s.entries[j][i] = -upper[k].clone();
                k += 1;
            }
        }
        s
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        for i in 0..n {
            if rows[i].len() != n {
                return Err(Error::Parse("s must be square".into()));
            }
            for j in 0..n {
                if rows[i][j] != -rows[j][i].clone() {
                    return Err(Error::Parse("s must be antisymmetric".into()));
                }
            }
        }
        Ok(SWedge { entries: rows })
    }

    /// `Φ ⊗ 1 − 1 ⊗ Φ`.
    pub fn from_phi(phi: &DiagMatrix) -> Self {
        let e = phi.entries();
        SWedge { entries: e.iter().map(|a| e.iter().map(|b| a - b).collect()).collect() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// `s_ij`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn upper(&self) -> Vec<Rational> {
        let n = self.n();
        (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).map(|(i, j)| self.entries[i][j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &SWedge) -> SWedge {
        SWedge { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect()).collect() }
    }

    pub fn sub(&self, other: &SWedge) -> SWedge {
        SWedge { entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect()).collect() }
    }

    pub fn scale(&self, c: &Rational) -> SWedge {
        SWedge { entries: self.entries.iter().map(|a| a.iter().map(|x| x * c).collect()).collect() }
    }

    pub fn to_tensor(&self) -> Tensor2<Rational> {
        let n = self.n();
        let mut t = Tensor2::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                t.insert([i, i, j, j], self.get(i, j).clone());
            }
        }
        t
    }

    /// `(pr ⊗ pr) s`.
    pub fn project(&self) -> SWedge {
        let n = self.n();
        let nn = int(n as i64);
        let r: Vec<Rational> = self.entries.iter().map(|row| row.iter().sum::<Rational>() / &nn).collect();
        SWedge {
            entries: (0..n).map(|i| (0..n).map(|j| &self.entries[i][j] - &r[i] + &r[j]).collect()).collect(),
        }
    }

    /// `Φ` with zero trace such that `s − (pr ⊗ pr) s = Φ ⊗ 1 − 1 ⊗ Φ`, if it exists.
    pub fn phi_part(&self) -> Option<DiagMatrix> {
        let n = self.n();
        let nn = int(n as i64);
        let phi = DiagMatrix::new(self.entries.iter().map(|row| row.iter().sum::<Rational>() / &nn).collect());
        let rest = self.sub(&SWedge::from_phi(&phi));
        (rest == rest.project()).then_some(phi)
    }
}

/// `s₀` with entries `1/2 − O(i,j)/n`.
pub fn s0_from_structure(a: &AssocStructure) -> SWedge {
    let n = a.n();
    let mut s = SWedge::zero(n);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                s.entries[i - 1][j - 1] = rat(1, 2) - rat(a.o(i, j) as i64, n as i64);
            }
        }
    }
    s
}

/// `[(e_i − e_{T̃ i}) ⊗ 1] s₀ = ½ [(e_i + e_{T̃ i}) ⊗ 1] (pr ⊗ pr) P⁰` for all `i`.
pub fn check_tra(s0: &SWedge, a: &AssocStructure) -> bool {
    let n = a.n();
    let inv_n = rat(1, n as i64);
    (1..=n).all(|i| {
        let ti = a.tilde_t()[i - 1];
        (1..=n).all(|j| {
            let lhs = s0.get(i, j) - s0.get(ti, j);
            let delta = |x: usize| if x == j { int(1) } else { int(0) };
            let rhs = (delta(i) + delta(ti) - &inv_n * int(2)) * rat(1, 2);
            lhs == rhs
        })
    })
}

/// Equations `[(α − Tα) ⊗ 1] s = ½ [(α + Tα) ⊗ 1] P⁰` in the unknowns `s_ij`, `i < j`.
fn tr02_system(t: &BDTriple) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let n = t.n();
    let idx = |i: usize, j: usize| -> (usize, Rational) {
        // position of s_{min,max} in the upper triangle, with sign
        let (a, b, sign) = if i < j { (i, j, int(1)) } else { (j, i, int(-1)) };
        let pos = (a - 1) * n - (a - 1) * a / 2 + (b - a - 1);
        (pos, sign)
    };
    let cols = n * (n - 1) / 2;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (a, b) in t.pairs() {
        let alpha = Root::simple(a).weights(n);
        let talpha = Root::simple(b).weights(n);
        for j in 1..=n {
            let mut row = vec![Rational::zero(); cols];
            for i in 1..=n {
                let w = &alpha[i - 1] - &talpha[i - 1];
                if i != j && !w.is_zero() {
                    let (p, sign) = idx(i, j);
                    row[p] += w * sign;
                }
            }
            rows.push(row);
            rhs.push((&alpha[j - 1] + &talpha[j - 1]) * rat(1, 2));
        }
    }
    (rows, rhs)
}

/// Whether `s` satisfies the linear system attached to `t`.
pub fn satisfies_tr02(t: &BDTriple, s: &SWedge) -> bool {
    let (rows, rhs) = tr02_system(t);
    let x = s.upper();
    rows.iter().zip(&rhs).all(|(r, b)| r.iter().zip(&x).map(|(p, q)| p * q).sum::<Rational>() == *b)
}

/// Affine solution space of the `s` system: `(particular, basis)`.
pub fn solve_s_system(t: &BDTriple) -> Result<(SWedge, Vec<SWedge>)> {
    let n = t.n();
    let (rows, rhs) = tr02_system(t);
    let sol = solve_affine(&rows, &rhs, n * (n - 1) / 2).ok_or_else(|| Error::Internal(format!("s system inconsistent for {t}")))?;
    Ok((SWedge::from_upper(n, &sol.particular), sol.basis.iter().map(|b| SWedge::from_upper(n, b)).collect()))
}

/// Particular solution followed by particular + each basis vector.
pub fn s_samples(t: &BDTriple) -> Result<Vec<SWedge>> {
    let (p, basis) = solve_s_system(t)?;
    let mut out = vec![p.clone()];
    out.extend(basis.iter().map(|b| p.add(b)));
    Ok(out)
}

/// Basis of `{Φ : (α, Φ) = (Tα, Φ) for α ∈ Γ₁}`.
pub fn phi_space(t: &BDTriple) -> Vec<DiagMatrix> {
    let n = t.n();
    let rows: Vec<Vec<Rational>> = t
        .pairs()
        .map(|(a, b)| {
            let mut row = vec![Rational::zero(); n];
            row[a - 1] += int(1);
            row[a] -= int(1);
            row[b - 1] -= int(1);
            row[b] += int(1);
            row
        })
        .collect();
    nullspace(&rows, n).into_iter().map(DiagMatrix::new).collect()
}

/// Whether `Φ` satisfies `(α, Φ) = (Tα, Φ)` on `Γ₁`.
pub fn phi_admissible(t: &BDTriple, phi: &DiagMatrix) -> bool {
    let e = phi.entries();
    t.pairs().all(|(a, b)| &e[a - 1] - &e[a] == &e[b - 1] - &e[b])
}

/// The `Φ` with `s − s₀ = Φ¹ − Φ²`, checked admissible.
pub fn admissible_phi(a: &AssocStructure, s: &SWedge) -> Result<DiagMatrix> {
    if s.n() != a.n() {
        return Err(Error::SizeMismatch(s.n(), a.n()));
    }
    let d = s.sub(&s0_from_structure(a));
    let phi = d
        .phi_part()
        .filter(|phi| SWedge::from_phi(phi) == d)
        .ok_or_else(|| Error::InadmissibleS("s - s0 is not of the form Phi(x)1 - 1(x)Phi".into()))?;
    if !phi_admissible(a.triple(), &phi) {
        return Err(Error::InadmissibleS("Phi violates (alpha, Phi) = (T alpha, Phi)".into()));
    }
    Ok(phi)
}
