use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_complex::Complex64;

use super::scalar::Scalar;
use super::DiagMatrix;
use crate::error::{Error, Result};
use crate::exact::{int, LaurentPoly, RatFunc, Rational, Substitution, Symbol};
use crate::par::Exec;

/// `(i, j, k, l)`, the coefficient of `e_ij ⊗ e_kl`, 1-based.
pub type Key2 = [usize; 4];

/// Sparse element of `Mat_n ⊗ Mat_n`.
#[derive(Clone, Debug)]
pub struct Tensor2<S> {
    n: usize,
    coeffs: BTreeMap<Key2, S>,
}

impl<S: Scalar> PartialEq for Tensor2<S> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sub(other).is_zero()
    }
}

impl<S: Scalar> Tensor2<S> {
    pub fn zero(n: usize) -> Self {
        Tensor2 { n, coeffs: BTreeMap::new() }
    }

    /// `1 ⊗ 1`.
    pub fn identity(n: usize) -> Self {
        let mut t = Self::zero(n);
        for i in 1..=n {
            for k in 1..=n {
                t.coeffs.insert([i, i, k, k], S::one());
            }
        }
        t
    }

    /// The flip `P = Σ e_ij ⊗ e_ji`.
    pub fn perm(n: usize) -> Self {
        let mut t = Self::zero(n);
        for i in 1..=n {
            for j in 1..=n {
                t.coeffs.insert([i, j, j, i], S::one());
            }
        }
        t
    }

    /// `P⁰ = Σ e_ii ⊗ e_ii`.
    pub fn p0(n: usize) -> Self {
        let mut t = Self::zero(n);
        for i in 1..=n {
            t.coeffs.insert([i, i, i, i], S::one());
        }
        t
    }

    /// `c · e_ij ⊗ e_kl`.
    pub fn unit(n: usize, key: Key2, c: S) -> Self {
        let mut t = Self::zero(n);
        t.insert(key, c);
        t
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Key2, S)>) -> Self {
        let mut t = Self::zero(n);
        for (k, v) in terms {
            t.add_to(k, &v);
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, key: &Key2) -> Option<&S> {
        self.coeffs.get(key)
    }

    pub fn coeff(&self, key: &Key2) -> S {
        self.coeffs.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key2, &S)> {
        self.coeffs.iter()
    }

    fn check_key(&self, key: &Key2) {
        assert!(key.iter().all(|&x| x >= 1 && x <= self.n), "index {key:?} out of range for n = {}", self.n);
    }

    /// Set a coefficient, dropping it when zero.
    pub fn insert(&mut self, key: Key2, v: S) {
        self.check_key(&key);
        if v.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, v);
        }
    }

    pub fn add_to(&mut self, key: Key2, v: &S) {
        if v.is_zero() {
            return;
        }
        self.check_key(&key);
        match self.coeffs.get_mut(&key) {
            Some(c) => {
                let s = c.add(v);
                if s.is_zero() {
                    self.coeffs.remove(&key);
                } else {
                    *c = s;
                }
            }
            None => {
                self.coeffs.insert(key, v.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_to(*k, v);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_to(*k, &v.neg());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|v| v.mul(c))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor2<T> {
        let mut out = Tensor2::zero(self.n);
        for (k, v) in &self.coeffs {
            out.insert(*k, f(v));
        }
        out
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Tensor2<T>> {
        let mut out = Tensor2::zero(self.n);
        for (k, v) in &self.coeffs {
            out.insert(*k, f(v)?);
        }
        Ok(out)
    }

    /// Leg-wise matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(other, Exec::default())
    }

    pub fn mul_with(&self, other: &Self, exec: Exec) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut by_rows: HashMap<(usize, usize), Vec<(usize, usize, &S)>> = HashMap::new();
        for ([j, m, l, p], v) in &other.coeffs {
            by_rows.entry((*j, *l)).or_default().push((*m, *p, v));
        }
        let buckets = bucket_by_first(&self.coeffs, self.n);
        let parts = exec.map(&buckets, |terms| {
            let mut acc: BTreeMap<Key2, S> = BTreeMap::new();
            for (&[i, j, k, l], a) in terms {
                if let Some(bs) = by_rows.get(&(j, l)) {
                    for (m, p, b) in bs {
                        accumulate(&mut acc, [i, *m, k, *p], a.mul(b));
                    }
                }
            }
            acc
        });
        Ok(Tensor2 { n: self.n, coeffs: parts.into_iter().flatten().collect() })
    }

    /// Swap the two legs: `e_ij ⊗ e_kl ↦ e_kl ⊗ e_ij`.
    pub fn flip21(&self) -> Self {
        Tensor2 { n: self.n, coeffs: self.coeffs.iter().map(|(&[i, j, k, l], v)| ([k, l, i, j], v.clone())).collect() }
    }

    /// Apply `M ↦ M − (tr M / n)·1` on the selected legs.
    pub fn project_traceless(&self, legs: [bool; 2]) -> Self {
        let mut t = self.clone();
        let inv_n = S::from_rational(&Rational::new(1.into(), (self.n as i64).into()));
        if legs[0] {
            let mut traces: BTreeMap<(usize, usize), S> = BTreeMap::new();
            for (&[i, j, k, l], v) in &t.coeffs {
                if i == j {
                    let e = traces.entry((k, l)).or_insert_with(S::zero);
                    *e = e.add(v);
                }
            }
            for ((k, l), tr) in traces {
                let d = tr.mul(&inv_n).neg();
                for a in 1..=self.n {
                    t.add_to([a, a, k, l], &d);
                }
            }
        }
        if legs[1] {
            let mut traces: BTreeMap<(usize, usize), S> = BTreeMap::new();
            for (&[i, j, k, l], v) in &t.coeffs {
                if k == l {
                    let e = traces.entry((i, j)).or_insert_with(S::zero);
                    *e = e.add(v);
                }
            }
            for ((i, j), tr) in traces {
                let d = tr.mul(&inv_n).neg();
                for a in 1..=self.n {
                    t.add_to([i, j, a, a], &d);
                }
            }
        }
        t
    }

    /// `Σ w1_i w2_j · coeff(i,i,j,j)`.
    pub fn weight_contract(&self, w1: &[Rational], w2: &[Rational]) -> S {
        let mut acc = S::zero();
        for (&[i, j, k, l], v) in &self.coeffs {
            if i == j && k == l {
                let w = &w1[i - 1] * &w2[k - 1];
                acc = acc.add(&v.mul(&S::from_rational(&w)));
            }
        }
        acc
    }

    /// Lexicographically least nonzero coefficient.
    pub fn witness(&self) -> Option<(Key2, &S)> {
        self.coeffs.iter().next().map(|(k, v)| (*k, v))
    }

    /// Every nonzero `(i,j,k,l)` has `i + k = j + l`.
    pub fn is_weight_zero(&self) -> bool {
        self.coeffs.keys().all(|[i, j, k, l]| i + k == j + l)
    }
}

impl Tensor2<RatFunc> {
    /// `e^{−Φ²u} t e^{Φ¹u}` with `u = 2n·log X1`.
    pub fn gauge_conjugate(&self, phi: &DiagMatrix) -> Result<Self> {
        if phi.n() != self.n {
            return Err(Error::SizeMismatch(phi.n(), self.n));
        }
        let two_n = Rational::from_integer((2 * self.n as i64).into());
        let mut out = Tensor2::zero(self.n);
        for (&[a, b, c, d], v) in &self.coeffs {
            let e = (&phi.entries()[b - 1] - &phi.entries()[c - 1]) * &two_n;
            let m = LaurentPoly::monomial(&[e, int(0), int(0), int(0)], int(1))?;
            out.insert([a, b, c, d], v.mul_poly(&m));
        }
        Ok(out)
    }

    pub fn substitute(&self, sub: &Substitution) -> Result<Self> {
        self.try_map(|v| crate::exact::substitute(v, sub))
    }

    pub fn eval_log(&self, logs: &[Complex64; 4]) -> Tensor2<Complex64> {
        self.map(|v| v.eval_log(logs))
    }

    pub fn uses(&self, sym: Symbol) -> bool {
        self.coeffs.values().any(|v| v.uses(sym))
    }
}

impl Tensor2<Rational> {
    pub fn to_ratfunc(&self) -> Tensor2<RatFunc> {
        self.map(|v| RatFunc::constant(v.clone()))
    }
}

pub(crate) fn accumulate<K: Ord, S: Scalar>(acc: &mut BTreeMap<K, S>, key: K, v: S) {
    use std::collections::btree_map::Entry;
    match acc.entry(key) {
        Entry::Occupied(mut e) => {
            let s = e.get().add(&v);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
        Entry::Vacant(e) => {
            if !v.is_zero() {
                e.insert(v);
            }
        }
    }
}

/// Split terms by their first index so that workers produce disjoint keys.
pub(crate) fn bucket_by_first<const N: usize, S>(coeffs: &BTreeMap<[usize; N], S>, n: usize) -> Vec<Vec<(&[usize; N], &S)>> {
    let mut buckets: Vec<Vec<(&[usize; N], &S)>> = vec![Vec::new(); n];
    for (k, v) in coeffs {
        buckets[k[0] - 1].push((k, v));
    }
    buckets
}

impl<S: Scalar + fmt::Display> fmt::Display for Tensor2<S> {
    /// Terms `c·t_{ik}^{jl}`: rows below, columns above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, ([i, j, k, l], v)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "t_{{{i}{k}}}^{{{j}{l}}} = {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    type T = Tensor2<Rational>;

    #[test]
    fn perm_squares_to_identity() {
        for n in 1..5 {
            assert_eq!(T::perm(n).mul(&T::perm(n)).unwrap(), T::identity(n));
        }
    }

    #[test]
    fn perm_swaps_rank_one_factors() {
        // w ⊗ v as rank-one operators e_ax ⊗ e_by; P·(w ⊗ v) = v ⊗ w.
        let n = 3;
        for a in 1..=n {
            for b in 1..=n {
                let wv = T::unit(n, [a, 1, b, 2], rat(1, 1));
                let vw = T::unit(n, [b, 1, a, 2], rat(1, 1));
                assert_eq!(T::perm(n).mul(&wv).unwrap(), vw);
            }
        }
    }

    #[test]
    fn orthogonal_idempotents() {
        let a = T::unit(2, [1, 1, 1, 1], rat(1, 1));
        let b = T::unit(2, [2, 2, 2, 2], rat(1, 1));
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn size_mismatch() {
        assert_eq!(T::perm(2).mul(&T::perm(3)), Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn flips() {
        assert_eq!(T::perm(3).flip21(), T::perm(3));
        let t = T::unit(4, [1, 2, 3, 4], rat(2, 3));
        assert_eq!(t.flip21(), T::unit(4, [3, 4, 1, 2], rat(2, 3)));
    }

    #[test]
    fn traceless_projection() {
        assert!(T::identity(3).project_traceless([true, false]).is_zero());
        let n = 3;
        let expect = T::p0(n).sub(&T::identity(n).scale(&rat(1, 3)));
        assert_eq!(T::p0(n).project_traceless([true, true]), expect);
        let off = T::unit(2, [1, 2, 2, 1], rat(1, 1));
        assert_eq!(off.project_traceless([true, true]), off);
    }

    #[test]
    fn weight_contractions() {
        let a1 = vec![rat(1, 1), rat(-1, 1)];
        assert_eq!(T::p0(2).weight_contract(&a1, &a1), rat(2, 1));
        let s = T::from_terms(3, [([1, 1, 2, 2], rat(1, 3)), ([2, 2, 1, 1], rat(-1, 3)), ([1, 1, 3, 3], rat(2, 7)), ([3, 3, 1, 1], rat(-2, 7))]);
        let w = vec![rat(1, 1), rat(5, 1), rat(-2, 1)];
        assert_eq!(s.weight_contract(&w, &w), rat(0, 1));
    }

    #[test]
    fn gauge_rule_on_units() {
        let n = 2;
        let phi = DiagMatrix::new(vec![rat(1, 2), rat(0, 1)]);
        let t = Tensor2::unit(n, [1, 2, 2, 1], RatFunc::one());
        // e_12 ⊗ e_21 picks up e^{(φ_2 − φ_2)u} = 1.
        assert_eq!(t.gauge_conjugate(&phi).unwrap(), t);
        let t = Tensor2::unit(n, [2, 1, 2, 2], RatFunc::one());
        // e_21 ⊗ e_22 picks up e^{(φ_1 − φ_2)u} = X1^{2n/2}.
        let expect = Tensor2::unit(n, [2, 1, 2, 2], RatFunc::var_pow(Symbol::X1, 2));
        assert_eq!(t.gauge_conjugate(&phi).unwrap(), expect);
        let zero = DiagMatrix::zero(n);
        assert_eq!(t.gauge_conjugate(&zero).unwrap(), t);
    }

    #[test]
    fn pretty_layout() {
        let t = T::unit(3, [1, 2, 3, 1], rat(1, 2));
        assert_eq!(t.to_string(), "t_{13}^{21} = 1/2");
    }
}
