use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_complex::Complex64;

use super::scalar::Scalar;
use super::tensor2::{accumulate, bucket_by_first, Tensor2};
use crate::error::{Error, Result};
use crate::exact::{RatFunc, Rational};
use crate::par::Exec;

/// `(i, j, k, l, m, p)`, the coefficient of `e_ij ⊗ e_kl ⊗ e_mp`.
pub type Key3 = [usize; 6];

/// Placement of a two-leg tensor inside three legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Legs {
    L12,
    L13,
    L23,
}

impl Legs {
    /// Zero-based leg positions.
    pub fn positions(self) -> (usize, usize) {
        match self {
            Legs::L12 => (0, 1),
            Legs::L13 => (0, 2),
            Legs::L23 => (1, 2),
        }
    }

    fn free(self) -> usize {
        3 - self.positions().0 - self.positions().1
    }
}

#[derive(Clone, Debug)]
pub struct Tensor3<S> {
    n: usize,
    coeffs: BTreeMap<Key3, S>,
}

impl<S: Scalar> PartialEq for Tensor3<S> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.sub(other).is_zero()
    }
}

fn set_leg(key: &mut Key3, leg: usize, row: usize, col: usize) {
    key[2 * leg] = row;
    key[2 * leg + 1] = col;
}

impl<S: Scalar> Tensor3<S> {
    pub fn zero(n: usize) -> Self {
        Tensor3 { n, coeffs: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::embed(&Tensor2::identity(n), Legs::L12)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Key3, S)>) -> Self {
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

    pub fn get(&self, key: &Key3) -> Option<&S> {
        self.coeffs.get(key)
    }

    pub fn coeff(&self, key: &Key3) -> S {
        self.coeffs.get(key).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key3, &S)> {
        self.coeffs.iter()
    }

    pub fn insert(&mut self, key: Key3, v: S) {
        assert!(key.iter().all(|&x| x >= 1 && x <= self.n), "index {key:?} out of range");
        if v.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, v);
        }
    }

    pub fn add_to(&mut self, key: Key3, v: &S) {
        assert!(key.iter().all(|&x| x >= 1 && x <= self.n), "index {key:?} out of range");
        accumulate(&mut self.coeffs, key, v.clone());
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

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Tensor3<T> {
        let mut out = Tensor3::zero(self.n);
        for (k, v) in &self.coeffs {
            out.insert(*k, f(v));
        }
        out
    }

    pub fn try_map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Tensor3<T>> {
        let mut out = Tensor3::zero(self.n);
        for (k, v) in &self.coeffs {
            out.insert(*k, f(v)?);
        }
        Ok(out)
    }

    /// `t` on the named legs, identity on the remaining one.
    pub fn embed(t: &Tensor2<S>, legs: Legs) -> Self {
        let (p, q) = legs.positions();
        let free = legs.free();
        let mut out = Tensor3::zero(t.n());
        for (&[i, j, k, l], v) in t.iter() {
            for a in 1..=t.n() {
                let mut key = [0; 6];
                set_leg(&mut key, p, i, j);
                set_leg(&mut key, q, k, l);
                set_leg(&mut key, free, a, a);
                out.coeffs.insert(key, v.clone());
            }
        }
        out
    }

    /// Full leg-wise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut by_rows: HashMap<[usize; 3], Vec<([usize; 3], &S)>> = HashMap::new();
        for ([a, b, c, d, e, f], v) in &other.coeffs {
            by_rows.entry([*a, *c, *e]).or_default().push(([*b, *d, *f], v));
        }
        let mut acc = BTreeMap::new();
        for (&[i, j, k, l, m, p], x) in &self.coeffs {
            if let Some(bs) = by_rows.get(&[j, l, p]) {
                for ([b, d, f], y) in bs {
                    accumulate(&mut acc, [i, *b, k, *d, m, *f], x.mul(y));
                }
            }
        }
        Ok(Tensor3 { n: self.n, coeffs: acc })
    }

    /// `self · embed(b, lb)` without materialising the identity leg.
    pub fn mul_embedded(&self, b: &Tensor2<S>, lb: Legs, exec: Exec) -> Result<Self> {
        if self.n != b.n() {
            return Err(Error::SizeMismatch(self.n, b.n()));
        }
        let (p, q) = lb.positions();
        let mut by_rows: HashMap<(usize, usize), Vec<(usize, usize, &S)>> = HashMap::new();
        for (&[i, j, k, l], v) in b.iter() {
            by_rows.entry((i, k)).or_default().push((j, l, v));
        }
        let buckets = bucket_by_first(&self.coeffs, self.n);
        let parts = exec.map(&buckets, |terms| {
            let mut acc = BTreeMap::new();
            for (key, x) in terms {
                if let Some(bs) = by_rows.get(&(key[2 * p + 1], key[2 * q + 1])) {
                    for (j, l, y) in bs {
                        let mut out = **key;
                        out[2 * p + 1] = *j;
                        out[2 * q + 1] = *l;
                        accumulate(&mut acc, out, x.mul(y));
                    }
                }
            }
            acc
        });
        Ok(Tensor3 { n: self.n, coeffs: parts.into_iter().flatten().collect() })
    }

    /// Apply `M ↦ M − (tr M / n)·1` on the selected legs.
    pub fn project_traceless(&self, legs: [bool; 3]) -> Self {
        let inv_n = S::from_rational(&Rational::new(1.into(), (self.n as i64).into()));
        let mut t = self.clone();
        for (leg, on) in legs.iter().enumerate() {
            if !on {
                continue;
            }
            let mut traces: BTreeMap<Key3, S> = BTreeMap::new();
            for (key, v) in &t.coeffs {
                if key[2 * leg] == key[2 * leg + 1] {
                    let mut rest = *key;
                    set_leg(&mut rest, leg, 0, 0);
                    accumulate(&mut traces, rest, v.clone());
                }
            }
            for (rest, tr) in traces {
                let d = tr.mul(&inv_n).neg();
                for a in 1..=self.n {
                    let mut key = rest;
                    set_leg(&mut key, leg, a, a);
                    t.add_to(key, &d);
                }
            }
        }
        t
    }

    pub fn witness(&self) -> Option<(Key3, &S)> {
        self.coeffs.iter().next().map(|(k, v)| (*k, v))
    }

    pub fn is_weight_zero(&self) -> bool {
        self.coeffs.keys().all(|[i, j, k, l, m, p]| i + k + m == j + l + p)
    }
}

/// `embed(a, la) · embed(b, lb)` computed on the sparse supports.
pub fn mul_embedded<S: Scalar>(a: &Tensor2<S>, la: Legs, b: &Tensor2<S>, lb: Legs, exec: Exec) -> Result<Tensor3<S>> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    if la == lb {
        return Ok(Tensor3::embed(&a.mul_with(b, exec)?, la));
    }
    let n = a.n();
    let (pa, qa) = la.positions();
    let (pb, qb) = lb.positions();
    let shared = if pa == pb || pa == qb { pa } else { qa };
    let a_shared_first = shared == pa;
    let b_shared_first = shared == pb;
    let a_other = if a_shared_first { qa } else { pa };
    let b_other = if b_shared_first { qb } else { pb };
    // b terms keyed by their row on the shared leg.
    let mut by_row: Vec<Vec<(usize, usize, usize, &S)>> = vec![Vec::new(); n + 1];
    for (&[i, j, k, l], v) in b.iter() {
        let (sr, sc, orow, ocol) = if b_shared_first { (i, j, k, l) } else { (k, l, i, j) };
        by_row[sr].push((sc, orow, ocol, v));
    }
    // Bucket a by its row on the shared leg; output keys are then disjoint.
    let mut buckets: Vec<Vec<(usize, usize, usize, usize, &S)>> = vec![Vec::new(); n];
    for (&[i, j, k, l], v) in a.iter() {
        let (sr, sc, orow, ocol) = if a_shared_first { (i, j, k, l) } else { (k, l, i, j) };
        buckets[sr - 1].push((sr, sc, orow, ocol, v));
    }
    let parts = exec.map(&buckets, |terms| {
        let mut acc = BTreeMap::new();
        for &(sr, sc, ar, ac, x) in terms {
            for &(bc, br, bcol, y) in &by_row[sc] {
                let mut key = [0; 6];
                set_leg(&mut key, shared, sr, bc);
                set_leg(&mut key, a_other, ar, ac);
                set_leg(&mut key, b_other, br, bcol);
                accumulate(&mut acc, key, x.mul(y));
            }
        }
        acc
    });
    let mut coeffs = BTreeMap::new();
    for part in parts {
        for (k, v) in part {
            accumulate(&mut coeffs, k, v);
        }
    }
    Ok(Tensor3 { n, coeffs })
}

impl Tensor3<RatFunc> {
    pub fn eval_log(&self, logs: &[Complex64; 4]) -> Tensor3<Complex64> {
        self.map(|v| v.eval_log(logs))
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for Tensor3<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (idx, ([i, j, k, l, m, p], v)) in self.coeffs.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            write!(f, "t_{{{i}{k}{m}}}^{{{j}{l}{p}}} = {v}")?;
        }
        Ok(())
    }
}
