use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::par::Exec;

pub const DEFAULT_ENUMERATION_BOUND: usize = 6;

/// `e_i − e_j`; positive iff `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert_ne!(i, j);
        Root { i, j }
    }

    /// The simple root `α_a = e_a − e_{a+1}`.
    pub fn simple(a: usize) -> Self {
        Root { i: a, j: a + 1 }
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    pub fn height(self) -> usize {
        self.i.abs_diff(self.j)
    }

    pub fn negate(self) -> Self {
        Root { i: self.j, j: self.i }
    }

    pub fn positive(self) -> Self {
        if self.is_positive() {
            self
        } else {
            self.negate()
        }
    }

    /// Simple-root indices of a positive root, left to right.
    pub fn simple_indices(self) -> std::ops::Range<usize> {
        let p = self.positive();
        p.i..p.j
    }

    /// Coordinates as a weight vector of length `n`.
    pub fn weights(self, n: usize) -> Vec<crate::exact::Rational> {
        let mut w = vec![crate::exact::int(0); n];
        w[self.i - 1] += crate::exact::int(1);
        w[self.j - 1] -= crate::exact::int(1);
        w
    }

    /// All positive roots for `Mat_n`.
    pub fn all_positive(n: usize) -> Vec<Root> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(Root { i, j });
            }
        }
        out
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}-e{}", self.i, self.j)
    }
}

/// `(α_a, α_b)` for simple roots.
pub fn simple_inner(a: usize, b: usize) -> i64 {
    if a == b {
        2
    } else if a.abs_diff(b) == 1 {
        -1
    } else {
        0
    }
}

/// Belavin–Drinfeld triple of type `A_{n−1}`; simple roots indexed `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BDTriple {
    n: usize,
    gamma1: Vec<usize>,
    /// `images[k] = T(gamma1[k])`.
    images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Malformed(String),
    InnerProduct { a: usize, b: usize },
    Nilpotency { a: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed(m) => write!(f, "malformed: {m}"),
            Violation::InnerProduct { a, b } => write!(f, "inner product not preserved on (alpha_{a}, alpha_{b})"),
            Violation::Nilpotency { a } => write!(f, "T is not nilpotent: iterating from alpha_{a} never leaves gamma1"),
        }
    }
}

impl BDTriple {
    /// Build from `(a, T(a))` pairs. Only structural checks are made here.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidTriple(format!("n = {n} < 2")));
        }
        let mut sorted = pairs.to_vec();
        sorted.sort();
        let gamma1: Vec<usize> = sorted.iter().map(|p| p.0).collect();
        let images: Vec<usize> = sorted.iter().map(|p| p.1).collect();
        let t = BDTriple { n, gamma1, images };
        if let Err(v @ Violation::Malformed(_)) = t.check_structure() {
            return Err(Error::InvalidTriple(v.to_string()));
        }
        Ok(t)
    }

    pub fn trivial(n: usize) -> Self {
        BDTriple { n, gamma1: Vec::new(), images: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma1(&self) -> &[usize] {
        &self.gamma1
    }

    /// Sorted image set.
    pub fn gamma2(&self) -> Vec<usize> {
        let mut g = self.images.clone();
        g.sort();
        g
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.gamma1.iter().copied().zip(self.images.iter().copied())
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_trivial(&self) -> bool {
        self.gamma1.is_empty()
    }

    /// `T(α_a)` as a simple-root index.
    pub fn t(&self, a: usize) -> Option<usize> {
        self.gamma1.binary_search(&a).ok().map(|k| self.images[k])
    }

    /// The triple `(Γ₂, Γ₁, T⁻¹)`.
    pub fn inverse(&self) -> BDTriple {
        let pairs: Vec<(usize, usize)> = self.pairs().map(|(a, b)| (b, a)).collect();
        BDTriple::new(self.n, &pairs).expect("inverse of a well-formed triple")
    }

    fn check_structure(&self) -> std::result::Result<(), Violation> {
        let range_ok = |v: &usize| *v >= 1 && *v < self.n;
        if !self.gamma1.iter().all(range_ok) || !self.images.iter().all(range_ok) {
            return Err(Violation::Malformed("simple root index out of range".into()));
        }
        if self.gamma1.windows(2).any(|w| w[0] == w[1]) {
            return Err(Violation::Malformed("repeated element of gamma1".into()));
        }
        let set: BTreeSet<usize> = self.images.iter().copied().collect();
        if set.len() != self.images.len() {
            return Err(Violation::Malformed("T is not injective".into()));
        }
        Ok(())
    }

    /// Canonical ordering key: `(|Γ₁|, Γ₁, images)`.
    pub fn sort_key(&self) -> (usize, Vec<usize>, Vec<usize>) {
        (self.gamma1.len(), self.gamma1.clone(), self.images.clone())
    }
}

impl fmt::Display for BDTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "n={} trivial", self.n);
        }
        let maps: Vec<String> = self.pairs().map(|(a, b)| format!("{a}->{b}")).collect();
        write!(f, "n={} T: {}", self.n, maps.join(", "))
    }
}

/// Check inner-product preservation and nilpotency.
pub fn validate_triple(t: &BDTriple) -> std::result::Result<(), Violation> {
    t.check_structure()?;
    for (a, ta) in t.pairs() {
        for (b, tb) in t.pairs() {
            if simple_inner(a, b) != simple_inner(ta, tb) {
                return Err(Violation::InnerProduct { a, b });
            }
        }
    }
    for &a in t.gamma1() {
        let mut cur = a;
        let mut steps = 0;
        while let Some(next) = t.t(cur) {
            cur = next;
            steps += 1;
            if steps >= t.n() {
                return Err(Violation::Nilpotency { a });
            }
        }
    }
    Ok(())
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0..(1u32 << items.len()))
        .map(|mask| items.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, v)| *v).collect())
        .collect()
}

fn injections(k: usize, pool: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for &v in pool {
        if !cur.contains(&v) {
            cur.push(v);
            injections(k, pool, cur, out);
            cur.pop();
        }
    }
}

/// All valid triples for `Mat_n`, canonically ordered.
pub fn enumerate_triples(n: usize, bound: usize, exec: Exec) -> Result<Vec<BDTriple>> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    if n < 2 {
        return Err(Error::InvalidTriple(format!("n = {n} < 2")));
    }
    let simple: Vec<usize> = (1..n).collect();
    let domains = subsets(&simple);
    let found = exec.map(&domains, |g1| {
        let mut maps = Vec::new();
        injections(g1.len(), &simple, &mut Vec::new(), &mut maps);
        maps.into_iter()
            .map(|images| BDTriple { n, gamma1: g1.clone(), images })
            .filter(|t| validate_triple(t).is_ok())
            .collect::<Vec<_>>()
    });
    let mut all: Vec<BDTriple> = found.into_iter().flatten().collect();
    all.sort_by_key(|t| t.sort_key());
    Ok(all)
}

/// Residue of `x` modulo `n` in `{1, …, n}`.
pub fn res(x: usize, n: usize) -> usize {
    (x - 1) % n + 1
}

/// Generalized Cremmer–Gervais triple for `m` coprime to `n`.
pub fn cg_triple(n: usize, m: usize) -> Result<BDTriple> {
    if n < 2 || m == 0 || m >= n || n.gcd(&m) != 1 {
        return Err(Error::InvalidTriple(format!("m = {m} is not coprime to n = {n} in 1..n")));
    }
    let pairs: Vec<(usize, usize)> = (1..n).filter(|&i| i != n - m).map(|i| (i, res(i + m, n))).collect();
    BDTriple::new(n, &pairs)
}

/// `(m, triple)` for every `m` coprime to `n`.
pub fn enumerate_cg_triples(n: usize) -> Result<Vec<(usize, BDTriple)>> {
    if n < 2 {
        return Err(Error::InvalidTriple(format!("n = {n} < 2")));
    }
    (1..n).filter(|m| n.gcd(m) == 1).map(|m| Ok((m, cg_triple(n, m)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(validate_triple(&BDTriple::new(3, &[(1, 2)]).unwrap()).is_ok());
        assert_eq!(validate_triple(&BDTriple::new(2, &[(1, 1)]).unwrap()), Err(Violation::Nilpotency { a: 1 }));
        assert!(validate_triple(&BDTriple::new(5, &[(1, 4), (2, 3)]).unwrap()).is_ok());
        assert_eq!(
            validate_triple(&BDTriple::new(4, &[(1, 1), (2, 3)]).unwrap()),
            Err(Violation::InnerProduct { a: 1, b: 2 })
        );
    }

    #[test]
    fn malformed_rejected() {
        assert!(BDTriple::new(3, &[(1, 3)]).is_err());
        assert!(BDTriple::new(4, &[(1, 2), (2, 2)]).is_err());
    }

    #[test]
    fn small_census() {
        let e = |n| enumerate_triples(n, DEFAULT_ENUMERATION_BOUND, Exec::Sequential).unwrap();
        assert_eq!(e(2), vec![BDTriple::trivial(2)]);
        let t3 = e(3);
        assert_eq!(t3.len(), 3);
        assert!(t3[0].is_trivial());
        assert!(matches!(enumerate_triples(7, 6, Exec::Sequential), Err(Error::BoundExceeded { n: 7, bound: 6 })));
    }

    #[test]
    fn cg_examples() {
        assert_eq!(enumerate_cg_triples(4).unwrap().len(), 2);
        assert_eq!(enumerate_cg_triples(5).unwrap().len(), 4);
        let (m, t) = &enumerate_cg_triples(3).unwrap()[0];
        assert_eq!(*m, 1);
        assert_eq!(t.gamma1(), &[1]);
        assert_eq!(t.gamma2(), vec![2]);
        assert_eq!(t.t(1), Some(2));
        assert!(enumerate_cg_triples(2).unwrap()[0].1.is_trivial());
    }
}
