//! Sparse Laurent polynomials in the four exponential symbols.
//!
//! Exponents are rationals on a lattice `(1/scale)Z`. A polynomial stores the
//! integer lattice coordinates of every monomial together with one shared
//! `scale`; the scale is kept minimal after every operation so structural
//! equality coincides with value equality.

use std::collections::HashMap;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{fmt_rational, int, lcm_u32, scaled_to_i32, to_f64, Rational};
use crate::error::{Error, Result};

/// The formal exponential symbols. `X1 = e^{u/(2n)}`, `X2 = e^{u'/(2n)}`,
/// `Y1 = e^{v}`, `Y2 = e^{v'}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    X1 = 0,
    X2 = 1,
    Y1 = 2,
    Y2 = 3,
}

impl Symbol {
    pub const ALL: [Symbol; 4] = [Symbol::X1, Symbol::X2, Symbol::Y1, Symbol::Y2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::X1 => "X1",
            Symbol::X2 => "X2",
            Symbol::Y1 => "Y1",
            Symbol::Y2 => "Y2",
        }
    }
}

/// Lattice coordinates of a monomial `X1^a X2^b Y1^c Y2^d`; the actual
/// exponents are the coordinates divided by the owning polynomial's scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ExpMonomial(pub [i32; 4]);

impl ExpMonomial {
    pub const ONE: ExpMonomial = ExpMonomial([0; 4]);

    fn mul(self, other: ExpMonomial) -> ExpMonomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        ExpMonomial(e)
    }

    fn scaled(self, k: i32) -> ExpMonomial {
        ExpMonomial(self.0.map(|e| e * k))
    }

    /// Componentwise divisibility in the polynomial sense.
    fn divides(self, other: ExpMonomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    fn div(self, other: ExpMonomial) -> ExpMonomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        ExpMonomial(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    scale: u32,
    /// Sorted by monomial, no zero coefficients.
    terms: Vec<(ExpMonomial, Rational)>,
}

impl Default for LaurentPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { scale: 1, terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { scale: 1, terms: vec![(ExpMonomial::ONE, c)] }
    }

    /// `coef * sym^exp` for an integer exponent.
    pub fn var_pow(sym: Symbol, exp: i32) -> Self {
        let mut e = [0; 4];
        e[sym.index()] = exp;
        LaurentPoly { scale: 1, terms: vec![(ExpMonomial(e), Rational::one())] }
    }

    /// Monomial with rational exponents; fails if a denominator is too large.
    pub fn monomial(exps: &[Rational; 4], coef: Rational) -> Result<Self> {
        if coef.is_zero() {
            return Ok(Self::zero());
        }
        let scale = super::rational::common_denominator(exps.iter())?;
        let mut e = [0; 4];
        for (slot, x) in e.iter_mut().zip(exps) {
            *slot = scaled_to_i32(x, scale)?;
        }
        let mut p = LaurentPoly { scale, terms: vec![(ExpMonomial(e), coef)] };
        p.normalize_scale();
        Ok(p)
    }

    /// Build from raw lattice coordinates on the given scale.
    pub fn from_terms(scale: u32, terms: impl IntoIterator<Item = (ExpMonomial, Rational)>) -> Self {
        assert!(scale >= 1, "lattice scale must be positive");
        let mut acc: HashMap<ExpMonomial, Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(scale, acc)
    }

    fn from_map(scale: u32, acc: HashMap<ExpMonomial, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut p = LaurentPoly { scale, terms };
        p.normalize_scale();
        p
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn terms(&self) -> &[(ExpMonomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == ExpMonomial::ONE && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant when the polynomial has no symbol dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if *m == ExpMonomial::ONE => Some(c.clone()),
            _ => None,
        }
    }

    /// Rational exponent of `sym` in term `idx`.
    pub fn exponent(&self, idx: usize, sym: Symbol) -> Rational {
        Rational::new(
            self.terms[idx].0 .0[sym.index()].into(),
            (self.scale as i64).into(),
        )
    }

    pub fn uses(&self, sym: Symbol) -> bool {
        self.terms.iter().any(|(m, _)| m.0[sym.index()] != 0)
    }

    /// Leading term in lexicographic order on (X1, X2, Y1, Y2).
    pub fn leading(&self) -> Option<&(ExpMonomial, Rational)> {
        self.terms.last()
    }

    fn normalize_scale(&mut self) {
        if self.scale == 1 {
            return;
        }
        let mut g = self.scale;
        for (m, _) in &self.terms {
            for e in m.0 {
                g = g.gcd(&(e.unsigned_abs()));
                if g == 1 {
                    return;
                }
            }
        }
        if g > 1 {
            let gi = g as i32;
            for (m, _) in &mut self.terms {
                for e in &mut m.0 {
                    *e /= gi;
                }
            }
            self.scale /= g;
        }
    }

    /// Re-express on a finer lattice `new_scale` (a multiple of the current one).
    fn rescaled(&self, new_scale: u32) -> std::borrow::Cow<'_, LaurentPoly> {
        if new_scale == self.scale {
            return std::borrow::Cow::Borrowed(self);
        }
        debug_assert_eq!(new_scale % self.scale, 0);
        let k = (new_scale / self.scale) as i32;
        std::borrow::Cow::Owned(LaurentPoly {
            scale: new_scale,
            terms: self.terms.iter().map(|(m, c)| (m.scaled(k), c.clone())).collect(),
        })
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        let s = lcm_u32(self.scale, other.scale);
        let a = self.rescaled(s);
        let b = other.rescaled(s);
        let out = merge_add(&a.terms, &b.terms);
        let mut p = LaurentPoly { scale: s, terms: out };
        p.normalize_scale();
        p
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            scale: self.scale,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return LaurentPoly::zero();
        }
        let s = lcm_u32(self.scale, other.scale);
        let a = self.rescaled(s);
        let b = other.rescaled(s);
        if a.terms.len() == 1 || b.terms.len() == 1 {
            let (mono, many) =
                if a.terms.len() == 1 { (&a.terms[0], &b) } else { (&b.terms[0], &a) };
            let terms = many
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono.0), c * &mono.1))
                .collect();
            let mut p = LaurentPoly { scale: s, terms };
            p.normalize_scale();
            return p;
        }
        let mut acc: HashMap<ExpMonomial, Rational> =
            HashMap::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in a.terms.iter() {
            for (mb, cb) in b.terms.iter() {
                let prod = ca * cb;
                acc.entry(ma.mul(*mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        Self::from_map(s, acc)
    }

    pub fn scale_by(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            scale: self.scale,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Inverse of a monomial.
    pub fn monomial_inverse(&self) -> Option<LaurentPoly> {
        match self.terms.as_slice() {
            [(m, c)] => Some(LaurentPoly {
                scale: self.scale,
                terms: vec![(ExpMonomial(m.0.map(|e| -e)), c.recip())],
            }),
            _ => None,
        }
    }

    /// Split a nonzero non-monomial polynomial as `unit * canonical`, where
    /// `unit` is a monomial and `canonical` has minimal exponent zero in every
    /// symbol and leading coefficient one.
    pub fn canonical_factor(&self) -> (LaurentPoly, LaurentPoly) {
        assert!(!self.is_zero());
        let mut min = [i32::MAX; 4];
        for (m, _) in &self.terms {
            for (lo, e) in min.iter_mut().zip(m.0) {
                *lo = (*lo).min(e);
            }
        }
        let shift = ExpMonomial(min);
        let lead = self.terms.iter().map(|(m, c)| (m.div(shift), c)).max_by(|a, b| a.0.cmp(&b.0));
        let lead_c = lead.map(|(_, c)| c.clone()).unwrap();
        let inv = lead_c.recip();
        let terms: Vec<_> = self.terms.iter().map(|(m, c)| (m.div(shift), c * &inv)).collect();
        let mut canon = LaurentPoly { scale: self.scale, terms };
        canon.terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        canon.normalize_scale();
        let mut unit = LaurentPoly { scale: self.scale, terms: vec![(shift, lead_c)] };
        unit.normalize_scale();
        (unit, canon)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        if let Some(inv) = d.monomial_inverse() {
            return Some(self.mul(&inv));
        }
        let s = lcm_u32(self.scale, d.scale);
        let (d_unit, d_canon) = d.canonical_factor();
        let dc = d_canon.rescaled(s).into_owned();
        let p = self.rescaled(s);
        let mut min = [i32::MAX; 4];
        for (m, _) in &p.terms {
            for (lo, e) in min.iter_mut().zip(m.0) {
                *lo = (*lo).min(e);
            }
        }
        let shift = ExpMonomial(min);
        // Lex-order polynomial division by a single divisor: a leading term
        // that is not divisible by the divisor's leading monomial leaves a
        // nonzero remainder, hence no exact quotient.
        let mut rem: Vec<(ExpMonomial, Rational)> =
            p.terms.iter().map(|(m, c)| (m.div(shift), c.clone())).collect();
        let (dlead_m, dlead_c) = dc.terms.last().cloned().unwrap();
        let mut quot: Vec<(ExpMonomial, Rational)> = Vec::new();
        while let Some((rm, rc)) = rem.last().cloned() {
            if !dlead_m.divides(rm) {
                return None;
            }
            let qm = rm.div(dlead_m);
            let qc = rc / &dlead_c;
            let step: Vec<_> = dc.terms.iter().map(|(m, c)| (m.mul(qm), -(c * &qc))).collect();
            rem = merge_add(&rem, &step);
            quot.push((qm.mul(shift), qc));
        }
        let q = LaurentPoly::from_terms(s, quot);
        Some(q.mul(&d_unit.monomial_inverse().unwrap()))
    }

    /// Apply a monomial substitution: every symbol `s` is replaced by the
    /// monomial with rational exponent vector `images[s]`.
    pub fn map_monomials(&self, images: &[[Rational; 4]; 4]) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let d = super::rational::common_denominator(images.iter().flatten())?;
        let mut img = [[0i64; 4]; 4];
        for (row, src) in img.iter_mut().zip(images) {
            for (slot, x) in row.iter_mut().zip(src) {
                *slot = scaled_to_i32(x, d)? as i64;
            }
        }
        let new_scale = self
            .scale
            .checked_mul(d)
            .ok_or_else(|| Error::Lattice("lattice scale overflow".into()))?;
        let mut acc: HashMap<ExpMonomial, Rational> = HashMap::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = [0i64; 4];
            for (s, &coord) in m.0.iter().enumerate() {
                for t in 0..4 {
                    e[t] += coord as i64 * img[s][t];
                }
            }
            let mut e32 = [0i32; 4];
            for (dst, v) in e32.iter_mut().zip(e) {
                *dst = i32::try_from(v).map_err(|_| Error::Lattice("exponent overflow".into()))?;
            }
            *acc.entry(ExpMonomial(e32)).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(new_scale, acc))
    }

    /// Evaluate at a point given by the logarithms of the four symbols.
    pub fn eval_log(&self, logs: &[Complex64; 4]) -> Complex64 {
        let inv = 1.0 / self.scale as f64;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut z = Complex64::new(0.0, 0.0);
                for (e, l) in m.0.iter().zip(logs) {
                    if *e != 0 {
                        z += l * (*e as f64 * inv);
                    }
                }
                z.exp() * to_f64(c)
            })
            .sum()
    }

    /// Group terms by the X1 lattice coordinate, leaving Y1 monomials; used by
    /// the u-series expansion. Returns `(x1 exponent, poly in Y1)` pairs.
    pub(crate) fn split_x1(&self) -> Vec<(Rational, LaurentPoly)> {
        let mut groups: std::collections::BTreeMap<i32, Vec<(ExpMonomial, Rational)>> =
            Default::default();
        for (m, c) in &self.terms {
            let mut rest = m.0;
            rest[0] = 0;
            groups.entry(m.0[0]).or_default().push((ExpMonomial(rest), c.clone()));
        }
        groups
            .into_iter()
            .map(|(x, ts)| {
                (
                    Rational::new(x.into(), (self.scale as i64).into()),
                    LaurentPoly::from_terms(self.scale, ts),
                )
            })
            .collect()
    }
}

/// Sum of two sorted term lists on the same lattice.
fn merge_add(
    a: &[(ExpMonomial, Rational)],
    b: &[(ExpMonomial, Rational)],
) -> Vec<(ExpMonomial, Rational)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (ma, ca) = &a[i];
        let (mb, cb) = &b[j];
        match ma.cmp(mb) {
            std::cmp::Ordering::Less => {
                out.push((*ma, ca.clone()));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((*mb, cb.clone()));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = ca + cb;
                if !c.is_zero() {
                    out.push((*ma, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().cloned());
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest terms first reads closer to hand-written formulas.
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for sym in Symbol::ALL {
                let e = m.0[sym.index()];
                if e == 0 {
                    continue;
                }
                let r = Rational::new(e.into(), (self.scale as i64).into());
                if r == int(1) {
                    factors.push(sym.name().to_string());
                } else if r.is_integer() {
                    factors.push(format!("{}^{}", sym.name(), r));
                } else {
                    factors.push(format!("{}^({})", sym.name(), fmt_rational(&r)));
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rational(&abs))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
