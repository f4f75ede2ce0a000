//! Exact affine solve by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Rational;

/// Solution set `{x : A x = b}` as a particular point plus a nullspace basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Rational>,
    pub basis: Vec<Vec<Rational>>,
}

fn integer_row(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for v in row.iter().chain(std::iter::once(rhs)) {
        l = l.lcm(v.denom());
    }
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

/// Solve `A x = b` with `cols` unknowns; `None` when inconsistent.
pub fn solve_affine(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<AffineSolution> {
    let mut m: Vec<Vec<BigInt>> = a.iter().zip(b).map(|(r, v)| integer_row(r, v)).collect();
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..rows {
            let f = m[i][c].clone();
            let piv = m[r][c].clone();
            for k in 0..=cols {
                let (v, rem) = (&m[i][k] * &piv - &m[r][k] * &f).div_rem(&prev);
                debug_assert!(rem.is_zero());
                m[i][k] = v;
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    // Rows below the rank must be fully zero, including the right-hand side.
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let back = |rhs_on: bool, free_val: Option<usize>| -> Vec<Rational> {
        let mut x = vec![Rational::zero(); cols];
        if let Some(f) = free_val {
            x[f] = Rational::one();
        }
        for (ri, &pc) in pivots.iter().enumerate().rev() {
            let row = &m[ri];
            let mut acc = if rhs_on { Rational::from_integer(row[cols].clone()) } else { Rational::zero() };
            for k in (pc + 1)..cols {
                if !row[k].is_zero() && !x[k].is_zero() {
                    acc -= Rational::from_integer(row[k].clone()) * &x[k];
                }
            }
            x[pc] = acc / Rational::from_integer(row[pc].clone());
        }
        x
    };
    let particular = back(true, None);
    let basis = free.iter().map(|&f| back(false, Some(f))).collect();
    Some(AffineSolution { particular, basis })
}

/// Nullspace basis of `A`.
pub fn nullspace(a: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let zeros = vec![Rational::zero(); a.len()];
    solve_affine(a, &zeros, cols).map(|s| s.basis).unwrap_or_default()
}
