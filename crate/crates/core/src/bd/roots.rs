//! The order `≺` on positive roots and the constants attached to it.

use super::triple::{BDTriple, Root};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Rational};

/// Apply `T` to a sequence of simple roots; `None` once a summand leaves `Γ₁`.
fn step(t: &BDTriple, seq: &[usize]) -> Option<Vec<usize>> {
    seq.iter().map(|&a| t.t(a)).collect()
}

/// The positive root whose simple roots are exactly `seq`, if contiguous.
fn as_root(seq: &[usize]) -> Option<Root> {
    let lo = *seq.iter().min()?;
    let hi = *seq.iter().max()?;
    if hi - lo + 1 != seq.len() {
        return None;
    }
    Some(Root::new(lo, hi + 1))
}

/// Iterates `T^k α` for `k = 1, 2, …` while every summand stays in `Γ₁`.
fn orbit(t: &BDTriple, alpha: Root) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = alpha.simple_indices().collect();
    while let Some(next) = step(t, &cur) {
        out.push(next.clone());
        cur = next;
        if out.len() >= t.n() {
            break;
        }
    }
    out
}

/// The `k ≥ 1` with `T^k α = β`, if any.
pub fn prec_order(t: &BDTriple, alpha: Root, beta: Root) -> Option<usize> {
    let (alpha, beta) = (alpha.positive(), beta.positive());
    orbit(t, alpha)
        .iter()
        .position(|seq| as_root(seq) == Some(beta))
        .map(|k| k + 1)
}

pub fn precedes(t: &BDTriple, alpha: Root, beta: Root) -> bool {
    prec_order(t, alpha, beta).is_some()
}

/// All pairs `α ≺ β` of positive roots with their `k`.
pub fn prec_pairs(t: &BDTriple) -> Vec<(Root, Root, usize)> {
    let mut out = Vec::new();
    for alpha in Root::all_positive(t.n()) {
        for (k, seq) in orbit(t, alpha).iter().enumerate() {
            if let Some(beta) = as_root(seq) {
                out.push((alpha, beta, k + 1));
            }
        }
    }
    out.sort();
    out
}

/// `0` if `T^k` carries the first simple root of `α` to the first of `β`,
/// `1` if to the last.
pub fn orientation_c(t: &BDTriple, alpha: Root, beta: Root) -> Result<u8> {
    let (alpha, beta) = (alpha.positive(), beta.positive());
    let k = prec_order(t, alpha, beta).ok_or_else(|| Error::InvalidStructure(format!("{alpha} does not precede {beta}")))?;
    if alpha.height() == 1 {
        return Ok(0);
    }
    let seq = &orbit(t, alpha)[k - 1];
    if seq[0] == beta.i {
        Ok(0)
    } else if seq[0] == beta.j - 1 {
        Ok(1)
    } else {
        Err(Error::Internal(format!("image of {alpha} under T^{k} is not a segment map")))
    }
}

/// `α ⋖ β`: the right endpoint of `α` is the left endpoint of `β`.
fn abuts(alpha: Root, beta: Root) -> bool {
    alpha.j == beta.i
}

fn bracket(b: bool) -> i64 {
    i64::from(b)
}

/// `PS(α, β)` for `α ≺ β`.
pub fn ps_constant(t: &BDTriple, alpha: Root, beta: Root) -> Result<Rational> {
    let (alpha, beta) = (alpha.positive(), beta.positive());
    if !precedes(t, alpha, beta) {
        return Err(Error::InvalidStructure(format!("{alpha} does not precede {beta}")));
    }
    let mut ps = rat(bracket(abuts(alpha, beta)) + bracket(abuts(beta, alpha)), 2);
    let between: Vec<Root> = Root::all_positive(t.n())
        .into_iter()
        .filter(|&g| precedes(t, alpha, g) && precedes(t, g, beta))
        .collect();
    ps += int(bracket(between.iter().any(|&g| abuts(alpha, g))));
    ps += int(bracket(between.iter().any(|&g| abuts(g, alpha))));
    Ok(ps)
}

/// Whether `C = 0` for every `≺`-pair.
pub fn is_orientation_preserving(t: &BDTriple) -> bool {
    prec_pairs(t).into_iter().all(|(a, b, _)| orientation_c(t, a, b) == Ok(0))
}
