use std::fmt;

use super::roots::is_orientation_preserving;
use super::triple::{BDTriple, Root};
use crate::error::{Error, Result};

/// A triple together with a compatible cyclic permutation `T̃`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssocStructure {
    triple: BDTriple,
    /// `tilde_t[i - 1] = T̃(i)`.
    tilde_t: Vec<usize>,
    /// `o[i - 1][j - 1] = O(i, j)`.
    o: Vec<Vec<usize>>,
}

impl AssocStructure {
    pub fn new(triple: BDTriple, tilde_t: Vec<usize>) -> Result<Self> {
        let n = triple.n();
        if tilde_t.len() != n || tilde_t.iter().any(|&v| v < 1 || v > n) {
            return Err(Error::InvalidStructure("tilde T must be a permutation of 1..n".into()));
        }
        let mut o = vec![vec![usize::MAX; n]; n];
        for i in 1..=n {
            let mut cur = i;
            for k in 0..n {
                if o[i - 1][cur - 1] != usize::MAX {
                    break;
                }
                o[i - 1][cur - 1] = k;
                cur = tilde_t[cur - 1];
            }
        }
        if o.iter().flatten().any(|&v| v == usize::MAX) {
            return Err(Error::InvalidStructure("tilde T is not a single n-cycle".into()));
        }
        for (a, b) in triple.pairs() {
            if tilde_t[a - 1] != b || tilde_t[a] != b + 1 {
                return Err(Error::InvalidStructure(format!("tilde T violates T(alpha_{a}) = alpha_{b}")));
            }
        }
        Ok(AssocStructure { triple, tilde_t, o })
    }

    pub fn triple(&self) -> &BDTriple {
        &self.triple
    }

    pub fn n(&self) -> usize {
        self.triple.n()
    }

    pub fn tilde_t(&self) -> &[usize] {
        &self.tilde_t
    }

    /// Least `k ≥ 0` with `T̃^k(i) = j`.
    pub fn o(&self, i: usize, j: usize) -> usize {
        self.o[i - 1][j - 1]
    }

    /// `O(α, β)` read off left endpoints, after making both roots positive.
    pub fn o_roots(&self, alpha: Root, beta: Root) -> usize {
        self.o(alpha.positive().i, beta.positive().i)
    }
}

impl fmt::Display for AssocStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.tilde_t.iter().map(|v| v.to_string()).collect();
        write!(f, "{} / tilde T = [{}]", self.triple, images.join(","))
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut p in permutations_of(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Every `n`-cycle compatible with the triple; empty iff not associative.
pub fn compatible_permutations(t: &BDTriple) -> Vec<AssocStructure> {
    if !is_orientation_preserving(t) {
        return Vec::new();
    }
    let n = t.n();
    let mut f: Vec<Option<usize>> = vec![None; n + 1];
    let mut g: Vec<Option<usize>> = vec![None; n + 1];
    for (a, b) in t.pairs() {
        for (x, y) in [(a, b), (a + 1, b + 1)] {
            match (f[x], g[y]) {
                (None, None) => {
                    f[x] = Some(y);
                    g[y] = Some(x);
                }
                (Some(v), Some(u)) if v == y && u == x => {}
                _ => return Vec::new(),
            }
        }
    }
    // Maximal chains of the partial injection; a closed cycle must cover all.
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; n + 1];
    for start in 1..=n {
        if g[start].is_some() {
            continue;
        }
        let mut chain = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(next) = f[cur] {
            chain.push(next);
            seen[next] = true;
            cur = next;
        }
        chains.push(chain);
    }
    if (1..=n).any(|i| !seen[i]) {
        // Some elements lie on a cycle of the constraint map.
        if chains.is_empty() {
            let mut perm = vec![0; n];
            for i in 1..=n {
                perm[i - 1] = f[i].expect("total map");
            }
            return AssocStructure::new(t.clone(), perm).into_iter().collect();
        }
        return Vec::new();
    }
    let rest: Vec<usize> = (1..chains.len()).collect();
    let mut out = Vec::new();
    for order in permutations_of(&rest) {
        let seq: Vec<usize> = std::iter::once(0).chain(order).collect();
        let mut perm = vec![0; n];
        for (pos, &c) in seq.iter().enumerate() {
            let chain = &chains[c];
            for w in chain.windows(2) {
                perm[w[0] - 1] = w[1];
            }
            let next = &chains[seq[(pos + 1) % seq.len()]];
            perm[chain[chain.len() - 1] - 1] = next[0];
        }
        if let Ok(s) = AssocStructure::new(t.clone(), perm) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| a.tilde_t.cmp(&b.tilde_t));
    out
}

pub fn is_associative(t: &BDTriple) -> bool {
    !compatible_permutations(t).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bd::triple::cg_triple;

    #[test]
    fn trivial_counts() {
        assert_eq!(compatible_permutations(&BDTriple::trivial(3)).len(), 2);
        assert_eq!(compatible_permutations(&BDTriple::trivial(4)).len(), 6);
        assert_eq!(compatible_permutations(&BDTriple::trivial(2)).len(), 1);
    }

    #[test]
    fn cg3_is_forced() {
        let s = compatible_permutations(&cg_triple(3, 1).unwrap());
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].tilde_t(), &[2, 3, 1]);
        assert_eq!(s[0].o(1, 3), 2);
    }

    #[test]
    fn reversing_triple_has_none() {
        let t = BDTriple::new(5, &[(1, 4), (2, 3)]).unwrap();
        assert!(compatible_permutations(&t).is_empty());
    }

    #[test]
    fn rejects_short_cycles() {
        assert!(AssocStructure::new(BDTriple::trivial(4), vec![2, 1, 4, 3]).is_err());
        assert!(AssocStructure::new(cg_triple(3, 1).unwrap(), vec![3, 1, 2]).is_err());
    }
}
