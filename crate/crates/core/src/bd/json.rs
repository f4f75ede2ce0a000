//! Canonical JSON documents for triples and structures.

use serde::{Deserialize, Serialize};

use super::assoc::AssocStructure;
use super::triple::BDTriple;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub n: usize,
    pub gamma1: Vec<usize>,
    pub gamma2: Vec<usize>,
    /// `[a, T(a)]` pairs.
    pub t_map: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tilde_t: Option<Vec<usize>>,
    #[serde(default)]
    pub provenance: String,
}

impl StructureDoc {
    pub fn from_triple(t: &BDTriple, provenance: &str) -> Self {
        StructureDoc {
            n: t.n(),
            gamma1: t.gamma1().to_vec(),
            gamma2: t.gamma2(),
            t_map: t.pairs().map(|(a, b)| [a, b]).collect(),
            tilde_t: None,
            provenance: provenance.to_string(),
        }
    }

    pub fn from_structure(a: &AssocStructure, provenance: &str) -> Self {
        let mut doc = Self::from_triple(a.triple(), provenance);
        doc.tilde_t = Some(a.tilde_t().to_vec());
        doc
    }

    pub fn triple(&self) -> Result<BDTriple> {
        let pairs: Vec<(usize, usize)> = self.t_map.iter().map(|p| (p[0], p[1])).collect();
        let t = BDTriple::new(self.n, &pairs)?;
        if t.gamma1() != self.gamma1.as_slice() || t.gamma2() != self.gamma2 {
            return Err(Error::Parse("gamma1/gamma2 disagree with t_map".into()));
        }
        Ok(t)
    }

    pub fn structure(&self) -> Result<Option<AssocStructure>> {
        let t = self.triple()?;
        self.tilde_t.as_ref().map(|p| AssocStructure::new(t, p.clone())).transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bd::assoc::compatible_permutations;
    use crate::bd::triple::cg_triple;

    #[test]
    fn round_trip() {
        let a = compatible_permutations(&cg_triple(4, 3).unwrap()).remove(0);
        let doc = StructureDoc::from_structure(&a, "cg m=3");
        let text = serde_json::to_string(&doc).unwrap();
        let back: StructureDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.structure().unwrap().unwrap(), a);
    }
}
