//! Resolving structure and `s` selectors.

use anyhow::{anyhow, bail, Context, Result};

use aybe_core::bd::{
    cg_triple, compatible_permutations, enumerate_cg_triples, enumerate_triples, phi_admissible, s0_from_structure, s_samples,
    AssocStructure, BDTriple, StructureDoc, SWedge,
};
use aybe_core::builders::{s_with_phi, Provenance};
use aybe_core::exact::parse_rational;
use aybe_core::exact::rational::fmt_rational;
use aybe_core::par::Exec;
use aybe_core::tensor::DiagMatrix;

use crate::args::{Selector, StructureSet};

/// A triple, its chosen cyclic permutation if any, and a label.
#[derive(Clone, Debug)]
pub struct Subject {
    pub triple: BDTriple,
    pub structure: Option<AssocStructure>,
    pub label: String,
}

impl Subject {
    pub fn doc(&self) -> StructureDoc {
        match &self.structure {
            Some(a) => StructureDoc::from_structure(a, &self.label),
            None => StructureDoc::from_triple(&self.triple, &self.label),
        }
    }
}

fn parse_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad index {x:?}")))
        .collect()
}

fn with_perm(triple: BDTriple, perm: Option<&str>, label: String) -> Result<Subject> {
    let structure = match perm {
        Some(p) => Some(AssocStructure::new(triple.clone(), parse_list(p)?)?),
        None => {
            let mut all = compatible_permutations(&triple);
            match all.len() {
                0 => None,
                1 => all.pop(),
                k => bail!("{triple} has {k} compatible permutations; choose one with --perm"),
            }
        }
    };
    Ok(Subject { triple, structure, label })
}

pub fn resolve(n: usize, sel: &Selector) -> Result<Subject> {
    let perm = sel.perm.as_deref();
    if let Some(m) = sel.cg {
        return with_perm(cg_triple(n, m)?, perm, format!("cg m={m}"));
    }
    if sel.trivial {
        let label = match perm {
            Some(p) => format!("trivial perm={p}"),
            None => "trivial".to_string(),
        };
        return with_perm(BDTriple::trivial(n), perm, label);
    }
    if let Some(path) = &sel.triple_file {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc: StructureDoc = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if doc.n != n {
            bail!("{} describes n = {}, but --n {n} was given", path.display(), doc.n);
        }
        let label = format!("file {}", path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
        return match doc.structure()? {
            Some(a) => Ok(Subject { triple: a.triple().clone(), structure: Some(a), label }),
            None => with_perm(doc.triple()?, perm, label),
        };
    }
    Err(anyhow!("no structure selected: use --cg, --trivial or --triple-file"))
}

/// Every subject for `n`: one per compatible permutation, plus the
/// non-associative triples.
pub fn all_subjects(n: usize, set: StructureSet, bound: usize) -> Result<Vec<Subject>> {
    let use_cg = match set {
        StructureSet::Cg => true,
        StructureSet::All => false,
        StructureSet::Auto => n > bound,
    };
    let triples: Vec<(String, BDTriple)> = if use_cg {
        enumerate_cg_triples(n)?.into_iter().map(|(m, t)| (format!("cg m={m}"), t)).collect()
    } else {
        enumerate_triples(n, bound, Exec::default())?.into_iter().enumerate().map(|(k, t)| (format!("triple #{k}"), t)).collect()
    };
    let mut out = Vec::new();
    for (label, t) in triples {
        let perms = compatible_permutations(&t);
        if perms.is_empty() {
            out.push(Subject { triple: t, structure: None, label });
        } else {
            for a in perms {
                let l = format!("{label} perm={}", a.tilde_t().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
                out.push(Subject { triple: t.clone(), structure: Some(a), label: l });
            }
        }
    }
    Ok(out)
}

/// `s0` of the structure, or the particular solution when there is none,
/// plus an optional admissible `Φ ⊗ 1 − 1 ⊗ Φ`.
pub fn resolve_s(subject: &Subject, spec: &str) -> Result<SWedge> {
    let base = match &subject.structure {
        Some(a) => s0_from_structure(a),
        None => s_samples(&subject.triple)?.remove(0),
    };
    let spec = spec.trim();
    if spec == "s0" {
        return Ok(base);
    }
    let coeffs = spec
        .strip_prefix("s0+phi:")
        .ok_or_else(|| anyhow!("--s must be `s0` or `s0+phi:<d1>,...,<dn>`, got {spec:?}"))?;
    let entries = coeffs.split(',').map(|x| parse_rational(x.trim()).map_err(anyhow::Error::from)).collect::<Result<Vec<_>>>()?;
    let n = subject.triple.n();
    if entries.len() != n {
        bail!("phi needs {n} diagonal entries, got {}", entries.len());
    }
    let phi = DiagMatrix::new(entries);
    if !phi_admissible(&subject.triple, &phi) {
        bail!("phi is not admissible for {}", subject.triple);
    }
    Ok(match &subject.structure {
        Some(a) => s_with_phi(a, &phi),
        None => base.add(&SWedge::from_phi(&phi)),
    })
}

pub fn provenance(subject: &Subject, s: &SWedge, target: &str, formula: &str) -> Provenance {
    Provenance {
        structure: subject.doc(),
        s: s.upper().iter().map(fmt_rational).collect(),
        target: target.to_string(),
        formula: formula.to_string(),
    }
}
