//! JSON form of spectral matrices.

use serde::{Deserialize, Serialize};

use super::spectral::SpectralMatrix;
use crate::bd::StructureDoc;
use crate::error::{Error, Result};
use crate::exact::rational::fmt_rational;
use crate::exact::{parse_rational, LaurentPoly, RatFunc, Symbol};
use crate::tensor::Tensor2;

pub const SCHEMA_VERSION: u32 = 1;

/// `coef · X1^e0 X2^e1 Y1^e2 Y2^e3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: [String; 4],
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub poly: Vec<TermDoc>,
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    /// `[i, k]`: row indices of the two legs.
    pub rows: [usize; 2],
    /// `[j, l]`: column indices.
    pub cols: [usize; 2],
    pub num: Vec<TermDoc>,
    pub den: Vec<FactorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub structure: StructureDoc,
    /// Upper triangle of `s`, row by row.
    pub s: Vec<String>,
    pub target: String,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub schema_version: u32,
    pub n: usize,
    pub variables: Vec<String>,
    pub provenance: Option<Provenance>,
    pub entries: Vec<EntryDoc>,
}

fn poly_doc(p: &LaurentPoly) -> Vec<TermDoc> {
    (0..p.len())
        .map(|idx| TermDoc {
            exp: Symbol::ALL.map(|s| fmt_rational(&p.exponent(idx, s))),
            coef: fmt_rational(&p.terms()[idx].1),
        })
        .collect()
}

fn poly_from_doc(terms: &[TermDoc]) -> Result<LaurentPoly> {
    let mut p = LaurentPoly::zero();
    for t in terms {
        let exps = [parse_rational(&t.exp[0])?, parse_rational(&t.exp[1])?, parse_rational(&t.exp[2])?, parse_rational(&t.exp[3])?];
        p = p.add(&LaurentPoly::monomial(&exps, parse_rational(&t.coef)?)?);
    }
    Ok(p)
}

pub fn ratfunc_doc(f: &RatFunc) -> (Vec<TermDoc>, Vec<FactorDoc>) {
    let den = f.den_factors().iter().map(|(g, m)| FactorDoc { poly: poly_doc(g), power: *m }).collect();
    (poly_doc(f.numerator()), den)
}

pub fn ratfunc_from_doc(num: &[TermDoc], den: &[FactorDoc]) -> Result<RatFunc> {
    let mut f = RatFunc::from(poly_from_doc(num)?);
    for fd in den {
        let g = poly_from_doc(&fd.poly)?;
        for _ in 0..fd.power {
            f = f.div_poly(&g)?;
        }
    }
    Ok(f)
}

impl MatrixDoc {
    pub fn from_matrix(m: &SpectralMatrix, provenance: Option<Provenance>) -> Self {
        let entries = m
            .tensor()
            .iter()
            .map(|(&[i, j, k, l], v)| {
                let (num, den) = ratfunc_doc(v);
                EntryDoc { rows: [i, k], cols: [j, l], num, den }
            })
            .collect();
        MatrixDoc {
            schema_version: SCHEMA_VERSION,
            n: m.n(),
            variables: m.variables().iter().map(|s| s.name().to_string()).collect(),
            provenance,
            entries,
        }
    }

    pub fn to_matrix(&self) -> Result<SpectralMatrix> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema_version {}", self.schema_version)));
        }
        let mut t = Tensor2::zero(self.n);
        for e in &self.entries {
            let [i, k] = e.rows;
            let [j, l] = e.cols;
            if [i, j, k, l].iter().any(|&x| x < 1 || x > self.n) {
                return Err(Error::Parse(format!("index out of range in entry {:?}", [i, j, k, l])));
            }
            t.add_to([i, j, k, l], &ratfunc_from_doc(&e.num, &e.den)?);
        }
        let declared: Vec<Symbol> = self
            .variables
            .iter()
            .map(|name| Symbol::ALL.into_iter().find(|s| s.name() == name).ok_or_else(|| Error::Parse(format!("unknown variable {name}"))))
            .collect::<Result<_>>()?;
        SpectralMatrix::with_declared(t, &declared)
    }
}
