//! Verification suites over subjects.

use anyhow::{anyhow, bail, Result};

use aybe_core::bd::{prec_pairs, ps_constant, s_samples, SWedge};
use aybe_core::builders::{
    baxterize, build_r_ggs_assoc, build_r_ggs_general, build_r_ts, build_r_uv, q_minus_qinv, MatrixDoc, RuvFormula, SpectralMatrix,
};
use aybe_core::exact::{int, RatFunc, Rational};
use aybe_core::tensor::Tensor2;
use aybe_core::verify::{
    aybe_residual, cab_check, check_lift, check_r01, cybe_residual, hecke_residual, numeric_residual, pr_limit_check, qybe_residual,
    reversal_witness, semiclassical_parts, unitarity_check, NumericConfig, NumericIdentity, UnitarityKind, VerifyReport, Witness,
};

use crate::select::{provenance, Subject};

pub const SUITES: [&str; 10] = ["cybe", "qybe", "hecke", "aybe", "unitarity", "lift", "rRc", "cab", "ps", "cross-formula"];

pub fn parse_suites(text: &str) -> Result<Vec<&'static str>> {
    if text.trim() == "all" {
        return Ok(SUITES.to_vec());
    }
    let mut out = Vec::new();
    for name in text.split(',').map(str::trim) {
        let s = SUITES.iter().find(|s| **s == name).ok_or_else(|| anyhow!("unknown suite {name:?}; expected one of {SUITES:?}"))?;
        if !out.contains(s) {
            out.push(*s);
        }
    }
    Ok(out)
}

pub struct RunOptions {
    pub numeric: Option<NumericConfig>,
    pub include_nonassociative: bool,
}

/// One unit of work: a suite applied to a subject at a given `s`.
pub struct Job {
    pub suite: &'static str,
    pub subject: Subject,
    pub s: SWedge,
}

impl Job {
    pub fn applies(&self, opts: &RunOptions) -> bool {
        match self.suite {
            "cybe" | "ps" => true,
            "cab" => self.subject.structure.is_some() || opts.include_nonassociative,
            _ => self.subject.structure.is_some(),
        }
    }
}

fn prov_json(job: &Job, target: &str, formula: &str) -> serde_json::Value {
    serde_json::to_value(provenance(&job.subject, &job.s, target, formula)).expect("provenance serialises")
}

fn numeric_or<F>(opts: &RunOptions, id: NumericIdentity, m: &SpectralMatrix, symbolic: F) -> Result<VerifyReport>
where
    F: FnOnce() -> Result<VerifyReport>,
{
    match &opts.numeric {
        Some(cfg) => Ok(numeric_residual(id, m, cfg)?),
        None => symbolic(),
    }
}

fn ruv(job: &Job) -> Result<SpectralMatrix> {
    let a = job.subject.structure.as_ref().ok_or_else(|| anyhow!("no structure"))?;
    Ok(build_r_uv(a, &job.s, RuvFormula::Afgq)?)
}

fn ggs(job: &Job) -> Result<SpectralMatrix> {
    let a = job.subject.structure.as_ref().ok_or_else(|| anyhow!("no structure"))?;
    Ok(build_r_ggs_assoc(a, &job.s)?)
}

/// `r + r²¹ − P` for a constant `r`.
fn nu_report(r: &Tensor2<Rational>) -> VerifyReport {
    VerifyReport::from_residual2("nu", &r.add(&r.flip21()).sub(&Tensor2::perm(r.n())))
}

pub fn run(job: &Job, opts: &RunOptions) -> Result<Vec<VerifyReport>> {
    let t = &job.subject.triple;
    let reports = match job.suite {
        "cybe" => {
            let mut parts = Vec::new();
            for s in s_samples(t)? {
                let r = build_r_ts(t, &s)?.tensor;
                parts.push(VerifyReport::from_residual3("cybe", &cybe_residual(&r)?));
                parts.push(nu_report(&r));
            }
            vec![VerifyReport::combine("cybe", parts).with_provenance(prov_json(job, "classical", "r_ts basis"))]
        }
        "ps" => {
            let n = t.n();
            let mut witness = None;
            'outer: for s in s_samples(t)? {
                let st = s.to_tensor();
                for (alpha, beta, _) in prec_pairs(t) {
                    let lhs = ps_constant(t, alpha, beta)?;
                    let rhs = int(1) - st.weight_contract(&alpha.weights(n), &beta.weights(n));
                    if lhs != rhs {
                        witness = Some(Witness { index: vec![alpha.i, alpha.j, beta.i, beta.j], value: (lhs - rhs).to_string() });
                        break 'outer;
                    }
                }
            }
            vec![VerifyReport::symbolic("ps", witness).with_provenance(prov_json(job, "classical", "r_ts basis"))]
        }
        "cab" => {
            let r = build_r_ts(t, &job.s)?.tensor;
            let res = cab_check(&r)?;
            let mut rep = VerifyReport::from_residual3("cab", &res);
            if let Some(w) = reversal_witness(t, &res) {
                rep = rep.with_detail(format!("reversal witness {w}"));
            }
            vec![rep.with_provenance(prov_json(job, "classical", "r_ts"))]
        }
        "qybe" => {
            let g = ggs(job)?;
            vec![numeric_or(opts, NumericIdentity::Qybe, &g, || Ok(VerifyReport::from_residual3("qybe", &qybe_residual(&g)?)))?
                .with_provenance(prov_json(job, "ggs", "assoc"))]
        }
        "hecke" => {
            let g = ggs(job)?;
            vec![numeric_or(opts, NumericIdentity::Hecke, &g, || Ok(VerifyReport::from_residual2("hecke", &hecke_residual(&g)?)))?
                .with_provenance(prov_json(job, "ggs", "assoc"))]
        }
        "aybe" => {
            let r = ruv(job)?;
            vec![aybe_report(&r, opts)?.with_provenance(prov_json(job, "ruv", "afgq"))]
        }
        "unitarity" => {
            let r = ruv(job)?;
            vec![unitarity_report(&r, opts)?.with_provenance(prov_json(job, "ruv", "afgq"))]
        }
        "lift" => {
            let r = ruv(job)?;
            let (r0, r1) = semiclassical_parts(&r)?;
            let p = prov_json(job, "ruv", "afgq");
            vec![
                check_lift(&r, t, &job.s)?.with_provenance(p.clone()),
                check_r01(&r0, &r1)?.with_provenance(p.clone()),
                pr_limit_check(&r)?.with_provenance(p),
            ]
        }
        "rRc" => {
            let r = ruv(job)?;
            let n = t.n();
            let lhs = r.tensor().map(|v| v.mul_poly(&q_minus_qinv(n)));
            let rhs = baxterize(&ggs(job)?);
            vec![VerifyReport::from_residual2("rRc", &lhs.sub(rhs.tensor())).with_provenance(prov_json(job, "ruv", "afgq"))]
        }
        "cross-formula" => {
            let a = job.subject.structure.as_ref().ok_or_else(|| anyhow!("no structure"))?;
            let general = build_r_ggs_general(t, &job.s)?;
            let assoc = build_r_ggs_assoc(a, &job.s)?;
            let afgq = build_r_uv(a, &job.s, RuvFormula::Afgq)?;
            let gruv = build_r_uv(a, &job.s, RuvFormula::Gruv)?;
            let parts = vec![
                VerifyReport::from_residual2("ggs general-assoc", &general.tensor().sub(assoc.tensor())),
                VerifyReport::from_residual2("ruv afgq-gruv", &afgq.tensor().sub(gruv.tensor())),
            ];
            vec![VerifyReport::combine("cross-formula", parts).with_provenance(prov_json(job, "ggs+ruv", "all"))]
        }
        other => bail!("unknown suite {other}"),
    };
    Ok(reports)
}

fn aybe_report(r: &SpectralMatrix, opts: &RunOptions) -> Result<VerifyReport> {
    numeric_or(opts, NumericIdentity::Aybe, r, || Ok(VerifyReport::from_residual3("aybe", &aybe_residual(r)?)))
}

fn unitarity_report(r: &SpectralMatrix, opts: &RunOptions) -> Result<VerifyReport> {
    numeric_or(opts, NumericIdentity::Unitarity, r, || Ok(unitarity_check(r, UnitarityKind::Associative)?))
}

/// Suites applicable to a serialised matrix, keyed by its build target.
pub fn run_on_document(doc: &MatrixDoc, suites: &[&str], opts: &RunOptions) -> Result<Vec<VerifyReport>> {
    let m = doc.to_matrix()?;
    let target = doc.provenance.as_ref().map(|p| p.target.as_str()).unwrap_or("");
    let prov = doc.provenance.as_ref().map(|p| serde_json::to_value(p).expect("provenance serialises"));
    let wanted = |s: &str| suites.contains(&s);
    let mut out = Vec::new();
    match target {
        "ruv" => {
            if wanted("aybe") {
                out.push(aybe_report(&m, opts)?);
            }
            if wanted("unitarity") {
                out.push(unitarity_report(&m, opts)?);
            }
            if wanted("lift") {
                let p = doc.provenance.as_ref().expect("target implies provenance");
                let t = p.structure.triple()?;
                let s = SWedge::from_upper(t.n(), &p.s.iter().map(|x| aybe_core::exact::parse_rational(x)).collect::<Result<Vec<_>, _>>()?);
                let (r0, r1) = semiclassical_parts(&m)?;
                out.push(check_lift(&m, &t, &s)?);
                out.push(check_r01(&r0, &r1)?);
                out.push(pr_limit_check(&m)?);
            }
        }
        "ggs" | "baxterized" => {
            if wanted("qybe") {
                out.push(numeric_or(opts, NumericIdentity::Qybe, &m, || Ok(VerifyReport::from_residual3("qybe", &qybe_residual(&m)?)))?);
            }
            if wanted("hecke") && target == "ggs" {
                out.push(numeric_or(opts, NumericIdentity::Hecke, &m, || Ok(VerifyReport::from_residual2("hecke", &hecke_residual(&m)?)))?);
            }
        }
        "classical" => {
            let r: Tensor2<Rational> = m.tensor().try_map(|v: &RatFunc| {
                v.as_constant().ok_or_else(|| aybe_core::Error::Parse("classical matrix has a non-constant entry".into()))
            })?;
            if wanted("cybe") {
                out.push(VerifyReport::combine("cybe", vec![VerifyReport::from_residual3("cybe", &cybe_residual(&r)?), nu_report(&r)]));
            }
            if wanted("cab") {
                out.push(VerifyReport::from_residual3("cab", &cab_check(&r)?));
            }
        }
        other => bail!("document has no usable provenance target ({other:?})"),
    }
    Ok(out.into_iter().map(|r| match &prov {
        Some(p) => r.with_provenance(p.clone()),
        None => r,
    })
    .collect())
}
