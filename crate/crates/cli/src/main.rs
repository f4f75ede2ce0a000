mod args;
mod select;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use serde_json::json;

use aybe_core::bd::{compatible_permutations, enumerate_cg_triples, enumerate_triples, is_orientation_preserving, validate_triple, BDTriple, StructureDoc};
use aybe_core::builders::{
    baxterize, build_r_ggs_assoc, build_r_ggs_general, build_r_ts, build_r_uv, constant_spectral, MatrixDoc, RuvFormula, SpectralMatrix,
    SCHEMA_VERSION,
};
use aybe_core::par::Exec;
use aybe_core::verify::{cab_check, reversal_witness, NumericConfig, Witness};

use args::{BuildArgs, Cli, Command, EnumerateArgs, Filter, Format, Formula, ModeArg, Output, Target, VerifyArgs};
use select::{all_subjects, provenance, resolve, resolve_s};
use suites::{parse_suites, run, run_on_document, Job, RunOptions};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(a) => enumerate(a),
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Write to `--output`, else to `$AYBE_OUTPUT_DIR/<default_name>`, else stdout.
fn emit(out: &Output, default_name: &str, text: &str) -> Result<()> {
    let path: Option<PathBuf> = match (&out.output, &out.output_dir) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => {
            std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            Some(dir.join(default_name))
        }
        (None, None) => None,
    };
    match path {
        Some(p) => {
            std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?;
            eprintln!("wrote {}", p.display());
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn enumerate(a: EnumerateArgs) -> Result<ExitCode> {
    let triples: Vec<(Option<usize>, BDTriple)> = match a.filter {
        Filter::Cg => enumerate_cg_triples(a.n)?.into_iter().map(|(m, t)| (Some(m), t)).collect(),
        _ => enumerate_triples(a.n, a.bound, Exec::default())?.into_iter().map(|t| (None, t)).collect(),
    };
    let mut rows = Vec::new();
    for (m, t) in triples {
        let perms = compatible_permutations(&t);
        if a.filter == Filter::Associative && perms.is_empty() {
            continue;
        }
        rows.push(json!({
            "structure": StructureDoc::from_triple(&t, &m.map(|m| format!("cg m={m}")).unwrap_or_default()),
            "cg_m": m,
            "valid": validate_triple(&t).is_ok(),
            "orientation_preserving": is_orientation_preserving(&t),
            "associative": !perms.is_empty(),
            "compatible_permutations": perms.len(),
            "tilde_t": perms.iter().map(|p| p.tilde_t().to_vec()).collect::<Vec<_>>(),
        }));
    }
    let filter = format!("{:?}", a.filter).to_lowercase();
    let text = match a.out.format {
        Format::Json => pretty(&json!({
            "schema_version": SCHEMA_VERSION,
            "n": a.n,
            "filter": filter,
            "count": rows.len(),
            "triples": rows,
        })),
        Format::Text => {
            let mut s = format!("n = {}, filter = {filter}: {} triple(s)\n", a.n, rows.len());
            for r in &rows {
                let doc: StructureDoc = serde_json::from_value(r["structure"].clone())?;
                let t = doc.triple()?;
                s.push_str(&format!(
                    "{t}  valid={} orientation_preserving={} associative={} permutations={}\n",
                    r["valid"], r["orientation_preserving"], r["associative"], r["compatible_permutations"]
                ));
            }
            s
        }
    };
    emit(&a.out, &format!("enumerate-n{}-{filter}.{}", a.n, ext(a.out.format)), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn ext(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Text => "txt",
    }
}

fn build(a: BuildArgs) -> Result<ExitCode> {
    let subject = resolve(a.n, &a.select)?;
    let s = resolve_s(&subject, &a.select.s)?;
    let target = format!("{:?}", a.target).to_lowercase();
    let structure = match (&subject.structure, a.target) {
        (_, Target::Classical) => None,
        (Some(st), _) => Some(st),
        (None, _) => {
            let r = build_r_ts(&subject.triple, &s)?.tensor;
            let res = cab_check(&r)?;
            let w: Option<Witness> = reversal_witness(&subject.triple, &res).or_else(|| Witness::from_tensor3(&res));
            let w = w.map(|w| w.to_string()).unwrap_or_else(|| "none".into());
            bail!("{} is not associative; cab witness {w}", subject.triple);
        }
    };
    let (matrix, formula) = match a.target {
        Target::Classical => (constant_spectral(&build_r_ts(&subject.triple, &s)?.tensor), "r_ts"),
        Target::Ggs | Target::Baxterized => {
            let st = structure.expect("checked above");
            let (g, f) = match a.formula {
                Formula::General => (build_r_ggs_general(&subject.triple, &s)?, "general"),
                Formula::Default | Formula::Assoc => (build_r_ggs_assoc(st, &s)?, "assoc"),
                other => bail!("formula {other:?} does not apply to target {target}"),
            };
            if a.target == Target::Baxterized {
                (baxterize(&g), f)
            } else {
                (g, f)
            }
        }
        Target::Ruv => {
            let st = structure.expect("checked above");
            match a.formula {
                Formula::Default | Formula::Afgq => (build_r_uv(st, &s, RuvFormula::Afgq)?, "afgq"),
                Formula::Gruv => (build_r_uv(st, &s, RuvFormula::Gruv)?, "gruv"),
                other => bail!("formula {other:?} does not apply to target {target}"),
            }
        }
    };
    let matrix = SpectralMatrix::new(matrix.tensor().map(|v| v.reduce()));
    let prov = provenance(&subject, &s, &target, formula);
    let text = match a.out.format {
        Format::Json => pretty(&MatrixDoc::from_matrix(&matrix, Some(prov))),
        Format::Text => {
            let vars: Vec<&str> = matrix.variables().iter().map(|v| v.name()).collect();
            format!(
                "# {}\n# target = {target}, formula = {formula}, s = [{}]\n# variables: {}\n{matrix}\n",
                subject.triple_line(),
                prov.s.join(", "),
                if vars.is_empty() { "none".to_string() } else { vars.join(", ") }
            )
        }
    };
    emit(&a.out, &format!("build-n{}-{target}.{}", a.n, ext(a.out.format)), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs) -> Result<ExitCode> {
    let suites = parse_suites(&a.suite)?;
    let numeric = match a.mode {
        ModeArg::Symbolic => None,
        ModeArg::Numeric => Some(NumericConfig { samples: a.samples, tolerance: a.tolerance, seed: a.seed, exec: Exec::default() }),
    };
    let opts = RunOptions { numeric, include_nonassociative: a.include_nonassociative };
    let mut labels = Vec::new();
    let mut reports = Vec::new();
    if let Some(path) = &a.input {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let doc: MatrixDoc = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        for r in run_on_document(&doc, &suites, &opts)? {
            labels.push(path.display().to_string());
            reports.push(r);
        }
    } else {
        let n = a.n.ok_or_else(|| anyhow!("--n is required unless --input is given"))?;
        let subjects = if a.select.is_set() { vec![resolve(n, &a.select)?] } else { all_subjects(n, a.structures, a.bound)? };
        let mut jobs = Vec::new();
        for subject in subjects {
            let s = resolve_s(&subject, &a.select.s)?;
            for suite in &suites {
                let job = Job { suite, subject: subject.clone(), s: s.clone() };
                // Triple-level suites run once per triple, not per permutation.
                let first_for_triple = !matches!(*suite, "cybe" | "ps")
                    || !jobs.iter().any(|j: &Job| j.suite == *suite && j.subject.triple == job.subject.triple);
                if job.applies(&opts) && first_for_triple {
                    jobs.push(job);
                }
            }
        }
        let results = Exec::default().map(&jobs, |job| run(job, &opts));
        for (job, res) in jobs.iter().zip(results) {
            let res = res.with_context(|| format!("{} on {}", job.suite, job.subject.label))?;
            for r in res {
                labels.push(job.subject.label.clone());
                reports.push(r);
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    for (label, r) in labels.iter().zip(&reports) {
        eprintln!("[{label}] {r}");
    }
    eprintln!("{} report(s), {failed} failed", reports.len());
    let mode = format!("{:?}", a.mode).to_lowercase();
    let bundle = json!({
        "schema_version": SCHEMA_VERSION,
        "config": {
            "n": a.n,
            "mode": mode,
            "suite": suites,
            "samples": a.samples,
            "tolerance": a.tolerance,
            "seed": a.seed,
            "include_nonassociative": a.include_nonassociative,
        },
        "summary": { "total": reports.len(), "failed": failed },
        "reports": reports.iter().zip(&labels).map(|(r, l)| json!({ "subject": l, "report": r })).collect::<Vec<_>>(),
    });
    let text = match a.out.format {
        Format::Json => pretty(&bundle),
        Format::Text => labels.iter().zip(&reports).map(|(l, r)| format!("[{l}] {r}\n")).collect(),
    };
    let name = match a.n {
        Some(n) => format!("verify-n{n}-{mode}.{}", ext(a.out.format)),
        None => format!("verify-input-{mode}.{}", ext(a.out.format)),
    };
    emit(&a.out, &name, &text)?;
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

impl select::Subject {
    fn triple_line(&self) -> String {
        match &self.structure {
            Some(a) => a.to_string(),
            None => self.triple.to_string(),
        }
    }
}
