//! Floating-point evaluation of the identities at seeded random points.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::{Mode, Outcome, VerifyReport};
use super::slots::{aybe_products, aybe_sum, hecke_product, qybe_products};
use crate::builders::SpectralMatrix;
use crate::error::{Error, Result};
use crate::exact::Symbol;
use crate::par::Exec;
use crate::tensor::{Tensor2, Tensor3};

/// Points closer than this to a denominator zero are redrawn.
pub const POLE_MARGIN: f64 = 1e-3;
const MIN_MODULUS: f64 = 0.3;
const MAX_MODULUS: f64 = 1.5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumericIdentity {
    Aybe,
    Unitarity,
    Qybe,
    Hecke,
}

impl NumericIdentity {
    pub fn name(self) -> &'static str {
        match self {
            NumericIdentity::Aybe => "aybe",
            NumericIdentity::Unitarity => "unitarity",
            NumericIdentity::Qybe => "qybe",
            NumericIdentity::Hecke => "hecke",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericConfig {
    pub samples: usize,
    pub tolerance: f64,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { samples: 100, tolerance: 1e-9, seed: 0, exec: Exec::default() }
    }
}

/// `(u, u′, v, v′)`.
type Point = [Complex64; 4];

/// Log-coordinates `(log X1, log X2, log Y1, log Y2)` at which `r` is read for
/// each slot of the identity.
fn slot_logs(id: NumericIdentity, n: usize, p: &Point) -> Vec<[Complex64; 4]> {
    let [u, u2, v, v2] = *p;
    let x = |s: Complex64| s / (2.0 * n as f64);
    let z = Complex64::new(0.0, 0.0);
    let at = |s: Complex64, w: Complex64| [x(s), z, w, z];
    match id {
        NumericIdentity::Aybe => vec![at(-u2, v), at(u + u2, v + v2), at(u + u2, v2), at(u, v), at(u, v + v2), at(u2, v2)],
        NumericIdentity::Unitarity => vec![at(u, v), at(-u, -v)],
        NumericIdentity::Qybe => vec![at(u, v), at(u, v + v2), at(u, v2)],
        NumericIdentity::Hecke => vec![at(u, v)],
    }
}

fn draw(rng: &mut ChaCha8Rng) -> Complex64 {
    let rho = rng.random_range(MIN_MODULUS..=MAX_MODULUS);
    let theta = rng.random_range(0.0..TAU);
    Complex64::from_polar(rho, theta)
}

fn max_abs2(t: &Tensor2<Complex64>) -> f64 {
    t.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max)
}

fn max_abs3(t: &Tensor3<Complex64>) -> f64 {
    t.iter().map(|(_, v)| v.norm()).fold(0.0, f64::max)
}

/// `(absolute residual, largest intermediate coefficient)` at one point.
fn evaluate(id: NumericIdentity, r: &SpectralMatrix, logs: &[[Complex64; 4]]) -> Result<(f64, f64)> {
    let seq = Exec::Sequential;
    let ev: Vec<Tensor2<Complex64>> = logs.iter().map(|l| r.tensor().eval_log(l)).collect();
    let mut scale = ev.iter().map(max_abs2).fold(0.0, f64::max);
    let residual = match id {
        NumericIdentity::Aybe => {
            let p = aybe_products([&ev[0], &ev[1], &ev[2], &ev[3], &ev[4], &ev[5]], seq)?;
            scale = p.iter().map(max_abs3).fold(scale, f64::max);
            max_abs3(&aybe_sum(&p))
        }
        NumericIdentity::Unitarity => max_abs2(&ev[0].add(&ev[1].flip21())),
        NumericIdentity::Qybe => {
            let [lhs, rhs] = qybe_products(&ev[0], &ev[1], &ev[2], seq)?;
            scale = scale.max(max_abs3(&lhs)).max(max_abs3(&rhs));
            max_abs3(&lhs.sub(&rhs))
        }
        NumericIdentity::Hecke => {
            // q = X1^n = e^{u/2}.
            let q = (logs[0][0] * r.n() as f64).exp();
            let h = hecke_product(&ev[0], &q, &q.inv(), seq)?;
            scale = scale.max(q.norm()).max(q.inv().norm());
            max_abs2(&h)
        }
    };
    Ok((residual, scale))
}

/// Maximum residual over `cfg.samples` seeded points; pass iff the residual
/// relative to `max(1, largest intermediate coefficient)` is below tolerance.
pub fn numeric_residual(id: NumericIdentity, r: &SpectralMatrix, cfg: &NumericConfig) -> Result<VerifyReport> {
    if r.uses(Symbol::X2) || r.uses(Symbol::Y2) {
        return Err(Error::InvalidStructure("numeric mode expects a matrix in X1, Y1".into()));
    }
    let n = r.n();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut points: Vec<Vec<[Complex64; 4]>> = Vec::with_capacity(cfg.samples);
    let mut rejected = 0usize;
    let budget = 100 * cfg.samples.max(1);
    while points.len() < cfg.samples {
        if rejected > budget {
            return Err(Error::Internal(format!("{rejected} sample points rejected near poles")));
        }
        let p: Point = [draw(&mut rng), draw(&mut rng), draw(&mut rng), draw(&mut rng)];
        let logs = slot_logs(id, n, &p);
        let clear = logs
            .iter()
            .all(|l| r.tensor().iter().all(|(_, f)| f.min_den_modulus(l) >= POLE_MARGIN));
        if clear {
            points.push(logs);
        } else {
            rejected += 1;
        }
    }
    let results = cfg.exec.map(&points, |logs| evaluate(id, r, logs));
    let mut max_abs = 0.0f64;
    let mut max_rel = 0.0f64;
    for res in results {
        let (abs, scale) = res?;
        let abs = if abs.is_finite() { abs } else { f64::INFINITY };
        max_abs = max_abs.max(abs);
        max_rel = max_rel.max(abs / scale.max(1.0));
    }
    let pass = max_rel < cfg.tolerance;
    Ok(VerifyReport {
        identity: id.name().to_string(),
        mode: Mode::Numeric,
        result: if pass { Outcome::Pass } else { Outcome::Fail },
        witness: None,
        samples: Some(cfg.samples),
        rejected: Some(rejected),
        max_abs_residual: Some(max_abs),
        max_rel_residual: Some(max_rel),
        tolerance: Some(cfg.tolerance),
        detail: None,
        provenance: None,
    })
}
