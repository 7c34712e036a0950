use bireg::json::{poly_from_str, PolyDoc};
use bireg::mvpoly::CliffPoly;
use bireg::numeric::{fd_biregular_residual, CompiledPoly, EvalPoint, FdConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::io::{emit, CliError, CliResult};

/// Accepts a bare polynomial document or a `generate` result, whose
/// `"direct"` field is used.
pub fn parse_poly(text: &str) -> CliResult<CliffPoly> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::schema(e.to_string()))?;
    if let Some(direct) = value.get("direct") {
        let doc: PolyDoc =
            serde_json::from_value(direct.clone()).map_err(|e| CliError::schema(e.to_string()))?;
        return Ok(doc.to_poly()?);
    }
    Ok(poly_from_str(text)?)
}

pub fn parse_points(text: &str, m: usize) -> CliResult<Vec<EvalPoint>> {
    let raw: Vec<Vec<f64>> =
        serde_json::from_str(text).map_err(|e| CliError::schema(format!("points: {e}")))?;
    raw.into_iter()
        .map(|c| EvalPoint::new(m, c).map_err(CliError::from))
        .collect()
}

pub fn random_points(m: usize, seed: u64, samples: usize) -> Vec<EvalPoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            EvalPoint::new(
                m,
                (0..2 * (m + 1)).map(|_| rng.gen_range(1.0..2.0)).collect(),
            )
            .expect("valid point")
        })
        .collect()
}

/// Streams one `{point, residual, pass}` line per point, in input order.
pub fn run(poly: &CliffPoly, points: &[EvalPoint], cfg: &FdConfig) -> bool {
    let f = CompiledPoly::new(poly);
    let residuals: Vec<f64> = points
        .par_iter()
        .map(|pt| fd_biregular_residual(&|q: &EvalPoint| f.eval(q), pt, cfg))
        .collect();
    let mut ok = true;
    for (pt, res) in points.iter().zip(residuals) {
        let pass = res < cfg.tolerance;
        ok &= pass;
        emit(&json!({ "point": pt.coords(), "residual": res, "pass": pass }).to_string());
    }
    ok
}
