//! Size and seed sweeps with a least-squares fit of rounds against size.

use crate::report::Row;
use crate::solve::Algorithm;

/// Least-squares `y = a * x + b`; `None` with fewer than two distinct `x`.
pub fn fit(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if points.len() < 2 || sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let a = sxy / sxx;
    Some((a, my - a * mx))
}

/// Comment line closing a bench CSV: rounds against `log2 n` for coloring,
/// against `n` for independent sets.
pub fn summary(alg: Algorithm, rows: &[Row]) -> String {
    let (label, x): (&str, fn(usize) -> f64) = match alg {
        Algorithm::Mvc => ("log2(n)", |n| (n as f64).log2()),
        _ => ("n", |n| n as f64),
    };
    let points: Vec<(f64, f64)> = rows.iter().filter_map(|r| Some((x(r.n), r.rounds? as f64))).collect();
    match fit(&points) {
        Some((a, b)) => format!("# fit rounds = a * {label} + b: a={a:.6} b={b:.3} rows={}\n", points.len()),
        None => format!("# fit rounds = a * {label} + b: unavailable, {} rows with rounds\n", points.len()),
    }
}
