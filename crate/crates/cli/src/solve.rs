//! Running the algorithms and checking their output against the oracles.

use chordal_local::chordal::{alpha_oracle, is_chordal, omega_oracle};
use chordal_local::graph::conflict_edge;
use chordal_local::interval::{mis_interval, mis_interval_distributed, mis_interval_k, mis_interval_radius};
use chordal_local::io::{write_coloring, write_independent_set, Solution};
use chordal_local::mis::{self, mis_distributed_with, mis_peel, mis_round_cap, MisParams};
use chordal_local::mvc::{self, mvc_distributed_with, mvc_pipeline, mvc_round_cap, mvc_validate};
use chordal_local::sim::RunOptions;
use chordal_local::{Error, Graph, Result};
use clap::ValueEnum;
use std::time::{Duration, Instant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Mvc,
    Mis,
    MisInterval,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mvc => "mvc",
            Algorithm::Mis => "mis",
            Algorithm::MisInterval => "mis-interval",
        }
    }

    pub fn default_eps(self) -> f64 {
        match self {
            Algorithm::Mvc => 0.5,
            Algorithm::Mis | Algorithm::MisInterval => 0.4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Central,
    Local,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Central => "central",
            Mode::Local => "local",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub solution: Solution,
    pub k: usize,
    pub d: Option<usize>,
    pub rounds: Option<u32>,
    /// Pruning layers for MVC, peeling iterations that removed something for MIS.
    pub layers: Option<u32>,
    pub wall: Duration,
}

pub struct Job {
    pub algorithm: Algorithm,
    pub mode: Mode,
    pub eps: f64,
    pub round_cap: Option<u32>,
    /// Recheck structural invariants, and compare local runs with central ones.
    pub debug: bool,
}

pub fn solve(g: &Graph, job: &Job) -> Result<Outcome> {
    let eps = job.eps;
    let opts = |cap: u32| RunOptions { round_cap: job.round_cap.unwrap_or(cap), parallel: true };
    let t0 = Instant::now();
    match (job.algorithm, job.mode) {
        (Algorithm::Mvc, Mode::Central) => {
            let k = mvc_validate(g, eps)?;
            let out = mvc_pipeline(g, k)?;
            let wall = t0.elapsed();
            if job.debug {
                mvc::check_invariants(g, &out)?;
            }
            let layers = Some(out.layering.count());
            Ok(Outcome { solution: Solution::Coloring(out.coloring), k, d: None, rounds: None, layers, wall })
        }
        (Algorithm::Mvc, Mode::Local) => {
            let k = mvc_validate(g, eps)?;
            let (c, t) = mvc_distributed_with(g, k, opts(mvc_round_cap(k)))?;
            let wall = t0.elapsed();
            if job.debug {
                let out = mvc_pipeline(g, k)?;
                mvc::check_invariants(g, &out)?;
                same(out.coloring == c)?;
            }
            Ok(Outcome { solution: Solution::Coloring(c), k, d: None, rounds: Some(t.rounds_elapsed), layers: None, wall })
        }
        (Algorithm::Mis, mode) => {
            let p = MisParams::new(eps)?;
            if !is_chordal(g) {
                return Err(Error::NotChordal);
            }
            let (set, rounds, layers) = match mode {
                Mode::Central => {
                    let st = mis_peel(g, &p, job.debug)?;
                    let layers = st.iterations.iter().filter(|it| !it.paths.is_empty()).count() as u32;
                    (st.set, None, Some(layers))
                }
                Mode::Local => {
                    let (s, t) = mis_distributed_with(g, &p, opts(mis_round_cap(&p)?))?;
                    (s, Some(t.rounds_elapsed), None)
                }
            };
            let wall = t0.elapsed();
            if job.debug {
                let st = mis_peel(g, &p, true)?;
                mis::check_invariants(g, &st)?;
                same(st.set == set)?;
            }
            Ok(Outcome { solution: Solution::IndependentSet(set), k: p.k, d: Some(p.d), rounds, layers, wall })
        }
        (Algorithm::MisInterval, mode) => {
            let k = mis_interval_k(eps)?;
            let (set, rounds) = match mode {
                Mode::Central => (mis_interval(g, eps)?, None),
                Mode::Local => {
                    let cap = mis_interval_radius(eps)? as u32 + 1;
                    let (s, t) = mis_interval_distributed(g, eps, Some(opts(cap)))?;
                    (s, Some(t.rounds_elapsed))
                }
            };
            let wall = t0.elapsed();
            if job.debug && mode == Mode::Local {
                same(mis_interval(g, eps)? == set)?;
            }
            Ok(Outcome { solution: Solution::IndependentSet(set), k, d: None, rounds, layers: None, wall })
        }
    }
}

fn same(equal: bool) -> Result<()> {
    if equal {
        Ok(())
    } else {
        Err(Error::VerificationFailed("local run differs from the central run".into()))
    }
}

pub fn solution_text(s: &Solution) -> String {
    match s {
        Solution::Coloring(c) => write_coloring(c),
        Solution::IndependentSet(i) => write_independent_set(i),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    /// Palette size or set size.
    pub result: usize,
    /// Clique number or independence number.
    pub oracle: usize,
    /// Palette over clique number, or independence number over set size.
    pub ratio: f64,
}

/// Checks legality or independence and, given `eps`, the `1 + eps` ratio.
pub fn verify(g: &Graph, sol: &Solution, eps: Option<f64>) -> Result<Verdict> {
    let fail = |msg: String| Err(Error::VerificationFailed(msg));
    if !is_chordal(g) {
        return Err(Error::NotChordal);
    }
    let (verdict, within) = match sol {
        Solution::Coloring(c) => {
            if let Some(v) = c.keys().find(|v| !g.contains(**v)) {
                return fail(format!("node {v} is not in the graph"));
            }
            if let Some(v) = g.nodes().find(|v| !c.contains_key(v)) {
                return fail(format!("node {v} is uncolored"));
            }
            if let Some((u, v)) = conflict_edge(g, c) {
                return fail(format!("edge {u}-{v} has both ends colored {}", c[&u]));
            }
            let palette = c.values().collect::<std::collections::BTreeSet<_>>().len();
            let omega = omega_oracle(g)?;
            let ratio = if omega == 0 { 1.0 } else { palette as f64 / omega as f64 };
            let within = |e: f64| palette as f64 <= (1.0 + e) * omega as f64;
            (Verdict { result: palette, oracle: omega, ratio }, eps.map(within))
        }
        Solution::IndependentSet(s) => {
            if let Some(v) = s.iter().find(|v| !g.contains(**v)) {
                return fail(format!("node {v} is not in the graph"));
            }
            if let Some((u, v)) = g.edges().find(|(u, v)| s.contains(u) && s.contains(v)) {
                return fail(format!("edge {u}-{v} has both ends in the set"));
            }
            let alpha = alpha_oracle(g)?.len();
            let ratio = match (alpha, s.len()) {
                (0, _) => 1.0,
                (_, 0) => f64::INFINITY,
                (a, i) => a as f64 / i as f64,
            };
            let within = |e: f64| alpha as f64 <= (1.0 + e) * s.len() as f64;
            (Verdict { result: s.len(), oracle: alpha, ratio }, eps.map(within))
        }
    };
    if within == Some(false) {
        return fail(format!("ratio {:.4} exceeds 1 + {}", verdict.ratio, eps.unwrap_or_default()));
    }
    Ok(verdict)
}
