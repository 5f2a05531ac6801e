//! Distributed forms of the interval algorithms. Each node waits for the
//! radius that determines its answer and computes it from its ball.

use super::color::{color_interval, color_radius};
use super::mis::{distance_k_mis, mis_interval, mis_interval_radius};
use super::path::{clique_path, has_claw};
use super::sparse::sparse_radius;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, IndependentSet, NodeId};
use crate::sim::{run_with, BallProgram, RoundTranscript, RunOptions};
use std::collections::BTreeMap;

/// Radius that determines a node's membership under [`distance_k_mis`].
pub fn distance_k_radius(k: usize) -> usize {
    sparse_radius(k.max(1)) + 6
}

fn run_ball<T>(
    g: &Graph,
    radius: usize,
    opts: Option<RunOptions>,
    rule: impl Fn(&Graph) -> BTreeMap<NodeId, T> + Send + Sync + 'static,
) -> Result<RoundTranscript<T>>
where
    T: Clone + Send + Sync + PartialEq + std::fmt::Debug,
{
    let radius = radius as u32;
    let opts = opts.unwrap_or(RunOptions { round_cap: radius + 1, parallel: true });
    Ok(run_with(g, &BallProgram::new(radius, rule), opts)?)
}

fn members(t: &RoundTranscript<bool>) -> IndependentSet {
    t.outputs.iter().filter(|(_, &b)| b).map(|(&v, _)| v).collect()
}

fn flags(g: &Graph, s: &IndependentSet) -> BTreeMap<NodeId, bool> {
    g.nodes().map(|v| (v, s.contains(&v))).collect()
}

/// Distributed [`color_interval`], answering in round [`color_radius`].
pub fn color_interval_distributed(h: &Graph, k: usize, opts: Option<RunOptions>) -> Result<(Coloring, RoundTranscript<u32>)> {
    clique_path(h)?;
    let t = run_ball(h, color_radius(k), opts, move |ball| color_interval(ball, k).expect("balls of interval graphs are interval"))?;
    Ok((t.outputs.clone(), t))
}

/// Distributed [`distance_k_mis`], answering in round [`distance_k_radius`].
pub fn distance_k_mis_distributed(h: &Graph, k: usize, opts: Option<RunOptions>) -> Result<(IndependentSet, RoundTranscript<bool>)> {
    if has_claw(h) {
        return Err(Error::NotProperInterval);
    }
    clique_path(h).map_err(|_| Error::NotProperInterval)?;
    let t = run_ball(h, distance_k_radius(k), opts, move |ball| flags(ball, &distance_k_mis(ball, k).expect("balls of proper interval graphs are proper")))?;
    Ok((members(&t), t))
}

/// Distributed [`mis_interval`], answering in round [`mis_interval_radius`].
pub fn mis_interval_distributed(h: &Graph, eps: f64, opts: Option<RunOptions>) -> Result<(IndependentSet, RoundTranscript<bool>)> {
    let radius = mis_interval_radius(eps)?;
    clique_path(h)?;
    let t = run_ball(h, radius, opts, move |ball| flags(ball, &mis_interval(ball, eps).expect("balls of interval graphs are interval")))?;
    Ok((members(&t), t))
}
