//! Degree-preserving growth.
//!
//! A DP-step removes a `μ`-edge matching from the current graph and joins a
//! new vertex to its `2μ` endpoints: old degrees are untouched and the degree
//! sequence becomes `d ∘ 2μ`.
//!
//! Two notions of feasibility are kept apart. [`feasible_deltas`] asks what
//! the *current graph* admits (`2μ <= 2ν(G)`), while
//! [`sequence_level_deltas`] asks what *some realization* of its degree
//! sequence admits (`2μ <= 2ν*(d)`). The first is a subset of the second and
//! is the one a running growth process is bound by.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, pinch, Edge, Graph, Vertex};
use crate::graphicality::nu_star;
use crate::matching::{greedy_in_order, matching_number, max_matching, Matching};
use crate::seq::DegreeSequence;

/// How the removed matching is chosen once `δ` is fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchingPolicy {
    /// Random `δ/2` edges of a seeded randomized matching search.
    #[default]
    Random,
    /// The first `δ/2` edges (in edge order) of the exact maximum matching.
    FirstFound,
    /// Prefer edges whose endpoints have the largest degrees.
    MaxDegreeCovering,
}

/// How `δ` is chosen at each step of [`grow`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaPolicy {
    Fixed(usize),
    RandomFeasible,
    MaxFeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthConfig {
    pub delta: DeltaPolicy,
    pub matching: MatchingPolicy,
}

impl GrowthConfig {
    pub fn new(delta: DeltaPolicy) -> Self {
        GrowthConfig { delta, matching: MatchingPolicy::default() }
    }

    pub fn with_matching(mut self, matching: MatchingPolicy) -> Self {
        self.matching = matching;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub step_index: usize,
    pub delta: usize,
    pub removed_matching: Vec<Edge>,
    pub new_vertex: Vertex,
    /// Vertex and edge counts after the step.
    pub n: usize,
    pub m: usize,
    pub resulting_degree_sequence: DegreeSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedSummary {
    pub n: usize,
    pub m: usize,
    pub degree_sequence: DegreeSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthTrace {
    pub seed_graph: SeedSummary,
    pub config: GrowthConfig,
    pub rng_seed: u64,
    pub steps: Vec<StepRecord>,
    /// Set when a step found no admissible `δ` before `steps` were done.
    pub halted_early: bool,
    pub final_graph: Graph,
}

impl GrowthTrace {
    /// One row per step: `step_index,delta,new_vertex,n,m`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step_index,delta,new_vertex,n,m\n");
        for s in &self.steps {
            let _ = writeln!(out, "{},{},{},{},{}", s.step_index, s.delta, s.new_vertex, s.n, s.m);
        }
        out
    }
}

/// `{2μ : 1 <= μ <= ν(G)}`.
pub fn feasible_deltas(g: &Graph) -> BTreeSet<usize> {
    (1..=matching_number(g)).map(|mu| 2 * mu).collect()
}

/// `{2μ : 1 <= μ <= ν*(d)}` for the degree sequence of `g`.
pub fn sequence_level_deltas(g: &Graph) -> Result<BTreeSet<usize>> {
    let d = g.degree_sequence();
    if d.is_all_zero() {
        return Ok(BTreeSet::new());
    }
    Ok((1..=nu_star(&d)?).map(|mu| 2 * mu).collect())
}

fn random_subset(m: &Matching, size: usize, rng: &mut ChaCha8Rng) -> Matching {
    let mut keep = index::sample(rng, m.len(), size).into_vec();
    keep.sort_unstable();
    m.restrict(&keep)
}

/// Maximum matching of a randomly relabelled copy, mapped back.
fn shuffled_maximum(g: &Graph, rng: &mut ChaCha8Rng) -> Matching {
    let n = g.vertex_count();
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let relabelled = Graph::from_edges(n, g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
        .expect("relabelling preserves simplicity");
    let mut inverse = vec![0; n];
    for (old, &new) in perm.iter().enumerate() {
        inverse[new] = old;
    }
    let edges =
        max_matching(&relabelled).edges().iter().map(|&(u, v)| edge(inverse[u], inverse[v])).collect();
    Matching::new(n, edges).expect("relabelled matching stays a matching")
}

const GREEDY_ATTEMPTS: usize = 16;

fn select_matching(g: &Graph, mu: usize, policy: MatchingPolicy, rng: &mut ChaCha8Rng) -> Matching {
    match policy {
        MatchingPolicy::FirstFound => {
            let m = max_matching(g);
            m.restrict(&(0..mu).collect::<Vec<_>>())
        }
        MatchingPolicy::Random => {
            let mut edges = g.edges();
            for _ in 0..GREEDY_ATTEMPTS {
                edges.shuffle(rng);
                let m = greedy_in_order(g.vertex_count(), &edges);
                if m.len() >= mu {
                    return random_subset(&m, mu, rng);
                }
            }
            let m = shuffled_maximum(g, rng);
            random_subset(&m, mu, rng)
        }
        MatchingPolicy::MaxDegreeCovering => {
            let weight = |&(u, v): &Edge| g.degree(u) + g.degree(v);
            let mut edges = g.edges();
            edges.sort_by(|a, b| weight(b).cmp(&weight(a)).then(a.cmp(b)));
            let mut pool = greedy_in_order(g.vertex_count(), &edges);
            if pool.len() < mu {
                pool = max_matching(g);
            }
            let mut ranked: Vec<usize> = (0..pool.len()).collect();
            ranked.sort_by(|&a, &b| {
                let (ea, eb) = (pool.edges()[a], pool.edges()[b]);
                weight(&eb).cmp(&weight(&ea)).then(ea.cmp(&eb))
            });
            ranked.truncate(mu);
            pool.restrict(&ranked)
        }
    }
}

fn check_delta(g: &Graph, delta: usize) -> Result<()> {
    let feasible = feasible_deltas(g);
    if !feasible.contains(&delta) {
        return Err(Error::InfeasibleDelta { delta, feasible: feasible.into_iter().collect() });
    }
    Ok(())
}

fn step_with_rng(
    g: &Graph,
    delta: usize,
    policy: MatchingPolicy,
    step_index: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, StepRecord)> {
    check_delta(g, delta)?;
    let m = select_matching(g, delta / 2, policy, rng);
    if m.len() != delta / 2 {
        return Err(Error::Consistency(format!("selected {} edges, wanted {}", m.len(), delta / 2)));
    }
    let pinched = pinch(g, &m)?;
    let record = StepRecord {
        step_index,
        delta,
        removed_matching: m.edges().to_vec(),
        new_vertex: pinched.new_vertex,
        n: pinched.graph.vertex_count(),
        m: pinched.graph.edge_count(),
        resulting_degree_sequence: pinched.graph.degree_sequence(),
    };
    Ok((pinched.graph, record))
}

/// One DP-step with a new vertex of degree `delta`.
pub fn dp_step(
    g: &Graph,
    delta: usize,
    policy: MatchingPolicy,
    rng_seed: u64,
) -> Result<(Graph, StepRecord)> {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    step_with_rng(g, delta, policy, 0, &mut rng)
}

/// Repeated DP-steps from `g0`. Stops early, without error, as soon as the
/// delta policy has no admissible value.
pub fn grow(g0: &Graph, steps: usize, config: GrowthConfig, rng_seed: u64) -> GrowthTrace {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut g = g0.clone();
    let mut records = Vec::with_capacity(steps);
    let mut halted_early = false;
    for step_index in 0..steps {
        let nu = matching_number(&g);
        let delta = match config.delta {
            DeltaPolicy::Fixed(delta) => delta,
            DeltaPolicy::MaxFeasible => 2 * nu,
            DeltaPolicy::RandomFeasible if nu > 0 => 2 * rng.gen_range(1..=nu),
            DeltaPolicy::RandomFeasible => 0,
        };
        if delta == 0 || delta % 2 == 1 || delta > 2 * nu {
            halted_early = true;
            break;
        }
        let (next, record) = step_with_rng(&g, delta, config.matching, step_index, &mut rng)
            .expect("delta was checked against the matching number");
        records.push(record);
        g = next;
    }
    GrowthTrace {
        seed_graph: SeedSummary {
            n: g0.vertex_count(),
            m: g0.edge_count(),
            degree_sequence: g0.degree_sequence(),
        },
        config,
        rng_seed,
        steps: records,
        halted_early,
        final_graph: g,
    }
}

/// Re-applies a trace's recorded matchings to `g0`.
pub fn replay(g0: &Graph, trace: &GrowthTrace) -> Result<Graph> {
    let mut g = g0.clone();
    for s in &trace.steps {
        let m = Matching::new(g.vertex_count(), s.removed_matching.clone())?;
        g = pinch(&g, &m)?.graph;
    }
    Ok(g)
}
