//! Naive reference implementations shared by the integration tests and the
//! acceptance runner. Nothing here calls the library's graphicality tests,
//! matching algorithms or enumerator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use degmatch::{DegreeSequence, Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every labelled simple graph on `n` vertices, one per edge subset.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Non-increasing degree lists realized by at least one graph on exactly `n`
/// vertices, zeros included.
pub fn realizable_lists(n: usize) -> BTreeSet<Vec<usize>> {
    let pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut d = vec![0; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                d[u] += 1;
                d[v] += 1;
            }
        }
        d.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(d);
    }
    out
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.vertex_count()).map(|v| g.neighbors(v).collect()).collect()
}

/// Maximum matching size by branching on the lowest undecided vertex.
pub fn brute_nu(g: &Graph) -> usize {
    fn go(adj: &[Vec<usize>], used: &mut [bool], v: usize, size: usize, best: &mut usize) {
        let n = adj.len();
        let mut v = v;
        while v < n && used[v] {
            v += 1;
        }
        let remaining = used.iter().filter(|&&u| !u).count();
        if v == n || size + remaining / 2 <= *best {
            *best = (*best).max(size);
            return;
        }
        used[v] = true;
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                go(adj, used, v + 1, size + 1, best);
                used[w] = false;
            }
        }
        go(adj, used, v + 1, size, best);
        used[v] = false;
    }
    let adj = adjacency(g);
    let mut best = 0;
    go(&adj, &mut vec![false; adj.len()], 0, 0, &mut best);
    best
}

/// Every maximal matching of `g`, each listed once.
pub fn all_maximal_matchings(g: &Graph) -> Vec<Vec<Edge>> {
    fn go(
        g: &Graph,
        adj: &[Vec<usize>],
        mate: &mut [bool],
        v: usize,
        cur: &mut Vec<Edge>,
        out: &mut Vec<Vec<Edge>>,
    ) {
        let n = adj.len();
        if v == n {
            let maximal = g.edges().iter().all(|&(a, b)| mate[a] || mate[b]);
            if maximal {
                out.push(cur.clone());
            }
            return;
        }
        if mate[v] {
            go(g, adj, mate, v + 1, cur, out);
            return;
        }
        // leave v exposed: every earlier neighbour must already be covered
        if adj[v].iter().filter(|&&w| w < v).all(|&w| mate[w]) {
            go(g, adj, mate, v + 1, cur, out);
        }
        for &w in &adj[v] {
            if w > v && !mate[w] {
                mate[v] = true;
                mate[w] = true;
                cur.push((v, w));
                go(g, adj, mate, v + 1, cur, out);
                cur.pop();
                mate[v] = false;
                mate[w] = false;
            }
        }
    }
    let adj = adjacency(g);
    let mut out = Vec::new();
    go(g, &adj, &mut vec![false; adj.len()], 0, &mut Vec::new(), &mut out);
    out
}

/// Minimum size of a maximal matching.
pub fn brute_nu_bar(g: &Graph) -> usize {
    all_maximal_matchings(g).iter().map(Vec::len).min().unwrap_or(0)
}

/// Erdős–Rényi graph `G(n, p)` from a seeded stream.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn seq(v: &[usize]) -> DegreeSequence {
    DegreeSequence::from_degrees(v.iter().copied())
}

fn covered(n: usize, m: &[Edge]) -> Vec<bool> {
    let mut c = vec![false; n];
    for &(u, v) in m {
        c[u] = true;
        c[v] = true;
    }
    c
}

/// Degree-sum inequalities every maximal matching satisfies.
pub fn maximal_matching_violation(g: &Graph, m: &[Edge]) -> Option<String> {
    let n = g.vertex_count();
    let deg = g.degrees();
    let cov = covered(n, m);
    let vm: u64 = (0..n).filter(|&v| cov[v]).map(|v| deg[v] as u64).sum();
    let mut um: Vec<usize> = (0..n).filter(|&v| !cov[v]).map(|v| deg[v]).collect();
    let size = m.len() as u64;
    let edges = g.edge_count() as u64;
    if vm < um.iter().sum::<usize>() as u64 + 2 * size {
        return Some(format!("covered degree sum {vm} below exposed sum + 2|M| for {m:?}"));
    }
    if vm < edges + size {
        return Some(format!("covered degree sum {vm} below m + |M| for {m:?}"));
    }
    let delta = g.max_degree() as u64;
    if edges > 0 && size * (2 * delta - 1) < edges {
        return Some(format!("|M| = {size} below m/(2Δ-1) for {m:?}"));
    }
    um.sort_unstable_by(|a, b| b.cmp(a));
    let mut top = 0u64;
    for k in 1..=um.len() {
        top += um[k - 1] as u64;
        let lhs: u64 = (0..n).filter(|&v| cov[v]).map(|v| (deg[v] - 1).min(k) as u64).sum();
        if lhs < top {
            return Some(format!("capped covered sum {lhs} below top-{k} exposed sum {top} for {m:?}"));
        }
    }
    None
}

/// The path-free inequality every maximum matching satisfies.
pub fn maximum_matching_violation(g: &Graph, m: &[Edge]) -> Option<String> {
    let deg = g.degrees();
    let cov = covered(g.vertex_count(), m);
    let lhs: usize = m.iter().map(|&(u, v)| (deg[u] - 1).max(deg[v] - 1)).sum::<usize>()
        + m.iter().filter(|&&(u, v)| deg[u] == 2 && deg[v] == 2).count();
    let rhs: usize = (0..g.vertex_count()).filter(|&v| !cov[v]).map(|v| deg[v]).sum();
    (lhs < rhs).then(|| format!("edge-weight sum {lhs} below exposed degree sum {rhs} for {m:?}"))
}
